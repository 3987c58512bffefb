#include "elliptica/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "suite_case.hpp"

namespace elliptica {

const char* status_name(TrialStatus status) {
  switch (status) {
    case TrialStatus::pass: return "pass";
    case TrialStatus::fail: return "fail";
    case TrialStatus::resampled_pole: return "resampled_pole";
    case TrialStatus::skipped_scale: return "skipped_scale";
  }
  return "fail";
}

const std::vector<SuiteInfo>& registered_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& def : detail::suite_defs()) out.push_back(def.info);
    return out;
  }();
  return infos;
}

namespace {

const detail::SuiteDef& suite_def(std::string_view id) {
  for (const auto& def : detail::suite_defs()) {
    if (def.info.id == id) return def;
  }
  throw UsageError("unknown suite '" + std::string(id) + "'");
}

}  // namespace

const SuiteInfo& suite_info(std::string_view id) { return suite_def(id).info; }

SuiteConfig resolve(SuiteConfig c) {
  const SuiteInfo& info = suite_info(c.suite_id);
  if (c.trials < 0) c.trials = info.default_trials;
  if (c.tolerance == 0) c.tolerance = info.default_tolerance;
  if (c.m_max < 0) c.m_max = info.m_max;
  if (c.r_max < 0) c.r_max = info.r_max;
  if (c.grid_max < 0) c.grid_max = info.grid_max;
  if (!(c.tolerance > 0 && c.tolerance < 1)) throw UsageError("tolerance must lie in (0, 1)");
  if (c.m_max > 12) throw UsageError("m_max is capped at 12");
  if (c.r_max > 3) throw UsageError("r_max is capped at 3");
  if (c.grid_max > kMaxEnumerationSteps / 2) throw UsageError("grid_max is capped at 12");
  if (c.threads == 0) throw UsageError("threads must be positive");
  c.domain.validate();
  return c;
}

long SuiteReport::counted() const {
  return static_cast<long>(std::count_if(outcomes.begin(), outcomes.end(), [](const TrialOutcome& o) {
    return o.status == TrialStatus::pass || o.status == TrialStatus::fail;
  }));
}

long SuiteReport::passes() const {
  return static_cast<long>(std::count_if(outcomes.begin(), outcomes.end(),
                                         [](const TrialOutcome& o) { return o.status == TrialStatus::pass; }));
}

double SuiteReport::max_rel_error() const {
  double worst = 0;
  for (const auto& o : outcomes) {
    if (o.status == TrialStatus::pass || o.status == TrialStatus::fail) worst = std::max(worst, o.rel_error);
  }
  return worst;
}

bool SuiteReport::passed() const {
  return std::none_of(outcomes.begin(), outcomes.end(),
                      [](const TrialOutcome& o) { return o.status == TrialStatus::fail; });
}

namespace {

template <typename T>
TrialOutcome attempt(const detail::SubIdentity& sub, detail::SubRun<T> run, const SuiteConfig& config,
                     long trial, long attempt_index) {
  Sampler sampler(config.domain, trial_seed(config.seed, config.suite_id, trial, attempt_index));
  detail::Case<T> c(sampler, config);
  TrialOutcome o;
  o.identity_id = config.suite_id + "." + sub.name;
  o.seed = config.seed;
  o.trial_index = trial;
  try {
    const SidePair<T> pair = run(c);
    o.lhs = {static_cast<double>(pair.lhs.real()), static_cast<double>(pair.lhs.imag())};
    o.rhs = {static_cast<double>(pair.rhs.real()), static_cast<double>(pair.rhs.imag())};
    o.rel_error = static_cast<double>(relative_error(pair.lhs, pair.rhs));
    const double tol = std::min(config.tolerance, sub.tolerance_cap);
    o.status = o.rel_error <= tol ? TrialStatus::pass : TrialStatus::fail;
    const double scale = std::max({std::abs(o.lhs), std::abs(o.rhs), 1e-300});
    o.condition_flag = static_cast<double>(pair.max_term) / scale > kConditionLimit;
  } catch (const PoleError&) {
    o.status = TrialStatus::resampled_pole;
  } catch (const ScaleError&) {
    o.status = TrialStatus::skipped_scale;
  }
  o.params = c.params_text();
  return o;
}

std::vector<TrialOutcome> run_trial(const detail::SuiteDef& def, const SuiteConfig& config, long trial) {
  const auto& sub = def.subs[def.pattern[static_cast<std::size_t>(trial) % def.pattern.size()]];
  std::vector<TrialOutcome> out;
  for (long a = 0; a < config.domain.resample_limit; ++a) {
    TrialOutcome o = attempt<double>(sub, sub.run_double, config, trial, a);
    if (config.escalate && (o.status == TrialStatus::fail || o.condition_flag)) {
      o = attempt<Quad>(sub, sub.run_extended, config, trial, a);
    }
    const bool resample = o.status == TrialStatus::resampled_pole;
    out.push_back(std::move(o));
    if (!resample) return out;
  }
  throw DomainError("degenerate domain: " + def.info.id + " trial " + std::to_string(trial) + " hit a pole in " +
                    std::to_string(config.domain.resample_limit) + " consecutive samples");
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& raw) {
  const SuiteConfig config = resolve(raw);
  const detail::SuiteDef& def = suite_def(config.suite_id);
  std::vector<std::vector<TrialOutcome>> per_trial(static_cast<std::size_t>(config.trials));
  const unsigned workers = std::min<unsigned>(config.threads, static_cast<unsigned>(std::max(config.trials, 1L)));
  if (workers <= 1) {
    for (long t = 0; t < config.trials; ++t) per_trial[t] = run_trial(def, config, t);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (long t = w; t < config.trials; t += workers) per_trial[t] = run_trial(def, config, t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  SuiteReport report;
  report.config = config;
  for (auto& v : per_trial) {
    for (auto& o : v) report.outcomes.push_back(std::move(o));
  }
  return report;
}

}  // namespace elliptica
