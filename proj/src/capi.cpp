#include "elliptica/elliptica.h"

#include <charconv>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <string_view>
#include <vector>

#include "elliptica/closed_forms.hpp"
#include "elliptica/harness.hpp"
#include "elliptica/lattice.hpp"
#include "elliptica/report.hpp"
#include "elliptica/series.hpp"

using namespace elliptica;

struct ell_model {
  ThetaContext<double> ctx;
  EllipticParams<double> params;
};

struct ell_paths {
  std::vector<LatticePath> paths;
  std::vector<std::string> text;
};

struct ell_config {
  SuiteConfig config;
};

struct ell_report {
  SuiteReport report;
};

namespace {

std::string& last_error() {
  thread_local std::string message;
  return message;
}

ell_status fail(ell_status status, const char* what) {
  last_error() = what;
  return status;
}

template <typename F>
ell_status guarded(F&& body) {
  try {
    body();
    last_error().clear();
    return ELL_OK;
  } catch (const PoleError& e) {
    return fail(ELL_ERR_POLE, e.what());
  } catch (const ScaleError& e) {
    return fail(ELL_ERR_SCALE, e.what());
  } catch (const RangeError& e) {
    return fail(ELL_ERR_RANGE, e.what());
  } catch (const UsageError& e) {
    return fail(ELL_ERR_USAGE, e.what());
  } catch (const DomainError& e) {
    return fail(ELL_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ELL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ELL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ELL_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* ptr, const char* what) {
  if (!ptr) throw UsageError(std::string(what) + " must not be null");
}

cplx in(ell_complex z) { return {z.re, z.im}; }
ell_complex out_of(cplx z) { return {z.real(), z.imag()}; }

ThetaContext<double> context_for(ell_complex p) { return ThetaContext<double>(Nome<double>(in(p))); }

ell_status copy_text(const std::string& s, char* buf, size_t size) {
  if (!buf || s.size() + 1 > size) return fail(ELL_ERR_USAGE, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  last_error().clear();
  return ELL_OK;
}

template <typename N>
N parse_number(std::string_view key, std::string_view text) {
  N value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError("invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

bool parse_flag(std::string_view key, std::string_view text) {
  if (text == "1" || text == "true") return true;
  if (text == "0" || text == "false") return false;
  throw UsageError("invalid value '" + std::string(text) + "' for " + std::string(key));
}

void apply(SuiteConfig& c, std::string_view key, std::string_view value) {
  SamplingDomain& d = c.domain;
  if (key == "trials") {
    c.trials = parse_number<long>(key, value);
    if (c.trials < 0) throw UsageError("trials must be nonnegative");
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "tol") {
    c.tolerance = parse_number<double>(key, value);
    if (!(c.tolerance > 0 && c.tolerance < 1)) throw UsageError("tolerance must lie in (0, 1)");
  } else if (key == "m_max") {
    c.m_max = parse_number<long>(key, value);
  } else if (key == "r_max") {
    c.r_max = parse_number<long>(key, value);
  } else if (key == "grid_max") {
    c.grid_max = parse_number<long>(key, value);
  } else if (key == "threads") {
    c.threads = parse_number<unsigned>(key, value);
  } else if (key == "escalate") {
    c.escalate = parse_flag(key, value);
  } else if (key == "mutate") {
    c.mutate = parse_flag(key, value);
  } else if (key == "p_max") {
    d.p_modulus_max = parse_number<double>(key, value);
  } else if (key == "resample_limit") {
    d.resample_limit = parse_number<long>(key, value);
  } else if (key == "pole_guard") {
    d.pole_guard = parse_number<double>(key, value);
  } else if (key == "a_min") {
    d.a.lo = parse_number<double>(key, value);
  } else if (key == "a_max") {
    d.a.hi = parse_number<double>(key, value);
  } else if (key == "b_min") {
    d.b.lo = parse_number<double>(key, value);
  } else if (key == "b_max") {
    d.b.hi = parse_number<double>(key, value);
  } else if (key == "q_min") {
    d.q.lo = parse_number<double>(key, value);
  } else if (key == "q_max") {
    d.q.hi = parse_number<double>(key, value);
  } else if (key == "q_turn") {
    d.q_turn = parse_number<double>(key, value);
  } else {
    throw UsageError("unknown configuration key '" + std::string(key) + "'");
  }
}

std::vector<TrialOutcome> gather(const ell_report* const* reports, size_t count) {
  if (count) require(reports, "reports");
  std::vector<TrialOutcome> all;
  for (size_t i = 0; i < count; ++i) {
    require(reports[i], "report");
    const auto& o = reports[i]->report.outcomes;
    all.insert(all.end(), o.begin(), o.end());
  }
  return all;
}

template <typename Writer>
void write_file(const char* path, const std::vector<TrialOutcome>& outcomes, Writer writer) {
  require(path, "path");
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError(std::string("cannot open '") + path + "' for writing");
  writer(file, outcomes);
  file.flush();
  if (!file) throw UsageError(std::string("failed writing '") + path + "'");
}

}  // namespace

extern "C" {

const char* ell_last_error(void) { return last_error().c_str(); }

const char* ell_status_name(ell_status status) {
  switch (status) {
    case ELL_OK: return "ok";
    case ELL_ERR_DOMAIN: return "domain error";
    case ELL_ERR_POLE: return "pole error";
    case ELL_ERR_SCALE: return "scale error";
    case ELL_ERR_RANGE: return "range error";
    case ELL_ERR_USAGE: return "usage error";
    case ELL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ell_status ell_format_complex(ell_complex z, char* buf, size_t size) {
  return copy_text(format_complex(in(z)), buf, size);
}

ell_status ell_format_real(double x, char* buf, size_t size) { return copy_text(format_real(x), buf, size); }

ell_status ell_theta(ell_complex x, ell_complex p, ell_complex* out) {
  return guarded([&] {
    require(out, "out");
    *out = out_of(theta(in(x), context_for(p)));
  });
}

ell_status ell_qpfac(ell_complex a, long n, ell_complex q, ell_complex p, ell_complex* out) {
  return guarded([&] {
    require(out, "out");
    *out = out_of(qp_shifted(in(a), n, in(q), context_for(p)));
  });
}

ell_status ell_model_new(ell_complex p, ell_complex a, ell_complex b, ell_complex q,
                         ell_degeneration degeneration, ell_model** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    Degeneration d = Degeneration::none;
    if (degeneration == ELL_DEGEN_A_ZERO) {
      d = Degeneration::a_zero;
    } else if (degeneration == ELL_DEGEN_AB_ZERO) {
      d = Degeneration::ab_zero;
    } else if (degeneration != ELL_DEGEN_NONE) {
      throw UsageError("unknown degeneration");
    }
    auto model = std::make_unique<ell_model>(ell_model{context_for(p), EllipticParams<double>(in(a), in(b), in(q), d)});
    model->params.validate(model->ctx);
    *out = model.release();
  });
}

void ell_model_free(ell_model* model) { delete model; }

ell_status ell_weight(const ell_model* model, long n, long m, ell_complex* out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    *out = out_of(weight(n, m, model->params, model->ctx));
  });
}

ell_status ell_ebinom(const ell_model* model, long l, long k, long n, long m, ell_complex* out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    *out = out_of(elliptic_binomial(l, k, n, m, model->params, model->ctx));
  });
}

ell_status ell_vseries(ell_complex a1, const ell_complex* rest, size_t count, ell_complex z, ell_complex q,
                       ell_complex p, long terms, ell_complex* out, double* max_term) {
  return guarded([&] {
    require(out, "out");
    if (count) require(rest, "rest");
    VSeriesSpec<double> spec;
    spec.a1 = in(a1);
    for (size_t i = 0; i < count; ++i) spec.rest.push_back(in(rest[i]));
    spec.z = in(z);
    spec.q = in(q);
    spec.terms = terms;
    double mt = 0;
    *out = out_of(eval_V(spec, context_for(p), &mt));
    if (max_term) *max_term = mt;
  });
}

ell_status ell_paths_enumerate(long ux, long uy, long vx, long vy, ell_paths** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto list = std::make_unique<ell_paths>();
    list->paths = enumerate_paths({ux, uy}, {vx, vy});
    for (const auto& path : list->paths) list->text.push_back(path.to_string());
    *out = list.release();
  });
}

void ell_paths_free(ell_paths* paths) { delete paths; }

size_t ell_paths_count(const ell_paths* paths) { return paths ? paths->paths.size() : 0; }

const char* ell_paths_text(const ell_paths* paths, size_t index) {
  if (!paths || index >= paths->text.size()) return nullptr;
  return paths->text[index].c_str();
}

ell_status ell_paths_weight(const ell_paths* paths, size_t index, const ell_model* model, ell_complex* out) {
  return guarded([&] {
    require(paths, "paths");
    require(model, "model");
    require(out, "out");
    if (index >= paths->paths.size()) throw UsageError("path index out of range");
    *out = out_of(path_weight(paths->paths[index], model->params, model->ctx));
  });
}

ell_status ell_gf_bruteforce(const ell_model* model, long ux, long uy, long vx, long vy, ell_complex* out) {
  return guarded([&] {
    require(model, "model");
    require(out, "out");
    *out = out_of(gf_bruteforce<double>({ux, uy}, {vx, vy}, model->params, model->ctx));
  });
}

size_t ell_suite_count(void) { return registered_suites().size(); }

const char* ell_suite_id(size_t index) {
  const auto& suites = registered_suites();
  return index < suites.size() ? suites[index].id.c_str() : nullptr;
}

ell_status ell_config_new(const char* suite_id, ell_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(suite_id, "suite_id");
    suite_info(suite_id);
    auto config = std::make_unique<ell_config>();
    config->config.suite_id = suite_id;
    *out = config.release();
  });
}

void ell_config_free(ell_config* config) { delete config; }

ell_status ell_config_set(ell_config* config, const char* key, const char* value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    apply(config->config, key, value);
  });
}

ell_status ell_config_check(const ell_config* config) {
  return guarded([&] {
    require(config, "config");
    resolve(config->config);
  });
}

ell_status ell_run_suite(const ell_config* config, ell_report** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = nullptr;
    auto report = std::make_unique<ell_report>();
    report->report = run_suite(config->config);
    *out = report.release();
  });
}

void ell_report_free(ell_report* report) { delete report; }

const char* ell_report_suite(const ell_report* report) {
  return report ? report->report.config.suite_id.c_str() : nullptr;
}

long ell_report_trials(const ell_report* report) { return report ? report->report.counted() : 0; }

long ell_report_passes(const ell_report* report) { return report ? report->report.passes() : 0; }

double ell_report_max_rel_error(const ell_report* report) { return report ? report->report.max_rel_error() : 0; }

int ell_report_passed(const ell_report* report) { return report && report->report.passed() ? 1 : 0; }

size_t ell_report_outcome_count(const ell_report* report) { return report ? report->report.outcomes.size() : 0; }

ell_status ell_report_outcome(const ell_report* report, size_t index, ell_outcome* out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (index >= report->report.outcomes.size()) throw UsageError("outcome index out of range");
    const TrialOutcome& o = report->report.outcomes[index];
    *out = ell_outcome{o.identity_id.c_str(), o.seed, o.trial_index, o.params.c_str(), out_of(o.lhs),
                       out_of(o.rhs), o.rel_error, status_name(o.status), o.condition_flag ? 1 : 0};
  });
}

ell_status ell_write_json(const ell_report* const* reports, size_t count, const char* path) {
  return guarded([&] {
    write_file(path, gather(reports, count),
               [](std::ostream& s, const std::vector<TrialOutcome>& o) { write_json(s, o); });
  });
}

ell_status ell_write_csv(const ell_report* const* reports, size_t count, const char* path) {
  return guarded([&] {
    write_file(path, gather(reports, count),
               [](std::ostream& s, const std::vector<TrialOutcome>& o) { write_csv(s, o); });
  });
}

}  // extern "C"
