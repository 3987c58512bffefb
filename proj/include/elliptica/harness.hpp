#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "elliptica/sampling.hpp"

namespace elliptica {

enum class TrialStatus { pass, fail, resampled_pole, skipped_scale };

const char* status_name(TrialStatus status);

struct TrialOutcome {
  std::string identity_id;
  std::uint64_t seed = 0;
  long trial_index = 0;
  std::string params;
  std::complex<double> lhs, rhs;
  double rel_error = 0;
  TrialStatus status = TrialStatus::pass;
  bool condition_flag = false;
};

inline constexpr double kConditionLimit = 1e12;

struct SuiteInfo {
  std::string id;
  long default_trials = 0;
  double default_tolerance = 1e-10;
  long m_max = 0;
  long r_max = 0;
  long grid_max = 0;
  std::vector<std::string> identities;
};

/// Unset (negative or zero) numeric fields take the suite defaults.
struct SuiteConfig {
  std::string suite_id;
  long trials = -1;
  double tolerance = 0;
  long m_max = -1;
  long r_max = -1;
  long grid_max = -1;
  std::uint64_t seed = 0;
  bool mutate = false;
  bool escalate = false;
  unsigned threads = 1;
  SamplingDomain domain;
};

/// Registration order.
const std::vector<SuiteInfo>& registered_suites();

/// Throws UsageError for unknown ids.
const SuiteInfo& suite_info(std::string_view id);

/// Fills defaults and validates; throws UsageError.
SuiteConfig resolve(SuiteConfig config);

struct SuiteReport {
  SuiteConfig config;
  std::vector<TrialOutcome> outcomes;

  long counted() const;
  long passes() const;
  double max_rel_error() const;
  bool passed() const;
};

/// Trials run independently (optionally on `threads` workers); outcomes come
/// back in trial-index order, each pole-resampled attempt before its trial.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace elliptica
