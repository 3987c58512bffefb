#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "elliptica/harness.hpp"
#include "elliptica/report.hpp"
#include "elliptica/series.hpp"
#include "precision.hpp"

namespace elliptica::detail {

inline constexpr double kMutation = 1e-3;

/// One attempt of one trial: draws parameters, records them, and knows
/// whether the left side should be pushed off the identity.
template <typename T>
class Case {
 public:
  Case(Sampler& sampler, const SuiteConfig& config) : sampler_(sampler), config_(config) {}

  Complex<T> a(const char* name = "a") { return record(name, sampler_.a()); }
  Complex<T> b(const char* name = "b") { return record(name, sampler_.b()); }
  Complex<T> q(const char* name = "q") { return record(name, sampler_.q()); }

  long integer(const char* name, long lo, long hi) {
    const long v = sampler_.integer(lo, hi);
    note(name, std::to_string(v));
    return v;
  }

  ThetaContext<T> context() {
    const Complex<T> p = record("p", sampler_.nome());
    return ThetaContext<T>(Nome<T>(p), truncation_eps(), guard());
  }

  ThetaContext<T> basic_context() {
    note("p", "0e0,0e0");
    return ThetaContext<T>(Nome<T>(Complex<T>{}), truncation_eps(), guard());
  }

  EllipticParams<T> params() {
    const Complex<T> av = a();
    const Complex<T> bv = b();
    return EllipticParams<T>(av, bv, q());
  }

  /// The default cut-off, tightened to the working precision when it is finer.
  static T truncation_eps() {
    const T eps = std::numeric_limits<T>::epsilon() / 100;
    return std::min(ThetaContext<T>::kDefaultTruncationEps, eps);
  }

  Sampler& sampler() noexcept { return sampler_; }
  T guard() const noexcept { return static_cast<T>(config_.domain.pole_guard); }
  bool mutate() const noexcept { return config_.mutate; }
  Complex<T> bump() const { return Complex<T>{config_.mutate ? T(1) + T(kMutation) : T(1)}; }
  const SuiteConfig& config() const noexcept { return config_; }

  /// Both sides from f(1); under mutation the left side comes from
  /// f(1 + 1e-3) instead.
  template <typename F>
  SidePair<T> perturbed(F&& f) {
    SidePair<T> out = f(Complex<T>{1});
    if (config_.mutate) {
      const SidePair<T> off = f(bump());
      out.lhs = off.lhs;
      out.max_term = std::max(out.max_term, off.max_term);
    }
    return out;
  }

  void note(const char* name, std::string value) { entries_.emplace_back(name, std::move(value)); }

  std::string params_text() const {
    std::string s;
    for (const auto& [k, v] : entries_) {
      if (!s.empty()) s += ' ';
      s += k + "=" + v;
    }
    return s;
  }

 private:
  Complex<T> record(const char* name, std::complex<double> v) {
    note(name, format_pair(v));
    return Complex<T>(static_cast<T>(v.real()), static_cast<T>(v.imag()));
  }

  Sampler& sampler_;
  const SuiteConfig& config_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

template <typename T>
using SubRun = SidePair<T> (*)(Case<T>&);

struct SubIdentity {
  std::string name;
  SubRun<double> run_double;
  SubRun<Quad> run_extended;
  double tolerance_cap = 1;
};

struct SuiteDef {
  SuiteInfo info;
  std::vector<SubIdentity> subs;
  /// Sub-identity index for trial i is pattern[i % size].
  std::vector<int> pattern;
};

const std::vector<SuiteDef>& suite_defs();

}  // namespace elliptica::detail
