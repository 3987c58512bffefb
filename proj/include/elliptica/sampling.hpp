#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace elliptica {

struct ModulusRange {
  double lo = 0.5;
  double hi = 2.0;
};

struct SamplingDomain {
  ModulusRange a, b, q;
  double p_modulus_max = 0.5;
  long resample_limit = 50;
  /// guard_eps of the trial contexts: draws that bring a denominator theta
  /// this close to zero count as poles and are resampled.
  double pole_guard = 1e-12;
  /// Pins q to exp(2 pi i * turn) with modulus drawn from `q`.
  std::optional<double> q_turn;

  void validate() const;
};

/// splitmix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// Per-trial stream seed from (seed, suite, trial, attempt).
std::uint64_t trial_seed(std::uint64_t seed, std::string_view suite_id, long trial_index, long attempt);

/// Parameter draws for a single trial attempt. Moduli are uniform on their
/// interval, phases uniform on the circle.
class Sampler {
 public:
  Sampler(const SamplingDomain& domain, std::uint64_t stream_seed);

  double uniform();
  long integer(long lo, long hi);
  std::complex<double> on_annulus(ModulusRange range);
  std::complex<double> a() { return on_annulus(domain_->a); }
  std::complex<double> b() { return on_annulus(domain_->b); }
  std::complex<double> q();
  std::complex<double> nome();
  const SamplingDomain& domain() const noexcept { return *domain_; }

 private:
  const SamplingDomain* domain_;
  std::mt19937_64 engine_;
};

}  // namespace elliptica
