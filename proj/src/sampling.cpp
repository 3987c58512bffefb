#include "elliptica/sampling.hpp"

#include <cmath>
#include <numbers>

#include "elliptica/error.hpp"

namespace elliptica {

void SamplingDomain::validate() const {
  for (const ModulusRange& r : {a, b, q}) {
    if (!(r.lo > 0 && r.lo <= r.hi && std::isfinite(r.hi))) {
      throw UsageError("modulus ranges must be closed intervals excluding 0");
    }
  }
  if (!(p_modulus_max >= 0 && p_modulus_max <= 0.9)) throw UsageError("p_modulus_max must lie in [0, 0.9]");
  if (!(pole_guard > 0 && pole_guard < 1)) throw UsageError("pole_guard must lie in (0, 1)");
  if (resample_limit < 1) throw UsageError("resample_limit must be positive");
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::string_view suite_id, long trial_index, long attempt) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : suite_id) h = (h ^ c) * 0x100000001b3ULL;
  std::uint64_t s = mix64(seed ^ mix64(h));
  s = mix64(s ^ static_cast<std::uint64_t>(trial_index));
  return mix64(s ^ (static_cast<std::uint64_t>(attempt) << 32));
}

Sampler::Sampler(const SamplingDomain& domain, std::uint64_t stream_seed)
    : domain_(&domain), engine_(stream_seed) {}

double Sampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

std::complex<double> Sampler::on_annulus(ModulusRange range) {
  const double r = range.lo + (range.hi - range.lo) * uniform();
  return std::polar(r, 2 * std::numbers::pi * uniform());
}

std::complex<double> Sampler::q() {
  if (!domain_->q_turn) return on_annulus(domain_->q);
  const double r = domain_->q.lo + (domain_->q.hi - domain_->q.lo) * uniform();
  return std::polar(r, 2 * std::numbers::pi * *domain_->q_turn);
}

std::complex<double> Sampler::nome() {
  const double r = domain_->p_modulus_max * uniform();
  return std::polar(r, 2 * std::numbers::pi * uniform());
}

}  // namespace elliptica
