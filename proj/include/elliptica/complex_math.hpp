#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

namespace elliptica {

template <typename T>
using Complex = std::complex<T>;

using cplx = Complex<double>;

/// Largest admissible lattice coordinate magnitude.
inline constexpr long kCoordinateLimit = 10000;

template <typename T>
bool is_finite(const Complex<T>& z) {
  using std::isfinite;
  return isfinite(z.real()) && isfinite(z.imag());
}

/// z^n for integer n by binary powering; never goes through log/exp.
template <typename T>
Complex<T> ipow(Complex<T> z, long n) {
  const bool invert = n < 0;
  unsigned long e = invert ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  Complex<T> result{1};
  while (e != 0) {
    if (e & 1UL) result *= z;
    e >>= 1;
    if (e != 0) z *= z;
  }
  return invert ? Complex<T>{1} / result : result;
}

/// |lhs - rhs| / max(|lhs|, |rhs|, 1e-300)
template <typename T>
T relative_error(const Complex<T>& lhs, const Complex<T>& rhs) {
  const T scale = std::max({std::abs(lhs), std::abs(rhs), T(1e-300)});
  return std::abs(lhs - rhs) / scale;
}

/// Binomial coefficient C(n, k) for small nonnegative n, zero outside 0 <= k <= n.
constexpr long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace elliptica
