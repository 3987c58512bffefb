#pragma once

#include "elliptica/theta.hpp"

namespace elliptica {

/// Basic-case limits of the weight, taken in the order a -> 0 then b -> 0.
/// Only valid together with p = 0.
enum class Degeneration { none, a_zero, ab_zero };

/// Parameters (a, b, q) of the elliptic weight; the nome lives in the
/// ThetaContext passed alongside.
template <typename T>
struct EllipticParams {
  Complex<T> a{1};
  Complex<T> b{1};
  Complex<T> q{1};
  Degeneration degeneration = Degeneration::none;

  EllipticParams() = default;
  EllipticParams(Complex<T> a_, Complex<T> b_, Complex<T> q_,
                 Degeneration d = Degeneration::none);

  /// a q^e, symbolically zero under a -> 0.
  Mono<T> a_mono(long e) const;
  /// b q^e, symbolically zero under b -> 0.
  Mono<T> b_mono(long e) const;
  /// a q^e / b, symbolically zero under a -> 0.
  Mono<T> ab_mono(long e) const;

  EllipticParams with_ab(Complex<T> a_new, Complex<T> b_new) const;
  /// Checks that the degeneration flag is compatible with the context nome.
  void validate(const ThetaContext<T>& ctx) const;
};

struct ShiftOffset {
  long s = 0;
  long t = 0;
};

void check_coordinate(long value, const char* what);

/// Elliptic weight of the horizontal edge (n-1, m) -> (n, m):
///   theta(aq^{n+2m}, bq^{2n}, bq^{2n-1}, aq^{1-n}/b, aq^{-n}/b)
///   / theta(aq^n, bq^{2n+m}, bq^{2n+m-1}, aq^{1+m-n}/b, aq^{m-n}/b) * q^m.
template <typename T>
Complex<T> weight(long n, long m, const EllipticParams<T>& params, const ThetaContext<T>& ctx);

/// The p = 0 weight as an explicit ratio of five linear factors each side.
/// Honors the a -> 0 and a, b -> 0 degenerations.
template <typename T>
Complex<T> weight_p0(long n, long m, Complex<T> a, Complex<T> b, Complex<T> q,
                     Degeneration degeneration = Degeneration::none, T guard_eps = T(1e-12));

/// w_{(s,t)}(n, m) = w(n, m; a q^{s+2t}, b q^{2s+t}).
template <typename T>
Complex<T> shifted_weight(long n, long m, ShiftOffset offset, const EllipticParams<T>& params,
                          const ThetaContext<T>& ctx);

template <typename T>
EllipticParams<T> shift_params(const EllipticParams<T>& params, ShiftOffset offset);

}  // namespace elliptica
