#include "elliptica/weight.hpp"

#include <string>
#include "precision.hpp"

namespace elliptica {

void check_coordinate(long value, const char* what) {
  if (value > kCoordinateLimit || value < -kCoordinateLimit) {
    throw RangeError(std::string(what) + " = " + std::to_string(value) +
                     " is outside |coordinate| <= 10^4");
  }
}

template <typename T>
EllipticParams<T>::EllipticParams(Complex<T> a_, Complex<T> b_, Complex<T> q_, Degeneration d)
    : a(a_), b(b_), q(q_), degeneration(d) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(q)) {
    throw DomainError("weight parameters must be finite");
  }
  if (q == Complex<T>{}) throw DomainError("base q must be nonzero");
  if (d == Degeneration::none && (a == Complex<T>{} || b == Complex<T>{})) {
    throw DomainError("a and b must be nonzero; use a degeneration flag for the limits");
  }
  if (d == Degeneration::a_zero && b == Complex<T>{}) {
    throw DomainError("b must be nonzero under the a -> 0 degeneration");
  }
}

template <typename T>
Mono<T> EllipticParams<T>::a_mono(long e) const {
  if (degeneration != Degeneration::none) return Mono<T>::zero();
  return Mono<T>{a, e, false};
}

template <typename T>
Mono<T> EllipticParams<T>::b_mono(long e) const {
  if (degeneration == Degeneration::ab_zero) return Mono<T>::zero();
  return Mono<T>{b, e, false};
}

template <typename T>
Mono<T> EllipticParams<T>::ab_mono(long e) const {
  if (degeneration != Degeneration::none) return Mono<T>::zero();
  return Mono<T>{a / b, e, false};
}

template <typename T>
EllipticParams<T> EllipticParams<T>::with_ab(Complex<T> a_new, Complex<T> b_new) const {
  return EllipticParams(a_new, b_new, q, degeneration);
}

template <typename T>
void EllipticParams<T>::validate(const ThetaContext<T>& ctx) const {
  if (degeneration != Degeneration::none && !ctx.nome().is_zero()) {
    throw DomainError("degenerate weights require p = 0");
  }
}

template <typename T>
Complex<T> weight(long n, long m, const EllipticParams<T>& params, const ThetaContext<T>& ctx) {
  check_coordinate(n, "n");
  check_coordinate(m, "m");
  params.validate(ctx);
  ThetaProduct<T> w(ctx, params.q);
  w.times(params.a_mono(n + 2 * m), "aq^{n+2m}")
      .times(params.b_mono(2 * n), "bq^{2n}")
      .times(params.b_mono(2 * n - 1), "bq^{2n-1}")
      .times(params.ab_mono(1 - n), "aq^{1-n}/b")
      .times(params.ab_mono(-n), "aq^{-n}/b")
      .over(params.a_mono(n), "aq^n")
      .over(params.b_mono(2 * n + m), "bq^{2n+m}")
      .over(params.b_mono(2 * n + m - 1), "bq^{2n+m-1}")
      .over(params.ab_mono(1 + m - n), "aq^{1+m-n}/b")
      .over(params.ab_mono(m - n), "aq^{m-n}/b")
      .scale_q(m);
  return w.value();
}

template <typename T>
Complex<T> weight_p0(long n, long m, Complex<T> a, Complex<T> b, Complex<T> q,
                     Degeneration degeneration, T guard_eps) {
  check_coordinate(n, "n");
  check_coordinate(m, "m");
  if (q == Complex<T>{}) throw DomainError("base q must be nonzero");
  const bool a_zero = degeneration != Degeneration::none;
  const bool b_zero = degeneration == Degeneration::ab_zero;
  if (!b_zero && b == Complex<T>{}) throw DomainError("b must be nonzero");
  if (!a_zero && a == Complex<T>{}) throw DomainError("a must be nonzero");
  const Complex<T> one{1};
  auto lin_a = [&](long e) { return a_zero ? one : one - a * ipow(q, e); };
  auto lin_b = [&](long e) { return b_zero ? one : one - b * ipow(q, e); };
  auto lin_ab = [&](long e) { return a_zero ? one : one - a / b * ipow(q, e); };

  const Complex<T> num = lin_a(n + 2 * m) * lin_b(2 * n) * lin_b(2 * n - 1) * lin_ab(1 - n) * lin_ab(-n);
  const Complex<T> factors[] = {lin_a(n), lin_b(2 * n + m), lin_b(2 * n + m - 1), lin_ab(1 + m - n),
                                lin_ab(m - n)};
  const char* names[] = {"1-aq^n", "1-bq^{2n+m}", "1-bq^{2n+m-1}", "1-aq^{1+m-n}/b", "1-aq^{m-n}/b"};
  Complex<T> den{1};
  for (int i = 0; i < 5; ++i) {
    if (std::abs(factors[i]) < guard_eps) {
      throw PoleError(names[i], i, std::string("vanishing denominator factor ") + names[i]);
    }
    den *= factors[i];
  }
  return num / den * ipow(q, m);
}

template <typename T>
EllipticParams<T> shift_params(const EllipticParams<T>& params, ShiftOffset offset) {
  if (params.degeneration != Degeneration::none) {
    // q-shifts of a vanishing parameter keep it vanishing
    EllipticParams<T> shifted = params;
    shifted.b = params.b * ipow(params.q, 2 * offset.s + offset.t);
    return shifted;
  }
  return params.with_ab(params.a * ipow(params.q, offset.s + 2 * offset.t),
                        params.b * ipow(params.q, 2 * offset.s + offset.t));
}

template <typename T>
Complex<T> shifted_weight(long n, long m, ShiftOffset offset, const EllipticParams<T>& params,
                          const ThetaContext<T>& ctx) {
  return weight(n, m, shift_params(params, offset), ctx);
}

#define ELLIPTICA_INSTANTIATE(T)                                                                  \
  template struct EllipticParams<T>;                                                              \
  template Complex<T> weight<T>(long, long, const EllipticParams<T>&, const ThetaContext<T>&);    \
  template Complex<T> weight_p0<T>(long, long, Complex<T>, Complex<T>, Complex<T>, Degeneration, \
                                   T);                                                            \
  template Complex<T> shifted_weight<T>(long, long, ShiftOffset, const EllipticParams<T>&,        \
                                        const ThetaContext<T>&);                                  \
  template EllipticParams<T> shift_params<T>(const EllipticParams<T>&, ShiftOffset);

ELLIPTICA_INSTANTIATE(double)
ELLIPTICA_INSTANTIATE(Quad)
ELLIPTICA_INSTANTIATE(Wide)

}  // namespace elliptica
