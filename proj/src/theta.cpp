#include "elliptica/theta.hpp"

#include <cmath>
#include <string>
#include "precision.hpp"

namespace elliptica {

template <typename T>
Nome<T>::Nome(Complex<T> p, T p_max) : p_(p) {
  if (!is_finite(p)) throw DomainError("nome must be finite");
  if (!(p_max > 0 && p_max < 1)) throw DomainError("nome cap must lie in (0, 1)");
  if (std::abs(p) >= 1) throw DomainError("nome must satisfy |p| < 1");
  if (std::abs(p) > p_max) throw DomainError("nome exceeds the configured cap p_max");
}

namespace {

template <typename T>
long truncation_for(T modulus, T eps) {
  using std::ceil, std::log, std::pow;
  if (modulus == 0) return 1;
  // smallest K >= 1 with modulus^K < eps
  long k = static_cast<long>(ceil(log(eps) / log(modulus)));
  if (k < 1) k = 1;
  while (pow(modulus, static_cast<T>(k)) >= eps) ++k;
  while (k > 1 && pow(modulus, static_cast<T>(k - 1)) < eps) --k;
  return k;
}

}  // namespace

template <typename T>
ThetaContext<T>::ThetaContext(Nome<T> nome, T truncation_eps, T guard_eps)
    : nome_(nome), truncation_eps_(truncation_eps), guard_eps_(guard_eps) {
  if (!(truncation_eps > 0) || !(guard_eps > 0)) {
    throw DomainError("truncation_eps and guard_eps must be positive");
  }
  truncation_ = truncation_for(nome_.modulus(), truncation_eps_);
}

template <typename T>
ThetaContext<T> ThetaContext<T>::with_truncation(long terms) const {
  if (terms < 1) throw DomainError("truncation must be at least one factor");
  ThetaContext copy = *this;
  copy.truncation_ = terms;
  return copy;
}

template <typename T>
Complex<T> theta(Complex<T> x, const ThetaContext<T>& ctx) {
  if (x == Complex<T>{}) throw DomainError("theta argument must be nonzero");
  if (!is_finite(x)) throw DomainError("theta argument must be finite");
  const Complex<T> p = ctx.p();
  const Complex<T> inv = Complex<T>{1} / x;
  Complex<T> result{1};
  Complex<T> pk{1};
  for (long k = 0; k < ctx.truncation(); ++k) {
    const Complex<T> pk1 = pk * p;
    result *= (Complex<T>{1} - x * pk) * (Complex<T>{1} - pk1 * inv);
    pk = pk1;
  }
  return result;
}

template <typename T>
Complex<T> theta_multi(std::span<const Complex<T>> xs, const ThetaContext<T>& ctx) {
  Complex<T> result{1};
  for (const auto& x : xs) result *= theta(x, ctx);
  return result;
}

template <typename T>
Complex<T> qp_shifted(Complex<T> a, long n, Complex<T> q, const ThetaContext<T>& ctx) {
  if (a == Complex<T>{} || q == Complex<T>{}) {
    throw DomainError("shifted factorial needs nonzero a and q");
  }
  ThetaProduct<T> product(ctx, q);
  product.times_factorial(Mono<T>{a, 0, false}, n, "(a;q,p)_n");
  return product.value();
}

template <typename T>
Complex<T> qp_shifted_multi(std::span<const Complex<T>> as, long n, Complex<T> q,
                            const ThetaContext<T>& ctx) {
  Complex<T> result{1};
  for (const auto& a : as) result *= qp_shifted(a, n, q, ctx);
  return result;
}

template <typename T>
T check_addition_formula(Complex<T> x, Complex<T> y, Complex<T> u, Complex<T> v,
                         const ThetaContext<T>& ctx) {
  auto th = [&ctx](std::initializer_list<Complex<T>> args) {
    return theta_multi<T>(std::span<const Complex<T>>(args.begin(), args.size()), ctx);
  };
  const Complex<T> lhs = th({x * y, x / y, u * v, u / v}) - th({x * v, x / v, u * y, u / y});
  const Complex<T> rhs = u / y * th({y * v, y / v, x * u, x / u});
  const T scale = std::max({std::abs(lhs), std::abs(rhs), T(1)});
  return std::abs(lhs - rhs) / scale;
}

template <typename T>
ThetaProduct<T>::ThetaProduct(const ThetaContext<T>& ctx, Complex<T> q) : ctx_(&ctx), q_(q) {
  if (q == Complex<T>{}) throw DomainError("base q must be nonzero");
}

template <typename T>
Complex<T> ThetaProduct<T>::eval(const Mono<T>& x) const {
  if (x.vanishing) {
    if (!ctx_->nome().is_zero()) {
      throw DomainError("degenerate (zero) parameters are only defined at p = 0");
    }
    return Complex<T>{1};
  }
  return theta(x.coef * ipow(q_, x.qexp), *ctx_);
}

template <typename T>
void ThetaProduct<T>::numerator(const Mono<T>& x, const char*, long) {
  const Complex<T> t = eval(x);
  if (std::abs(t) < ctx_->guard_eps()) ++zeros_;
  value_ *= t;
}

template <typename T>
void ThetaProduct<T>::denominator(const Mono<T>& x, const char* label, long index) {
  const Complex<T> t = eval(x);
  if (std::abs(t) < ctx_->guard_eps()) {
    if (poles_ == 0) {
      pole_label_ = label;
      pole_index_ = index;
    }
    ++poles_;
    return;
  }
  value_ /= t;
}

template <typename T>
ThetaProduct<T>& ThetaProduct<T>::times(const Mono<T>& x, const char* label) {
  numerator(x, label, 0);
  return *this;
}

template <typename T>
ThetaProduct<T>& ThetaProduct<T>::over(const Mono<T>& x, const char* label) {
  denominator(x, label, 0);
  return *this;
}

template <typename T>
ThetaProduct<T>& ThetaProduct<T>::times_factorial(const Mono<T>& x, long n, const char* label) {
  if (n > 0) {
    for (long k = 0; k < n; ++k) numerator(x.shifted(k), label, k);
  } else {
    for (long k = 0; k < -n; ++k) denominator(x.shifted(n + k), label, k);
  }
  return *this;
}

template <typename T>
ThetaProduct<T>& ThetaProduct<T>::over_factorial(const Mono<T>& x, long n, const char* label) {
  if (n > 0) {
    for (long k = 0; k < n; ++k) denominator(x.shifted(k), label, k);
  } else {
    for (long k = 0; k < -n; ++k) numerator(x.shifted(n + k), label, k);
  }
  return *this;
}

template <typename T>
ThetaProduct<T>& ThetaProduct<T>::scale(const Complex<T>& c) {
  value_ *= c;
  return *this;
}

template <typename T>
ThetaProduct<T>& ThetaProduct<T>::scale_q(long exponent) {
  value_ *= ipow(q_, exponent);
  return *this;
}

template <typename T>
Complex<T> ThetaProduct<T>::value() const {
  if (poles_ > 0) {
    const std::string factor = pole_label_ ? pole_label_ : "theta";
    const bool indeterminate = zeros_ >= poles_;
    throw PoleError(factor, pole_index_,
                    std::string(indeterminate ? "indeterminate 0/0 at factor " : "pole at factor ") +
                        factor + "[" + std::to_string(pole_index_) + "]");
  }
  return value_;
}

#define ELLIPTICA_INSTANTIATE(T)                                                               \
  template class Nome<T>;                                                                      \
  template class ThetaContext<T>;                                                              \
  template class ThetaProduct<T>;                                                              \
  template Complex<T> theta<T>(Complex<T>, const ThetaContext<T>&);                            \
  template Complex<T> theta_multi<T>(std::span<const Complex<T>>, const ThetaContext<T>&);     \
  template Complex<T> qp_shifted<T>(Complex<T>, long, Complex<T>, const ThetaContext<T>&);     \
  template Complex<T> qp_shifted_multi<T>(std::span<const Complex<T>>, long, Complex<T>,       \
                                          const ThetaContext<T>&);                             \
  template T check_addition_formula<T>(Complex<T>, Complex<T>, Complex<T>, Complex<T>,         \
                                       const ThetaContext<T>&);

ELLIPTICA_INSTANTIATE(double)
ELLIPTICA_INSTANTIATE(Quad)
ELLIPTICA_INSTANTIATE(Wide)

}  // namespace elliptica
