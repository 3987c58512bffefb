#pragma once

#include <span>
#include <string>
#include <vector>

#include "elliptica/complex_math.hpp"
#include "elliptica/error.hpp"

namespace elliptica {

/// The nome p of a theta function. Construction enforces |p| < 1 and the
/// evaluation cap |p| <= p_max.
template <typename T>
class Nome {
 public:
  static inline const T kDefaultMax = T(0.9);

  Nome() = default;
  explicit Nome(Complex<T> p, T p_max = kDefaultMax);

  const Complex<T>& value() const noexcept { return p_; }
  T modulus() const { return std::abs(p_); }
  bool is_zero() const { return p_ == Complex<T>{}; }

 private:
  Complex<T> p_{};
};

/// Immutable evaluation settings shared by everything built on theta.
template <typename T>
class ThetaContext {
 public:
  static inline const T kDefaultTruncationEps = T(1e-18);
  static inline const T kDefaultGuardEps = T(1e-12);

  explicit ThetaContext(Nome<T> nome, T truncation_eps = kDefaultTruncationEps,
                        T guard_eps = kDefaultGuardEps);

  const Nome<T>& nome() const noexcept { return nome_; }
  const Complex<T>& p() const noexcept { return nome_.value(); }
  T truncation_eps() const noexcept { return truncation_eps_; }
  T guard_eps() const noexcept { return guard_eps_; }

  /// Number of product factors: smallest K >= 1 with |p|^K < truncation_eps.
  long truncation() const noexcept { return truncation_; }

  /// Same settings with the factor count forced to `terms` (used by oracles).
  ThetaContext with_truncation(long terms) const;

 private:
  Nome<T> nome_;
  T truncation_eps_;
  T guard_eps_;
  long truncation_;
};

/// Modified Jacobi theta function theta(x; p) = (x; p)_inf (p/x; p)_inf,
/// evaluated as the truncated product over k < K.
template <typename T>
Complex<T> theta(Complex<T> x, const ThetaContext<T>& ctx);

/// Product of theta over `xs`; the empty product is 1.
template <typename T>
Complex<T> theta_multi(std::span<const Complex<T>> xs, const ThetaContext<T>& ctx);

/// Theta shifted factorial (a; q, p)_n for any integer n.
template <typename T>
Complex<T> qp_shifted(Complex<T> a, long n, Complex<T> q, const ThetaContext<T>& ctx);

/// (a_1, ..., a_m; q, p)_n as a product of single factorials.
template <typename T>
Complex<T> qp_shifted_multi(std::span<const Complex<T>> as, long n, Complex<T> q,
                            const ThetaContext<T>& ctx);

/// Scaled residual of the three-term addition formula
///   theta(xy, x/y, uv, u/v) - theta(xv, x/v, uy, u/y) = (u/y) theta(yv, y/v, xu, x/u).
template <typename T>
T check_addition_formula(Complex<T> x, Complex<T> y, Complex<T> u, Complex<T> v,
                         const ThetaContext<T>& ctx);

/// A theta argument of the form coef * q^qexp. Keeping the integer exponent
/// separate lets arguments like q^{1+n-l} * q^{l-n-1} land on exactly 1.
/// `vanishing` marks a symbolically zero coefficient (a -> 0 limits), which is
/// only meaningful at p = 0 where theta(0; 0) = 1.
template <typename T>
struct Mono {
  Complex<T> coef{1};
  long qexp = 0;
  bool vanishing = false;

  static Mono power(long e) { return Mono{Complex<T>{1}, e, false}; }
  static Mono zero() { return Mono{Complex<T>{0}, 0, true}; }

  Mono shifted(long by) const { return Mono{coef, qexp + by, vanishing}; }
};

/// Accumulates a ratio of theta values and theta shifted factorials while
/// tracking exact zeros. Numerator factors below guard_eps count as zeros
/// (their value is still multiplied in, so structural zeros give exactly 0);
/// denominator factors below guard_eps count as poles and are left out.
/// value() throws PoleError when any pole is present, whether uncancelled or
/// meeting a zero in an indeterminate 0/0.
template <typename T>
class ThetaProduct {
 public:
  ThetaProduct(const ThetaContext<T>& ctx, Complex<T> q);

  ThetaProduct& times(const Mono<T>& x, const char* label = "theta");
  ThetaProduct& over(const Mono<T>& x, const char* label = "theta");
  /// Multiplies by (x; q, p)_n.
  ThetaProduct& times_factorial(const Mono<T>& x, long n, const char* label = "factorial");
  /// Divides by (x; q, p)_n.
  ThetaProduct& over_factorial(const Mono<T>& x, long n, const char* label = "factorial");
  ThetaProduct& scale(const Complex<T>& c);
  ThetaProduct& scale_q(long exponent);

  Complex<T> value() const;
  int zero_order() const noexcept { return zeros_ - poles_; }

 private:
  Complex<T> eval(const Mono<T>& x) const;
  void numerator(const Mono<T>& x, const char* label, long index);
  void denominator(const Mono<T>& x, const char* label, long index);

  const ThetaContext<T>* ctx_;
  Complex<T> q_;
  Complex<T> value_{1};
  int zeros_ = 0;
  int poles_ = 0;
  const char* pole_label_ = nullptr;
  long pole_index_ = 0;
};

}  // namespace elliptica
