#pragma once

#include <vector>

#include "elliptica/closed_forms.hpp"

namespace elliptica {

/// Both sides of an identity plus the largest summand magnitude met on the
/// series side(s), for the conditioning diagnostic.
template <typename T>
struct SidePair {
  Complex<T> lhs;
  Complex<T> rhs;
  T max_term = 0;
};

/// Terminating s+1 E_s series.
template <typename T>
struct ESeriesSpec {
  std::vector<Complex<T>> upper;  ///< a_1 .. a_{s+1}
  std::vector<Complex<T>> lower;  ///< b_1 .. b_s
  Complex<T> z{1};
  Complex<T> q{1};
  long terms = 0;
};

/// Terminating very-well-poised s+1 V_s series.
template <typename T>
struct VSeriesSpec {
  Complex<T> a1{1};
  std::vector<Complex<T>> rest;  ///< a_6 .. a_{s+1}
  Complex<T> z{1};
  Complex<T> q{1};
  long terms = 0;
};

inline constexpr double kBalancingTolerance = 1e-10;

template <typename T>
Complex<T> eval_E(const ESeriesSpec<T>& spec, const ThetaContext<T>& ctx, T* max_term = nullptr);

/// Uses the theta(a_1 q^{2k}) / theta(a_1) form with (qz)^k; no square roots.
template <typename T>
Complex<T> eval_V(const VSeriesSpec<T>& spec, const ThetaContext<T>& ctx, T* max_term = nullptr);

/// sum_{k=0}^{terms} theta(a q^{2k})/theta(a) prod (u;q,p)_k / prod (v;q,p)_k (qz)^k
/// with upper = {a} + `upper`, lower = {q} + `lower`; no balancing check.
template <typename T>
Complex<T> vwp_sum(Complex<T> a, const std::vector<Complex<T>>& upper,
                   const std::vector<Complex<T>>& lower, long terms, Complex<T> q,
                   const ThetaContext<T>& ctx, T* max_term = nullptr, Complex<T> z = Complex<T>{1});

/// prod over `num` of (x; q, p)_n divided by prod over `den` of (x; q, p)_n.
template <typename T>
Complex<T> factorial_ratio(const std::vector<Complex<T>>& num, const std::vector<Complex<T>>& den,
                           long n, Complex<T> q, const ThetaContext<T>& ctx);

/// 10V9 summation; e = a^2 q^{1+m}/bcd. `e_scale` multiplies e on the series
/// side only (1 keeps the identity balanced).
template <typename T>
SidePair<T> frenkel_turaev_sum(Complex<T> a, Complex<T> b, Complex<T> c, Complex<T> d, long m,
                               Complex<T> q, const ThetaContext<T>& ctx, Complex<T> e_scale = Complex<T>{1});

/// 12V11 transformation with lambda = a^2 q / bcd.
template <typename T>
SidePair<T> frenkel_turaev_transform(Complex<T> a, Complex<T> b, Complex<T> c, Complex<T> d,
                                     Complex<T> e, Complex<T> f, long n, Complex<T> q,
                                     const ThetaContext<T>& ctx);

/// Indefinite very-well-poised sum with product side (aq, bq, cq, aq/bc)_m / (q, aq/b, aq/c, bcq)_m.
template <typename T>
SidePair<T> indefinite_vwp_sum(Complex<T> a, Complex<T> b, Complex<T> c, long m, Complex<T> q,
                               const ThetaContext<T>& ctx);

enum class BasicKind { jackson_8phi7, q_pfaff_saalschutz, q_chu_vandermonde };

/// Classical p = 0 summations at continuous parameters:
///   jackson_8phi7       a, b, c, d (e fixed by balancing)
///   q_pfaff_saalschutz  3phi2(a, b, q^{-m}; c, abq^{1-m}/c; q, q) with a, b, c
///   q_chu_vandermonde   2phi1(a, q^{-m}; c; q, q) with a, c
template <typename T>
SidePair<T> basic_degenerations(BasicKind kind, const std::vector<Complex<T>>& params, long m,
                                Complex<T> q, T guard_eps = T(1e-12));

enum class ConvolutionKind { vertical_line, horizontal_line, antidiagonal };

/// gf((0,0) -> (n,m)) against its refinement by the first point on
/// x = cut (vertical_line, 1 <= cut <= n), y = cut (horizontal_line,
/// 1 <= cut <= m) or x + y = cut (antidiagonal, 0 < cut < n + m).
/// With degenerate parameters at p = 0 this is the lattice form of the
/// classical summations.
template <typename T>
SidePair<T> path_convolution(ConvolutionKind kind, long n, long m, long cut,
                             const EllipticParams<T>& params, const ThetaContext<T>& ctx);

/// The vertical-line convolution normalised by its k = 0 term, against the
/// 10V9 series with A = aq^l, B = bq^l, C = q^l, D = aq^{-n}/b.
template <typename T>
SidePair<T> convolution_as_10V9(long n, long m, long l, const EllipticParams<T>& params,
                                const ThetaContext<T>& ctx);

/// The three indefinite forms of gf((0,0) -> (n,m)). Returns gf itself as lhs
/// and, as rhs, form 1 (last-step sum), 2 (simplified summand) or 3 (the
/// substituted indefinite vwp sum).
template <typename T>
SidePair<T> indefinite_chain(int form, long n, long m, const EllipticParams<T>& params,
                             const ThetaContext<T>& ctx);

/// Squares of theta(aq^{2k})/theta(a) and of its four-pair quotient form,
/// with a^{1/2}, p^{1/2} on the principal branch. Needs p != 0.
template <typename T>
SidePair<T> vwp_term_squares(Complex<T> a, long k, Complex<T> q, const ThetaContext<T>& ctx);

}  // namespace elliptica
