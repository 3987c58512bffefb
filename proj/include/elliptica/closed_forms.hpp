#pragma once

#include <utility>
#include <vector>

#include "elliptica/lattice.hpp"

namespace elliptica {

/// Fully factored weighted count of paths (l, k) -> (n, m); needs n-l+m-k >= 0.
/// Vanishes exactly when k > m, or when l > n with m >= k.
template <typename T>
Complex<T> elliptic_binomial(long l, long k, long n, long m, const EllipticParams<T>& params,
                             const ThetaContext<T>& ctx);

/// elliptic_binomial with path semantics: 0 when v is not reachable from u.
template <typename T>
Complex<T> path_gf(LatticePoint u, LatticePoint v, const EllipticParams<T>& params,
                   const ThetaContext<T>& ctx);

/// [n choose k]_q; falls back to the Pascal recursion near roots of unity.
template <typename T>
Complex<T> q_binomial(long n, long k, Complex<T> q, T guard_eps = T(1e-12));

template <typename T>
struct WarnaarDetArgs {
  Complex<T> A, B, C;
  std::vector<Complex<T>> X;
};

/// det_{i,j} (A X_i, A C / X_i; q, p)_{r-j} / (B X_i, B C / X_i; q, p)_{r-j}
/// evaluated numerically.
template <typename T>
Complex<T> warnaar_det_lhs(const WarnaarDetArgs<T>& args, Complex<T> q, const ThetaContext<T>& ctx);

/// Closed-form product for the same determinant.
template <typename T>
Complex<T> warnaar_det_rhs(const WarnaarDetArgs<T>& args, Complex<T> q, const ThetaContext<T>& ctx);

/// Data of one nonintersecting-family determinant with a product formula.
/// Fields not used by a tag are ignored; `seq` holds the varying coordinate:
///   a: starts (l+j, k-j), ends (n, m_i),       m_1 >= ... >= m_r
///   b: starts (l+j, k-j), ends (n_i, m),       n_1 <= ... <= n_r
///   c: starts (l+j, k-j), ends (n_i, m-n_i),   n_1 <= ... <= n_r
///   d: starts (l, k_j),   ends (n+i, m-i),     k_1 >= ... >= k_r
///   e: starts (l_j, k),   ends (n+i, m-i),     l_1 <= ... <= l_r
///   f: starts (l_j, k-l_j), ends (n+i, m-i),   l_1 <= ... <= l_r
struct DetFormulaVariant {
  char tag = 'a';
  long l = 0, k = 0, n = 0, m = 0;
  std::vector<long> seq;

  std::size_t rank() const noexcept { return seq.size(); }
  /// Throws DomainError when the monotonicity or feasibility hypothesis fails.
  void validate() const;
  std::pair<PointTuple, PointTuple> points() const;
};

/// Product formula for the determinant described by `variant`.
template <typename T>
Complex<T> det_formula(const DetFormulaVariant& variant, const EllipticParams<T>& params,
                       const ThetaContext<T>& ctx);

/// The same determinant computed from closed-form single-path entries.
template <typename T>
Complex<T> det_from_entries(const DetFormulaVariant& variant, const EllipticParams<T>& params,
                            const ThetaContext<T>& ctx);

/// det_{i,j} path_gf(starts[j] -> ends[i]).
template <typename T>
Complex<T> entry_determinant(const std::vector<LatticePoint>& starts,
                             const std::vector<LatticePoint>& ends, const EllipticParams<T>& params,
                             const ThetaContext<T>& ctx);

}  // namespace elliptica
