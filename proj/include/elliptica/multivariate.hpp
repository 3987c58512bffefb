#pragma once

#include <vector>

#include "elliptica/series.hpp"

namespace elliptica {

/// One of the three r-fold path convolutions between starts (l+j, k-j) and
/// ends (n+i, m-i), cut at
///   a: the vertical line x = nu,           l+r+1 <= nu <= n+1
///   b: the horizontal line y = nu,         k <= nu <= m-r
///   c: the antidiagonal x + y = nu,        l+k <= nu <= n+m
struct ConvolutionSpec {
  char variant = 'a';
  long l = 0, k = 0, n = 0, m = 0;
  long r = 1;
  long nu = 0;

  void validate() const;
};

inline constexpr long kMaxConvolutionRank = 3;

/// lhs: the full determinant; rhs: the sum over strictly ordered cut tuples
/// of the product of the two partial determinants (and, for a, the weights
/// of the crossing edges). Entries come from the closed-form binomial.
template <typename T>
SidePair<T> verify_convolution(const ConvolutionSpec& spec, const EllipticParams<T>& params,
                               const ThetaContext<T>& ctx);

template <typename T>
struct MultiSumSpec {
  Complex<T> a{1}, b{1}, c{1}, d{1}, e{1}, f{1};
  long m = 0;
  long r = 1;
  Complex<T> q{1};
};

/// r-fold 10V9 summation; sums over 0 <= k_1 < ... < k_r <= m.
template <typename T>
SidePair<T> multivariate_ft_sum(const MultiSumSpec<T>& spec, const ThetaContext<T>& ctx);

/// r-fold 12V11 transformation with lambda = a^2 q^{2-r} / bcd.
template <typename T>
SidePair<T> multivariate_ft_transform(const MultiSumSpec<T>& spec, const ThetaContext<T>& ctx);

/// Left side of the transformation summed over the full cube [0, m]^r and
/// divided by r!, against the ordered sum.
template <typename T>
SidePair<T> multivariate_symmetric_range(const MultiSumSpec<T>& spec, const ThetaContext<T>& ctx);

/// Summation parameters reached from a vertical-cut convolution:
///   A = aq^{nu+2k-2r}, B = bq^{nu+l+k+1-r}, C = q^{nu-l-r}, D = aq^{k-n-2r}/b,
///   M = m-1-k+r, and cut tuple t maps to k_i = t_{r+1-i} - (k-r).
template <typename T>
MultiSumSpec<T> convolution_sum_map(const ConvolutionSpec& spec, const EllipticParams<T>& params);

/// lhs: the full determinant rescaled by summand(k0) / term(k0) for the first
/// cut tuple; rhs: the product side of the mapped summation. Variant a only.
template <typename T>
SidePair<T> convolution_as_multisum(const ConvolutionSpec& spec, const EllipticParams<T>& params,
                                    const ThetaContext<T>& ctx);

/// All strictly increasing r-tuples from [lo, hi] in lexicographic order.
std::vector<std::vector<long>> ordered_tuples(long lo, long hi, long r);

}  // namespace elliptica
