#include "elliptica/multivariate.hpp"

#include <algorithm>
#include <string>

#include "elliptica/compensated.hpp"
#include "precision.hpp"

namespace elliptica {

std::vector<std::vector<long>> ordered_tuples(long lo, long hi, long r) {
  std::vector<std::vector<long>> out;
  if (r <= 0 || hi - lo + 1 < r) return out;
  std::vector<long> t(static_cast<std::size_t>(r));
  for (long i = 0; i < r; ++i) t[i] = lo + i;
  while (true) {
    out.push_back(t);
    long i = r - 1;
    while (i >= 0 && t[i] == hi - (r - 1 - i)) --i;
    if (i < 0) break;
    ++t[i];
    for (long j = i + 1; j < r; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

void ConvolutionSpec::validate() const {
  for (long c : {l, k, n, m, nu}) check_coordinate(c, "coordinate");
  if (r < 1) throw DomainError("convolution needs r >= 1");
  if (r > kMaxConvolutionRank) throw ScaleError("convolutions are limited to r <= 3");
  if (n - l + m - k < 0) throw DomainError("convolution needs n-l+m-k >= 0");
  auto require = [this](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("variant (") + variant + "): " + what);
  };
  switch (variant) {
    case 'a':
      require(l + r + 1 <= nu && nu <= n + 1, "needs l+r+1 <= nu <= n+1");
      require(m - k >= 0, "empty range of cut heights");
      break;
    case 'b':
      require(k <= nu && nu <= m - r, "needs k <= nu <= m-r");
      require(n - l >= 0, "empty range of cut abscissae");
      break;
    case 'c':
      require(l + k <= nu && nu <= n + m, "needs l+k <= nu <= n+m");
      require(n - l >= 0, "empty range of cut abscissae");
      break;
    default:
      throw DomainError(std::string("unknown convolution variant '") + variant + "'");
  }
}

template <typename T>
SidePair<T> verify_convolution(const ConvolutionSpec& s, const EllipticParams<T>& params,
                               const ThetaContext<T>& ctx) {
  s.validate();
  std::vector<LatticePoint> starts, ends;
  for (long j = 1; j <= s.r; ++j) starts.push_back({s.l + j, s.k - j});
  for (long i = 1; i <= s.r; ++i) ends.push_back({s.n + i, s.m - i});

  CompensatedSum<T> sum;
  std::vector<LatticePoint> before(static_cast<std::size_t>(s.r)), after(static_cast<std::size_t>(s.r));
  if (s.variant == 'a') {
    for (auto t : ordered_tuples(s.k - s.r, s.m - 1, s.r)) {
      std::reverse(t.begin(), t.end());
      Complex<T> crossing{1};
      for (long i = 0; i < s.r; ++i) {
        before[i] = {s.nu - 1, t[i]};
        after[i] = {s.nu, t[i]};
        crossing *= weight(s.nu, t[i], params, ctx);
      }
      sum.add(entry_determinant(starts, before, params, ctx) * crossing *
              entry_determinant(after, ends, params, ctx));
    }
  } else {
    for (const auto& t : ordered_tuples(s.l + 1, s.n + s.r, s.r)) {
      for (long i = 0; i < s.r; ++i) {
        if (s.variant == 'b') {
          before[i] = {t[i], s.nu - 1};
          after[i] = {t[i], s.nu};
        } else {
          before[i] = {t[i], s.nu - t[i]};
          after[i] = before[i];
        }
      }
      sum.add(entry_determinant(starts, before, params, ctx) * entry_determinant(after, ends, params, ctx));
    }
  }
  SidePair<T> out;
  out.lhs = entry_determinant(starts, ends, params, ctx);
  out.rhs = sum.value();
  out.max_term = sum.max_term();
  return out;
}

namespace {

/// u_k = theta(Aq^{2k})/theta(A) (A, ups; q,p)_k / (q, lows; q,p)_k, k = 0..m.
template <typename T>
std::vector<Complex<T>> univariate_factors(Complex<T> A, const std::vector<Complex<T>>& ups,
                                           const std::vector<Complex<T>>& lows, long m, Complex<T> q,
                                           const ThetaContext<T>& ctx) {
  std::vector<Complex<T>> u(static_cast<std::size_t>(m + 1));
  auto guarded = [&ctx](Complex<T> x, long k) {
    const Complex<T> t = theta(x, ctx);
    if (std::abs(t) < ctx.guard_eps()) {
      throw PoleError("summand denominator", k, "pole in summand denominator at k = " + std::to_string(k));
    }
    return t;
  };
  const Complex<T> theta_a = guarded(A, 0);
  Complex<T> ratio{1};
  Complex<T> qk{1};
  for (long k = 0; k <= m; ++k) {
    u[k] = theta(A * qk * qk, ctx) / theta_a * ratio;
    if (k == m) break;
    ratio *= theta(A * qk, ctx);
    for (const auto& x : ups) ratio *= theta(x * qk, ctx);
    ratio /= guarded(q * qk, k);
    for (const auto& x : lows) ratio /= guarded(x * qk, k);
    qk *= q;
  }
  return u;
}

template <typename T>
Complex<T> summand(const std::vector<long>& ks, Complex<T> A, const std::vector<Complex<T>>& u, Complex<T> q,
                   const ThetaContext<T>& ctx) {
  const long r = static_cast<long>(ks.size());
  long e = 0;
  Complex<T> t{1};
  for (long i = 0; i < r; ++i) {
    e += (2 * i + 1) * ks[i];
    t *= u[ks[i]];
    for (long j = i + 1; j < r; ++j) {
      const Complex<T> th = theta(ipow(q, ks[i] - ks[j]), ctx) * theta(A * ipow(q, ks[i] + ks[j]), ctx);
      t *= th * th;
    }
  }
  return t * ipow(q, e);
}

template <typename T>
struct MultiSeries {
  Complex<T> A;
  std::vector<Complex<T>> ups, lows;
};

template <typename T>
Complex<T> ordered_sum(const MultiSeries<T>& s, long m, long r, Complex<T> q, const ThetaContext<T>& ctx,
                       T& max_term) {
  const auto u = univariate_factors(s.A, s.ups, s.lows, m, q, ctx);
  CompensatedSum<T> sum;
  for (const auto& ks : ordered_tuples(0, m, r)) sum.add(summand(ks, s.A, u, q, ctx));
  max_term = std::max(max_term, sum.max_term());
  return sum.value();
}

template <typename T>
void check_multi(const MultiSumSpec<T>& s, bool transform) {
  if (s.r < 1) throw DomainError("multivariate sums need r >= 1");
  if (s.m < s.r - 1) throw DomainError("multivariate sums need m >= r-1");
  std::vector<Complex<T>> xs{s.a, s.b, s.c, s.d, s.q};
  if (transform) {
    xs.push_back(s.e);
    xs.push_back(s.f);
  }
  for (const auto& x : xs) {
    if (x == Complex<T>{} || !is_finite(x)) throw DomainError("multivariate parameters must be finite and nonzero");
  }
}

template <typename T>
MultiSeries<T> ten_v_nine(const MultiSumSpec<T>& s) {
  const Complex<T> q = s.q, a = s.a, b = s.b, c = s.c, d = s.d;
  const long r = s.r, m = s.m;
  const Complex<T> e = a * a * ipow(q, 3 - 2 * r + m) / (b * c * d);
  return {a,
          {b, c, d, e, ipow(q, -m)},
          {a * q / b, a * q / c, a * q / d, b * c * d * ipow(q, 2 * r - 2 - m) / a, a * ipow(q, 1 + m)}};
}

template <typename T>
struct TransformSides {
  MultiSeries<T> left, right;
  Complex<T> lambda;
};

template <typename T>
TransformSides<T> twelve_v_eleven(const MultiSumSpec<T>& s) {
  const Complex<T> q = s.q, a = s.a, b = s.b, c = s.c, d = s.d, e = s.e, f = s.f;
  const long r = s.r, m = s.m;
  const Complex<T> lambda = a * a * ipow(q, 2 - r) / (b * c * d);
  const Complex<T> g = lambda * a * ipow(q, 2 - r + m) / (e * f);
  const Complex<T> qm = ipow(q, -m);
  const Complex<T> ef_shift = e * f * ipow(q, r - 1 - m);
  TransformSides<T> out;
  out.lambda = lambda;
  out.left = {a,
              {b, c, d, e, f, g, qm},
              {a * q / b, a * q / c, a * q / d, a * q / e, a * q / f, ef_shift / lambda, a * q / qm}};
  out.right = {lambda,
               {lambda * b / a, lambda * c / a, lambda * d / a, e, f, g, qm},
               {a * q / b, a * q / c, a * q / d, lambda * q / e, lambda * q / f, ef_shift / a, lambda * q / qm}};
  return out;
}

}  // namespace

template <typename T>
SidePair<T> multivariate_ft_sum(const MultiSumSpec<T>& s, const ThetaContext<T>& ctx) {
  check_multi(s, false);
  const Complex<T> q = s.q, a = s.a, b = s.b, c = s.c, d = s.d;
  const long r = s.r, m = s.m;
  const auto series = ten_v_nine(s);
  SidePair<T> out;
  try {
    out.lhs = ordered_sum(series, m, r, q, ctx, out.max_term);
  } catch (const PoleError& err) {
    throw PoleError("lhs:" + err.factor(), err.index(), std::string("lhs: ") + err.what());
  }
  const Complex<T> e = series.ups[3];
  ThetaProduct<T> P(ctx, q);
  P.scale_q(-4 * binom(r, 3)).scale(ipow(a / (b * c * d * q), binom(r, 2)));
  auto mono = [](Complex<T> x, long qexp = 0) { return Mono<T>{x, qexp, false}; };
  for (long i = 1; i <= r; ++i) {
    for (const auto& x : {mono(Complex<T>{1}, 1), mono(b), mono(c), mono(d), mono(e)}) {
      P.times_factorial(x, i - 1, "(q,b,c,d,e)_{i-1}");
    }
    P.times_factorial(mono(Complex<T>{1}, 1), m, "(q)_m").times_factorial(mono(a, 1), m, "(aq)_m");
    for (const auto& x : {a / (b * c), a / (b * d), a / (c * d)}) {
      P.times_factorial(mono(x, 2 - i), m + 1 - r, "(aq^{2-i}/..)_{m+1-r}");
    }
    for (const auto& x : {mono(Complex<T>{1}, 1), mono(a / b, 1), mono(a / c, 1), mono(a / d, 1),
                          mono(a / (b * c * d), 2 - 2 * r + i)}) {
      P.over_factorial(x, m + 1 - i, "denominator_{m+1-i}");
    }
  }
  try {
    out.rhs = P.value();
  } catch (const PoleError& err) {
    throw PoleError("rhs:" + err.factor(), err.index(), std::string("rhs: ") + err.what());
  }
  return out;
}

template <typename T>
SidePair<T> multivariate_ft_transform(const MultiSumSpec<T>& s, const ThetaContext<T>& ctx) {
  check_multi(s, true);
  const Complex<T> q = s.q, a = s.a, b = s.b, c = s.c, d = s.d, e = s.e, f = s.f;
  const long r = s.r, m = s.m;
  const auto sides = twelve_v_eleven(s);
  const Complex<T> lambda = sides.lambda;
  SidePair<T> out;
  try {
    out.lhs = ordered_sum(sides.left, m, r, q, ctx, out.max_term);
  } catch (const PoleError& err) {
    throw PoleError("lhs:" + err.factor(), err.index(), std::string("lhs: ") + err.what());
  }
  try {
    ThetaProduct<T> P(ctx, q);
    auto mono = [](Complex<T> x) { return Mono<T>{x, 0, false}; };
    for (long i = 1; i <= r; ++i) {
      for (const auto& x : {b, c, d, e * f / a}) P.times_factorial(mono(x), i - 1, "(b,c,d,ef/a)_{i-1}");
      for (const auto& x : {lambda * b / a, lambda * c / a, lambda * d / a, e * f / lambda}) {
        P.over_factorial(mono(x), i - 1, "(lb/a,lc/a,ld/a,ef/l)_{i-1}");
      }
      P.times_factorial(mono(a * q), m, "(aq)_m")
          .times_factorial(mono(a * q / (e * f)), m + 1 - r, "(aq/ef)_{m+1-r}")
          .times_factorial(mono(lambda * q / e), m + 1 - i, "(lq/e)_{m+1-i}")
          .times_factorial(mono(lambda * q / f), m + 1 - i, "(lq/f)_{m+1-i}")
          .over_factorial(mono(lambda * q), m, "(lq)_m")
          .over_factorial(mono(lambda * q / (e * f)), m + 1 - r, "(lq/ef)_{m+1-r}")
          .over_factorial(mono(a * q / e), m + 1 - i, "(aq/e)_{m+1-i}")
          .over_factorial(mono(a * q / f), m + 1 - i, "(aq/f)_{m+1-i}");
    }
    const Complex<T> pre = P.value();
    T right_max = 0;
    const Complex<T> right = ordered_sum(sides.right, m, r, q, ctx, right_max);
    out.rhs = pre * right;
    out.max_term = std::max(out.max_term, right_max * std::abs(pre));
  } catch (const PoleError& err) {
    throw PoleError("rhs:" + err.factor(), err.index(), std::string("rhs: ") + err.what());
  }
  return out;
}

template <typename T>
SidePair<T> multivariate_symmetric_range(const MultiSumSpec<T>& s, const ThetaContext<T>& ctx) {
  check_multi(s, true);
  const auto sides = twelve_v_eleven(s);
  const long r = s.r, m = s.m;
  const auto u = univariate_factors(sides.left.A, sides.left.ups, sides.left.lows, m, s.q, ctx);
  CompensatedSum<T> full;
  std::vector<long> ks(static_cast<std::size_t>(r), 0);
  while (true) {
    full.add(summand(ks, sides.left.A, u, s.q, ctx));
    long i = r - 1;
    while (i >= 0 && ks[i] == m) ks[i--] = 0;
    if (i < 0) break;
    ++ks[i];
  }
  T factorial = 1;
  for (long i = 2; i <= r; ++i) factorial *= static_cast<T>(i);
  SidePair<T> out;
  out.lhs = full.value() / factorial;
  out.rhs = ordered_sum(sides.left, m, r, s.q, ctx, out.max_term);
  out.max_term = std::max(out.max_term, full.max_term());
  return out;
}

template <typename T>
MultiSumSpec<T> convolution_sum_map(const ConvolutionSpec& s, const EllipticParams<T>& params) {
  if (s.variant != 'a') throw DomainError("the summation map is available for the vertical cut only");
  if (params.degeneration != Degeneration::none) throw DomainError("needs nondegenerate a, b");
  s.validate();
  const Complex<T> q = params.q;
  MultiSumSpec<T> out;
  out.q = q;
  out.r = s.r;
  out.a = params.a * ipow(q, s.nu + 2 * s.k - 2 * s.r);
  out.b = params.b * ipow(q, s.nu + s.l + s.k + 1 - s.r);
  out.c = ipow(q, s.nu - s.l - s.r);
  out.d = params.a * ipow(q, s.k - s.n - 2 * s.r) / params.b;
  out.m = s.m - 1 - s.k + s.r;
  return out;
}

template <typename T>
SidePair<T> convolution_as_multisum(const ConvolutionSpec& s, const EllipticParams<T>& params,
                                    const ThetaContext<T>& ctx) {
  const MultiSumSpec<T> mapped = convolution_sum_map(s, params);
  const long r = s.r;
  std::vector<LatticePoint> starts, ends, before, after;
  for (long j = 1; j <= r; ++j) starts.push_back({s.l + j, s.k - j});
  for (long i = 1; i <= r; ++i) ends.push_back({s.n + i, s.m - i});
  // first cut tuple t = (k-1, ..., k-r) maps to k = (0, ..., r-1)
  Complex<T> crossing{1};
  std::vector<long> k0;
  for (long i = 1; i <= r; ++i) {
    before.push_back({s.nu - 1, s.k - i});
    after.push_back({s.nu, s.k - i});
    crossing *= weight(s.nu, s.k - i, params, ctx);
    k0.push_back(i - 1);
  }
  const Complex<T> term0 =
      entry_determinant(starts, before, params, ctx) * crossing * entry_determinant(after, ends, params, ctx);
  const auto series = ten_v_nine(mapped);
  const auto u = univariate_factors(series.A, series.ups, series.lows, mapped.m, mapped.q, ctx);
  const Complex<T> s0 = summand(k0, series.A, u, mapped.q, ctx);
  SidePair<T> out = multivariate_ft_sum(mapped, ctx);
  out.lhs = entry_determinant(starts, ends, params, ctx) * s0 / term0;
  return out;
}

#define ELLIPTICA_INSTANTIATE(T)                                                                          \
  template SidePair<T> verify_convolution<T>(const ConvolutionSpec&, const EllipticParams<T>&,            \
                                             const ThetaContext<T>&);                                     \
  template SidePair<T> multivariate_ft_sum<T>(const MultiSumSpec<T>&, const ThetaContext<T>&);            \
  template SidePair<T> multivariate_ft_transform<T>(const MultiSumSpec<T>&, const ThetaContext<T>&);      \
  template SidePair<T> multivariate_symmetric_range<T>(const MultiSumSpec<T>&, const ThetaContext<T>&);   \
  template MultiSumSpec<T> convolution_sum_map<T>(const ConvolutionSpec&, const EllipticParams<T>&);      \
  template SidePair<T> convolution_as_multisum<T>(const ConvolutionSpec&, const EllipticParams<T>&,       \
                                                  const ThetaContext<T>&);

ELLIPTICA_INSTANTIATE(double)
ELLIPTICA_INSTANTIATE(Quad)

}  // namespace elliptica
