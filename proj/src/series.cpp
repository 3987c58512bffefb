#include "elliptica/series.hpp"

#include <string>

#include "elliptica/compensated.hpp"
#include "precision.hpp"

namespace elliptica {

namespace {

template <typename T>
bool close(const Complex<T>& x, const Complex<T>& y, T tol) {
  return std::abs(x - y) <= tol * std::max({std::abs(x), std::abs(y), T(1e-300)});
}

template <typename T>
Complex<T> product(const std::vector<Complex<T>>& xs) {
  Complex<T> r{1};
  for (const auto& x : xs) r *= x;
  return r;
}

template <typename T>
void require_nonzero(const std::vector<Complex<T>>& xs, const char* what) {
  for (const auto& x : xs) {
    if (x == Complex<T>{} || !is_finite(x)) {
      throw DomainError(std::string(what) + " parameters must be finite and nonzero");
    }
  }
}

template <typename T>
void require_termination(const std::vector<Complex<T>>& params, Complex<T> q, long terms) {
  if (terms < 0) throw DomainError("series length must be nonnegative");
  const Complex<T> target = ipow(q, -terms);
  for (const auto& x : params) {
    if (close(x, target, T(kBalancingTolerance))) return;
  }
  throw DomainError("series does not terminate: no parameter equals q^{-" + std::to_string(terms) + "}");
}

template <typename T>
Complex<T> guarded_theta(Complex<T> x, const ThetaContext<T>& ctx, const char* label, long index) {
  const Complex<T> t = theta(x, ctx);
  if (std::abs(t) < ctx.guard_eps()) {
    throw PoleError(label, index, std::string("pole at factor ") + label + "[" + std::to_string(index) + "]");
  }
  return t;
}

/// Runs `fn` and prefixes any pole diagnostic with the side it came from.
template <typename F>
auto on_side(const char* side, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const PoleError& e) {
    throw PoleError(std::string(side) + ":" + e.factor(), e.index(), std::string(side) + ": " + e.what());
  }
}

/// Plain q-shifted factorial at p = 0.
template <typename T>
Complex<T> poch(Complex<T> x, long n, Complex<T> q) {
  Complex<T> r{1};
  Complex<T> xq = x;
  for (long j = 0; j < n; ++j) {
    r *= Complex<T>{1} - xq;
    xq *= q;
  }
  return r;
}

template <typename T>
Complex<T> poch_ratio(const std::vector<Complex<T>>& num, const std::vector<Complex<T>>& den, long n,
                      Complex<T> q, T guard_eps) {
  Complex<T> r{1};
  for (const auto& x : num) r *= poch(x, n, q);
  for (const auto& x : den) {
    const Complex<T> d = poch(x, n, q);
    if (std::abs(d) < guard_eps) throw PoleError("(x;q)_n", n, "vanishing denominator factorial");
    r /= d;
  }
  return r;
}

/// sum_{k=0}^m wp_k * prod (num)_k / prod (den)_k * q^k at p = 0, wp_k the
/// basic very-well-poised factor when `well_poised` is set.
template <typename T>
Complex<T> basic_sum(Complex<T> a, bool well_poised, const std::vector<Complex<T>>& num,
                     const std::vector<Complex<T>>& den, long m, Complex<T> q, T guard_eps, T& max_term) {
  CompensatedSum<T> sum;
  Complex<T> ratio{1};
  Complex<T> qk{1};
  for (long k = 0; k <= m; ++k) {
    Complex<T> term = ratio * qk;
    if (well_poised) term *= (Complex<T>{1} - a * qk * qk) / (Complex<T>{1} - a);
    sum.add(term);
    for (const auto& x : num) ratio *= Complex<T>{1} - x * qk;
    for (const auto& x : den) {
      const Complex<T> d = Complex<T>{1} - x * qk;
      if (k < m && std::abs(d) < guard_eps) throw PoleError("1-xq^k", k, "vanishing series denominator");
      ratio /= d;
    }
    qk *= q;
  }
  max_term = sum.max_term();
  return sum.value();
}

}  // namespace

template <typename T>
Complex<T> eval_E(const ESeriesSpec<T>& spec, const ThetaContext<T>& ctx, T* max_term) {
  if (spec.upper.size() != spec.lower.size() + 1) {
    throw DomainError("E series needs one more upper than lower parameter");
  }
  require_nonzero(spec.upper, "upper");
  require_nonzero(spec.lower, "lower");
  if (spec.q == Complex<T>{}) throw DomainError("base q must be nonzero");
  if (!close(product(spec.upper), spec.q * product(spec.lower), T(kBalancingTolerance))) {
    throw DomainError("E series violates the balancing condition a_1...a_{s+1} = q b_1...b_s");
  }
  require_termination(spec.upper, spec.q, spec.terms);

  CompensatedSum<T> sum;
  Complex<T> term{1};
  Complex<T> qk{1};
  for (long k = 0; k <= spec.terms; ++k) {
    sum.add(term);
    if (k == spec.terms) break;
    for (const auto& u : spec.upper) term *= theta(u * qk, ctx);
    term /= guarded_theta(spec.q * qk, ctx, "(q;q,p)", k);
    for (std::size_t i = 0; i < spec.lower.size(); ++i) {
      term /= guarded_theta(spec.lower[i] * qk, ctx, "(b_i;q,p)", k);
    }
    term *= spec.z;
    qk *= spec.q;
  }
  if (max_term) *max_term = sum.max_term();
  return sum.value();
}

template <typename T>
Complex<T> vwp_sum(Complex<T> a, const std::vector<Complex<T>>& upper,
                   const std::vector<Complex<T>>& lower, long terms, Complex<T> q,
                   const ThetaContext<T>& ctx, T* max_term, Complex<T> z) {
  if (terms < 0) throw DomainError("series length must be nonnegative");
  const Complex<T> theta_a = guarded_theta(a, ctx, "theta(a)", 0);
  CompensatedSum<T> sum;
  Complex<T> ratio{1};
  Complex<T> qk{1};
  Complex<T> qz_k{1};
  const Complex<T> qz = q * z;
  for (long k = 0; k <= terms; ++k) {
    sum.add(theta(a * qk * qk, ctx) / theta_a * ratio * qz_k);
    if (k == terms) break;
    ratio *= theta(a * qk, ctx);
    for (const auto& u : upper) ratio *= theta(u * qk, ctx);
    ratio /= guarded_theta(q * qk, ctx, "(q;q,p)", k);
    for (const auto& v : lower) ratio /= guarded_theta(v * qk, ctx, "(aq/a_i;q,p)", k);
    qk *= q;
    qz_k *= qz;
  }
  if (max_term) *max_term = sum.max_term();
  return sum.value();
}

template <typename T>
Complex<T> eval_V(const VSeriesSpec<T>& spec, const ThetaContext<T>& ctx, T* max_term) {
  if (spec.a1 == Complex<T>{} || !is_finite(spec.a1)) throw DomainError("a_1 must be finite and nonzero");
  require_nonzero(spec.rest, "V series");
  if (spec.q == Complex<T>{}) throw DomainError("base q must be nonzero");
  // q^2 (a_6 ... a_{s+1})^2 = (a_1 q)^{s-5}, s - 5 = #rest - 1
  const Complex<T> prod_rest = product(spec.rest);
  const long power = static_cast<long>(spec.rest.size()) - 1;
  if (!close(spec.q * spec.q * prod_rest * prod_rest, ipow(spec.a1 * spec.q, power), T(kBalancingTolerance))) {
    throw DomainError("V series violates the very-well-poised balancing condition");
  }
  require_termination(spec.rest, spec.q, spec.terms);
  std::vector<Complex<T>> lower;
  lower.reserve(spec.rest.size());
  for (const auto& x : spec.rest) lower.push_back(spec.a1 * spec.q / x);
  return vwp_sum(spec.a1, spec.rest, lower, spec.terms, spec.q, ctx, max_term, spec.z);
}

template <typename T>
Complex<T> factorial_ratio(const std::vector<Complex<T>>& num, const std::vector<Complex<T>>& den,
                           long n, Complex<T> q, const ThetaContext<T>& ctx) {
  ThetaProduct<T> P(ctx, q);
  for (const auto& x : num) P.times_factorial(Mono<T>{x, 0, false}, n, "numerator factorial");
  for (const auto& x : den) P.over_factorial(Mono<T>{x, 0, false}, n, "denominator factorial");
  return P.value();
}

template <typename T>
SidePair<T> frenkel_turaev_sum(Complex<T> a, Complex<T> b, Complex<T> c, Complex<T> d, long m,
                               Complex<T> q, const ThetaContext<T>& ctx, Complex<T> e_scale) {
  if (m < 0) throw DomainError("m must be nonnegative");
  require_nonzero<T>({a, b, c, d, q}, "10V9");
  const Complex<T> e = a * a * ipow(q, 1 + m) / (b * c * d) * e_scale;
  const Complex<T> aq = a * q;
  SidePair<T> out;
  out.lhs = on_side("lhs", [&] {
    return vwp_sum<T>(a, {b, c, d, e, ipow(q, -m)}, {aq / b, aq / c, aq / d, aq / e, aq * ipow(q, m)}, m, q,
                      ctx, &out.max_term);
  });
  out.rhs = on_side("rhs", [&] {
    return factorial_ratio<T>({aq, aq / (b * c), aq / (b * d), aq / (c * d)},
                              {aq / b, aq / c, aq / d, aq / (b * c * d)}, m, q, ctx);
  });
  return out;
}

template <typename T>
SidePair<T> frenkel_turaev_transform(Complex<T> a, Complex<T> b, Complex<T> c, Complex<T> d,
                                     Complex<T> e, Complex<T> f, long n, Complex<T> q,
                                     const ThetaContext<T>& ctx) {
  if (n < 0) throw DomainError("n must be nonnegative");
  require_nonzero<T>({a, b, c, d, e, f, q}, "12V11");
  const Complex<T> lambda = a * a * q / (b * c * d);
  const Complex<T> g = lambda * a * ipow(q, n + 1) / (e * f);
  const Complex<T> qn = ipow(q, -n);
  const Complex<T> aq = a * q;
  const Complex<T> lq = lambda * q;
  SidePair<T> out;
  T lhs_max = 0, rhs_max = 0;
  out.lhs = on_side("lhs", [&] {
    return vwp_sum<T>(a, {b, c, d, e, f, g, qn}, {aq / b, aq / c, aq / d, aq / e, aq / f, aq / g, aq / qn}, n, q,
                      ctx, &lhs_max);
  });
  out.rhs = on_side("rhs", [&] {
    const Complex<T> pre = factorial_ratio<T>({aq, aq / (e * f), lq / e, lq / f},
                                              {aq / e, aq / f, lq / (e * f), lq}, n, q, ctx);
    const Complex<T> series =
        vwp_sum<T>(lambda, {lambda * b / a, lambda * c / a, lambda * d / a, e, f, g, qn},
                   {aq / b, aq / c, aq / d, lq / e, lq / f, lq / g, lq / qn}, n, q, ctx, &rhs_max);
    rhs_max *= std::abs(pre);
    return pre * series;
  });
  out.max_term = std::max(lhs_max, rhs_max);
  return out;
}

template <typename T>
SidePair<T> indefinite_vwp_sum(Complex<T> a, Complex<T> b, Complex<T> c, long m, Complex<T> q,
                               const ThetaContext<T>& ctx) {
  if (m < 0) throw DomainError("m must be nonnegative");
  require_nonzero<T>({a, b, c, q}, "indefinite sum");
  const Complex<T> aq = a * q;
  SidePair<T> out;
  out.lhs = on_side("lhs", [&] {
    return vwp_sum<T>(a, {b, c, a / (b * c)}, {aq / b, aq / c, b * c * q}, m, q, ctx, &out.max_term);
  });
  out.rhs = on_side("rhs", [&] {
    return factorial_ratio<T>({aq, b * q, c * q, aq / (b * c)}, {q, aq / b, aq / c, b * c * q}, m, q, ctx);
  });
  return out;
}

template <typename T>
SidePair<T> basic_degenerations(BasicKind kind, const std::vector<Complex<T>>& params, long m,
                                Complex<T> q, T guard_eps) {
  if (m < 0) throw DomainError("m must be nonnegative");
  const std::size_t expected = kind == BasicKind::jackson_8phi7 ? 4 : kind == BasicKind::q_pfaff_saalschutz ? 3 : 2;
  if (params.size() != expected) {
    throw DomainError("expected " + std::to_string(expected) + " parameters");
  }
  require_nonzero(params, "basic series");
  if (q == Complex<T>{}) throw DomainError("base q must be nonzero");
  const Complex<T> qm = ipow(q, -m);
  SidePair<T> out;
  switch (kind) {
    case BasicKind::jackson_8phi7: {
      const Complex<T> a = params[0], b = params[1], c = params[2], d = params[3];
      const Complex<T> e = a * a * ipow(q, 1 + m) / (b * c * d);
      const Complex<T> aq = a * q;
      out.lhs = on_side("lhs", [&] {
        return basic_sum<T>(a, true, {a, b, c, d, e, qm}, {q, aq / b, aq / c, aq / d, aq / e, aq / qm}, m, q,
                            guard_eps, out.max_term);
      });
      out.rhs = on_side("rhs", [&] {
        return poch_ratio<T>({aq, aq / (b * c), aq / (b * d), aq / (c * d)},
                             {aq / b, aq / c, aq / d, aq / (b * c * d)}, m, q, guard_eps);
      });
      break;
    }
    case BasicKind::q_pfaff_saalschutz: {
      const Complex<T> a = params[0], b = params[1], c = params[2];
      out.lhs = on_side("lhs", [&] {
        return basic_sum<T>(a, false, {a, b, qm}, {q, c, a * b * q * qm / c}, m, q, guard_eps, out.max_term);
      });
      out.rhs = on_side("rhs", [&] {
        return poch_ratio<T>({c / a, c / b}, {c, c / (a * b)}, m, q, guard_eps);
      });
      break;
    }
    case BasicKind::q_chu_vandermonde: {
      const Complex<T> a = params[0], c = params[1];
      out.lhs = on_side("lhs", [&] {
        return basic_sum<T>(a, false, {a, qm}, {q, c}, m, q, guard_eps, out.max_term);
      });
      out.rhs = on_side("rhs", [&] { return poch_ratio<T>({c / a}, {c}, m, q, guard_eps) * ipow(a, m); });
      break;
    }
  }
  return out;
}

template <typename T>
SidePair<T> path_convolution(ConvolutionKind kind, long n, long m, long cut,
                             const EllipticParams<T>& params, const ThetaContext<T>& ctx) {
  if (n < 0 || m < 0) throw DomainError("end point must lie in the first quadrant");
  const LatticePoint origin{0, 0};
  const LatticePoint end{n, m};
  CompensatedSum<T> sum;
  switch (kind) {
    case ConvolutionKind::vertical_line:
      if (cut < 1 || cut > n) throw DomainError("vertical cut needs 1 <= l <= n");
      for (long k = 0; k <= m; ++k) {
        sum.add(path_gf(origin, {cut - 1, k}, params, ctx) * weight(cut, k, params, ctx) *
                path_gf({cut, k}, end, params, ctx));
      }
      break;
    case ConvolutionKind::horizontal_line:
      if (cut < 1 || cut > m) throw DomainError("horizontal cut needs 1 <= k <= m");
      for (long l = 0; l <= n; ++l) {
        sum.add(path_gf(origin, {l, cut - 1}, params, ctx) * path_gf({l, cut}, end, params, ctx));
      }
      break;
    case ConvolutionKind::antidiagonal:
      if (cut <= 0 || cut >= n + m) throw DomainError("antidiagonal cut needs 0 < k < n+m");
      for (long l = 0; l <= std::min(cut, n); ++l) {
        sum.add(path_gf(origin, {l, cut - l}, params, ctx) * path_gf({l, cut - l}, end, params, ctx));
      }
      break;
  }
  SidePair<T> out;
  out.lhs = path_gf(origin, end, params, ctx);
  out.rhs = sum.value();
  out.max_term = sum.max_term();
  return out;
}

template <typename T>
SidePair<T> convolution_as_10V9(long n, long m, long l, const EllipticParams<T>& params,
                                const ThetaContext<T>& ctx) {
  if (params.degeneration != Degeneration::none) throw DomainError("needs nondegenerate a, b");
  if (l < 1 || l > n || m < 0) throw DomainError("needs 1 <= l <= n and m >= 0");
  const LatticePoint origin{0, 0};
  const LatticePoint end{n, m};
  auto term = [&](long k) {
    return path_gf(origin, {l - 1, k}, params, ctx) * weight(l, k, params, ctx) * path_gf({l, k}, end, params, ctx);
  };
  const Complex<T> first = term(0);
  CompensatedSum<T> sum;
  for (long k = 0; k <= m; ++k) sum.add(term(k) / first);
  const Complex<T> q = params.q;
  const Complex<T> ql = ipow(q, l);
  SidePair<T> out = frenkel_turaev_sum<T>(params.a * ql, params.b * ql, ql, params.a * ipow(q, -n) / params.b, m,
                                          q, ctx);
  out.rhs = out.lhs;
  out.lhs = sum.value();
  out.max_term = std::max(out.max_term, sum.max_term());
  return out;
}

template <typename T>
SidePair<T> indefinite_chain(int form, long n, long m, const EllipticParams<T>& params,
                             const ThetaContext<T>& ctx) {
  if (n < 1 || m < 0) throw DomainError("indefinite forms need n >= 1 and m >= 0");
  const LatticePoint origin{0, 0};
  SidePair<T> out;
  out.lhs = path_gf(origin, {n, m}, params, ctx);
  const Complex<T> q = params.q;
  const Complex<T> qn = ipow(q, n);
  const Complex<T> a = params.a, b = params.b;
  switch (form) {
    case 1: {
      CompensatedSum<T> sum;
      for (long k = 0; k <= m; ++k) sum.add(path_gf(origin, {n - 1, k}, params, ctx) * weight(n, k, params, ctx));
      out.rhs = sum.value();
      out.max_term = sum.max_term();
      break;
    }
    case 2:
      if (params.degeneration != Degeneration::none) throw DomainError("needs nondegenerate a, b");
      out.rhs = vwp_sum<T>(a * qn, {qn, b * qn, a / (b * qn)}, {a * q, a * q / b, b * q * qn * qn}, m, q, ctx,
                           &out.max_term);
      break;
    case 3:
      if (params.degeneration != Degeneration::none) throw DomainError("needs nondegenerate a, b");
      out.rhs = indefinite_vwp_sum<T>(a * qn, qn, b * qn, m, q, ctx).rhs;
      out.max_term = std::abs(out.rhs);
      break;
    default:
      throw DomainError("indefinite form must be 1, 2 or 3");
  }
  return out;
}

template <typename T>
SidePair<T> vwp_term_squares(Complex<T> a, long k, Complex<T> q, const ThetaContext<T>& ctx) {
  if (ctx.nome().is_zero()) throw DomainError("the four-pair form needs p != 0");
  if (k < 0) throw DomainError("k must be nonnegative");
  const Complex<T> s = std::sqrt(a);
  const Complex<T> P = std::sqrt(ctx.p());
  const Complex<T> direct = theta(a * ipow(q, 2 * k), ctx) / guarded_theta(a, ctx, "theta(a)", 0);
  const Complex<T> pairs = factorial_ratio<T>({q * s, -q * s, q * s / P, -q * s * P}, {s, -s, s * P, -s / P}, k, q,
                                              ctx) *
                           ipow(-q, -k);
  SidePair<T> out;
  out.lhs = direct * direct;
  out.rhs = pairs * pairs;
  out.max_term = std::abs(out.lhs);
  return out;
}

#define ELLIPTICA_INSTANTIATE(T)                                                                           \
  template Complex<T> eval_E<T>(const ESeriesSpec<T>&, const ThetaContext<T>&, T*);                        \
  template Complex<T> eval_V<T>(const VSeriesSpec<T>&, const ThetaContext<T>&, T*);                        \
  template Complex<T> vwp_sum<T>(Complex<T>, const std::vector<Complex<T>>&,                               \
                                 const std::vector<Complex<T>>&, long, Complex<T>, const ThetaContext<T>&, \
                                 T*, Complex<T>);                                                          \
  template Complex<T> factorial_ratio<T>(const std::vector<Complex<T>>&, const std::vector<Complex<T>>&,   \
                                         long, Complex<T>, const ThetaContext<T>&);                        \
  template SidePair<T> frenkel_turaev_sum<T>(Complex<T>, Complex<T>, Complex<T>, Complex<T>, long,         \
                                             Complex<T>, const ThetaContext<T>&, Complex<T>);              \
  template SidePair<T> frenkel_turaev_transform<T>(Complex<T>, Complex<T>, Complex<T>, Complex<T>,         \
                                                   Complex<T>, Complex<T>, long, Complex<T>,               \
                                                   const ThetaContext<T>&);                                \
  template SidePair<T> indefinite_vwp_sum<T>(Complex<T>, Complex<T>, Complex<T>, long, Complex<T>,         \
                                             const ThetaContext<T>&);                                      \
  template SidePair<T> basic_degenerations<T>(BasicKind, const std::vector<Complex<T>>&, long, Complex<T>, \
                                              T);                                                          \
  template SidePair<T> path_convolution<T>(ConvolutionKind, long, long, long, const EllipticParams<T>&,    \
                                           const ThetaContext<T>&);                                        \
  template SidePair<T> convolution_as_10V9<T>(long, long, long, const EllipticParams<T>&,                  \
                                              const ThetaContext<T>&);                                     \
  template SidePair<T> indefinite_chain<T>(int, long, long, const EllipticParams<T>&,                      \
                                           const ThetaContext<T>&);                                        \
  template SidePair<T> vwp_term_squares<T>(Complex<T>, long, Complex<T>, const ThetaContext<T>&);

ELLIPTICA_INSTANTIATE(double)
ELLIPTICA_INSTANTIATE(Quad)

}  // namespace elliptica
