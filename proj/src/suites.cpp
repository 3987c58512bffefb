#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "elliptica/closed_forms.hpp"
#include "elliptica/compensated.hpp"
#include "elliptica/lattice.hpp"
#include "elliptica/multivariate.hpp"
#include "elliptica/series.hpp"
#include "precision.hpp"
#include "suite_case.hpp"

namespace elliptica::detail {
namespace {

template <typename T>
SidePair<T> sides(Complex<T> lhs, Complex<T> rhs, T max_term = 0) {
  return SidePair<T>{lhs, rhs, max_term};
}

template <typename T>
EllipticParams<T> bumped_a(const EllipticParams<T>& P, Complex<T> bump) {
  return P.with_ab(P.a * bump, P.b);
}

template <typename T>
Complex<Quad> to_quad(Complex<T> z) {
  return {Quad(z.real()), Quad(z.imag())};
}

template <typename T>
Complex<T> from_quad(Complex<Quad> z) {
  return {static_cast<T>(z.real()), static_cast<T>(z.imag())};
}

template <typename T>
Complex<Wide> to_wide(Complex<T> z) {
  return {Wide(z.real()), Wide(z.imag())};
}

template <typename T>
Complex<T> from_wide(Complex<Wide> z) {
  return {static_cast<T>(z.real()), static_cast<T>(z.imag())};
}

long choose2(long n) { return n * (n - 1) / 2; }

/// r distinct integers from [lo, hi], sorted ascending or descending.
template <typename T>
std::vector<long> distinct(Case<T>& c, const char* name, long lo, long hi, long r, bool descending) {
  std::vector<long> pool(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pool.begin(), pool.end(), lo);
  std::vector<long> out;
  for (long i = 0; i < r; ++i) {
    const long j = c.sampler().integer(i, static_cast<long>(pool.size()) - 1);
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  std::sort(out.begin(), out.end());
  if (descending) std::reverse(out.begin(), out.end());
  std::string text;
  for (long v : out) text += (text.empty() ? "" : ",") + std::to_string(v);
  c.note(name, text);
  return out;
}

long rank_cap(const SuiteConfig& config, long r) {
  if (r > config.r_max) throw ScaleError("rank above r_max");
  return r;
}

// ---- theta_laws

template <typename T>
SidePair<T> theta_inversion(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> x = c.a("x");
  return sides(theta(x * c.bump(), ctx), -x * theta(Complex<T>{1} / x, ctx));
}

template <typename T>
SidePair<T> theta_quasi_periodicity(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> x = c.a("x");
  if (ctx.nome().is_zero()) throw DomainError("quasi-periodicity needs p != 0");
  return sides(theta(ctx.p() * x * c.bump(), ctx), -theta(x, ctx) / x);
}

template <typename T>
SidePair<T> theta_addition(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> x = c.a("x"), y = c.a("y"), u = c.a("u"), v = c.a("v");
  auto th = [&ctx](std::initializer_list<Complex<T>> xs) {
    return theta_multi<T>(std::span<const Complex<T>>(xs.begin(), xs.size()), ctx);
  };
  const Complex<T> xb = x * c.bump();
  const Complex<T> first = th({xb * y, xb / y, u * v, u / v});
  const Complex<T> second = th({xb * v, xb / v, u * y, u / y});
  const T scale = std::max(std::abs(first), std::abs(second));
  return sides(first - second, u / y * th({y * v, y / v, x * u, x / u}), scale);
}

// ---- factorial_laws

template <typename T>
SidePair<T> factorial_p_shift(Case<T>& c) {
  const auto ctx = c.context();
  if (ctx.nome().is_zero()) throw DomainError("the p-shift law needs p != 0");
  const Complex<T> q = c.q();
  const Complex<T> a = c.a();
  const long n = c.integer("n", -4, 4);
  const Complex<T> sign{(n % 2 == 0) ? T(1) : T(-1)};
  return sides(qp_shifted(ctx.p() * a * c.bump(), n, q, ctx),
               sign * ipow(a, -n) * ipow(q, -choose2(n)) * qp_shifted(a, n, q, ctx));
}

template <typename T>
SidePair<T> factorial_splitting(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> q = c.q();
  const Complex<T> a = c.a();
  const long m = c.integer("m", -3, 3);
  const long n = c.integer("n", -3, 3);
  return sides(qp_shifted(a * c.bump(), m + n, q, ctx),
               qp_shifted(a, m, q, ctx) * qp_shifted(a * ipow(q, m), n, q, ctx));
}

template <typename T>
SidePair<T> factorial_truncation(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> x = c.a("x");
  const auto doubled = ctx.with_truncation(2 * ctx.truncation());
  return sides(theta(x * c.bump(), ctx), theta(x, doubled));
}

// ---- weight_laws

template <typename T>
SidePair<T> weight_elliptic_a(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const long n = c.integer("n", -4, 4), m = c.integer("m", -4, 4);
  if (ctx.nome().is_zero()) throw DomainError("ellipticity needs p != 0");
  return sides(weight(n, m, P.with_ab(P.a * ctx.p() * c.bump(), P.b), ctx), weight(n, m, P, ctx));
}

template <typename T>
SidePair<T> weight_elliptic_b(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const long n = c.integer("n", -4, 4), m = c.integer("m", -4, 4);
  if (ctx.nome().is_zero()) throw DomainError("ellipticity needs p != 0");
  return sides(weight(n, m, P.with_ab(P.a, P.b * ctx.p() * c.bump()), ctx), weight(n, m, P, ctx));
}

template <typename T>
SidePair<T> weight_reflection(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const long n = c.integer("n", -4, 4), m = c.integer("m", -4, 4);
  const EllipticParams<T> R(Complex<T>{1} / P.a, P.q / P.b, P.q);
  return sides(weight(n, m, bumped_a(P, c.bump()), ctx), weight(-n, -m, R, ctx));
}

template <typename T>
SidePair<T> weight_inversion(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const long n = c.integer("n", -4, 4), m = c.integer("m", -4, 4);
  const Complex<T> one{1};
  const EllipticParams<T> R(one / P.a, one / P.b, one / P.q);
  return sides(weight(n, m, bumped_a(P, c.bump()), ctx), weight(n, m, R, ctx));
}

template <typename T>
SidePair<T> weight_shift(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const long n = c.integer("n", -4, 4), m = c.integer("m", -4, 4);
  const long s = c.integer("s", -3, 3), t = c.integer("t", -3, 3);
  return sides(weight(n + s, m + t, bumped_a(P, c.bump()), ctx),
               shifted_weight(n, t, ShiftOffset{s, 0}, P, ctx) * shifted_weight(n, m, ShiftOffset{s, t}, P, ctx));
}

template <typename T>
SidePair<T> weight_basic(Case<T>& c) {
  const auto ctx = c.basic_context();
  const auto P = c.params();
  const long n = c.integer("n", -4, 4), m = c.integer("m", -4, 4);
  return sides(weight(n, m, bumped_a(P, c.bump()), ctx), weight_p0(n, m, P.a, P.b, P.q, Degeneration::none, c.guard()));
}

template <typename T>
SidePair<T> weight_classical(Case<T>& c) {
  const Complex<T> q = c.q();
  const long n = c.integer("n", -4, 4), m = c.integer("m", -4, 4);
  return sides(weight_p0(n, m, Complex<T>{}, Complex<T>{}, q * c.bump(), Degeneration::ab_zero, c.guard()), ipow(q, m));
}

// ---- theorem2_oracle

const Quad kQuadCancellationLimit = Quad(1e18);

template <typename T>
SidePair<T> binomial_sweep(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const auto Pb = bumped_a(P, c.bump());
  const long g = c.config().grid_max;
  // The enumeration cancels heavily, so its weights are always tabulated in quad.
  const ThetaContext<Quad> qctx(Nome<Quad>(to_quad(ctx.p())), Case<Quad>::truncation_eps(), Quad(ctx.guard_eps()));
  const EllipticParams<Quad> qP(to_quad(P.a), to_quad(P.b), to_quad(P.q), P.degeneration);
  const WeightGrid<Quad> grid({-2, -2}, {2 + g, 2 + g}, qP, qctx);
  // Sums whose terms exceed the total by more than quad can resolve are redone in Wide.
  auto wide_grid = [&] {
    const ThetaContext<Wide> wctx(Nome<Wide>(to_wide(ctx.p())), Wide(1e-52), Wide(ctx.guard_eps()));
    const EllipticParams<Wide> wP(to_wide(P.a), to_wide(P.b), to_wide(P.q), P.degeneration);
    return WeightGrid<Wide>({-2, -2}, {2 + g, 2 + g}, wP, wctx);
  };
  std::optional<WeightGrid<Wide>> wide;
  SidePair<T> worst{Complex<T>{}, Complex<T>{}, 0};
  T worst_err = -1;
  std::string where;
  for (long l = -2; l <= 2; ++l) {
    for (long k = -2; k <= 2; ++k) {
      for (long dn = 0; dn <= g; ++dn) {
        for (long dm = 0; dm <= g; ++dm) {
          const Complex<T> closed = elliptic_binomial(l, k, l + dn, k + dm, Pb, ctx);
          Quad max_term = 0;
          const Complex<Quad> quad_brute = gf_bruteforce({l, k}, {l + dn, k + dm}, grid, &max_term);
          Complex<T> brute = from_quad<T>(quad_brute);
          if (max_term > kQuadCancellationLimit * abs(quad_brute)) {
            if (!wide) wide.emplace(wide_grid());
            brute = from_wide<T>(gf_bruteforce({l, k}, {l + dn, k + dm}, *wide));
          }
          const T err = relative_error(closed, brute);
          if (err > worst_err) {
            worst_err = err;
            worst = sides(closed, brute, static_cast<T>(max_term));
            where = std::to_string(l) + "," + std::to_string(k) + "," + std::to_string(l + dn) + "," +
                    std::to_string(k + dm);
          }
        }
      }
    }
  }
  c.note("worst", where);
  return worst;
}

// ---- recursions

template <typename T>
struct Grid {
  long l, k, n, m;
};

template <typename T>
Grid<T> grid(Case<T>& c, long min_steps) {
  const long l = c.integer("l", -2, 2), k = c.integer("k", -2, 2);
  const long n = l + c.integer("dn", min_steps, 5), m = k + c.integer("dm", min_steps, 5);
  return {l, k, n, m};
}

template <typename T>
SidePair<T> recursion_last_step(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const auto [l, k, n, m] = grid(c, 1);
  auto gf = [&](long x0, long y0, long x1, long y1) { return path_gf({x0, y0}, {x1, y1}, P, ctx); };
  return sides(path_gf({l, k}, {n, m}, bumped_a(P, c.bump()), ctx),
               gf(l, k, n, m - 1) + gf(l, k, n - 1, m) * weight(n, m, P, ctx));
}

template <typename T>
SidePair<T> recursion_first_step(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const auto [l, k, n, m] = grid(c, 1);
  auto gf = [&](long x0, long y0, long x1, long y1) { return path_gf({x0, y0}, {x1, y1}, P, ctx); };
  return sides(path_gf({l, k}, {n, m}, bumped_a(P, c.bump()), ctx),
               gf(l, k + 1, n, m) + weight(l + 1, k, P, ctx) * gf(l + 1, k, n, m));
}

template <typename T>
SidePair<T> recursion_shift(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const auto [l, k, n, m] = grid(c, 0);
  const long s = c.integer("s", -2, 2), t = c.integer("t", -2, 2);
  return sides(path_gf({l + s, k + t}, {n + s, m + t}, bumped_a(P, c.bump()), ctx),
               path_gf({l, t}, {n, t}, shift_params(P, ShiftOffset{s, 0}), ctx) *
                   path_gf({l, k}, {n, m}, shift_params(P, ShiftOffset{s, t}), ctx));
}

template <typename T>
SidePair<T> recursion_reflection(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const auto [l, k, n, m] = grid(c, 0);
  const EllipticParams<T> R(Complex<T>{1} / P.a, P.q / P.b, P.q);
  return sides(path_gf({l, k}, {n, m}, bumped_a(P, c.bump()), ctx), path_gf({-1 - n, -m}, {-1 - l, -k}, R, ctx));
}

template <typename T>
SidePair<T> recursion_last_height(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const long n = c.integer("n", 1, 6), m = c.integer("m", 0, 6);
  CompensatedSum<T> sum;
  for (long k = 0; k <= m; ++k) sum.add(path_gf({0, 0}, {n - 1, k}, P, ctx) * weight(n, k, P, ctx));
  return sides(path_gf({0, 0}, {n, m}, bumped_a(P, c.bump()), ctx), sum.value(), sum.max_term());
}

template <typename T>
SidePair<T> recursion_dp_oracle(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const long l = c.integer("l", -2, 2), k = c.integer("k", -2, 2);
  const long dn = c.integer("dn", 0, 10);
  const long dm = c.integer("dm", 0, 10 - dn);
  return sides(gf_recursive(l, k, l + dn, k + dm, bumped_a(P, c.bump()), ctx),
               gf_bruteforce({l, k}, {l + dn, k + dm}, P, ctx));
}

// ---- lgv_oracle

std::vector<LatticePoint> arranged(Configuration kind, LatticePoint base, long r) {
  std::vector<LatticePoint> pts;
  for (long j = 0; j < r; ++j) {
    switch (kind) {
      case Configuration::antidiagonal: pts.push_back({base.x + j, base.y - j}); break;
      case Configuration::horizontal: pts.push_back({base.x + j, base.y}); break;
      default: pts.push_back({base.x, base.y - j}); break;
    }
  }
  return pts;
}

template <typename T>
Configuration configuration_draw(Case<T>& c, const char* name) {
  static constexpr Configuration kinds[] = {Configuration::antidiagonal, Configuration::horizontal,
                                            Configuration::vertical};
  const Configuration kind = kinds[c.sampler().integer(0, 2)];
  c.note(name, configuration_name(kind));
  return kind;
}

template <typename T, long R>
SidePair<T> lgv_family(Case<T>& c) {
  const long r = rank_cap(c.config(), R);
  const auto ctx = c.context();
  const auto P = c.params();
  const Configuration sk = configuration_draw(c, "starts");
  const Configuration ek = configuration_draw(c, "ends");
  const LatticePoint s0{c.integer("x0", -1, 1), c.integer("y0", -1, 1)};
  const LatticePoint e0{s0.x + c.integer("dx", r - 1, r), s0.y + c.integer("dy", r - 1, r)};
  const PointTuple starts(arranged(sk, s0, r));
  const PointTuple ends(arranged(ek, e0, r));
  return sides(lgv_determinant(starts, ends, bumped_a(P, c.bump()), ctx),
               enumerate_nonintersecting(starts, ends, P, ctx));
}

// ---- warnaar_det

template <typename T, long R>
SidePair<T> warnaar(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> q = c.q();
  WarnaarDetArgs<T> args{c.a("A"), c.a("B"), c.a("C"), {}};
  for (long i = 0; i < R; ++i) args.X.push_back(c.a("X"));
  WarnaarDetArgs<T> off = args;
  off.A *= c.bump();
  return sides(warnaar_det_lhs(off, q, ctx), warnaar_det_rhs(args, q, ctx));
}

// ---- prop4

template <typename T>
DetFormulaVariant variant_draw(Case<T>& c, char tag, long r) {
  DetFormulaVariant v;
  v.tag = tag;
  switch (tag) {
    case 'a':
      v.l = c.integer("l", -1, 1);
      v.k = c.integer("k", 0, 2);
      v.n = v.l + r + c.integer("dn", 0, 2);
      v.seq = distinct(c, "m_i", v.k, v.k + 3, r, true);
      break;
    case 'b':
      v.l = c.integer("l", -1, 1);
      v.k = c.integer("k", 0, 2);
      v.m = v.k + c.integer("dm", 0, 3);
      v.seq = distinct(c, "n_i", v.l + 1, v.l + r + 2, r, false);
      break;
    case 'c':
      v.l = c.integer("l", -1, 1);
      v.k = c.integer("k", 0, 2);
      v.seq = distinct(c, "n_i", v.l + 1, v.l + r + 2, r, false);
      v.m = v.seq.back() + v.k + c.integer("dm", 0, 2);
      break;
    case 'd':
      v.l = c.integer("l", -1, 1);
      v.seq = distinct(c, "k_i", -1, r + 1, r, true);
      v.n = v.l + c.integer("dn", 0, 2);
      v.m = v.seq.front() + 1 + c.integer("dm", 0, 2);
      break;
    case 'e':
      v.k = c.integer("k", -1, 1);
      v.seq = distinct(c, "l_i", -1, r + 1, r, false);
      v.n = v.seq.back() + c.integer("dn", -1, 1);
      v.m = v.k + r + c.integer("dm", 0, 2);
      break;
    default:
      v.k = c.integer("k", 0, 2);
      v.seq = distinct(c, "l_i", -1, r + 1, r, false);
      v.n = v.seq.back() + c.integer("dn", -1, 1);
      v.m = v.k - v.seq.front() + 1 + c.integer("dm", 0, 2);
      break;
  }
  return v;
}

template <typename T, char Tag, long R>
SidePair<T> prop4_entries(Case<T>& c) {
  const long r = rank_cap(c.config(), R);
  const auto ctx = c.context();
  const auto P = c.params();
  const DetFormulaVariant v = variant_draw(c, Tag, r);
  return sides(det_formula(v, bumped_a(P, c.bump()), ctx), det_from_entries(v, P, ctx));
}

template <typename T, char Tag>
SidePair<T> prop4_bruteforce(Case<T>& c) {
  const long r = rank_cap(c.config(), 2);
  const auto ctx = c.context();
  const auto P = c.params();
  const DetFormulaVariant v = variant_draw(c, Tag, r);
  const auto [starts, ends] = v.points();
  return sides(det_formula(v, bumped_a(P, c.bump()), ctx), enumerate_nonintersecting(starts, ends, P, ctx));
}

// ---- single-path convolutions

template <typename T, ConvolutionKind Kind>
SidePair<T> convolution(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  long n = 0, m = 0, cut = 0;
  switch (Kind) {
    case ConvolutionKind::vertical_line:
      n = c.integer("n", 1, 5);
      m = c.integer("m", 0, 5);
      cut = c.integer("cut", 1, n);
      break;
    case ConvolutionKind::horizontal_line:
      n = c.integer("n", 0, 5);
      m = c.integer("m", 1, 5);
      cut = c.integer("cut", 1, m);
      break;
    case ConvolutionKind::antidiagonal:
      n = c.integer("n", 1, 5);
      m = c.integer("m", 1, 5);
      cut = c.integer("cut", 1, n + m - 1);
      break;
  }
  return c.perturbed([&](Complex<T> bump) { return path_convolution(Kind, n, m, cut, bumped_a(P, bump), ctx); });
}

template <typename T>
SidePair<T> convolution_10V9(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const long n = c.integer("n", 1, 5), m = c.integer("m", 0, 5);
  const long l = c.integer("l", 1, n);
  return c.perturbed([&](Complex<T> bump) { return convolution_as_10V9(n, m, l, bumped_a(P, bump), ctx); });
}

// ---- windefsum

template <typename T>
SidePair<T> windef_sum(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> q = c.q();
  const Complex<T> a = c.a(), b = c.b(), cc = c.a("c");
  const long m = c.integer("m", 0, c.config().m_max);
  return c.perturbed([&](Complex<T> bump) { return indefinite_vwp_sum(a * bump, b, cc, m, q, ctx); });
}

template <typename T, int Form>
SidePair<T> windef_chain(Case<T>& c) {
  const auto ctx = c.context();
  const auto P = c.params();
  const long n = c.integer("n", 1, 5), m = c.integer("m", 0, 5);
  return c.perturbed([&](Complex<T> bump) { return indefinite_chain(Form, n, m, bumped_a(P, bump), ctx); });
}

template <typename T>
SidePair<T> windef_term_squares(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> q = c.q();
  const Complex<T> a = c.a();
  const long k = c.integer("k", 0, c.config().m_max);
  return c.perturbed([&](Complex<T> bump) { return vwp_term_squares(a * bump, k, q, ctx); });
}

// ---- Frenkel-Turaev

template <typename T>
SidePair<T> ft_summation(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> q = c.q();
  const Complex<T> a = c.a(), b = c.b(), cc = c.a("c"), d = c.a("d");
  const long m = c.integer("m", 1, c.config().m_max);
  return frenkel_turaev_sum(a, b, cc, d, m, q, ctx, c.bump());
}

template <typename T>
SidePair<T> ft_transformation(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> q = c.q();
  const Complex<T> a = c.a(), b = c.b(), cc = c.a("c"), d = c.a("d"), e = c.a("e"), f = c.a("f");
  const long n = c.integer("n", 1, c.config().m_max);
  return c.perturbed(
      [&](Complex<T> bump) { return frenkel_turaev_transform(a * bump, b, cc, d, e, f, n, q, ctx); });
}

template <typename T>
SidePair<T> ft_specialization(Case<T>& c) {
  const auto ctx = c.context();
  const Complex<T> q = c.q();
  const Complex<T> a = c.a(), b = c.b(), d = c.a("d"), e = c.a("e"), f = c.a("f");
  const long n = c.integer("n", 0, c.config().m_max);
  const Complex<T> ab = a * c.bump();
  const SidePair<T> t = frenkel_turaev_transform(ab, b, ab * q / b, d, e, f, n, q, ctx);
  const SidePair<T> s = frenkel_turaev_sum(a, d, e, f, n, q, ctx);
  return sides(t.lhs, s.rhs, t.max_term);
}

// ---- degenerations_p0

template <typename T, BasicKind Kind, int Count>
SidePair<T> basic_series(Case<T>& c) {
  const Complex<T> q = c.q();
  std::vector<Complex<T>> xs;
  static const char* names[] = {"a", "b", "c", "d"};
  for (int i = 0; i < Count; ++i) xs.push_back(c.a(names[i]));
  const long m = c.integer("m", 0, c.config().m_max);
  return c.perturbed([&](Complex<T> bump) {
    auto ys = xs;
    ys[0] *= bump;
    return basic_degenerations(Kind, ys, m, q, c.guard());
  });
}

template <typename T>
SidePair<T> basic_binomial(Case<T>& c) {
  const auto ctx = c.basic_context();
  const Complex<T> q = c.q();
  const long l = c.integer("l", -2, 2), k = c.integer("k", -2, 2);
  const long dn = c.integer("dn", 0, 6), dm = c.integer("dm", 0, 6);
  const EllipticParams<T> P(Complex<T>{}, Complex<T>{}, q * c.bump(), Degeneration::ab_zero);
  return sides(elliptic_binomial(l, k, l + dn, k + dm, P, ctx), q_binomial(dn + dm, dn, q, c.guard()) * ipow(q, dn * k));
}

template <typename T>
SidePair<T> basic_lattice(Case<T>& c) {
  const auto ctx = c.basic_context();
  const Complex<T> q = c.q();
  const Complex<T> b = c.b();
  const bool both = c.integer("ab_zero", 0, 1) == 1;
  const long n = c.integer("n", 1, 4), m = c.integer("m", 0, 4);
  const long cut = c.integer("cut", 1, n);
  return c.perturbed([&](Complex<T> bump) {
    const EllipticParams<T> P(Complex<T>{}, both ? Complex<T>{} : b, q * bump,
                              both ? Degeneration::ab_zero : Degeneration::a_zero);
    return path_convolution(ConvolutionKind::vertical_line, n, m, cut, P, ctx);
  });
}

// ---- prop5

template <typename T>
ConvolutionSpec convolution_draw(Case<T>& c, char variant, long r) {
  ConvolutionSpec s;
  s.variant = variant;
  s.r = r;
  s.l = c.integer("l", -1, 1);
  s.k = c.integer("k", r, r + 1);
  switch (variant) {
    case 'a':
      s.n = s.l + r + c.integer("dn", 0, 2);
      s.m = s.k + c.integer("dm", 0, 2);
      s.nu = c.integer("nu", s.l + r + 1, s.n + 1);
      break;
    case 'b':
      s.n = s.l + c.integer("dn", 0, 2);
      s.m = s.k + r + c.integer("dm", 0, 2);
      s.nu = c.integer("nu", s.k, s.m - r);
      break;
    default:
      s.n = s.l + c.integer("dn", 0, 2);
      s.m = s.k + c.integer("dm", 0, 2);
      s.nu = c.integer("nu", s.l + s.k, s.n + s.m);
      break;
  }
  return s;
}

template <typename T, char Variant>
SidePair<T> prop5(Case<T>& c) {
  const long r = rank_cap(c.config(), 2);
  const auto ctx = c.context();
  const auto P = c.params();
  const ConvolutionSpec s = convolution_draw(c, Variant, r);
  return c.perturbed([&](Complex<T> bump) { return verify_convolution(s, bumped_a(P, bump), ctx); });
}

template <typename T>
SidePair<T> prop5_summation(Case<T>& c) {
  const long r = c.integer("r", 1, std::min<long>(2, c.config().r_max));
  const auto ctx = c.context();
  const auto P = c.params();
  const ConvolutionSpec s = convolution_draw(c, 'a', r);
  return c.perturbed([&](Complex<T> bump) { return convolution_as_multisum(s, bumped_a(P, bump), ctx); });
}

// ---- multivariate

template <typename T>
MultiSumSpec<T> multi_draw(Case<T>& c, long r, long m_max) {
  MultiSumSpec<T> s;
  s.q = c.q();
  s.a = c.a();
  s.b = c.b();
  s.c = c.a("c");
  s.d = c.a("d");
  s.e = c.a("e");
  s.f = c.a("f");
  s.r = r;
  s.m = c.integer("m", r - 1, std::max(r - 1, m_max));
  return s;
}

template <typename T, long R>
SidePair<T> multi_sum(Case<T>& c) {
  const long r = rank_cap(c.config(), R);
  const auto ctx = c.context();
  const auto s = multi_draw(c, r, c.config().m_max);
  return c.perturbed([&](Complex<T> bump) {
    auto t = s;
    t.a *= bump;
    return multivariate_ft_sum(t, ctx);
  });
}

template <typename T>
SidePair<T> multi_sum_rank_one(Case<T>& c) {
  const auto ctx = c.context();
  const auto s = multi_draw(c, 1, c.config().m_max);
  auto t = s;
  t.a *= c.bump();
  const SidePair<T> multi = multivariate_ft_sum(t, ctx);
  const SidePair<T> single = frenkel_turaev_sum(s.a, s.b, s.c, s.d, s.m, s.q, ctx);
  return sides(multi.lhs, single.rhs, multi.max_term);
}

template <typename T, long R>
SidePair<T> multi_transform(Case<T>& c) {
  const long r = rank_cap(c.config(), R);
  const auto ctx = c.context();
  const auto s = multi_draw(c, r, c.config().m_max);
  return c.perturbed([&](Complex<T> bump) {
    auto t = s;
    t.a *= bump;
    return multivariate_ft_transform(t, ctx);
  });
}

template <typename T>
SidePair<T> multi_transform_rank_one(Case<T>& c) {
  const auto ctx = c.context();
  const auto s = multi_draw(c, 1, c.config().m_max);
  auto t = s;
  t.a *= c.bump();
  const SidePair<T> multi = multivariate_ft_transform(t, ctx);
  const SidePair<T> single = frenkel_turaev_transform(s.a, s.b, s.c, s.d, s.e, s.f, s.m, s.q, ctx);
  return sides(multi.lhs, single.rhs, multi.max_term);
}

template <typename T>
SidePair<T> multi_specialization(Case<T>& c) {
  const long r = c.integer("r", 1, c.config().r_max);
  const auto ctx = c.context();
  const auto s = multi_draw(c, r, c.config().m_max);
  auto special = s;
  special.a *= c.bump();
  special.c = special.a * s.q / s.b;
  const SidePair<T> t = multivariate_ft_transform(special, ctx);
  MultiSumSpec<T> sum = s;
  sum.b = s.d;
  sum.c = s.e;
  sum.d = s.f;
  return sides(t.lhs, multivariate_ft_sum(sum, ctx).rhs, t.max_term);
}

template <typename T>
SidePair<T> multi_symmetric(Case<T>& c) {
  const long r = rank_cap(c.config(), 2);
  const auto ctx = c.context();
  const auto s = multi_draw(c, r, std::min<long>(4, c.config().m_max));
  return c.perturbed([&](Complex<T> bump) {
    auto t = s;
    t.a *= bump;
    return multivariate_symmetric_range(t, ctx);
  });
}

#define ELLIPTICA_SUB(name, ...) \
  SubIdentity { name, &__VA_ARGS__<double>, &__VA_ARGS__<Quad>, 1 }

template <typename... Ts>
std::vector<int> cycle(Ts... xs) {
  return {xs...};
}

std::vector<int> iota_pattern(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

SuiteDef suite(std::string id, long trials, double tol, long m_max, long r_max, long grid_max,
               std::vector<SubIdentity> subs, std::vector<int> pattern = {}) {
  SuiteDef def;
  def.info = SuiteInfo{std::move(id), trials, tol, m_max, r_max, grid_max, {}};
  for (const auto& s : subs) def.info.identities.push_back(def.info.id + "." + s.name);
  def.pattern = pattern.empty() ? iota_pattern(subs.size()) : std::move(pattern);
  def.subs = std::move(subs);
  return def;
}

template <typename T, char Tag>
struct Prop4 {
  static SidePair<T> r1(Case<T>& c) { return prop4_entries<T, Tag, 1>(c); }
  static SidePair<T> r2(Case<T>& c) { return prop4_entries<T, Tag, 2>(c); }
  static SidePair<T> r3(Case<T>& c) { return prop4_entries<T, Tag, 3>(c); }
  static SidePair<T> brute(Case<T>& c) { return prop4_bruteforce<T, Tag>(c); }
};

template <char Tag>
SuiteDef prop4_suite() {
  std::vector<int> pattern;
  for (int rep = 0; rep < 5; ++rep) pattern.insert(pattern.end(), {0, 1, 2});
  pattern.push_back(3);
  return suite(std::string("prop4_") + Tag, 160, 1e-8, 0, 3, 0,
               {SubIdentity{"r1", &Prop4<double, Tag>::r1, &Prop4<Quad, Tag>::r1, 1},
                SubIdentity{"r2", &Prop4<double, Tag>::r2, &Prop4<Quad, Tag>::r2, 1},
                SubIdentity{"r3", &Prop4<double, Tag>::r3, &Prop4<Quad, Tag>::r3, 1},
                SubIdentity{"bruteforce", &Prop4<double, Tag>::brute, &Prop4<Quad, Tag>::brute, 1}},
               pattern);
}

std::vector<SuiteDef> build() {
  std::vector<SuiteDef> s;
  s.push_back(suite("theta_laws", 1500, 1e-10, 0, 0, 0,
                    {ELLIPTICA_SUB("inversion", theta_inversion),
                     ELLIPTICA_SUB("quasi_periodicity", theta_quasi_periodicity),
                     ELLIPTICA_SUB("addition", theta_addition)}));
  s.push_back(suite("factorial_laws", 300, 1e-10, 0, 0, 0,
                    {ELLIPTICA_SUB("p_shift", factorial_p_shift), ELLIPTICA_SUB("splitting", factorial_splitting),
                     ELLIPTICA_SUB("truncation", factorial_truncation)}));
  s.push_back(suite("weight_laws", 350, 1e-10, 0, 0, 0,
                    {ELLIPTICA_SUB("elliptic_a", weight_elliptic_a), ELLIPTICA_SUB("elliptic_b", weight_elliptic_b),
                     ELLIPTICA_SUB("reflection", weight_reflection), ELLIPTICA_SUB("inversion", weight_inversion),
                     ELLIPTICA_SUB("shift", weight_shift), ELLIPTICA_SUB("basic", weight_basic),
                     ELLIPTICA_SUB("classical", weight_classical)}));
  s.push_back(suite("theorem2_oracle", 20, 1e-10, 0, 0, 6, {ELLIPTICA_SUB("sweep", binomial_sweep)}));
  s.push_back(suite("recursions", 1200, 1e-10, 0, 0, 0,
                    {ELLIPTICA_SUB("last_step", recursion_last_step), ELLIPTICA_SUB("first_step", recursion_first_step),
                     ELLIPTICA_SUB("shift", recursion_shift), ELLIPTICA_SUB("reflection", recursion_reflection),
                     ELLIPTICA_SUB("last_height", recursion_last_height),
                     ELLIPTICA_SUB("dp_oracle", recursion_dp_oracle)}));
  s.push_back(suite("lgv_oracle", 30, 1e-9, 0, 3, 0,
                    {SubIdentity{"r2", &lgv_family<double, 2>, &lgv_family<Quad, 2>, 1},
                     SubIdentity{"r3", &lgv_family<double, 3>, &lgv_family<Quad, 3>, 1}}));
  s.push_back(suite("warnaar_det", 100, 1e-9, 0, 0, 0,
                    {SubIdentity{"r1", &warnaar<double, 1>, &warnaar<Quad, 1>, 1},
                     SubIdentity{"r2", &warnaar<double, 2>, &warnaar<Quad, 2>, 1},
                     SubIdentity{"r3", &warnaar<double, 3>, &warnaar<Quad, 3>, 1},
                     SubIdentity{"r4", &warnaar<double, 4>, &warnaar<Quad, 4>, 1}}));
  s.push_back(prop4_suite<'a'>());
  s.push_back(prop4_suite<'b'>());
  s.push_back(prop4_suite<'c'>());
  s.push_back(prop4_suite<'d'>());
  s.push_back(prop4_suite<'e'>());
  s.push_back(prop4_suite<'f'>());
  s.push_back(suite("convolutions_ft1", 100, 1e-10, 0, 0, 0,
                    {SubIdentity{"vertical", &convolution<double, ConvolutionKind::vertical_line>,
                                 &convolution<Quad, ConvolutionKind::vertical_line>, 1},
                     ELLIPTICA_SUB("as_10V9", convolution_10V9)}));
  s.push_back(suite("convolutions_ft2", 100, 1e-10, 0, 0, 0,
                    {SubIdentity{"horizontal", &convolution<double, ConvolutionKind::horizontal_line>,
                                 &convolution<Quad, ConvolutionKind::horizontal_line>, 1}}));
  s.push_back(suite("convolutions_ft3", 100, 1e-10, 0, 0, 0,
                    {SubIdentity{"antidiagonal", &convolution<double, ConvolutionKind::antidiagonal>,
                                 &convolution<Quad, ConvolutionKind::antidiagonal>, 1}}));
  s.push_back(suite("windefsum", 250, 1e-10, 8, 0, 0,
                    {ELLIPTICA_SUB("sum", windef_sum),
                     SubIdentity{"chain1", &windef_chain<double, 1>, &windef_chain<Quad, 1>, 1},
                     SubIdentity{"chain2", &windef_chain<double, 2>, &windef_chain<Quad, 2>, 1},
                     SubIdentity{"chain3", &windef_chain<double, 3>, &windef_chain<Quad, 3>, 1},
                     ELLIPTICA_SUB("term_squares", windef_term_squares)}));
  s.push_back(suite("ft_10V9", 200, 1e-9, 8, 0, 0, {ELLIPTICA_SUB("summation", ft_summation)}));
  s.push_back(suite("ft_12V11", 200, 1e-9, 6, 0, 0,
                    {ELLIPTICA_SUB("transformation", ft_transformation),
                     ELLIPTICA_SUB("specialization", ft_specialization)}));
  {
    auto jackson = SubIdentity{"jackson_8phi7", &basic_series<double, BasicKind::jackson_8phi7, 4>,
                               &basic_series<Quad, BasicKind::jackson_8phi7, 4>, 1};
    auto pfaff = SubIdentity{"q_pfaff_saalschutz", &basic_series<double, BasicKind::q_pfaff_saalschutz, 3>,
                             &basic_series<Quad, BasicKind::q_pfaff_saalschutz, 3>, 1};
    auto chu = SubIdentity{"q_chu_vandermonde", &basic_series<double, BasicKind::q_chu_vandermonde, 2>,
                           &basic_series<Quad, BasicKind::q_chu_vandermonde, 2>, 1};
    auto binomial = ELLIPTICA_SUB("binomial", basic_binomial);
    binomial.tolerance_cap = 1e-12;
    s.push_back(suite("degenerations_p0", 500, 1e-11, 8, 0, 0,
                      {jackson, pfaff, chu, binomial, ELLIPTICA_SUB("lattice", basic_lattice)}));
  }
  s.push_back(suite("prop5_a", 45, 1e-9, 0, 2, 0,
                    {SubIdentity{"r2", &prop5<double, 'a'>, &prop5<Quad, 'a'>, 1},
                     ELLIPTICA_SUB("summation_map", prop5_summation)},
                    cycle(0, 0, 1)));
  s.push_back(suite("prop5_b", 30, 1e-9, 0, 2, 0,
                    {SubIdentity{"r2", &prop5<double, 'b'>, &prop5<Quad, 'b'>, 1}}));
  s.push_back(suite("prop5_c", 30, 1e-9, 0, 2, 0,
                    {SubIdentity{"r2", &prop5<double, 'c'>, &prop5<Quad, 'c'>, 1}}));
  s.push_back(suite("multivariate_sum", 200, 1e-8, 6, 3, 0,
                    {SubIdentity{"r1", &multi_sum<double, 1>, &multi_sum<Quad, 1>, 1},
                     SubIdentity{"r2", &multi_sum<double, 2>, &multi_sum<Quad, 2>, 1},
                     SubIdentity{"r3", &multi_sum<double, 3>, &multi_sum<Quad, 3>, 1},
                     ELLIPTICA_SUB("rank_one", multi_sum_rank_one)}));
  s.push_back(suite("multivariate_transform", 300, 1e-8, 6, 3, 0,
                    {SubIdentity{"r1", &multi_transform<double, 1>, &multi_transform<Quad, 1>, 1},
                     SubIdentity{"r2", &multi_transform<double, 2>, &multi_transform<Quad, 2>, 1},
                     SubIdentity{"r3", &multi_transform<double, 3>, &multi_transform<Quad, 3>, 1},
                     ELLIPTICA_SUB("specialization", multi_specialization),
                     ELLIPTICA_SUB("symmetric_range", multi_symmetric),
                     ELLIPTICA_SUB("rank_one", multi_transform_rank_one)}));
  return s;
}

}  // namespace

const std::vector<SuiteDef>& suite_defs() {
  static const std::vector<SuiteDef> defs = build();
  return defs;
}

}  // namespace elliptica::detail
