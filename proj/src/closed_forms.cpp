#include "elliptica/closed_forms.hpp"

#include <string>

#include "elliptica/linalg.hpp"
#include "precision.hpp"

namespace elliptica {

namespace {

/// Shorthand for the three monomial families of the weight.
template <typename T>
struct Args {
  const EllipticParams<T>& params;

  Mono<T> q(long e) const { return Mono<T>::power(e); }
  Mono<T> a(long e) const { return params.a_mono(e); }
  Mono<T> b(long e) const { return params.b_mono(e); }
  Mono<T> ab(long e) const { return params.ab_mono(e); }
};

}  // namespace

template <typename T>
Complex<T> elliptic_binomial(long l, long k, long n, long m, const EllipticParams<T>& params,
                             const ThetaContext<T>& ctx) {
  for (long c : {l, k, n, m}) check_coordinate(c, "coordinate");
  if (n - l + m - k < 0) {
    throw DomainError("elliptic binomial needs n-l+m-k >= 0");
  }
  params.validate(ctx);
  const Args<T> x{params};
  const long dm = m - k;
  const long dn = n - l;
  ThetaProduct<T> P(ctx, params.q);
  P.times_factorial(x.q(1 + n - l), dm, "(q^{1+n-l})")
      .times_factorial(x.a(1 + n + 2 * k), dm, "(aq^{1+n+2k})")
      .times_factorial(x.b(1 + n + k + l), dm, "(bq^{1+n+k+l})")
      .times_factorial(x.ab(1 + k - n), dm, "(aq^{1+k-n}/b)")
      .over_factorial(x.q(1), dm, "(q)")
      .over_factorial(x.a(1 + l + 2 * k), dm, "(aq^{1+l+2k})")
      .over_factorial(x.b(1 + 2 * n + k), dm, "(bq^{1+2n+k})")
      .over_factorial(x.ab(1 + k - l), dm, "(aq^{1+k-l}/b)")
      .times_factorial(x.a(1 + l + 2 * k), dn, "(aq^{1+l+2k})")
      .times_factorial(x.ab(1 - n), dn, "(aq^{1-n}/b)")
      .times_factorial(x.ab(-n), dn, "(aq^{-n}/b)")
      .over_factorial(x.a(1 + l), dn, "(aq^{1+l})")
      .over_factorial(x.ab(1 + k - n), dn, "(aq^{1+k-n}/b)")
      .over_factorial(x.ab(k - n), dn, "(aq^{k-n}/b)")
      .times_factorial(x.b(1 + 2 * l), 2 * dn, "(bq^{1+2l})")
      .over_factorial(x.b(1 + k + 2 * l), 2 * dn, "(bq^{1+k+2l})")
      .scale_q(dn * k);
  return P.value();
}

template <typename T>
Complex<T> path_gf(LatticePoint u, LatticePoint v, const EllipticParams<T>& params,
                   const ThetaContext<T>& ctx) {
  if (v.x < u.x || v.y < u.y) return Complex<T>{};
  return elliptic_binomial(u.x, u.y, v.x, v.y, params, ctx);
}

template <typename T>
Complex<T> q_binomial(long n, long k, Complex<T> q, T guard_eps) {
  if (k < 0 || n < 0 || k > n) throw DomainError("q-binomial needs 0 <= k <= n");
  if (q == Complex<T>{}) throw DomainError("base q must be nonzero");
  auto poch = [&q](long len) {
    Complex<T> r{1};
    Complex<T> qi = q;
    for (long i = 0; i < len; ++i) {
      r *= Complex<T>{1} - qi;
      qi *= q;
    }
    return r;
  };
  const Complex<T> den = poch(k) * poch(n - k);
  if (std::abs(poch(std::min(k, n - k))) >= guard_eps && std::abs(den) >= guard_eps) {
    return poch(n) / den;
  }
  // row-by-row Pascal: [i choose j] = [i-1 choose j] + [i-1 choose j-1] q^{i-j}
  std::vector<Complex<T>> row(static_cast<std::size_t>(k + 1), Complex<T>{});
  row[0] = Complex<T>{1};
  for (long i = 1; i <= n; ++i) {
    for (long j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j] + row[j - 1] * ipow(q, i - j);
    }
  }
  return row[k];
}

template <typename T>
Complex<T> warnaar_det_lhs(const WarnaarDetArgs<T>& args, Complex<T> q, const ThetaContext<T>& ctx) {
  const std::size_t r = args.X.size();
  if (r == 0) throw DomainError("Warnaar determinant needs r >= 1");
  SquareMatrix<T> mat(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Complex<T> xi = args.X[i];
    for (std::size_t j = 1; j <= r; ++j) {
      const long len = static_cast<long>(r - j);
      ThetaProduct<T> P(ctx, q);
      P.times_factorial(Mono<T>{args.A * xi, 0, false}, len, "(AX_i)")
          .times_factorial(Mono<T>{args.A * args.C / xi, 0, false}, len, "(AC/X_i)")
          .over_factorial(Mono<T>{args.B * xi, 0, false}, len, "(BX_i)")
          .over_factorial(Mono<T>{args.B * args.C / xi, 0, false}, len, "(BC/X_i)");
      mat(i, j - 1) = P.value();
    }
  }
  return determinant(std::move(mat));
}

template <typename T>
Complex<T> warnaar_det_rhs(const WarnaarDetArgs<T>& args, Complex<T> q, const ThetaContext<T>& ctx) {
  const long r = static_cast<long>(args.X.size());
  if (r == 0) throw DomainError("Warnaar determinant needs r >= 1");
  for (const auto& z : {args.A, args.B, args.C}) {
    if (z == Complex<T>{}) throw DomainError("A, B, C must be nonzero");
  }
  ThetaProduct<T> P(ctx, q);
  P.scale(ipow(args.A, binom(r, 2))).scale_q(binom(r, 3));
  for (long i = 0; i < r; ++i) {
    for (long j = i + 1; j < r; ++j) {
      const Complex<T> xi = args.X[i], xj = args.X[j];
      P.scale(xj)
          .times(Mono<T>{xi / xj, 0, false}, "X_i/X_j")
          .times(Mono<T>{args.C / (xi * xj), 0, false}, "C/X_iX_j");
    }
  }
  const Complex<T> abc = args.A * args.B * args.C;
  for (long i = 1; i <= r; ++i) {
    const Complex<T> xi = args.X[i - 1];
    P.times_factorial(Mono<T>{args.B / args.A, 0, false}, i - 1, "(B/A)")
        .times_factorial(Mono<T>{abc, 2 * r - 2 * i, false}, i - 1, "(ABCq^{2r-2i})")
        .over_factorial(Mono<T>{args.B * xi, 0, false}, r - 1, "(BX_i)")
        .over_factorial(Mono<T>{args.B * args.C / xi, 0, false}, r - 1, "(BC/X_i)");
  }
  return P.value();
}

void DetFormulaVariant::validate() const {
  const std::size_t r = seq.size();
  if (r == 0) throw DomainError("determinant formula needs r >= 1");
  for (long c : {l, k, n, m}) check_coordinate(c, "coordinate");
  for (long s : seq) check_coordinate(s, "coordinate");
  auto require = [this](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("variant (") + tag + "): " + what);
  };
  auto non_increasing = [this] {
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (seq[i] > seq[i - 1]) return false;
    }
    return true;
  };
  auto non_decreasing = [this] {
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (seq[i] < seq[i - 1]) return false;
    }
    return true;
  };
  switch (tag) {
    case 'a':
      require(non_increasing(), "m_1 >= ... >= m_r required");
      for (long mi : seq) require(n - l + mi - k >= 0, "n-l+m_i-k >= 0 required");
      break;
    case 'b':
      require(non_decreasing(), "n_1 <= ... <= n_r required");
      for (long ni : seq) require(ni - l + m - k >= 0, "n_i-l+m-k >= 0 required");
      break;
    case 'c':
      require(non_decreasing(), "n_1 <= ... <= n_r required");
      require(m - l - k >= 0, "m-l-k >= 0 required");
      break;
    case 'd':
      require(non_increasing(), "k_1 >= ... >= k_r required");
      for (long ki : seq) require(n - l + m - ki >= 0, "n-l+m-k_i >= 0 required");
      break;
    case 'e':
      require(non_decreasing(), "l_1 <= ... <= l_r required");
      for (long li : seq) require(n - li + m - k >= 0, "n-l_i+m-k >= 0 required");
      break;
    case 'f':
      require(non_decreasing(), "l_1 <= ... <= l_r required");
      require(n + m - k >= 0, "n+m-k >= 0 required");
      break;
    default:
      throw DomainError(std::string("unknown determinant variant '") + tag + "'");
  }
}

std::pair<PointTuple, PointTuple> DetFormulaVariant::points() const {
  validate();
  const long r = static_cast<long>(seq.size());
  std::vector<LatticePoint> starts, ends;
  for (long i = 1; i <= r; ++i) {
    const long s = seq[i - 1];
    switch (tag) {
      case 'a':
        starts.push_back({l + i, k - i});
        ends.push_back({n, s});
        break;
      case 'b':
        starts.push_back({l + i, k - i});
        ends.push_back({s, m});
        break;
      case 'c':
        starts.push_back({l + i, k - i});
        ends.push_back({s, m - s});
        break;
      case 'd':
        starts.push_back({l, s});
        ends.push_back({n + i, m - i});
        break;
      case 'e':
        starts.push_back({s, k});
        ends.push_back({n + i, m - i});
        break;
      default:
        starts.push_back({s, k - s});
        ends.push_back({n + i, m - i});
        break;
    }
  }
  return {PointTuple(std::move(starts)), PointTuple(std::move(ends))};
}

namespace {

template <typename T>
void det_a(ThetaProduct<T>& P, const Args<T>& x, long l, long k, long n, const std::vector<long>& ms) {
  const long r = static_cast<long>(ms.size());
  long e = 3 * binom(r + 1, 3) + binom(r + 2, 3) + r * (n - l) * k - (n - l) * binom(r + 1, 2) - r * r * k;
  for (long i = 1; i <= r; ++i) e += (i - 1) * ms[i - 1];
  P.scale_q(e);
  for (long i = 0; i < r; ++i) {
    for (long j = i + 1; j < r; ++j) {
      P.times(x.q(ms[i] - ms[j]), "q^{m_i-m_j}").times(x.a(1 + n + ms[i] + ms[j]), "aq^{1+n+m_i+m_j}");
    }
  }
  for (long i = 1; i <= r; ++i) {
    const long mi = ms[i - 1];
    const long len = mi - k + i;
    P.times_factorial(x.q(1 + n - l - i), len)
        .times_factorial(x.a(1 + n + 2 * k - r - i), len)
        .times_factorial(x.a(1 + l + 2 * k - i), n - l - r)
        .over_factorial(x.q(1), mi - k + r)
        .over_factorial(x.a(1 + l + 2 * k - i), len)
        .over_factorial(x.a(1 + l + i), n - l - i)
        .times_factorial(x.b(2 + n + k + l - i), len)
        .times_factorial(x.b(1 + 2 * l + 2 * i), 2 * n - 2 * l - 2 * i)
        .over_factorial(x.b(1 + 2 * n + k - i), len)
        .over_factorial(x.b(1 + 2 * l + k + i), 2 * n - 2 * l - 2 * i)
        .times_factorial(x.ab(1 + k - n - i), len)
        .times_factorial(x.ab(1 - n), n - l - i)
        .times_factorial(x.ab(-n), n - l - i)
        .over_factorial(x.ab(k - l - i), len)
        .over_factorial(x.ab(1 + k - n - i), n - l - i)
        .over_factorial(x.ab(k - n - i), n - l - i);
  }
}

long exponent_bc(long l, long k, const std::vector<long>& ns) {
  const long r = static_cast<long>(ns.size());
  long e = 2 * binom(r + 1, 3) + (l - k + 1) * binom(r + 1, 2) - r * l * k;
  for (long i = 1; i <= r; ++i) e += (k - i) * ns[i - 1];
  return e;
}

template <typename T>
void det_b(ThetaProduct<T>& P, const Args<T>& x, long l, long k, long m, const std::vector<long>& ns) {
  const long r = static_cast<long>(ns.size());
  P.scale_q(exponent_bc(l, k, ns));
  for (long i = 0; i < r; ++i) {
    for (long j = i + 1; j < r; ++j) {
      P.times(x.q(ns[j] - ns[i]), "q^{n_j-n_i}").times(x.b(1 + m + ns[i] + ns[j]), "bq^{1+m+n_i+n_j}");
    }
  }
  for (long i = 1; i <= r; ++i) {
    const long ni = ns[i - 1];
    P.times_factorial(x.q(ni - l), m - k + 1)
        .times_factorial(x.a(ni + 2 * k - i), m - k + 1 - r + i)
        .times_factorial(x.a(l + 2 * k), ni - l - i)
        .over_factorial(x.q(1), m - k + i)
        .over_factorial(x.a(l + 2 * k), m - k + 1 - r + i)
        .over_factorial(x.a(1 + l + i), ni - l - i)
        .times_factorial(x.b(1 + ni + k + l), m - k + 1)
        .times_factorial(x.b(1 + 2 * l + 2 * i), 2 * ni - 2 * l - 2 * i)
        .over_factorial(x.b(1 + 2 * ni + k - i), m - k + i)
        .over_factorial(x.b(1 + 2 * l + k + i), 2 * ni - 2 * l - 2 * i)
        .times_factorial(x.ab(k - ni), m - k + 1)
        .times_factorial(x.ab(1 - ni), ni - l - i)
        .times_factorial(x.ab(-ni), ni - l - i)
        .over_factorial(x.ab(k - l - i), m - k + 1)
        .over_factorial(x.ab(k - ni), ni - l + 1 - 2 * i)
        .over_factorial(x.ab(k - r - ni), ni - l + r - 2 * i);
  }
}

template <typename T>
void det_c(ThetaProduct<T>& P, const Args<T>& x, long l, long k, long m, const std::vector<long>& ns) {
  const long r = static_cast<long>(ns.size());
  P.scale_q(exponent_bc(l, k, ns));
  for (long i = 0; i < r; ++i) {
    for (long j = i + 1; j < r; ++j) {
      P.times(x.q(ns[j] - ns[i]), "q^{n_j-n_i}").times(x.ab(m - ns[i] - ns[j]), "aq^{m-n_i-n_j}/b");
    }
  }
  for (long i = 1; i <= r; ++i) {
    const long ni = ns[i - 1];
    const long len = m - ni - k + i;
    P.times_factorial(x.q(ni - l), len)
        .times_factorial(x.a(ni + 2 * k - i), m - ni - k + 1)
        .times_factorial(x.a(l + 2 * k), ni - l - i)
        .over_factorial(x.q(1), m - ni - k + r)
        .over_factorial(x.a(l + 2 * k), m - ni - k + 1)
        .over_factorial(x.a(1 + l + i), ni - l - i)
        .times_factorial(x.b(1 + ni + k + l), len)
        .times_factorial(x.b(1 + 2 * l + 2 * i), 2 * ni - 2 * l - 2 * i)
        .over_factorial(x.b(1 + 2 * ni + k - i), len)
        .over_factorial(x.b(1 + 2 * l + k + i), 2 * ni - 2 * l - 2 * i)
        .times_factorial(x.ab(1 + k - ni - i), len)
        .over_factorial(x.ab(k - l - i), len)
        .times_factorial(x.ab(1 - ni), ni - l - i)
        .times_factorial(x.ab(-ni), ni - l - i)
        .over_factorial(x.ab(1 + k - ni - i), ni - l - i)
        .over_factorial(x.ab(k - r - ni), ni - l + r - 2 * i);
  }
}

template <typename T>
void det_d(ThetaProduct<T>& P, const Args<T>& x, long l, long n, long m, const std::vector<long>& ks) {
  const long r = static_cast<long>(ks.size());
  long e = 0;
  for (long i = 1; i <= r; ++i) e += (n - l + i) * ks[i - 1];
  P.scale_q(e);
  for (long i = 0; i < r; ++i) {
    for (long j = i + 1; j < r; ++j) {
      P.times(x.q(ks[i] - ks[j]), "q^{k_i-k_j}").times(x.a(l + ks[i] + ks[j]), "aq^{l+k_i+k_j}");
    }
  }
  for (long i = 1; i <= r; ++i) {
    const long ki = ks[i - 1];
    P.times_factorial(x.q(1 + n + i - l), m - ki - i)
        .times_factorial(x.a(1 + n + 2 * ki), m - ki)
        .times_factorial(x.a(1 + l + 2 * ki), n - l)
        .over_factorial(x.q(1), m - ki - 1)
        .over_factorial(x.a(1 + l + 2 * ki), m - ki - 1)
        .over_factorial(x.a(1 + l), n - l + i)
        .times_factorial(x.b(1 + n + ki + l + r), m - ki - r - 1 + i)
        .times_factorial(x.b(1 + 2 * l), 2 * n - 2 * l + 2 * i)
        .over_factorial(x.b(1 + 2 * n + ki), m - ki + i)
        .over_factorial(x.b(1 + 2 * l + ki), 2 * n - 2 * l)
        .times_factorial(x.ab(1 + ki - n), m - ki - i - 1)
        .times_factorial(x.ab(1 - n - i), n - l + i)
        .times_factorial(x.ab(-n - i), n - l + i)
        .over_factorial(x.ab(1 + ki - l), m - ki - i)
        .over_factorial(x.ab(1 + ki - n), n - l)
        .over_factorial(x.ab(ki - r - n), n - l + r);
  }
}

template <typename T>
void det_e(ThetaProduct<T>& P, const Args<T>& x, long k, long n, long m, const std::vector<long>& ls) {
  const long r = static_cast<long>(ls.size());
  long e = (n + r + k) * binom(r, 2) + (n + 1) * r * k - binom(r, 3);
  for (long i = 1; i <= r; ++i) e -= (k + i - 1) * ls[i - 1];
  P.scale_q(e);
  for (long i = 0; i < r; ++i) {
    for (long j = i + 1; j < r; ++j) {
      P.times(x.q(ls[j] - ls[i]), "q^{l_j-l_i}").times(x.b(k + ls[i] + ls[j]), "bq^{k+l_i+l_j}");
    }
  }
  for (long i = 1; i <= r; ++i) {
    const long li = ls[i - 1];
    P.times_factorial(x.q(1 + n + r - li), m - k - r)
        .times_factorial(x.a(1 + n + 2 * k + i), m - k - 1)
        .times_factorial(x.a(1 + li + 2 * k), n + i - li)
        .over_factorial(x.q(1), m - k - i)
        .over_factorial(x.a(1 + li + 2 * k), m - k - 1)
        .over_factorial(x.a(1 + li), n + i - li)
        .times_factorial(x.b(1 + n + k + r + li), m - k - r)
        .times_factorial(x.b(1 + 2 * li), 2 * n + 2 * i - 2 * li)
        .over_factorial(x.b(1 + 2 * n + k + 2 * i), m - k - i)
        .over_factorial(x.b(1 + k + 2 * li), 2 * n + 2 * i - 2 * li)
        .times_factorial(x.ab(1 + k - n - i), m - k - 1)
        .times_factorial(x.ab(1 - n - i), n + i - li)
        .times_factorial(x.ab(-n - i), n + i - li)
        .over_factorial(x.ab(1 + k - li), m - k - 1)
        .over_factorial(x.ab(1 + k - n - i), n + i - li)
        .over_factorial(x.ab(k - n - i), n + i - li);
  }
}

template <typename T>
void det_f(ThetaProduct<T>& P, const Args<T>& x, long k, long n, long m, const std::vector<long>& ls) {
  const long r = static_cast<long>(ls.size());
  long e = k * binom(r + 1, 2) + r * n * k;
  for (long i = 1; i <= r; ++i) e -= (n + k + i - ls[i - 1]) * ls[i - 1];
  P.scale_q(e);
  for (long i = 0; i < r; ++i) {
    for (long j = i + 1; j < r; ++j) {
      P.times(x.q(ls[j] - ls[i]), "q^{l_j-l_i}").times(x.ab(k - ls[i] - ls[j]), "aq^{k-l_i-l_j}/b");
    }
  }
  for (long i = 1; i <= r; ++i) {
    const long li = ls[i - 1];
    P.times_factorial(x.q(1 + n + r - li), m - k - r + li + i - 1)
        .times_factorial(x.a(1 + n + 2 * k - 2 * li), m - k + li)
        .times_factorial(x.a(1 + 2 * k - li), n - li)
        .over_factorial(x.q(1), m - k + li - 1)
        .over_factorial(x.a(1 + 2 * k - li), m - k + li - i)
        .over_factorial(x.a(1 + li), n + i - li)
        .times_factorial(x.b(1 + n + k + i), m - k + li - i)
        .times_factorial(x.b(1 + 2 * li), 2 * n + 2 * i - 2 * li)
        .over_factorial(x.b(1 + 2 * n + k - li), m - k + li + i)
        .over_factorial(x.b(1 + k + li), 2 * n - 2 * li)
        .times_factorial(x.ab(1 + k - n - li), m - k + li - i - 1)
        .over_factorial(x.ab(1 + k - 2 * li), m - k + li - 1)
        .times_factorial(x.ab(1 - n - i), n + i - li)
        .times_factorial(x.ab(-n - i), n + i - li)
        .over_factorial(x.ab(1 + k - n - li), n - li)
        .over_factorial(x.ab(k - n - r - li), n + r - li);
  }
}

}  // namespace

template <typename T>
Complex<T> det_formula(const DetFormulaVariant& v, const EllipticParams<T>& params,
                       const ThetaContext<T>& ctx) {
  v.validate();
  params.validate(ctx);
  const Args<T> x{params};
  ThetaProduct<T> P(ctx, params.q);
  switch (v.tag) {
    case 'a': det_a(P, x, v.l, v.k, v.n, v.seq); break;
    case 'b': det_b(P, x, v.l, v.k, v.m, v.seq); break;
    case 'c': det_c(P, x, v.l, v.k, v.m, v.seq); break;
    case 'd': det_d(P, x, v.l, v.n, v.m, v.seq); break;
    case 'e': det_e(P, x, v.k, v.n, v.m, v.seq); break;
    default: det_f(P, x, v.k, v.n, v.m, v.seq); break;
  }
  return P.value();
}

template <typename T>
Complex<T> entry_determinant(const std::vector<LatticePoint>& starts,
                             const std::vector<LatticePoint>& ends, const EllipticParams<T>& params,
                             const ThetaContext<T>& ctx) {
  const std::size_t r = starts.size();
  if (ends.size() != r || r == 0) throw DomainError("start and end tuples must be nonempty and equal in length");
  SquareMatrix<T> mat(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) mat(i, j) = path_gf(starts[j], ends[i], params, ctx);
  }
  return determinant(std::move(mat));
}

template <typename T>
Complex<T> det_from_entries(const DetFormulaVariant& v, const EllipticParams<T>& params,
                            const ThetaContext<T>& ctx) {
  const auto [starts, ends] = v.points();
  return entry_determinant(starts.points(), ends.points(), params, ctx);
}

#define ELLIPTICA_INSTANTIATE(T)                                                                  \
  template Complex<T> elliptic_binomial<T>(long, long, long, long, const EllipticParams<T>&,      \
                                           const ThetaContext<T>&);                               \
  template Complex<T> path_gf<T>(LatticePoint, LatticePoint, const EllipticParams<T>&,            \
                                 const ThetaContext<T>&);                                         \
  template Complex<T> q_binomial<T>(long, long, Complex<T>, T);                                   \
  template Complex<T> warnaar_det_lhs<T>(const WarnaarDetArgs<T>&, Complex<T>,                    \
                                         const ThetaContext<T>&);                                 \
  template Complex<T> warnaar_det_rhs<T>(const WarnaarDetArgs<T>&, Complex<T>,                    \
                                         const ThetaContext<T>&);                                 \
  template Complex<T> det_formula<T>(const DetFormulaVariant&, const EllipticParams<T>&,          \
                                     const ThetaContext<T>&);                                     \
  template Complex<T> det_from_entries<T>(const DetFormulaVariant&, const EllipticParams<T>&,     \
                                          const ThetaContext<T>&);                                \
  template Complex<T> entry_determinant<T>(const std::vector<LatticePoint>&,                      \
                                           const std::vector<LatticePoint>&,                      \
                                           const EllipticParams<T>&, const ThetaContext<T>&);

ELLIPTICA_INSTANTIATE(double)
ELLIPTICA_INSTANTIATE(Quad)

}  // namespace elliptica
