#!/usr/bin/env python3
"""Independent high-precision reference values for the unit tests.

Everything here is evaluated from the defining products and sums with mpmath
at 50 digits: theta as a long truncated product, path generating functions by
explicit enumeration, determinants by cofactor expansion, series by direct
summation. Run it to regenerate tests/unit/oracle_values.hpp.
"""

import functools
import itertools
import sys
from fractions import Fraction
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50
THETA_TERMS = 400


def theta(x, p, terms=THETA_TERMS):
    x = mp.mpc(x)
    p = mp.mpc(p)
    out = mp.mpc(1)
    pk = mp.mpc(1)
    for _ in range(terms):
        out *= (1 - pk * x) * (1 - pk * p / x)
        pk *= p
        if abs(pk) < mp.mpf(10) ** (-60):
            break
    return out


def qp(a, n, q, p):
    out = mp.mpc(1)
    if n >= 0:
        for j in range(n):
            out *= theta(a * q**j, p)
    else:
        for j in range(1, -n + 1):
            out /= theta(a * q ** (-j), p)
    return out


def qp_many(args, n, q, p):
    out = mp.mpc(1)
    for a in args:
        out *= qp(a, n, q, p)
    return out


def weight(n, m, a, b, q, p):
    num = [a * q ** (n + 2 * m), b * q ** (2 * n), b * q ** (2 * n - 1), a * q ** (1 - n) / b, a * q ** (-n) / b]
    den = [a * q**n, b * q ** (2 * n + m), b * q ** (2 * n + m - 1), a * q ** (1 + m - n) / b, a * q ** (m - n) / b]
    out = q**m
    for x in num:
        out *= theta(x, p)
    for x in den:
        out /= theta(x, p)
    return out


def paths(u, v):
    dx, dy = v[0] - u[0], v[1] - u[1]
    if dx < 0 or dy < 0:
        return []
    out = []
    for east in itertools.combinations(range(dx + dy), dx):
        east = set(east)
        out.append("".join("E" if i in east else "N" for i in range(dx + dy)))
    return out


def path_points(u, steps):
    x, y = u
    pts = [(x, y)]
    for s in steps:
        if s == "E":
            x += 1
        else:
            y += 1
        pts.append((x, y))
    return pts


def path_weight(u, steps, w):
    x, y = u
    out = mp.mpc(1)
    for s in steps:
        if s == "E":
            x += 1
            out *= w(x, y)
        else:
            y += 1
    return out


def gf_enumerated(u, v, w):
    total = mp.mpc(0)
    for steps in paths(u, v):
        total += path_weight(u, steps, w)
    return total


def nonintersecting(starts, ends, w):
    families = [[(s, path_points(s, st)) for st in paths(s, e)] for s, e in zip(starts, ends)]
    total = mp.mpc(0)
    for combo in itertools.product(*families):
        seen = set()
        ok = True
        for _, pts in combo:
            for pt in pts:
                if pt in seen:
                    ok = False
                    break
                seen.add(pt)
            if not ok:
                break
        if ok:
            term = mp.mpc(1)
            for s, pts in combo:
                steps = "".join("E" if b[0] > a[0] else "N" for a, b in zip(pts, pts[1:]))
                term *= path_weight(s, steps, w)
            total += term
    return total


def det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = mp.mpc(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * det(minor)
    return total


def cpp(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=1, max_fixed=0), mp.nstr(z.imag, 20, min_fixed=1, max_fixed=0))


def binom2(r):
    return r * (r - 1) // 2


def binom3(r):
    return r * (r - 1) * (r - 2) // 6


def theta_pair(x, y, p):
    return theta(x, p) * theta(y, p)


def multi_sum_lhs(a, b, c, d, m, r, q, p):
    top = a**2 * q ** (3 - 2 * r + m) / (b * c * d)
    total = mp.mpc(0)
    for ks in itertools.combinations(range(m + 1), r):
        term = q ** sum((2 * i + 1) * k for i, k in enumerate(ks))
        for i in range(r):
            for j in range(i + 1, r):
                term *= theta_pair(q ** (ks[i] - ks[j]), a * q ** (ks[i] + ks[j]), p) ** 2
        for k in ks:
            term *= theta(a * q ** (2 * k), p) / theta(a, p)
            term *= qp_many([a, b, c, d, top, q ** (-m)], k, q, p)
            term /= qp_many([q, a * q / b, a * q / c, a * q / d, b * c * d * q ** (2 * r - 2 - m) / a, a * q ** (1 + m)], k, q, p)
        total += term
    return total


def multi_sum_rhs(a, b, c, d, m, r, q, p):
    top = a**2 * q ** (3 - 2 * r + m) / (b * c * d)
    out = q ** (-4 * binom3(r)) * (a / (b * c * d * q)) ** binom2(r)
    for i in range(1, r + 1):
        out *= qp_many([q, b, c, d, top], i - 1, q, p)
        out *= qp_many([q, a * q], m, q, p)
        out *= qp_many([a * q ** (2 - i) / (b * c), a * q ** (2 - i) / (b * d), a * q ** (2 - i) / (c * d)], m + 1 - r, q, p)
        out /= qp_many([q, a * q / b, a * q / c, a * q / d, a * q ** (2 - 2 * r + i) / (b * c * d)], m + 1 - i, q, p)
    return out


def multi_transform_series(a, b, c, d, e, f, lam, base, m, r, q, p, printed=False):
    """Left series at (a; b, c, d) or right series at (lam; lam b/a, ...).

    The lower partner of g is base q / g, which is ef q^{r-1-m}/lam on the
    left and ef q^{r-1-m}/a on the right; `printed` uses /lam on both sides.
    """
    g = lam * a * q ** (2 - r + m) / (e * f)
    total = mp.mpc(0)
    for ks in itertools.combinations(range(m + 1), r):
        term = q ** sum((2 * i + 1) * k for i, k in enumerate(ks))
        for i in range(r):
            for j in range(i + 1, r):
                term *= theta_pair(q ** (ks[i] - ks[j]), base[0] * q ** (ks[i] + ks[j]), p) ** 2
        for k in ks:
            term *= theta(base[0] * q ** (2 * k), p) / theta(base[0], p)
            term *= qp_many(list(base) + [e, f, g, q ** (-m)], k, q, p)
            term /= qp_many(
                [q, a * q / b, a * q / c, a * q / d, base[0] * q / e, base[0] * q / f,
                 e * f * q ** (r - 1 - m) / lam if printed else base[0] * q / g, base[0] * q ** (1 + m)], k, q, p)
        total += term
    return total


def multi_transform(a, b, c, d, e, f, m, r, q, p, printed=False):
    lam = a**2 * q ** (2 - r) / (b * c * d)
    lhs = multi_transform_series(a, b, c, d, e, f, lam, (a, b, c, d), m, r, q, p)
    right = multi_transform_series(a, b, c, d, e, f, lam, (lam, lam * b / a, lam * c / a, lam * d / a), m, r, q, p, printed)
    pre = mp.mpc(1)
    for i in range(1, r + 1):
        pre *= qp_many([b, c, d, e * f / a], i - 1, q, p)
        pre /= qp_many([lam * b / a, lam * c / a, lam * d / a, e * f / lam], i - 1, q, p)
        pre *= qp(a * q, m, q, p) * qp(a * q / (e * f), m + 1 - r, q, p)
        pre *= qp_many([lam * q / e, lam * q / f], m + 1 - i, q, p)
        pre /= qp(lam * q, m, q, p) * qp(lam * q / (e * f), m + 1 - r, q, p)
        pre /= qp_many([a * q / e, a * q / f], m + 1 - i, q, p)
    return lhs, pre * right


def vwp(a1, rest, terms, q, p):
    total = mp.mpc(0)
    for k in range(terms + 1):
        term = theta(a1 * q ** (2 * k), p) / theta(a1, p) * q**k
        term *= qp_many([a1] + rest, k, q, p)
        term /= qp_many([q] + [a1 * q / x for x in rest], k, q, p)
        total += term
    return total


def jackson_exact(a, b, c, d, m, q):
    """8phi7 both sides in rational arithmetic at p = 0."""

    def poch(x, n):
        out = Fraction(1)
        for j in range(n):
            out *= 1 - x * q**j
        return out

    e = a * a * q ** (1 + m) / (b * c * d)
    qm = Fraction(1) / q**m
    lhs = Fraction(0)
    for k in range(m + 1):
        term = (1 - a * q ** (2 * k)) / (1 - a) * q**k
        for x in (a, b, c, d, e, qm):
            term *= poch(x, k)
        for x in (q, a * q / b, a * q / c, a * q / d, a * q / e, a * q / qm):
            term /= poch(x, k)
        lhs += term
    rhs = poch(a * q, m) * poch(a * q / (b * c), m) * poch(a * q / (b * d), m) * poch(a * q / (c * d), m)
    rhs /= poch(a * q / b, m) * poch(a * q / c, m) * poch(a * q / d, m) * poch(a * q / (b * c * d), m)
    return lhs, rhs


def warnaar(A, B, C, X, q, p):
    r = len(X)
    rows = [[qp_many([A * x, A * C / x], r - j, q, p) / qp_many([B * x, B * C / x], r - j, q, p)
             for j in range(1, r + 1)] for x in X]
    lhs = det(rows)
    rhs = A ** binom2(r) * q ** binom3(r)
    for i in range(r):
        for j in range(i + 1, r):
            rhs *= X[j] * theta(X[i] / X[j], p) * theta(C / (X[i] * X[j]), p)
    for i in range(1, r + 1):
        rhs *= qp_many([B / A, A * B * C * q ** (2 * r - 2 * i)], i - 1, q, p)
        rhs /= qp_many([B * X[i - 1], B * C / X[i - 1]], r - 1, q, p)
    return lhs, rhs


def main():
    out = []
    emit = out.append

    emit("// Regenerate with tests/oracles/generate.py.")
    emit("#pragma once")
    emit("")
    emit("#include <complex>")
    emit("")
    emit("namespace oracle {")
    emit("")
    emit("using C = std::complex<double>;")
    emit("")

    # theta
    emit("inline const C theta_2_p01_k20 = %s;" % cpp(theta(2, mp.mpf("0.1"), terms=20)))
    x, p = mp.mpc("0.3", "0.7"), mp.mpc("0.2", "0.1")
    emit("inline const C theta_complex = %s;  // x = 0.3+0.7i, p = 0.2+0.1i" % cpp(theta(x, p)))
    a, q, p = mp.mpc("0.4", "0.2"), mp.mpc("0.9", "-0.1"), mp.mpc("0.25")
    emit("inline const C qp_pos = %s;  // (0.4+0.2i; 0.9-0.1i, 0.25)_3" % cpp(qp(a, 3, q, p)))
    emit("inline const C qp_neg = %s;  // (0.4+0.2i; 0.9-0.1i, 0.25)_{-2}" % cpp(qp(a, -2, q, p)))

    # weights
    w = weight(2, 3, mp.mpf("1.1"), mp.mpf("0.7"), mp.mpf("0.9"), mp.mpf("0.2"))
    emit("inline const C weight_2_3 = %s;  // a=1.1 b=0.7 q=0.9 p=0.2" % cpp(w))
    a, b, q, p = mp.mpc("0.8", "0.3"), mp.mpc("1.2", "-0.1"), mp.mpc("0.95", "0.05"), mp.mpc("0.1")
    sw = weight(2, 1, a * q ** (1 + 2 * 2), b * q ** (2 * 1 + 2), q, p)
    emit("inline const C shifted_weight_2_1_s1_t2 = %s;  // a=0.8+0.3i b=1.2-0.1i q=0.95+0.05i p=0.1" % cpp(sw))
    wf = functools.cache(lambda n, m: weight(n, m, a, b, q, p))
    emit("inline const C staircase_weight = %s;  // (0,0):NENE, same params" % cpp(path_weight((0, 0), "NENE", wf)))

    # generating functions
    qh = Fraction(1, 2)
    area = sum(qh ** sum(st[:i].count("N") for i, s in enumerate(st) if s == "E") for st in paths((0, 0), (2, 2)))
    emit("inline constexpr double q_area_sum_2_2_half = %r;  // sum of q^area over (0,0)->(2,2), q=1/2" % float(area))

    a, b, q, p = mp.mpc("0.9", "0.2"), mp.mpc("1.3", "-0.4"), mp.mpc("0.85", "0.1"), mp.mpc("0.15", "0.05")
    wf = functools.cache(lambda n, m: weight(n, m, a, b, q, p))
    emit("// Shared elliptic params: a=0.9+0.2i b=1.3-0.4i q=0.85+0.1i p=0.15+0.05i")
    emit("inline const C gf_m1_1_to_2_4 = %s;" % cpp(gf_enumerated((-1, 1), (2, 4), wf)))
    emit("inline const C nonint_r2 = %s;  // starts (1,1),(2,0) ends (4,3),(4,2)" % cpp(
        nonintersecting([(1, 1), (2, 0)], [(4, 3), (4, 2)], wf)))
    # variant (a): starts (l+j, k-j), ends (n, m_i); l=0 k=2 n=4 m=(4,3)
    emit("inline const C product_formula_a_r2 = %s;  // starts (1,1),(2,0) ends (4,4),(4,3)" % cpp(
        nonintersecting([(1, 1), (2, 0)], [(4, 4), (4, 3)], wf)))
    emit("inline const C conv_full_r2 = %s;  // starts (1,1),(2,0) ends (5,5),(6,4)" % cpp(
        nonintersecting([(1, 1), (2, 0)], [(5, 5), (6, 4)], wf)))

    # Warnaar determinant
    q, p = mp.mpc("0.9", "0.15"), mp.mpc("0.2", "-0.1")
    A, B, Cc = mp.mpc("0.7", "0.3"), mp.mpc("1.1", "-0.2"), mp.mpc("0.6", "0.5")
    for X, name in (([mp.mpc("1.2", "0.1"), mp.mpc("0.8", "-0.3")], "r2"),
                    ([mp.mpc("1.2", "0.1"), mp.mpc("0.8", "-0.3"), mp.mpc("1.5", "0.4")], "r3")):
        lhs, rhs = warnaar(A, B, Cc, X, q, p)
        assert abs(lhs - rhs) < mp.mpf(10) ** (-30) * abs(rhs), name
        emit("inline const C warnaar_%s = %s;" % (name, cpp(lhs)))
    emit("// Warnaar params: A=0.7+0.3i B=1.1-0.2i C=0.6+0.5i q=0.9+0.15i p=0.2-0.1i,")
    emit("// X = 1.2+0.1i, 0.8-0.3i[, 1.5+0.4i]")

    # 10V9 and 12V11
    a, b, c, d = mp.mpc("0.8", "0.4"), mp.mpc("1.3", "0.2"), mp.mpc("0.7", "-0.5"), mp.mpc("1.6", "0.3")
    q, p = mp.mpc("0.9", "0.2"), mp.mpc("0.3", "0.1")
    m = 5
    e = a * a * q ** (1 + m) / (b * c * d)
    lhs = vwp(a, [b, c, d, e, q ** (-m)], m, q, p)
    rhs = qp_many([a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)], m, q, p) / qp_many(
        [a * q / b, a * q / c, a * q / d, a * q / (b * c * d)], m, q, p)
    assert abs(lhs - rhs) < mp.mpf(10) ** (-30) * abs(rhs)
    emit("// Series params: a=0.8+0.4i b=1.3+0.2i c=0.7-0.5i d=1.6+0.3i q=0.9+0.2i p=0.3+0.1i")
    emit("inline const C ft_sum_m5 = %s;" % cpp(rhs))
    ee, f = mp.mpc("1.1", "-0.3"), mp.mpc("0.6", "0.6")
    n = 4
    lam = a * a * q / (b * c * d)
    g = lam * a * q ** (n + 1) / (ee * f)
    lhs = vwp(a, [b, c, d, ee, f, g, q ** (-n)], n, q, p)
    pre = qp_many([a * q, a * q / (ee * f), lam * q / ee, lam * q / f], n, q, p) / qp_many(
        [a * q / ee, a * q / f, lam * q / (ee * f), lam * q], n, q, p)
    rhs = pre * vwp(lam, [lam * b / a, lam * c / a, lam * d / a, ee, f, g, q ** (-n)], n, q, p)
    assert abs(lhs - rhs) < mp.mpf(10) ** (-30) * abs(rhs)
    emit("inline const C ft_transform_n4 = %s;  // e=1.1-0.3i f=0.6+0.6i" % cpp(lhs))

    # multivariate
    for r in (1, 2, 3):
        mm = 3 if r < 3 else 4
        lhs = multi_sum_lhs(a, b, c, d, mm, r, q, p)
        rhs = multi_sum_rhs(a, b, c, d, mm, r, q, p)
        assert abs(lhs - rhs) < mp.mpf(10) ** (-30) * abs(rhs), ("sum", r)
        emit("inline const C multi_sum_r%d_m%d = %s;" % (r, mm, cpp(lhs)))
        lhs, rhs = multi_transform(a, b, c, d, ee, f, mm, r, q, p)
        assert abs(lhs - rhs) < mp.mpf(10) ** (-30) * abs(rhs), ("transform", r)
        emit("inline const C multi_transform_r%d_m%d = %s;" % (r, mm, cpp(lhs)))
        lhs, rhs = multi_transform(a, b, c, d, ee, f, mm, r, q, p, printed=True)
        print("transform r=%d, printed lower parameter: rel error %s" % (r, mp.nstr(abs(lhs - rhs) / abs(rhs), 3)))

    # Jackson at p = 0, exact rationals
    qj = Fraction(2, 3)
    lhs, rhs = jackson_exact(Fraction(3, 7), Fraction(5, 4), Fraction(-2, 9), Fraction(7, 5), 4, qj)
    assert lhs == rhs
    emit("// Jackson 8phi7 at q=2/3, a=3/7 b=5/4 c=-2/9 d=7/5 m=4, exact: %s" % rhs)
    emit("inline constexpr double jackson_m4 = %r;" % float(rhs))

    emit("")
    emit("}  // namespace oracle")

    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "unit" / "oracle_values.hpp"
    target.write_text("\n".join(out) + "\n")
    print("wrote", target)


if __name__ == "__main__":
    main()
