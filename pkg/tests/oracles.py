"""Brute-force reference implementations, independent of the package code paths."""

from fractions import Fraction
from itertools import product
from math import comb, factorial

from zetaorigin.exact import Poly, parse_rational


def q(s):
    return parse_rational(s) if isinstance(s, str) else Fraction(s)


def poly(coeffs, var="a"):
    return Poly([q(c) for c in coeffs], var)


def bernoulli_minus(N):
    """B_0..B_N with B_1 = -1/2, from sum_{k<=n} C(n+1,k) B_k = 0."""
    B = []
    for n in range(N + 1):
        if n == 0:
            B.append(Fraction(1))
            continue
        s = sum(comb(n + 1, k) * B[k] for k in range(n))
        B.append(-s / (n + 1))
    return B


def bernoulli_plus(N):
    """B_n with B_1 = +1/2: B_n = (-1)^n B_n^-."""
    return [(-1) ** n * b for n, b in enumerate(bernoulli_minus(N))]


def bernoulli_poly_oracle(n):
    """B_n(a) = sum_k C(n,k) B_k^- a^{n-k}."""
    Bm = bernoulli_minus(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] += comb(n, k) * Bm[k]
    return Poly(coeffs, "a")


def weak_compositions(total, r):
    return [c for c in product(range(total + 1), repeat=r) if sum(c) == total]


def suffix(c, j):
    """n_{j+1} + ... + n_r (1-based j)."""
    return sum(c[j:])


def prefix(c, j):
    return sum(c[:j])


def brute_D(d):
    """S^{(d)} straight from the defining inequalities."""
    r = len(d) + 1
    out = []
    for c in weak_compositions(r, r):
        ok = True
        for j, dj in enumerate(d, start=1):
            if dj == 0 and not suffix(c, j) <= r - j:
                ok = False
            if dj == 1 and not prefix(c, j) < j:
                ok = False
        if ok:
            out.append(c)
    return sorted(out)


def brute_IKR(i, k, r, zero=False):
    out = []
    for c in weak_compositions(r, r):
        ok = all(prefix(c, j) < j for j in range(1, i))
        ok = ok and all(suffix(c, j) <= r - j for j in range(i, k))
        if k < r:
            if zero:
                ok = ok and suffix(c, k) == r - k
            else:
                ok = ok and suffix(c, k) <= r - k - 1
        ok = ok and all(suffix(c, j) <= r - j - 1 for j in range(k + 1, r))
        if ok:
            out.append(c)
    return sorted(out)


def brute_BAR(k, r):
    out = []
    for c in weak_compositions(r - 1, r):
        ok = all(suffix(c, j) <= r - j - 1 for j in range(1, k))
        ok = ok and all(suffix(c, j) <= r - j for j in range(k, r))
        if ok:
            out.append(c)
    return sorted(out)


def brute_C(members, r):
    B = bernoulli_plus(2 * r + 2)
    total = Fraction(0)
    for c in members:
        term = Fraction(1)
        for n in c:
            term *= B[n] / factorial(n)
        total += term
    return (-1) ** r * total


def rising_bivariate(n):
    """(x+y)(x+y+1)...(x+y+n-1) as dict {(deg_x, deg_y): coeff}."""
    p = {(0, 0): 1}
    for k in range(n):
        nxt = {}
        for (i, j), c in p.items():
            for (di, dj, f) in ((1, 0, 1), (0, 1, 1), (0, 0, k)):
                if f:
                    key = (i + di, j + dj)
                    nxt[key] = nxt.get(key, 0) + c * f
        p = nxt
    return p


def set_partitions_count(n, m):
    """Count restricted growth strings of length n with exactly m blocks."""
    if n == 0:
        return 1 if m == 0 else 0
    count = 0

    def rec(pos, mx):
        nonlocal count
        if pos == n:
            count += mx == m
            return
        for v in range(mx + 1):
            rec(pos + 1, max(mx, v + 1))

    rec(0, 0)
    return count
