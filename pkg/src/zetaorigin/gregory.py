"""Gregory-type coefficient families.

All two-variable families come from one template: with ``ell(t)`` either
``log(1 + t)`` (numeric families) or ``-L(a, -t)`` (polynomial families,
``L(a, .)`` the compositional inverse of ``e^{-at}(e^t - 1)``),

    G(x, y)    = (y ell(x)^2 - x ell(y)^2) / (ell(x) - ell(y))
    G1(x, y)   = (y ell(x) - x ell(y)) / (ell(x) - ell(y))
    Gt(x, y)   = G1(x, y) * (ell(x)/x + ell(y)/y - 1)   # sum Gt_{m,n+1} x^m y^n

Each quotient vanishes to first order on ``x = y`` and goes through
:func:`divide_exact_xy`. The integral and sum-product formulas are
independent second routes, exposed through ``method=`` for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from .bernoulli import stirling1_polynomial
from .errors import ParameterError
from .exact import Poly, binomial_poly, poly_integrate_01
from .series import Series1, Series2, divide_exact_xy, exp_t, log1p, reciprocal, reversion

__all__ = [
    "GregoryTable",
    "classical_gregory",
    "generalized_gregory",
    "generalized_gregory_poly",
    "g1",
    "g1_integral",
    "gregory_integral",
    "gtilde",
    "gtilde_poly",
    "lambda_polys",
    "L_series",
    "ell_series",
    "gregory_series2",
    "g1_series2",
    "gtilde_series2",
]

FAMILIES = ("CLASSICAL", "G", "GTILDE", "G1", "GPOLY", "GTILDEPOLY", "LAMBDA")
MAX_TABLE = 24


@dataclass(frozen=True)
class GregoryTable:
    """Entries keyed by ``(m, n)``, or by ``n`` for one-index families."""

    family: str
    rows: tuple[int, ...]
    cols: tuple[int, ...] | None
    entries: dict

    def __getitem__(self, key):
        return self.entries[key]

    def get(self, m: int, n: int | None = None):
        return self.entries[m] if n is None else self.entries[m, n]

    @property
    def is_poly(self) -> bool:
        return self.family in ("GPOLY", "GTILDEPOLY", "LAMBDA")

    def matrix(self) -> list[list]:
        if self.cols is None:
            return [[self.entries[n]] for n in self.rows]
        return [[self.entries[m, n] for n in self.cols] for m in self.rows]

    def evaluate(self, a) -> "GregoryTable":
        """Specialize a polynomial table at ``a``."""
        if not self.is_poly:
            raise ParameterError(f"{self.family} table has no polynomial entries")
        fam = {"GPOLY": "G", "GTILDEPOLY": "GTILDE", "LAMBDA": "LAMBDA"}[self.family]
        return GregoryTable(fam, self.rows, self.cols, {k: Fraction(v(a)) for k, v in self.entries.items()})


def _check_bounds(*bounds: int, lo: int = 0):
    for b in bounds:
        if not isinstance(b, int) or b < lo:
            raise ParameterError(f"table bound must be an int >= {lo}, got {b!r}")
        if b > MAX_TABLE:
            raise ParameterError(f"table bound {b} exceeds {MAX_TABLE}")


def classical_gregory(N: int) -> list[Fraction]:
    """``G_0, ..., G_N`` from ``x / log(1 + x)``."""
    _check_bounds(N)
    return list(reciprocal(log1p(N + 1).shift_down()).coeffs)


@lru_cache(maxsize=None)
def L_series(order: int) -> Series1:
    """``L(a, t) = sum lambda_n(a) t^n``, inverse of ``e^{-at}(e^t - 1)``."""
    a = Poly((0, 1), "a")
    s = exp_t(order, -a) * (exp_t(order) - 1)
    return reversion(s)


def lambda_polys(N: int) -> list[Poly]:
    """``[lambda_1(a), ..., lambda_N(a)]``."""
    if N < 1:
        raise ParameterError("N must be >= 1")
    L = L_series(N)
    return [c if isinstance(c, Poly) else Poly((c,), "a") for c in L.coeffs[1:]]


@lru_cache(maxsize=None)
def ell_series(order: int, poly: bool = False) -> Series1:
    """``log(1 + t)``, or ``-L(a, -t)`` when ``poly``."""
    if not poly:
        return log1p(order)
    return -(L_series(order).scale_arg(-1))


def _lift(ell: Series1, order: int) -> tuple[Series2, Series2, Series2, Series2]:
    return (Series2.from_x(ell, order), Series2.from_y(ell, order), Series2.x(order), Series2.y(order))


@lru_cache(maxsize=None)
def gregory_series2(order: int, poly: bool = False) -> Series2:
    """``G(x, y)`` (or ``G(x, y; a)``) known through total degree ``order``."""
    D = order + 1
    lx, ly, x, y = _lift(ell_series(D, poly), D)
    return divide_exact_xy(y * lx * lx - x * ly * ly, lx - ly)


@lru_cache(maxsize=None)
def g1_series2(order: int, poly: bool = False) -> Series2:
    D = order + 1
    lx, ly, x, y = _lift(ell_series(D, poly), D)
    return divide_exact_xy(y * lx - x * ly, lx - ly)


@lru_cache(maxsize=None)
def gtilde_series2(order: int, poly: bool = False) -> Series2:
    """``sum_{m,n>=1} Gt_{m,n+1} x^m y^n`` through total degree ``order``."""
    ell = ell_series(order + 1, poly)
    over_t = ell.shift_down()  # ell(t)/t, order `order`
    factor = Series2.from_x(over_t) + Series2.from_y(over_t) - 1
    return g1_series2(order, poly) * factor


def _table(family: str, rows, cols, fn: Callable) -> GregoryTable:
    rows, cols = tuple(rows), tuple(cols)
    return GregoryTable(family, rows, cols, {(m, n): fn(m, n) for m in rows for n in cols})


def generalized_gregory(M: int, N: int) -> GregoryTable:
    """``G_{m,n}`` for ``0 <= m <= M``, ``0 <= n <= N``."""
    _check_bounds(M, N)
    G = gregory_series2(M + N)
    return _table("G", range(M + 1), range(N + 1), lambda m, n: G[m, n])


def generalized_gregory_poly(M: int, N: int) -> GregoryTable:
    """``G_{m,n}(a)``; at ``a = 1`` this is :func:`generalized_gregory`."""
    _check_bounds(M, N)
    G = gregory_series2(M + N, poly=True)
    return _table("GPOLY", range(M + 1), range(N + 1), lambda m, n: _as_poly(G[m, n]))


def _as_poly(c) -> Poly:
    return c if isinstance(c, Poly) else Poly((c,), "a")


def _gtilde_entries(M: int, N: int, poly: bool, method: str) -> dict:
    if method == "series":
        Gt = gtilde_series2(M + N, poly)
        G = gregory_series2(M + N, poly)
        out = {}
        for m in range(1, M + 1):
            for n in range(1, N + 1):
                out[m, n] = G[m, 1] if n == 1 else Gt[m, n - 1]
        return out
    if method == "sum_product":
        K = max(M, N)
        G = gregory_series2(2 * K, poly)
        out = {}
        for m in range(1, M + 1):
            for n in range(1, N + 1):
                acc = G[m, n]
                for j in range(m - 1):
                    acc = acc + G[n - 1, j + 2] * G[m - j - 1, 2]
                out[m, n] = acc
        return out
    raise ParameterError(f"unknown method {method!r}")


def gtilde(M: int, N: int, method: str = "series") -> GregoryTable:
    """``Gt_{m,n}`` for ``1 <= m <= M``, ``1 <= n <= N``.

    ``method="sum_product"`` uses ``G_{m,n} + sum_j G_{n-1,j+2} G_{m-j-1,2}``.
    """
    _check_bounds(M, N, lo=1)
    e = _gtilde_entries(M, N, False, method)
    return GregoryTable("GTILDE", tuple(range(1, M + 1)), tuple(range(1, N + 1)), e)


def gtilde_poly(M: int, N: int, method: str = "series") -> GregoryTable:
    _check_bounds(M, N, lo=1)
    e = {k: _as_poly(v) for k, v in _gtilde_entries(M, N, True, method).items()}
    return GregoryTable("GTILDEPOLY", tuple(range(1, M + 1)), tuple(range(1, N + 1)), e)


def _t_minus_one() -> Poly:
    return Poly((-1, 1), "t")


def gregory_integral(m: int, n: int) -> Fraction:
    """``G_{m,n} = 2 (-1)^{n-1} / n! * int_0^1 binom(t, m) [n; 2]_{t-1} dt`` (``m >= 1``, ``n >= 2``)."""
    if m < 1 or n < 2:
        raise ParameterError(f"integral formula needs m >= 1, n >= 2, got ({m}, {n})")
    integrand = binomial_poly(m, "t") * stirling1_polynomial(n, 2).compose(_t_minus_one())
    return 2 * (-1) ** (n - 1) * poly_integrate_01(integrand) / factorial(n)


def g1_integral(m: int, n: int) -> Fraction:
    """``G1_{m,n} = (-1)^n / n! * int_0^1 binom(t, m) [n; 1]_{t-1} dt`` (``m, n >= 1``)."""
    if m < 1 or n < 1:
        raise ParameterError(f"integral formula needs m, n >= 1, got ({m}, {n})")
    integrand = binomial_poly(m, "t") * stirling1_polynomial(n, 1).compose(_t_minus_one())
    return (-1) ** n * poly_integrate_01(integrand) / factorial(n)


def g1(M: int, N: int, method: str = "series") -> GregoryTable:
    """``G1_{m,n}``. The series route covers ``m, n >= 0``; the integral route ``m, n >= 1``."""
    _check_bounds(M, N, lo=1)
    if method == "series":
        S = g1_series2(M + N)
        return _table("G1", range(M + 1), range(N + 1), lambda m, n: S[m, n])
    if method == "integral":
        return _table("G1", range(1, M + 1), range(1, N + 1), g1_integral)
    raise ParameterError(f"unknown method {method!r}")
