"""Truncated formal power series in one and two variables.

Coefficients live in an exact ring: ``Fraction`` or :class:`Poly`. Both
support ``+ - *`` with each other and with ints, so the series code is
written once against Python operators.

Bivariate series are truncated by *total* degree: ``Series2(order=N)``
knows ``c[m][n]`` for ``m + n <= N``. The linear change of variables
``(x, y) -> (x, x - y)`` used for exact division by ``x - y`` preserves
total degree, which keeps that division exact to the stated order.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .errors import DomainError
from .exact import Poly, as_rational

__all__ = [
    "Series1",
    "Series2",
    "divide_exact_xy",
    "exp_series",
    "exp_t",
    "log1p",
    "log_series",
    "reciprocal",
    "reciprocal2",
    "reversion",
    "reversion_lagrange",
]

MAX_ORDER = 128
ZERO = Fraction(0)
ONE = Fraction(1)


def _is_zero(c) -> bool:
    return c == 0


def unit_inverse(c):
    """Inverse of a ring element, which must be a nonzero rational constant."""
    if isinstance(c, Poly):
        if not c.is_constant() or c.is_zero():
            raise DomainError(f"not a unit in Q[{c.var}]: {c}")
        return ONE / c.coeffs[0]
    c = as_rational(c)
    if c == 0:
        raise DomainError("zero is not a unit")
    return ONE / c


def _check_order(order: int) -> int:
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a non-negative int, got {order!r}")
    if order > MAX_ORDER:
        raise ValueError(f"order {order} exceeds supported maximum {MAX_ORDER}")
    return order


class Series1:
    """``c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        _check_order(order)
        if len(cs) < order + 1:
            cs.extend([ZERO] * (order + 1 - len(cs)))
        self.coeffs = tuple(cs[: order + 1])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "Series1":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "Series1":
        return cls((ONE,), order)

    @classmethod
    def t(cls, order: int) -> "Series1":
        return cls((ZERO, ONE), order)

    def __getitem__(self, k: int):
        if 0 <= k <= self.order:
            return self.coeffs[k]
        raise IndexError(f"coefficient t^{k} beyond truncation order {self.order}")

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise ValueError("cannot raise truncation order")
        return Series1(self.coeffs[: order + 1], order)

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return k
        return self.order + 1

    def map(self, fn: Callable) -> "Series1":
        return Series1([fn(c) for c in self.coeffs], self.order)

    def __add__(self, other):
        if not isinstance(other, Series1):
            other = Series1((other,), self.order)
        n = min(self.order, other.order)
        return Series1([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series1([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if not isinstance(other, Series1):
            other = Series1((other,), self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series1):
            return Series1([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            x = a[i]
            if _is_zero(x):
                continue
            for j in range(n + 1 - i):
                y = b[j]
                if not _is_zero(y):
                    out[i + j] = out[i + j] + x * y
        return Series1(out, n)

    def __rmul__(self, other):
        return Series1([other * c for c in self.coeffs], self.order)

    def __truediv__(self, other):
        if isinstance(other, Series1):
            return self * reciprocal(other)
        inv = unit_inverse(other)
        return Series1([c * inv for c in self.coeffs], self.order)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Series1.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Series1):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    __hash__ = None

    def __repr__(self):
        return f"Series1({list(self.coeffs)!r}, order={self.order})"

    def derivative(self) -> "Series1":
        """Formal derivative; the order drops by one."""
        if self.order == 0:
            return Series1.zero(0)
        return Series1([k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1)

    def integral(self) -> "Series1":
        """Antiderivative with zero constant term; the order rises by one."""
        return Series1([ZERO] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.order + 1)

    def shift_down(self, k: int = 1) -> "Series1":
        """Divide by ``t^k``; the first ``k`` coefficients must vanish."""
        for j in range(k):
            if not _is_zero(self.coeffs[j]):
                raise DomainError(f"series not divisible by t^{k}: coefficient of t^{j} is {self.coeffs[j]}")
        return Series1(self.coeffs[k:], self.order - k)

    def shift_up(self, k: int = 1) -> "Series1":
        """Multiply by ``t^k``, keeping the order (top coefficients drop)."""
        return Series1([ZERO] * k + list(self.coeffs[: self.order + 1 - k]), self.order)

    def scale_arg(self, c) -> "Series1":
        """``s(c t)``."""
        out = []
        p = ONE
        for x in self.coeffs:
            out.append(x * p)
            p = p * c
        return Series1(out, self.order)

    def compose(self, inner: "Series1") -> "Series1":
        """``self(inner(t))``; ``inner`` must have zero constant term."""
        if not _is_zero(inner.coeffs[0]):
            raise DomainError("inner series of a composition must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = Series1.zero(n)
        for c in reversed(self.coeffs[: n + 1]):
            acc = acc * inner + c
        return acc


def reciprocal(s: Series1) -> Series1:
    """``1 / s``; the constant term must be a unit of the coefficient ring."""
    inv0 = unit_inverse(s.coeffs[0])
    n = s.order
    out = [ZERO] * (n + 1)
    out[0] = inv0
    for k in range(1, n + 1):
        acc = ZERO
        for j in range(1, k + 1):
            c = s.coeffs[j]
            if not _is_zero(c):
                acc = acc + c * out[k - j]
        out[k] = -(acc * inv0)
    return Series1(out, n)


def log1p(order: int) -> Series1:
    """``log(1 + t) = t - t^2/2 + t^3/3 - ...``"""
    _check_order(order)
    return Series1([ZERO] + [Fraction((-1) ** (k - 1), k) for k in range(1, order + 1)], order)


def exp_series(s: Series1) -> Series1:
    """``exp(s)`` for ``s`` with zero constant term."""
    if not _is_zero(s.coeffs[0]):
        raise DomainError("exp needs a series with zero constant term")
    n = s.order
    out = [ZERO] * (n + 1)
    out[0] = ONE
    for k in range(1, n + 1):
        acc = ZERO
        for j in range(1, k + 1):
            c = s.coeffs[j]
            if not _is_zero(c):
                acc = acc + (j * c) * out[k - j]
        out[k] = acc / k
    return Series1(out, n)


def exp_t(order: int, scale=ONE) -> Series1:
    """``exp(scale * t)`` with ``scale`` any ring element."""
    out = []
    p = ONE
    for k in range(order + 1):
        out.append(p / factorial(k))
        p = p * scale
    return Series1(out, order)


def log_series(s: Series1) -> Series1:
    """``log(s)`` for ``s`` with constant term 1."""
    if s.coeffs[0] != 1:
        raise DomainError("log needs a series with constant term 1")
    if s.order == 0:
        return Series1.zero(0)
    return (s.derivative() * reciprocal(s.truncate(s.order - 1))).integral()


def _check_reversible(s: Series1):
    if not _is_zero(s.coeffs[0]):
        raise DomainError("reversion needs zero constant term")
    if s.order < 1:
        raise DomainError("reversion needs order >= 1")
    return unit_inverse(s.coeffs[1])


def reversion(s: Series1) -> Series1:
    """Compositional inverse ``g`` with ``s(g(t)) = t`` by Newton iteration.

    Each step doubles the number of correct coefficients:
    ``g <- g - (s(g) - t) / s'(g)``.
    """
    inv1 = _check_reversible(s)
    n = s.order
    ds = s.derivative()
    g = Series1([ZERO, inv1], 1)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        g = Series1(g.coeffs, prec)
        sg = s.truncate(prec).compose(g)
        residual = sg - Series1.t(prec)
        dsg = Series1(ds.coeffs, prec).compose(g)
        g = g - residual * reciprocal(dsg)
    return Series1(g.coeffs, n)


def reversion_lagrange(s: Series1) -> Series1:
    """Compositional inverse by Lagrange inversion, term by term.

    ``[t^k] g = (1/k) [z^{k-1}] (z / s(z))^k``. Slower than :func:`reversion`;
    kept as an independent cross-check.
    """
    _check_reversible(s)
    n = s.order
    h = reciprocal(s.shift_down(1))  # z / s(z), order n - 1
    out = [ZERO] * (n + 1)
    power = Series1.one(h.order)
    for k in range(1, n + 1):
        power = power * h
        out[k] = power.coeffs[k - 1] / k
    return Series1(out, n)


class Series2:
    """Bivariate series ``sum c[m][n] x^m y^n`` truncated at total degree ``order``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence], order: int | None = None):
        if order is None:
            order = len(rows) - 1
        _check_order(order)
        out = []
        for m in range(order + 1):
            src = list(rows[m]) if m < len(rows) else []
            need = order - m + 1
            src = src[:need] + [ZERO] * max(0, need - len(src))
            out.append(tuple(src))
        self.rows = tuple(out)

    @property
    def order(self) -> int:
        return len(self.rows) - 1

    @classmethod
    def zero(cls, order: int) -> "Series2":
        return cls((), order)

    @classmethod
    def from_function(cls, fn: Callable[[int, int], object], order: int) -> "Series2":
        return cls([[fn(m, n) for n in range(order - m + 1)] for m in range(order + 1)], order)

    @classmethod
    def from_x(cls, s: Series1, order: int | None = None) -> "Series2":
        """Lift a series in ``t`` to one in ``x`` (no ``y`` dependence)."""
        order = s.order if order is None else order
        if order > s.order:
            raise ValueError("cannot raise truncation order")
        return cls([[s.coeffs[m]] for m in range(order + 1)], order)

    @classmethod
    def from_y(cls, s: Series1, order: int | None = None) -> "Series2":
        order = s.order if order is None else order
        if order > s.order:
            raise ValueError("cannot raise truncation order")
        return cls([list(s.coeffs[: order + 1])], order)

    @classmethod
    def x(cls, order: int) -> "Series2":
        return cls.from_x(Series1.t(order))

    @classmethod
    def y(cls, order: int) -> "Series2":
        return cls.from_y(Series1.t(order))

    def __getitem__(self, mn: tuple[int, int]):
        m, n = mn
        if m < 0 or n < 0 or m + n > self.order:
            raise IndexError(f"coefficient x^{m} y^{n} beyond truncation order {self.order}")
        return self.rows[m][n]

    def coeff(self, m: int, n: int):
        return self[m, n]

    def truncate(self, order: int) -> "Series2":
        if order > self.order:
            raise ValueError("cannot raise truncation order")
        return Series2(self.rows, order)

    def transpose(self) -> "Series2":
        """Swap ``x`` and ``y``."""
        return Series2.from_function(lambda m, n: self.rows[n][m], self.order)

    def map(self, fn: Callable) -> "Series2":
        return Series2([[fn(c) for c in row] for row in self.rows], self.order)

    def __add__(self, other):
        if not isinstance(other, Series2):
            other = Series2([[other]], self.order)
        n = min(self.order, other.order)
        return Series2.from_function(lambda i, j: self.rows[i][j] + other.rows[i][j], n)

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda c: -c)

    def __sub__(self, other):
        if not isinstance(other, Series2):
            other = Series2([[other]], self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series2):
            return self.map(lambda c: c * other)
        N = min(self.order, other.order)
        out = [[ZERO] * (N - m + 1) for m in range(N + 1)]
        A, B = self.rows, other.rows
        for i in range(N + 1):
            for j in range(N - i + 1):
                a = A[i][j]
                if _is_zero(a):
                    continue
                rest = N - i - j
                for k in range(rest + 1):
                    brow = B[k]
                    orow = out[i + k]
                    for l in range(rest - k + 1):
                        b = brow[l]
                        if not _is_zero(b):
                            orow[j + l] = orow[j + l] + a * b
        return Series2(out, N)

    def __rmul__(self, other):
        return self.map(lambda c: other * c)

    def __eq__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        N = min(self.order, other.order)
        return all(self.rows[m][n] == other.rows[m][n] for m in range(N + 1) for n in range(N - m + 1))

    __hash__ = None

    def __repr__(self):
        return f"Series2(order={self.order}, rows={[list(r) for r in self.rows]!r})"

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def shift_down_x(self) -> "Series2":
        """Divide by ``x``; the ``x^0`` row must vanish."""
        for n, c in enumerate(self.rows[0]):
            if not _is_zero(c):
                raise DomainError(f"series not divisible by x: coefficient of y^{n} is {c}")
        return Series2(self.rows[1:], self.order - 1)

    def shift_down_y(self) -> "Series2":
        return self.transpose().shift_down_x().transpose()

    def diagonal_substitution(self) -> "Series2":
        """Coefficient transform ``f(x, y) -> f(x, x - y)``; an involution."""
        N = self.order
        out = [[ZERO] * (N - m + 1) for m in range(N + 1)]
        for m in range(N + 1):
            for n in range(N - m + 1):
                c = self.rows[m][n]
                if _is_zero(c):
                    continue
                # x^m (x - y)^n = sum_k C(n,k) (-1)^k x^(m+n-k) y^k
                for k in range(n + 1):
                    term = c * (comb(n, k) * (-1) ** k)
                    out[m + n - k][k] = out[m + n - k][k] + term
        return Series2(out, N)

    def to_matrix(self, max_m: int, max_n: int) -> list[list]:
        if max_m + max_n > self.order:
            raise ValueError(f"{max_m}+{max_n} exceeds truncation order {self.order}")
        return [[self.rows[m][n] for n in range(max_n + 1)] for m in range(max_m + 1)]


def reciprocal2(s: Series2) -> Series2:
    """``1 / s`` for a bivariate series with unit constant term."""
    inv0 = unit_inverse(s.rows[0][0])
    N = s.order
    out = [[ZERO] * (N - m + 1) for m in range(N + 1)]
    out[0][0] = inv0
    nonzero = [(i, j, s.rows[i][j]) for i in range(N + 1) for j in range(N - i + 1)
               if (i or j) and not _is_zero(s.rows[i][j])]
    for d in range(1, N + 1):
        for m in range(d + 1):
            n = d - m
            acc = ZERO
            for i, j, c in nonzero:
                if i <= m and j <= n:
                    prev = out[m - i][n - j]
                    if not _is_zero(prev):
                        acc = acc + c * prev
            out[m][n] = -(acc * inv0)
    return Series2(out, N)


def _divide_by_x_minus_y(f: Series2, label: str) -> Series2:
    # with u = x, v = x - y: f(x, y) = F(u, v) and (x - y) | f  <=>  F(u, 0) == 0
    F = f.diagonal_substitution()
    for k in range(F.order + 1):
        c = F.rows[k][0]
        if not _is_zero(c):
            raise DomainError(
                f"{label} not divisible by (x - y): f(x, x) has nonzero coefficient {c} at x^{k}"
            )
    Q = Series2([row[1:] for row in F.rows[: F.order]], F.order - 1)
    return Q.diagonal_substitution()


def divide_exact_xy(num: Series2, den: Series2) -> Series2:
    """``num / den`` where both vanish on ``x = y``.

    Each side is divided by ``(x - y)`` exactly, then the reduced
    denominator (which must have a unit constant term) is inverted. The
    result has order one less than the inputs; ``result * den == num`` is
    re-checked before returning.
    """
    N = min(num.order, den.order)
    num, den = num.truncate(N), den.truncate(N)
    if N < 1:
        raise DomainError("divide_exact_xy needs order >= 1")
    num_r = _divide_by_x_minus_y(num, "numerator")
    den_r = _divide_by_x_minus_y(den, "denominator")
    if _is_zero(den_r.rows[0][0]):
        raise DomainError("denominator / (x - y) has zero constant term")
    q = num_r * reciprocal2(den_r)
    if not (q * den_r == num_r and q * den.truncate(N - 1) == num.truncate(N - 1)):
        raise AssertionError("exact division re-multiplication check failed")
    return q
