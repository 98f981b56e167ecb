"""Exact scalars and dense univariate polynomials.

Scalars are :class:`fractions.Fraction`; they are already kept in lowest
terms with a positive denominator, which is all the identity checks need.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "Poly",
    "as_rational",
    "format_rational",
    "parse_rational",
    "poly_derivative",
    "poly_integrate_01",
    "binomial_poly",
]

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected int or Fraction, got {type(x).__name__}")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when ``q == 1``."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    # Fraction() accepts floats like "0.5" and "1e3"; only p or p/q here
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


class Poly:
    """Immutable dense polynomial with Fraction coefficients, low degree first.

    ``var`` is a label only. Combining polynomials with different labels is
    a programming error and raises ``ValueError``.
    """

    __slots__ = ("coeffs", "var", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "a"):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var
        self._hash = None

    @classmethod
    def const(cls, c: Scalar, var: str = "a") -> "Poly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, var: str = "a") -> "Poly":
        return cls([0] * k + [c], var)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "Poly") -> "Poly":
        """Substitute ``other`` for the variable; result carries ``other.var``."""
        acc = Poly((), other.var)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def shift(self, h: Scalar) -> "Poly":
        """``p(var + h)``."""
        return self.compose(Poly((h, 1), self.var))

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise ValueError(f"cannot mix polynomial variables {self.var!r} and {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly((other,), self.var)
        return None

    def _var_with(self, other: "Poly") -> str:
        return self.var if not self.is_constant() or other.is_constant() else other.var

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly((self[k] + o[k] for k in range(n)), self._var_with(o))

    __radd__ = __add__

    def __neg__(self):
        return Poly((-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly((), self._var_with(o))
        if len(b) == 1:
            c = b[0]
            return Poly((x * c for x in a), self._var_with(o))
        if len(a) == 1:
            c = a[0]
            return Poly((x * c for x in b), self._var_with(o))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out, self._var_with(o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("polynomial division only by nonzero constants")
            other = other.coeffs[0]
        if isinstance(other, bool) or not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division by zero")
        inv = 1 / Fraction(other)
        return Poly((c * inv for c in self.coeffs), self.var)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly((1,), self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs) if len(self.coeffs) > 1 else hash(self.constant_term())
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str], var: str = "a") -> "Poly":
        return cls((parse_rational(s) for s in data), var)


def format_poly(p: Poly) -> str:
    """Human-readable form, highest degree first, e.g. ``3/2*a^2 - 3/2*a + 1/3``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            mono = p.var if k == 1 else f"{p.var}^{k}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_derivative(p: Poly) -> Poly:
    return Poly((k * c for k, c in enumerate(p.coeffs) if k), p.var)


def poly_integrate_01(p: Poly) -> Fraction:
    """Exact integral of ``p`` over ``[0, 1]``."""
    return sum((c / (k + 1) for k, c in enumerate(p.coeffs)), Fraction(0))


def binomial_poly(m: int, var: str = "t") -> Poly:
    """``binom(t, m) = t (t-1) ... (t-m+1) / m!`` as a polynomial in ``t``."""
    if m < 0:
        raise ValueError("m must be >= 0")
    p = Poly((1,), var)
    for j in range(m):
        p = p * Poly((-j, 1), var)
    return p / factorial(m)
