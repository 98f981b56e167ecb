"""Bernoulli numbers/polynomials and Stirling numbers.

Convention: ``sum B_n x^n / n! = x e^x / (e^x - 1)``, so ``B_1 = +1/2``.
This is ``B_n(1)`` in the classical (``B_1 = -1/2``) convention, and
``B_n(0) = (-1)^n B_n``. Every caller in this package uses this
convention; nothing else computes Bernoulli numbers.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import Poly
from .series import Series1, exp_t, reciprocal

__all__ = [
    "BernoulliCache",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bernoulli_cache",
    "stirling1_polynomial",
    "stirling2_number",
]


def _expm1_over_t(order: int) -> Series1:
    # (e^t - 1) / t = sum t^k / (k+1)!
    return Series1([Fraction(1, factorial(k + 1)) for k in range(order + 1)], order)


class BernoulliCache:
    """Memo tables for ``B_n`` and ``B_n(a)``, grown on demand under a lock.

    ``version`` increments whenever the visible numbers change (growth does
    not count), so downstream memo tables keyed on it stay coherent with
    :meth:`perturbed`.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._numbers: tuple[Fraction, ...] = ()
        self._polys: tuple[Poly, ...] = ()
        self._overrides: dict[int, Fraction] = {}
        self.version = 0

    def _grow(self, n: int) -> None:
        with self._lock:
            if n < len(self._numbers):
                return
            order = max(n, 2 * len(self._numbers), 16)
            base = reciprocal(_expm1_over_t(order))  # t / (e^t - 1)
            nums = base * exp_t(order)
            polys = base * exp_t(order, Poly((0, 1), "a"))
            self._numbers = tuple(nums.coeffs[k] * factorial(k) for k in range(order + 1))
            self._polys = tuple(polys.coeffs[k] * factorial(k) for k in range(order + 1))

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be >= 0")
        if n in self._overrides:
            return self._overrides[n]
        self._grow(n)
        return self._numbers[n]

    def polynomial(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("n must be >= 0")
        self._grow(n)
        p = self._polys[n]
        return p if isinstance(p, Poly) else Poly((p,), "a")

    @contextmanager
    def perturbed(self, n: int, delta: Fraction):
        """Temporarily replace ``B_n`` by ``B_n + delta`` (mutation testing hook)."""
        original = self.number(n)
        with self._lock:
            self._overrides[n] = original + delta
            self.version += 1
        try:
            yield
        finally:
            with self._lock:
                del self._overrides[n]
                self.version += 1


bernoulli_cache = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    return bernoulli_cache.number(n)


def bernoulli_polynomial(n: int) -> Poly:
    """``B_n(a)``, defined by ``x e^{ax} / (e^x - 1)``; monic of degree ``n``."""
    return bernoulli_cache.polynomial(n)


@lru_cache(maxsize=None)
def stirling1_polynomial(n: int, m: int) -> Poly:
    """Coefficient of ``y^m`` in ``(x+y)(x+y+1)...(x+y+n-1)``, a polynomial in ``x``."""
    if n < 0 or m < 0:
        raise ValueError("n, m must be >= 0")
    if m > n:
        return Poly((), "x")
    if n == 0:
        return Poly((1,), "x")
    prev = stirling1_polynomial(n - 1, m - 1) if m >= 1 else Poly((), "x")
    return prev + Poly((n - 1, 1), "x") * stirling1_polynomial(n - 1, m)


@lru_cache(maxsize=None)
def stirling2_number(n: int, m: int) -> int:
    if n < 0 or m < 0:
        raise ValueError("n, m must be >= 0")
    if n == 0 or m == 0:
        return 1 if n == m else 0
    return stirling2_number(n - 1, m - 1) + m * stirling2_number(n - 1, m)
