"""Main term of the expansion of multiple zeta functions at the origin.

For small nonzero ``eps`` the value ``zeta(eps_1, ..., eps_r)`` equals

    sum_d C^{(d)} prod_{d_j = 1} (eps_{j+1} + ... + eps_r) / (eps_j + ... + eps_r)

plus ``O(|eps_j|)``. Only that main term is computed here; it is not a
value of zeta. The regime condition ``|eps_k / (eps_j + ... + eps_r)| << 1``
is asymptotic and is not checked. The exact non-vanishing conditions are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import DomainError, ParameterError
from .exact import as_rational
from .index_sets import MAX_R, IndexFamily, coefficient_C, coefficient_C_eval

__all__ = ["EpsilonVector", "main_term", "main_term_hurwitz"]


@dataclass(frozen=True)
class EpsilonVector:
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        es = tuple(as_rational(e) for e in self.entries)
        object.__setattr__(self, "entries", es)
        r = len(es)
        if r == 0:
            raise ParameterError("need at least one epsilon")
        if r > MAX_R:
            raise ParameterError(f"depth {r} exceeds {MAX_R}")
        for j, e in enumerate(es, start=1):
            if e == 0:
                raise DomainError(f"ε_{j} = 0 (need ε_j ≠ 0)")
        for j in range(1, r + 1):
            if sum(es[j - 1:]) == 0:
                names = "+".join(f"ε_{k}" for k in range(j, r + 1))
                raise DomainError(f"{names} = 0 (need ε_j+⋯+ε_r ≠ 0)")

    @property
    def r(self) -> int:
        return len(self.entries)

    def tail(self, j: int) -> Fraction:
        """``eps_j + ... + eps_r`` (1-based ``j``; ``tail(r + 1) == 0``)."""
        return sum(self.entries[j - 1:], Fraction(0))

    def ratio_weight(self, d: Sequence[int]) -> Fraction:
        w = Fraction(1)
        for j, dj in enumerate(d, start=1):
            if dj:
                w *= self.tail(j + 1) / self.tail(j)
        return w


def _eps(eps) -> EpsilonVector:
    return eps if isinstance(eps, EpsilonVector) else EpsilonVector(tuple(eps))


def main_term(eps) -> Fraction:
    """Main term at the origin of the Euler-Zagier function (no error term)."""
    eps = _eps(eps)
    total = Fraction(0)
    for d in product((0, 1), repeat=eps.r - 1):
        total += coefficient_C(IndexFamily.D(*d)) * eps.ratio_weight(d)
    return total


def main_term_hurwitz(eps, a: Sequence) -> Fraction:
    """Main term at the origin of the Hurwitz variant with shifts ``a``."""
    eps = _eps(eps)
    a = tuple(as_rational(x) for x in a)
    if len(a) != eps.r:
        raise ParameterError(f"expected {eps.r} shifts, got {len(a)}")
    total = Fraction(0)
    for d in product((0, 1), repeat=eps.r - 1):
        total += coefficient_C_eval(IndexFamily.D(*d), a) * eps.ratio_weight(d)
    return total
