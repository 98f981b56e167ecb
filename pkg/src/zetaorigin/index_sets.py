"""Constrained composition sets and their Bernoulli-weighted sums.

Every family is a set of weak compositions ``(n_1, ..., n_r)`` with a fixed
total, cut out by inequalities on partial sums. Internally each inequality
is rewritten as a bound on the prefix sum ``P_j = n_1 + ... + n_j``
(a suffix bound ``n_{j+1} + ... + n_r <= c`` is ``P_j >= total - c``), and
the members are produced by backtracking over prefix sums.

Families:

``D``     ``S^{(d_1..d_{r-1})}``: ``d_j = 0`` means ``n_{j+1}+...+n_r <= r-j``,
          ``d_j = 1`` means ``n_1+...+n_j < j``.
``IKR``   ``S_{i,k,r}``.
``IKR0``  ``S^0_{i,k,r}`` (the ``j = k`` bound becomes an equality).
``BAR``   ``Sbar_{k,r}``, total ``r - 1``.
``SR``    ``S_r = S_{1,r,r}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .bernoulli import bernoulli_cache, bernoulli_number, bernoulli_polynomial
from .errors import ParameterError
from .exact import Poly, as_rational

__all__ = [
    "IndexFamily",
    "CompositionSet",
    "enumerate_family",
    "primitive",
    "coefficient_C",
    "coefficient_C_poly",
    "coefficient_C_eval",
    "coefficient_C_partial_poly",
    "MAX_R",
]

MAX_R = 10
TAGS = ("D", "IKR", "IKR0", "BAR", "SR")


@dataclass(frozen=True)
class IndexFamily:
    tag: str
    params: tuple

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ParameterError(f"unknown family tag {self.tag!r}")
        object.__setattr__(self, "params", tuple(self.params))
        p = self.params
        if self.tag == "D":
            if any(d not in (0, 1) for d in p):
                raise ParameterError(f"d-vector entries must be 0 or 1, got {p}")
        elif self.tag in ("IKR", "IKR0"):
            if len(p) != 3:
                raise ParameterError(f"{self.tag} takes (i, k, r), got {p}")
            i, k, r = p
            if not 1 <= i <= k <= r:
                raise ParameterError(f"{self.tag} needs 1 <= i <= k <= r, got {p}")
        elif self.tag == "BAR":
            if len(p) != 2:
                raise ParameterError(f"BAR takes (k, r), got {p}")
            k, r = p
            if not 1 <= k <= r:
                raise ParameterError(f"BAR needs 1 <= k <= r, got {p}")
        elif self.tag == "SR":
            if len(p) != 1 or p[0] < 1:
                raise ParameterError(f"SR takes (r,) with r >= 1, got {p}")
        if self.r > MAX_R:
            raise ParameterError(f"r = {self.r} exceeds enumeration limit {MAX_R}")

    @classmethod
    def D(cls, *d: int) -> "IndexFamily":
        return cls("D", d)

    @classmethod
    def IKR(cls, i: int, k: int, r: int) -> "IndexFamily":
        return cls("IKR", (i, k, r))

    @classmethod
    def IKR0(cls, i: int, k: int, r: int) -> "IndexFamily":
        return cls("IKR0", (i, k, r))

    @classmethod
    def BAR(cls, k: int, r: int) -> "IndexFamily":
        return cls("BAR", (k, r))

    @classmethod
    def SR(cls, r: int) -> "IndexFamily":
        return cls("SR", (r,))

    @property
    def r(self) -> int:
        if self.tag == "D":
            return len(self.params) + 1
        return self.params[-1]

    @property
    def total(self) -> int:
        return self.r - 1 if self.tag == "BAR" else self.r

    def prefix_bounds(self) -> list[tuple[int, int]]:
        """``(lo, hi)`` bounds on ``P_j`` for ``j = 1..r-1``."""
        r, total = self.r, self.total
        lo = [0] * r
        hi = [total] * r

        def at_most(j, v):
            hi[j] = min(hi[j], v)

        def at_least(j, v):
            lo[j] = max(lo[j], v)

        if self.tag == "D":
            for j, d in enumerate(self.params, start=1):
                if d == 0:
                    at_least(j, j)  # n_{j+1}+...+n_r <= r-j
                else:
                    at_most(j, j - 1)  # n_1+...+n_j < j
        elif self.tag in ("IKR", "IKR0", "SR"):
            i, k, _ = self.params if self.tag != "SR" else (1, r, r)
            for j in range(1, i):
                at_most(j, j - 1)
            for j in range(i, k):
                at_least(j, j)
            if k < r:
                if self.tag == "IKR0":
                    at_least(k, k)
                    at_most(k, k)  # n_{k+1}+...+n_r = r-k
                else:
                    at_least(k, k + 1)  # n_{k+1}+...+n_r <= r-k-1
            for j in range(k + 1, r):
                at_least(j, j + 1)
        elif self.tag == "BAR":
            k, _ = self.params
            for j in range(1, k):
                at_least(j, j)  # suffix <= r-j-1 with total r-1
            for j in range(k, r):
                at_least(j, j - 1)
        return [(lo[j], hi[j]) for j in range(1, r)]

    def to_json(self) -> dict:
        return {"tag": self.tag, "params": list(self.params)}


def primitive(i: int, r: int) -> IndexFamily:
    """``S^{(1,...,1,0,...,0)}`` with ``i-1`` ones, whose sum is ``C_{i,r}``."""
    if not 1 <= i <= r:
        raise ParameterError(f"primitive index needs 1 <= i <= r, got ({i}, {r})")
    return IndexFamily.D(*([1] * (i - 1) + [0] * (r - i)))


@dataclass(frozen=True)
class CompositionSet:
    family: IndexFamily | None
    members: tuple[tuple[int, ...], ...]
    r: int = field(default=0)

    def __post_init__(self):
        if not self.r and self.family is not None:
            object.__setattr__(self, "r", self.family.r)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item):
        return tuple(item) in set(self.members)

    @classmethod
    def of(cls, members: Iterable[Sequence[int]], r: int | None = None) -> "CompositionSet":
        """Ad hoc set (products, permutations) outside the named families."""
        ms = sorted(set(tuple(m) for m in members))
        if r is None:
            if not ms:
                raise ParameterError("cannot infer r of an empty set")
            r = len(ms[0])
        if any(len(m) != r for m in ms):
            raise ParameterError("members of differing length")
        return cls(None, tuple(ms), r)

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json() if self.family else None,
            "r": self.r,
            "members": [list(m) for m in self.members],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "CompositionSet":
        data = json.loads(text)
        fam = data.get("family")
        family = IndexFamily(fam["tag"], tuple(fam["params"])) if fam else None
        return cls(family, tuple(tuple(m) for m in data["members"]), data["r"])


_enum_cache: dict[IndexFamily, CompositionSet] = {}


def enumerate_family(family: IndexFamily) -> CompositionSet:
    """All members of ``family`` in lexicographic order."""
    cached = _enum_cache.get(family)
    if cached is not None:
        return cached
    r, total = family.r, family.total
    bounds = family.prefix_bounds() + [(total, total)]
    out: list[tuple[int, ...]] = []
    parts: list[int] = []

    def rec(j: int, prefix: int):
        if j == r:
            out.append(tuple(parts))
            return
        lo, hi = bounds[j]
        for s in range(max(lo, prefix), hi + 1):
            parts.append(s - prefix)
            rec(j + 1, s)
            parts.pop()

    rec(0, 0)
    result = CompositionSet(family, tuple(out))
    _enum_cache[family] = result
    return result


def _as_set(S) -> CompositionSet:
    if isinstance(S, IndexFamily):
        return enumerate_family(S)
    return S


_c_cache: dict = {}


def coefficient_C(S) -> Fraction:
    """``(-1)^r sum_{n in S} prod B_{n_j} / n_j!``; the empty set gives 0."""
    S = _as_set(S)
    key = (S.family, bernoulli_cache.version) if S.family is not None else None
    if key is not None and key in _c_cache:
        return _c_cache[key]
    weights: dict[int, Fraction] = {}

    def w(n):
        if n not in weights:
            weights[n] = bernoulli_number(n) / factorial(n)
        return weights[n]

    total = Fraction(0)
    for m in S.members:
        term = Fraction(1)
        for n in m:
            term *= w(n)
            if not term:
                break
        total += term
    result = total if S.r % 2 == 0 else -total
    if key is not None:
        _c_cache[key] = result
    return result


_poly_cache: dict = {}


def _bpoly_weight(n: int) -> Poly:
    return bernoulli_polynomial(n) / factorial(n)


def coefficient_C_poly(S) -> Poly:
    """Diagonal Hurwitz coefficient ``C(S)(a, ..., a)`` as a polynomial in ``a``."""
    S = _as_set(S)
    if S.family is not None and S.family in _poly_cache:
        return _poly_cache[S.family]
    # the product depends only on the multiset of parts
    counts: dict[tuple[int, ...], int] = {}
    for m in S.members:
        key = tuple(sorted(m))
        counts[key] = counts.get(key, 0) + 1
    total = Poly((), "a")
    for key, mult in counts.items():
        term = Poly((mult,), "a")
        for n in key:
            term = term * _bpoly_weight(n)
        total = total + term
    result = total if S.r % 2 == 0 else -total
    if S.family is not None:
        _poly_cache[S.family] = result
    return result


def coefficient_C_eval(S, a: Sequence) -> Fraction:
    """Multivariate ``C(S)(a_1, ..., a_r)`` at a rational point."""
    S = _as_set(S)
    a = tuple(as_rational(x) for x in a)
    if len(a) != S.r:
        raise ParameterError(f"expected {S.r} values of a, got {len(a)}")
    memo: dict[tuple[int, Fraction], Fraction] = {}

    def w(n, x):
        if (n, x) not in memo:
            memo[n, x] = bernoulli_polynomial(n)(x) / factorial(n)
        return memo[n, x]

    total = Fraction(0)
    for m in S.members:
        term = Fraction(1)
        for n, x in zip(m, a):
            term *= w(n, x)
            if not term:
                break
        total += term
    return total if S.r % 2 == 0 else -total


def coefficient_C_partial_poly(S, l: int, a_others: Sequence) -> Poly:
    """``C(S)`` as a polynomial in ``a_l`` (1-based) with the other slots fixed.

    ``a_others`` lists the remaining ``r - 1`` values in slot order.
    """
    S = _as_set(S)
    r = S.r
    if not 1 <= l <= r:
        raise ParameterError(f"slot l = {l} outside 1..{r}")
    a_others = tuple(as_rational(x) for x in a_others)
    if len(a_others) != r - 1:
        raise ParameterError(f"expected {r - 1} fixed values, got {len(a_others)}")
    fixed = a_others[: l - 1] + (None,) + a_others[l - 1:]
    memo: dict = {}

    def w(n, x):
        if (n, x) not in memo:
            memo[n, x] = bernoulli_polynomial(n)(x) / factorial(n)
        return memo[n, x]

    # group by the exponent in the free slot
    by_free: dict[int, Fraction] = {}
    for m in S.members:
        term = Fraction(1)
        for j, (n, x) in enumerate(zip(m, fixed)):
            if x is not None:
                term *= w(n, x)
                if not term:
                    break
        if term:
            nl = m[l - 1]
            by_free[nl] = by_free.get(nl, Fraction(0)) + term
    total = Poly((), "a")
    for nl, coeff in sorted(by_free.items()):
        total = total + _bpoly_weight(nl) * coeff
    return total if r % 2 == 0 else -total
