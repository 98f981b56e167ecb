"""Exact identity checks.

Each registered check sweeps a parameter range and stops at the first
counterexample. Checks pair different routes (composition enumeration,
generating series, integrals, reversion) and never compare a route with
itself. There is no tolerance anywhere: every comparison is ``==`` on
Fractions or polynomials.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable, Iterator

from .bernoulli import stirling2_number
from .errors import ParameterError
from .exact import Poly, format_rational, poly_derivative
from .gregory import (
    classical_gregory,
    g1_integral,
    g1_series2,
    gregory_integral,
    gregory_series2,
    lambda_polys,
)
from .index_sets import (
    IndexFamily,
    coefficient_C,
    coefficient_C_eval,
    coefficient_C_partial_poly,
    coefficient_C_poly,
    enumerate_family,
    primitive,
)

__all__ = ["Bounds", "CheckReport", "PROFILES", "REGISTRY", "run_all", "run_check"]

ENUM_LIMIT = 8
ORDER_LIMIT = 16

# fixed anchors for the partial-derivative check, slot j uses DCADL_ANCHORS[j-1]
DCADL_ANCHORS = tuple(Fraction(p, q) for p, q in
                      [(2, 3), (-1, 5), (7, 4), (3, 7), (-5, 2), (1, 9), (11, 6), (-4, 3)])


@dataclass(frozen=True)
class Bounds:
    max_r: int = 8          # enumeration-backed numeric checks
    max_r_poly: int = 6     # Hurwitz polynomial checks
    max_r_dcadl: int = 5
    max_mn: int = 8         # integral formulas
    max_mn_stirling: int = 10
    max_n: int = 12         # one-index series checks
    order: int = 14         # G-tilde symmetry: m + n <= order

    def validate(self) -> "Bounds":
        for name in ("max_r", "max_r_poly", "max_r_dcadl"):
            v = getattr(self, name)
            if not 1 <= v <= ENUM_LIMIT:
                raise ParameterError(f"{name} = {v} outside 1..{ENUM_LIMIT}")
        for name in ("max_mn", "max_mn_stirling", "max_n", "order"):
            v = getattr(self, name)
            if not 2 <= v <= ORDER_LIMIT:
                raise ParameterError(f"{name} = {v} outside 2..{ORDER_LIMIT}")
        return self


PROFILES = {
    "quick": Bounds(max_r=6, max_r_poly=4, max_r_dcadl=4, max_mn=6,
                    max_mn_stirling=8, max_n=10, order=10),
    "full": Bounds(),
}


@dataclass
class CheckReport:
    check_id: str
    range: dict
    passed: bool
    counterexample: dict | None = None
    elapsed: float = 0.0
    description: str = ""

    def to_json(self) -> dict:
        return asdict(self)


def _fmt(v) -> str:
    return format_rational(v) if isinstance(v, (int, Fraction)) else str(v)


class _Mismatch(Exception):
    def __init__(self, params: dict, lhs, rhs):
        self.payload = {"params": params, "lhs": _fmt(lhs), "rhs": _fmt(rhs)}


def _expect(params: dict, lhs, rhs) -> None:
    if lhs != rhs:
        raise _Mismatch(params, lhs, rhs)


def _C(i: int, r: int) -> Fraction:
    return coefficient_C(primitive(i, r))


def _Ca(i: int, r: int) -> Poly:
    if r == 0:
        return Poly((1,), "a")
    return coefficient_C_poly(primitive(i, r))


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    fn: Callable[[Bounds], None]
    range_of: Callable[[Bounds], dict] = field(repr=False)


REGISTRY: dict[str, Check] = {}


def _register(check_id: str, description: str, range_of: Callable[[Bounds], dict]):
    def deco(fn):
        REGISTRY[check_id] = Check(check_id, description, fn, range_of)
        return fn
    return deco


def _r_range(b: Bounds) -> dict:
    return {"r": [1, b.max_r]}


@_register("INIT_C1R", "C_{1,r} = (-1)^r/(r+1)", _r_range)
def _init_c1r(b: Bounds):
    for r in range(1, b.max_r + 1):
        _expect({"r": r}, _C(1, r), Fraction((-1) ** r, r + 1))


@_register("DECOMP", "C^{(..,0,1,..)} = C^{(d_1..d_{l-1})} C^{(1,d_{l+2}..)}", _r_range)
def _decomp(b: Bounds):
    for r in range(3, b.max_r + 1):
        for d in product((0, 1), repeat=r - 1):
            for l in range(1, r - 1):
                if d[l - 1] != 0 or d[l] != 1:
                    continue
                lhs = coefficient_C(IndexFamily.D(*d))
                rhs = coefficient_C(IndexFamily.D(*d[: l - 1])) * coefficient_C(IndexFamily.D(*d[l:]))
                _expect({"r": r, "d": list(d), "l": l}, lhs, rhs)


@_register("SYM", "C_{i+1,r} = C_{r-i+1,r}, with the reversal bijection on S_{i+1,r,r}", _r_range)
def _sym(b: Bounds):
    for r in range(2, b.max_r + 1):
        for i in range(1, r):
            src = enumerate_family(IndexFamily.IKR(i + 1, r, r))
            dst = enumerate_family(IndexFamily.IKR(r - i + 1, r, r))
            image = sorted((m[0],) + tuple(reversed(m[1:])) for m in src)
            _expect({"r": r, "i": i, "what": "bijection"}, tuple(image), dst.members)
            _expect({"r": r, "i": i}, _C(i + 1, r), _C(r - i + 1, r))


@_register("UNION", "S_{i,k,r} = S_{i,k-1,r} + S0_{i,k-1,r}; C_{i,r} = C_{i,i,r} + sum C0_{i,k,r}", _r_range)
def _union(b: Bounds):
    for r in range(1, b.max_r + 1):
        for i in range(1, r + 1):
            for k in range(i + 1, r + 1):
                whole = set(enumerate_family(IndexFamily.IKR(i, k, r)))
                left = set(enumerate_family(IndexFamily.IKR(i, k - 1, r)))
                right = set(enumerate_family(IndexFamily.IKR0(i, k - 1, r)))
                params = {"r": r, "i": i, "k": k}
                _expect({**params, "what": "disjoint"}, len(left & right), 0)
                _expect({**params, "what": "union"}, sorted(left | right), sorted(whole))
            rhs = coefficient_C(IndexFamily.IKR(i, i, r)) + sum(
                (coefficient_C(IndexFamily.IKR0(i, k, r)) for k in range(i, r)), Fraction(0))
            _expect({"r": r, "i": i}, _C(i, r), rhs)


@_register("PROD", "C0_{i,k,r} = C_{i,k} C_{r-k,r-k}", _r_range)
def _prod(b: Bounds):
    for r in range(2, b.max_r + 1):
        for k in range(1, r):
            for i in range(1, k + 1):
                lhs = coefficient_C(IndexFamily.IKR0(i, k, r))
                _expect({"r": r, "i": i, "k": k}, lhs, _C(i, k) * _C(r - k, r - k))


def _recurrence_rhs(C, i: int, r: int):
    acc = C(i, r)
    for k in range(r - i + 1, r):
        acc = acc + C(r - i + 1, k) * C(r - k, r - k)
    for k in range(i, r):
        acc = acc - C(i, k) * C(r - k, r - k)
    return acc


@_register("REC", "recurrence for C_{i+1,r} from C_{i,r} and products", _r_range)
def _rec(b: Bounds):
    for r in range(2, b.max_r + 1):
        for i in range(1, r):
            _expect({"r": r, "i": i}, _C(i + 1, r), _recurrence_rhs(_C, i, r))


@_register("C_EQ_G", "C_{i,r} (enumeration) = G_{i,r-i+2} (generating series)", _r_range)
def _c_eq_g(b: Bounds):
    G = gregory_series2(b.max_r + 2)
    for r in range(1, b.max_r + 1):
        for i in range(1, r + 1):
            _expect({"r": r, "i": i}, _C(i, r), G[i, r - i + 2])


def _gtilde_from(G, m: int, n: int):
    acc = G[m, n]
    for j in range(m - 1):
        acc = acc + G[n - 1, j + 2] * G[m - j - 1, 2]
    return acc


@_register("GTILDE_SYM", "Gt_{m,n} = Gt_{n-1,m+1} (sum-product), numeric and polynomial",
           lambda b: {"m+n": [3, b.order], "poly m+n": [3, b.max_r_poly + 2]})
def _gtilde_sym(b: Bounds):
    for poly, top in ((False, b.order), (True, b.max_r_poly + 2)):
        G = gregory_series2(top + 2, poly)
        for s in range(3, top + 1):
            for m in range(1, s - 1):
                n = s - m
                _expect({"m": m, "n": n, "poly": poly}, _gtilde_from(G, m, n), _gtilde_from(G, n - 1, m + 1))


@_register("INT_G", "G_{m,n} = 2(-1)^{n-1}/n! int_0^1 binom(t,m) [n;2]_{t-1} dt",
           lambda b: {"m": [1, b.max_mn], "n": [2, b.max_mn]})
def _int_g(b: Bounds):
    G = gregory_series2(2 * b.max_mn)
    for m in range(1, b.max_mn + 1):
        for n in range(2, b.max_mn + 1):
            _expect({"m": m, "n": n}, gregory_integral(m, n), G[m, n])


@_register("INT_G1", "G1_{m,n} = (-1)^n/n! int_0^1 binom(t,m) [n;1]_{t-1} dt",
           lambda b: {"m": [1, b.max_mn], "n": [1, b.max_mn]})
def _int_g1(b: Bounds):
    S = g1_series2(2 * b.max_mn)
    for m in range(1, b.max_mn + 1):
        for n in range(1, b.max_mn + 1):
            _expect({"m": m, "n": n}, g1_integral(m, n), S[m, n])


@_register("ST2_ID", "sum k!S(m,k) l!S(n,l) G_{k,l} = 1 - m!n!/(m+n-1)!",
           lambda b: {"m": [2, b.max_mn_stirling], "n": [2, b.max_mn_stirling]})
def _st2_id(b: Bounds):
    K = b.max_mn_stirling
    G = gregory_series2(2 * K)
    for m in range(2, K + 1):
        for n in range(2, K + 1):
            lhs = sum((factorial(k) * stirling2_number(m, k) * factorial(l) * stirling2_number(n, l) * G[k, l]
                       for k in range(2, m + 1) for l in range(2, n + 1)), Fraction(0))
            rhs = 1 - Fraction(factorial(m) * factorial(n), factorial(m + n - 1))
            _expect({"m": m, "n": n}, lhs, rhs)


@_register("CONV_ID", "sum (-1)^{k+l} G_{k,l}/(m-k+n-l+1) = 1/(m+n-1) - 1/(mn)",
           lambda b: {"m": [2, b.max_mn_stirling], "n": [2, b.max_mn_stirling]})
def _conv_id(b: Bounds):
    K = b.max_mn_stirling
    G = gregory_series2(2 * K)
    for m in range(2, K + 1):
        for n in range(2, K + 1):
            lhs = sum((Fraction((-1) ** (k + l), m - k + n - l + 1) * G[k, l]
                       for k in range(2, m + 1) for l in range(2, n + 1)), Fraction(0))
            rhs = Fraction(1, m + n - 1) - Fraction(1, m * n)
            _expect({"m": m, "n": n}, lhs, rhs)


@_register("COR_G", "sum l!S(n,l) G_l = 1/(n+1); sum (-1)^l G_l/(n-l+1) = [n=0]; G_{2,n} = -G_n",
           lambda b: {"n": [0, b.max_n]})
def _cor_g(b: Bounds):
    g = classical_gregory(b.max_n)
    G = gregory_series2(b.max_n + 2)
    for n in range(b.max_n + 1):
        lhs1 = sum((factorial(l) * stirling2_number(n, l) * g[l] for l in range(n + 1)), Fraction(0))
        _expect({"n": n, "which": "stirling"}, lhs1, Fraction(1, n + 1))
        lhs2 = sum((Fraction((-1) ** l, n - l + 1) * g[l] for l in range(n + 1)), Fraction(0))
        _expect({"n": n, "which": "convolution"}, lhs2, Fraction(int(n == 0)))
        if n >= 1:
            _expect({"n": n, "which": "row 2"}, G[2, n], -g[n])


def _r_poly_range(b: Bounds) -> dict:
    return {"r": [1, b.max_r_poly]}


@_register("REC_A", "recurrence for C_{i+1,r}(a) as a polynomial identity", _r_poly_range)
def _rec_a(b: Bounds):
    for r in range(2, b.max_r_poly + 1):
        for i in range(1, r):
            _expect({"r": r, "i": i}, _Ca(i + 1, r), _recurrence_rhs(_Ca, i, r))


@_register("LAMBDA_REC", "lambda_n' = sum k lambda_{n-k} lambda_k; lambda_n(0) = (-1)^{n-1}/n; lambda_n(1) = 1/n",
           lambda b: {"n": [1, b.max_n]})
def _lambda_rec(b: Bounds):
    lam = [None] + lambda_polys(b.max_n)
    _expect({"n": 1}, lam[1], Poly((1,), "a"))
    for n in range(1, b.max_n + 1):
        rhs = Poly((), "a")
        for k in range(1, n):
            rhs = rhs + k * lam[n - k] * lam[k]
        _expect({"n": n, "which": "derivative"}, poly_derivative(lam[n]), rhs)
        _expect({"n": n, "which": "a=0"}, lam[n](0), Fraction((-1) ** (n - 1), n))
        _expect({"n": n, "which": "a=1"}, lam[n](1), Fraction(1, n))


def _c1_eval(args: tuple) -> Fraction:
    if not args:
        return Fraction(1)
    return coefficient_C_eval(IndexFamily.SR(len(args)), args)


@_register("DCADL", "d/da_l C_{1,r}(a_1..a_r) = -sum_{k>=l} C_{1,k-1}(..) C_{1,r-k}(..), and its diagonal form",
           lambda b: {"r": [1, b.max_r_dcadl], "anchors": [format_rational(x) for x in DCADL_ANCHORS]})
def _dcadl(b: Bounds):
    A = DCADL_ANCHORS
    for r in range(1, b.max_r_dcadl + 1):
        pt = A[:r]
        for l in range(1, r + 1):
            others = pt[: l - 1] + pt[l:]
            lhs = poly_derivative(coefficient_C_partial_poly(IndexFamily.SR(r), l, others))
            rhs = Poly((), "a")
            for k in range(l, r + 1):
                right = _c1_eval(pt[k:])
                if k == l:
                    left = Poly((_c1_eval(pt[: l - 1]),), "a")
                else:
                    prefix = pt[: k - 1]
                    left = coefficient_C_partial_poly(IndexFamily.SR(k - 1), l, prefix[: l - 1] + prefix[l:])
                rhs = rhs - left * right
            _expect({"r": r, "l": l}, lhs, rhs)
        diag = Poly((), "a")
        for k in range(1, r + 1):
            diag = diag - k * _Ca(1, r - k) * _Ca(1, k - 1)
        _expect({"r": r, "which": "diagonal"}, poly_derivative(_Ca(1, r)), diag)


@_register("INIT_A", "C_{1,r}(a) = G_{1,r+1}(a) = (-1)^r lambda_{r+1}(a)", _r_poly_range)
def _init_a(b: Bounds):
    G = gregory_series2(b.max_r_poly + 2, poly=True)
    lam = [None] + lambda_polys(b.max_r_poly + 1)
    for r in range(1, b.max_r_poly + 1):
        lhs = coefficient_C_poly(IndexFamily.SR(r))
        _expect({"r": r, "which": "series"}, lhs, G[1, r + 1])
        _expect({"r": r, "which": "lambda"}, lhs, (-1) ** r * lam[r + 1])


@_register("C_EQ_G_A", "C_{i,r}(a) (enumeration) = G_{i,r-i+2}(a) (generating series)", _r_poly_range)
def _c_eq_g_a(b: Bounds):
    G = gregory_series2(b.max_r_poly + 2, poly=True)
    for r in range(1, b.max_r_poly + 1):
        for i in range(1, r + 1):
            _expect({"r": r, "i": i}, _Ca(i, r), G[i, r - i + 2])


def run_check(check_id: str, bounds: Bounds | None = None) -> CheckReport:
    if check_id not in REGISTRY:
        raise ParameterError(f"unknown check {check_id!r}; known: {', '.join(REGISTRY)}")
    bounds = (bounds or PROFILES["full"]).validate()
    check = REGISTRY[check_id]
    start = time.perf_counter()
    counterexample = None
    try:
        check.fn(bounds)
    except _Mismatch as exc:
        counterexample = exc.payload
    elapsed = time.perf_counter() - start
    return CheckReport(check_id, check.range_of(bounds), counterexample is None,
                       counterexample, round(elapsed, 6), check.description)


def iter_all(profile: str = "quick") -> Iterator[CheckReport]:
    if profile not in PROFILES:
        raise ParameterError(f"unknown profile {profile!r}; use one of {sorted(PROFILES)}")
    for check_id in REGISTRY:
        yield run_check(check_id, PROFILES[profile])


def run_all(profile: str = "quick") -> list[CheckReport]:
    return list(iter_all(profile))
