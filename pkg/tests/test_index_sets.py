from itertools import permutations, product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaorigin.errors import ParameterError
from zetaorigin.exact import Poly
from zetaorigin.index_sets import (
    CompositionSet,
    IndexFamily,
    coefficient_C,
    coefficient_C_eval,
    coefficient_C_partial_poly,
    coefficient_C_poly,
    enumerate_family,
    primitive,
)

from oracles import brute_BAR, brute_C, brute_D, brute_IKR, poly, q

D = IndexFamily.D


def members(family):
    return list(enumerate_family(family).members)


@pytest.mark.parametrize("r", range(1, 7))
def test_D_matches_brute_force(r):
    for d in product((0, 1), repeat=r - 1):
        assert members(D(*d)) == brute_D(d)


@pytest.mark.parametrize("r", range(1, 7))
def test_IKR_matches_brute_force(r):
    for i in range(1, r + 1):
        for k in range(i, r + 1):
            assert members(IndexFamily.IKR(i, k, r)) == brute_IKR(i, k, r)
            assert members(IndexFamily.IKR0(i, k, r)) == brute_IKR(i, k, r, zero=True)


@pytest.mark.parametrize("r", range(1, 7))
def test_BAR_matches_brute_force(r):
    for k in range(1, r + 1):
        assert members(IndexFamily.BAR(k, r)) == brute_BAR(k, r)


def test_SR_is_IKR_1rr():
    for r in range(1, 7):
        assert members(IndexFamily.SR(r)) == members(IndexFamily.IKR(1, r, r))


def test_enumeration_examples():
    assert members(D(1)) == [(0, 2)]
    assert sorted(members(D(0))) == [(1, 1), (2, 0)]
    assert members(IndexFamily.SR(1)) == [(1,)]
    assert members(D()) == [(1,)]
    assert members(IndexFamily.IKR0(1, 1, 2)) == [(1, 1)]


def test_members_are_lexicographic_and_distinct():
    for d in product((0, 1), repeat=5):
        ms = members(D(*d))
        assert ms == sorted(set(ms))


@pytest.mark.parametrize("r", range(1, 9))
def test_d_vectors_partition_all_compositions(r):
    total = sum(len(enumerate_family(D(*d))) for d in product((0, 1), repeat=r - 1))
    assert total == comb(2 * r - 1, r - 1)


@pytest.mark.parametrize("r", range(2, 9))
def test_disjoint_union(r):
    for i in range(1, r + 1):
        for k in range(i + 1, r + 1):
            whole = set(members(IndexFamily.IKR(i, k, r)))
            a = set(members(IndexFamily.IKR(i, k - 1, r)))
            b = set(members(IndexFamily.IKR0(i, k - 1, r)))
            assert not a & b
            assert whole == a | b


@pytest.mark.parametrize("r", range(2, 9))
def test_reversal_bijection(r):
    for i in range(1, r):
        src = members(IndexFamily.IKR(i + 1, r, r))
        dst = members(IndexFamily.IKR(r - i + 1, r, r))
        image = sorted((m[0],) + tuple(reversed(m[1:])) for m in src)
        assert image == dst


def test_C_examples():
    assert coefficient_C(D()) == q("-1/2")
    assert coefficient_C(D(1)) == q("1/12")
    assert coefficient_C(D(1, 0, 0, 0, 0, 0)) == q("-275/24192")
    assert coefficient_C(CompositionSet.of([], r=3)) == 0


@pytest.mark.parametrize("r", range(1, 7))
def test_C_matches_brute_sum(r):
    for i in range(1, r + 1):
        fam = primitive(i, r)
        assert coefficient_C(fam) == brute_C(brute_D(fam.params), r)


def test_C_poly_examples():
    assert coefficient_C_poly(D()) == poly(["1/2", -1])
    assert coefficient_C_poly(D(1)) == poly(["1/12", "-1/2", "1/2"])
    assert coefficient_C_poly(IndexFamily.SR(3)) == poly(["1/4", "-11/6", 4, "-8/3"])


def test_C_poly_at_one_is_C():
    fams = [D(*d) for r in range(1, 6) for d in product((0, 1), repeat=r - 1)]
    fams += [IndexFamily.IKR(i, k, 5) for i in range(1, 6) for k in range(i, 6)]
    fams += [IndexFamily.BAR(k, 4) for k in range(1, 5)]
    for f in fams:
        assert coefficient_C_poly(f)(1) == coefficient_C(f)
        assert coefficient_C_poly(f).degree <= f.r


def test_C_eval_examples():
    assert coefficient_C_eval(D(1), (1, 1)) == q("1/12")
    assert coefficient_C_eval(D(), (0,)) == q("1/2")
    assert coefficient_C_eval(D(1), (q("1/2"), q("1/2"))) == q("-1/24")
    with pytest.raises(ParameterError):
        coefficient_C_eval(D(1), (1,))


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=7)


@settings(max_examples=25, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=3), st.integers(1, 3))
def test_partial_poly_agrees_with_eval(a, l):
    fam = IndexFamily.IKR(1, 2, 3)
    others = a[: l - 1] + a[l:]
    p = coefficient_C_partial_poly(fam, l, others)
    assert p(a[l - 1]) == coefficient_C_eval(fam, a)


@settings(max_examples=25, deadline=None)
@given(rationals)
def test_diagonal_eval_is_poly(x):
    fam = D(0, 1, 0)
    assert coefficient_C_eval(fam, (x,) * 4) == coefficient_C_poly(fam)(x)


def test_partial_poly_examples():
    assert coefficient_C_partial_poly(D(), 1, ()) == coefficient_C_poly(D())
    assert coefficient_C_partial_poly(IndexFamily.IKR(1, 2, 2), 1, (0,)).degree == 2
    assert isinstance(coefficient_C_partial_poly(D(0), 2, (1,)), Poly)
    with pytest.raises(ParameterError):
        coefficient_C_partial_poly(D(0), 3, (1,))
    with pytest.raises(ParameterError):
        coefficient_C_partial_poly(D(0), 1, (1, 2))


def test_permutation_invariance():
    base = members(D(0, 1, 0))
    c = coefficient_C(D(0, 1, 0))
    for perm in permutations(range(4)):
        assert coefficient_C(CompositionSet.of([tuple(m[p] for p in perm) for m in base])) == c


def test_product_rule():
    cases = [(D(1), D(0, 1)), (D(), D(0)), (IndexFamily.IKR(1, 2, 3), D(1, 1))]
    for f1, f2 in cases:
        prod = CompositionSet.of([m1 + m2 for m1 in members(f1) for m2 in members(f2)])
        assert coefficient_C(prod) == coefficient_C(f1) * coefficient_C(f2)


@pytest.mark.parametrize("tag,params", [
    ("IKR", (2, 1, 3)), ("IKR", (1, 4, 3)), ("IKR0", (0, 1, 2)), ("BAR", (3, 2)),
    ("SR", (0,)), ("D", (2,)), ("XYZ", ()), ("IKR", (1, 2)),
])
def test_invalid_families(tag, params):
    with pytest.raises(ParameterError):
        IndexFamily(tag, params)


def test_depth_limit_and_primitive_range():
    with pytest.raises(ParameterError):
        IndexFamily.SR(11)
    with pytest.raises(ParameterError):
        primitive(3, 2)


def test_json_round_trip():
    for fam in (D(1, 0), IndexFamily.IKR0(1, 2, 4), IndexFamily.BAR(2, 3)):
        S = enumerate_family(fam)
        back = CompositionSet.loads(S.dumps())
        assert back == S
        assert coefficient_C(back) == coefficient_C(fam)
    adhoc = CompositionSet.of([(1, 0), (0, 1)])
    assert CompositionSet.loads(adhoc.dumps()) == adhoc
