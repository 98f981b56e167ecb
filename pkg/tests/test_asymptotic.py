from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from zetaorigin.asymptotic import EpsilonVector, main_term, main_term_hurwitz
from zetaorigin.errors import DomainError, ParameterError
from zetaorigin.index_sets import IndexFamily, coefficient_C_eval

from oracles import q

nonzero = st.fractions(min_value=-9, max_value=9, max_denominator=11).filter(bool)


def valid(eps):
    return all(eps) and all(sum(eps[j:]) for j in range(len(eps)))


def displayed_r2(e1, e2):
    return q("1/3") + q("1/12") * e2 / (e1 + e2)


def displayed_r3(e1, e2, e3):
    t = e1 + e2 + e3
    return (q("-1/4") - q("1/24") * e3 / (e2 + e3)
            - q("1/24") * (e2 + e3) / t - q("1/24") * e3 / t)


def test_examples():
    assert main_term((1, 1)) == q("3/8")
    assert main_term((5,)) == q("-1/2")
    assert main_term((1, 1, 1)) == displayed_r3(1, 1, 1) == q("-5/16")


@settings(max_examples=60, deadline=None)
@given(nonzero, nonzero)
def test_r2_matches_displayed_formula(e1, e2):
    assume(valid((e1, e2)))
    assert main_term((e1, e2)) == displayed_r2(e1, e2)


@settings(max_examples=60, deadline=None)
@given(nonzero, nonzero, nonzero)
def test_r3_matches_displayed_formula(e1, e2, e3):
    assume(valid((e1, e2, e3)))
    assert main_term((e1, e2, e3)) == displayed_r3(e1, e2, e3)


@settings(max_examples=40, deadline=None)
@given(st.lists(nonzero, min_size=1, max_size=5), nonzero)
def test_scale_invariance(eps, lam):
    assume(valid(eps))
    assert main_term([lam * e for e in eps]) == main_term(eps)


@pytest.mark.parametrize("r", range(1, 7))
def test_equal_entries_use_fixed_ratios(r):
    from zetaorigin.index_sets import coefficient_C
    expected = Fraction(0)
    for d in product((0, 1), repeat=r - 1):
        w = Fraction(1)
        for j, dj in enumerate(d, start=1):
            if dj:
                w *= Fraction(r - j, r - j + 1)
        expected += coefficient_C(IndexFamily.D(*d)) * w
    assert main_term((Fraction(3, 7),) * r) == expected


@pytest.mark.parametrize("eps", [(1,), (2, 3), (1, -3, 5), (q("1/2"), 2, -1, 4), (1, 1, 1, 1, 1, 1)])
def test_hurwitz_at_one_is_main_term(eps):
    assert main_term_hurwitz(eps, (1,) * len(eps)) == main_term(eps)


def test_hurwitz_examples():
    assert main_term_hurwitz((7,), (0,)) == q("1/2")
    half = (q("1/2"), q("1/2"))
    expected = (coefficient_C_eval(IndexFamily.D(0), half)
                + coefficient_C_eval(IndexFamily.D(1), half) * q("1/2"))
    assert main_term_hurwitz((1, 1), half) == expected
    with pytest.raises(ParameterError):
        main_term_hurwitz((1, 1), (1,))


def test_domain_errors_name_the_hypothesis():
    with pytest.raises(DomainError, match="ε_1\\+ε_2 = 0"):
        main_term((1, -1))
    with pytest.raises(DomainError, match="ε_2 = 0"):
        main_term((1, 0, 1))
    with pytest.raises(DomainError, match="ε_2\\+ε_3 = 0"):
        main_term((5, 2, -2))


def test_parameter_errors():
    with pytest.raises(ParameterError):
        EpsilonVector(())
    with pytest.raises(ParameterError):
        EpsilonVector((1,) * 11)


def test_tail_and_weight():
    v = EpsilonVector((1, 2, 3))
    assert v.tail(1) == 6 and v.tail(3) == 3 and v.tail(4) == 0
    assert v.ratio_weight((1, 1)) == Fraction(5, 6) * Fraction(3, 5)
