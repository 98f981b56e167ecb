from fractions import Fraction
from math import factorial

import pytest

from zetaorigin.bernoulli import (
    bernoulli_cache,
    bernoulli_number,
    bernoulli_polynomial,
    stirling1_polynomial,
    stirling2_number,
)
from zetaorigin.exact import Poly
from zetaorigin.series import Series1, exp_series, exp_t, log1p, log_series

from oracles import bernoulli_plus, bernoulli_poly_oracle, poly, rising_bivariate, set_partitions_count

N = 30


def test_bernoulli_examples():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    # C_{2,2} = B_0 B_2 / 2!
    assert bernoulli_number(0) * bernoulli_number(2) / 2 == Fraction(1, 12)


def test_bernoulli_against_recurrence():
    assert [bernoulli_number(n) for n in range(N + 1)] == bernoulli_plus(N)


def test_odd_bernoulli_vanish():
    assert all(bernoulli_number(2 * k + 1) == 0 for k in range(1, N // 2))


def test_bernoulli_polynomial_examples():
    assert bernoulli_polynomial(0) == poly([1])
    assert bernoulli_polynomial(1) == poly(["-1/2", 1])
    assert bernoulli_polynomial(2)(1) == Fraction(1, 6)


@pytest.mark.parametrize("n", range(0, 20))
def test_bernoulli_polynomial_properties(n):
    p = bernoulli_polynomial(n)
    assert p == bernoulli_poly_oracle(n)
    assert p.degree == n and p.leading() == 1
    assert p(1) == bernoulli_number(n)
    assert p(0) == (-1) ** n * bernoulli_number(n)


def test_cache_grows_beyond_initial_bound():
    assert bernoulli_number(40) == bernoulli_plus(40)[40]


def test_perturbation_is_scoped():
    b2 = bernoulli_number(2)
    with bernoulli_cache.perturbed(2, Fraction(1, 10**6)):
        assert bernoulli_number(2) == b2 + Fraction(1, 10**6)
    assert bernoulli_number(2) == b2


def test_stirling1_examples():
    assert stirling1_polynomial(2, 1) == poly([1, 2], "x")
    assert stirling1_polynomial(4, 2) == poly([11, 18, 6], "x")
    assert stirling1_polynomial(0, 0) == poly([1], "x")
    assert stirling1_polynomial(2, 3).is_zero()


@pytest.mark.parametrize("n", range(0, 9))
def test_stirling1_against_expansion(n):
    full = rising_bivariate(n)
    for m in range(n + 1):
        expected = Poly([full.get((i, m), 0) for i in range(n + 1)], "x")
        assert stirling1_polynomial(n, m) == expected


def test_stirling1_recursion():
    x = poly([0, 1], "x")
    for n in range(10):
        for m in range(1, n + 2):
            lhs = stirling1_polynomial(n + 1, m)
            assert lhs == stirling1_polynomial(n, m - 1) + (x + n) * stirling1_polynomial(n, m)


def test_stirling1_generating_series():
    # (1-t)^{-x} (-1)^m log^m(1-t) / m!  with x symbolic
    order = 10
    x = Poly((0, 1), "x")
    log1mt = log1p(order).scale_arg(-1)
    base = exp_series(log1mt * (-x))
    for m in range(order + 1):
        s = base * (log1mt ** m) * Fraction((-1) ** m, factorial(m))
        for n in range(order + 1):
            assert s[n] * factorial(n) == stirling1_polynomial(n, m)


def test_stirling2_examples():
    assert stirling2_number(0, 0) == 1
    assert stirling2_number(3, 2) == 3
    assert stirling2_number(4, 2) == 7
    assert stirling2_number(3, 0) == 0 and stirling2_number(0, 3) == 0


@pytest.mark.parametrize("n", range(0, 8))
def test_stirling2_counts_partitions(n):
    for m in range(n + 1):
        assert stirling2_number(n, m) == set_partitions_count(n, m)


def test_stirling2_generating_series():
    order = 12
    em1 = exp_t(order) - 1
    for m in range(order + 1):
        s = em1 ** m / factorial(m)
        for n in range(order + 1):
            assert s[n] * factorial(n) == stirling2_number(n, m)


def test_log_series_inverts_exp():
    s = Series1([0, 1, Fraction(1, 3), -2], 8)
    assert log_series(exp_series(s)) == s
