"""Exact asymptotic coefficients of multiple zeta functions at the origin.

Two independent routes to the same numbers: Bernoulli-weighted sums over
constrained compositions (:mod:`zetaorigin.index_sets`) and coefficients
of generalized Gregory generating series (:mod:`zetaorigin.gregory`).
"""

from .asymptotic import EpsilonVector, main_term, main_term_hurwitz
from .bernoulli import bernoulli_number, bernoulli_polynomial, stirling1_polynomial, stirling2_number
from .errors import DomainError, ParameterError
from .exact import Poly, binomial_poly, format_rational, parse_rational, poly_derivative, poly_integrate_01
from .gregory import (
    GregoryTable,
    classical_gregory,
    g1,
    generalized_gregory,
    generalized_gregory_poly,
    gregory_integral,
    gtilde,
    gtilde_poly,
    lambda_polys,
)
from .index_sets import (
    CompositionSet,
    IndexFamily,
    coefficient_C,
    coefficient_C_eval,
    coefficient_C_partial_poly,
    coefficient_C_poly,
    enumerate_family,
    primitive,
)
from .series import Series1, Series2, divide_exact_xy, reversion
from .verify import CheckReport, run_all, run_check

__version__ = "0.1.0"
