"""Bernstein and q-Bernstein-type polynomial toolkit.

Five areas of functionality:

* q-arithmetic: q-integers [x:q], Gaussian binomials, generalized binomial
  coefficients with complex upper argument (``qnum``).
* Classical special sequences with dual implementations (fast recurrence and
  exact generating-function coefficient extraction): second-kind Stirling
  numbers, higher-order Bernoulli polynomials, Hermite polynomials
  (``special``).
* The classical Bernstein basis and operator, with derivative/recursion
  identities, the beta-density connection and binomial-moment formulas
  (``bernstein``).
* The q-Bernstein-type family Y(n, k; x; q) = C(n,k) [x]^k [1-x]^(n-k): its
  generating function in closed and series form, alternative sum
  representations, operators (including the Phillips q-Bernstein operator),
  and identity checks against Bernoulli/Stirling/Hermite expansions
  (``qbernstein``).
* The interpolation function S(z, k; x) = (-1)^k/k! [x]^k [1-x]^(-z), whose
  values at negative integers recover the Y polynomials (``interp``).

``verify`` sweeps every documented invariant and streams structured reports;
the ``qbern`` command line exposes evaluation, tabulation, verification and
approximation-error experiments.
"""

from .bernstein import (
    basis,
    basis_derivative,
    basis_recursive,
    beta_density,
    binomial_moment,
    binomial_pmf,
    operator,
    operator_as_expectation,
)
from .errors import DomainError, SingularityError, TruncationError
from .interp import (
    InterpPoint,
    derivative_at_negative_integers,
    negative_integer_value_check,
    s_derivative,
    s_q_closed,
    s_q_series,
)
from .qbernstein import (
    GenFunPoint,
    bernoulli_stirling_identity_check,
    gen_fun,
    gen_fun_series,
    hermite_sum,
    phillips_operator,
    q_operator,
    vanishing_sum_check,
    y_derivative_q1,
    y_from_genfun,
    y_or_zero,
    y_poly,
    y_poly_sumform,
    y_triple_sum,
)
from .qnum import gauss_binomial, gen_binomial, q_addition_split, q_integer, q_power
from .report import VerificationReport
from .series import DEFAULT_TRUNCATION, SeriesTruncation
from .special import (
    BernoulliGF,
    HermiteGF,
    StirlingGF,
    bernoulli_higher,
    hermite,
    hermite_coefficients,
    series_coefficient,
    stirling2,
)
from .verify import iter_suite, run_suite

__all__ = [
    "DomainError", "SingularityError", "TruncationError",
    "SeriesTruncation", "DEFAULT_TRUNCATION",
    "q_integer", "q_power", "q_addition_split", "gauss_binomial", "gen_binomial",
    "stirling2", "bernoulli_higher", "hermite", "hermite_coefficients",
    "series_coefficient", "StirlingGF", "BernoulliGF", "HermiteGF",
    "basis", "basis_recursive", "basis_derivative", "operator", "beta_density",
    "binomial_pmf", "binomial_moment", "operator_as_expectation",
    "y_poly", "y_or_zero", "y_poly_sumform", "GenFunPoint", "gen_fun",
    "gen_fun_series", "y_from_genfun", "y_derivative_q1", "q_operator",
    "y_triple_sum", "bernoulli_stirling_identity_check", "vanishing_sum_check",
    "hermite_sum", "phillips_operator",
    "InterpPoint", "s_q_closed", "s_q_series", "s_derivative",
    "negative_integer_value_check", "derivative_at_negative_integers",
    "VerificationReport", "iter_suite", "run_suite",
]

__version__ = "0.1.0"
