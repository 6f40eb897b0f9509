"""Interpolation function S(z, k; x) of the q-Bernstein-type polynomials.

Closed form:  S(z, k; x; q) = (-1)^k / k! * [x]^k * [1-x]^(-z),  z complex,
x in (0, 1), with a genuine pole at x = 1 (raised as SingularityError).  Its
values at the negative integers z = -n recover Y(n+k, k; x; q) up to the
explicit factor (-1)^k n! / (n+k)!, the same way zeta-type functions
interpolate number sequences at negative arguments.

The independent series route sums

    (1-q)^(z-k) * sum_l C(z+l-1, l) q^(l(1-x)) * sum_m S(m,k) (x log q)^m / m!

and exists to validate the closed form; it requires q strictly inside (0, 1).
"""

import cmath
import math
from dataclasses import dataclass, field

from .bernstein import basis
from .errors import DomainError, SingularityError
from .qnum import gen_binomial, q_integer
from .report import VerificationReport
from .series import DEFAULT_TRUNCATION, SeriesTruncation, binomial_series_sum, checked_sum
from .special import stirling2


def _check_open_interval(x):
    if x == 1.0:
        raise SingularityError("S(z, k; x) has a pole at x = 1")
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x}")


@dataclass(frozen=True)
class InterpPoint:
    """Evaluation point (z, k, x, q) of the interpolation function."""

    z: complex
    k: int
    x: float
    q: float = 1.0

    def __post_init__(self):
        if self.k < 0:
            raise DomainError("k must be >= 0")


def s_q_closed(p: InterpPoint):
    """(-1)^k / k! * [x]^k * [1-x]^(-z), principal branch in z.

    [1-x] is a positive real for x in (0, 1) and q in (0, 1], so the complex
    power exp(-z log [1-x]) is single-valued.  Returns a float for real z.
    """
    _check_open_interval(p.x)
    if isinstance(p.q, complex) or not 0.0 < p.q <= 1.0:
        raise DomainError("q must lie in (0, 1]")
    qx = q_integer(p.x, p.q)
    q1mx = q_integer(1.0 - p.x, p.q)
    value = (-1) ** p.k / math.factorial(p.k) * qx ** p.k
    if isinstance(p.z, complex):
        return value * cmath.exp(-p.z * math.log(q1mx))
    return value * math.exp(-p.z * math.log(q1mx))


def s_q_series(p: InterpPoint, truncation: SeriesTruncation = DEFAULT_TRUNCATION):
    """Series route to S; agrees with ``s_q_closed`` within the tail tolerance."""
    _check_open_interval(p.x)
    if isinstance(p.q, complex) or not 0.0 < p.q < 1.0:
        raise DomainError("series evaluation requires real q in (0, 1)")
    u = p.q ** (1.0 - p.x)
    lsum = binomial_series_sum(p.z, u, truncation)
    w = p.x * math.log(p.q)
    msum = checked_sum(
        (stirling2(m, p.k) * w ** m / math.factorial(m) for m in range(truncation.terms)),
        truncation,
        label="Stirling exponential sum",
    )
    log1mq = math.log(1.0 - p.q)
    if isinstance(p.z, complex):
        prefactor = cmath.exp((p.z - p.k) * log1mq)
    else:
        prefactor = math.exp((p.z - p.k) * log1mq)
    return prefactor * lsum * msum


def s_derivative(m: int, z, k: int, x: float):
    """m-th z-derivative at q = 1: log^m(1/(1-x)) * S(z, k; x)."""
    if m < 0:
        raise DomainError("m must be >= 0")
    value = s_q_closed(InterpPoint(z=z, k=k, x=x, q=1.0))
    return math.log(1.0 / (1.0 - x)) ** m * value


def negative_integer_value_check(n: int, k: int, x: float, q,
                                 tol: float = 1e-12) -> VerificationReport:
    """Check S(-n, k; x; q) = (-1)^k n!/(n+k)! * Y(n+k, k; x; q)."""
    from .qbernstein import y_poly

    if n < 0:
        raise DomainError("n must be >= 0")
    lhs = s_q_closed(InterpPoint(z=float(-n), k=k, x=x, q=q))
    rhs = (-1) ** k * math.factorial(n) / math.factorial(n + k) * y_poly(n + k, k, x, q)
    return VerificationReport.from_values(
        "interpolation_at_negative_integers",
        {"n": n, "k": k, "x": x, "q": q},
        lhs, rhs, tol,
    )


def derivative_at_negative_integers(m: int, n: int, k: int, x: float) -> float:
    """(-1)^k n!/(n+k)! * B(k, n+k, x) * log^m(1/(1-x)): the m-th z-derivative
    of S at z = -n in the q = 1 limit, written through the Bernstein basis."""
    if m < 0 or n < 0 or k < 0:
        raise DomainError("m, n, k must be >= 0")
    _check_open_interval(x)
    factor = (-1) ** k * math.factorial(n) / math.factorial(n + k)
    return factor * basis(k, n + k, x) * math.log(1.0 / (1.0 - x)) ** m
