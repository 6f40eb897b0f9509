"""The q-Bernstein-type polynomial family Y, its generating function, the
operators built on it, and identity checks connecting Y to Stirling numbers,
higher-order Bernoulli polynomials and Hermite polynomials.

Indexing convention: the public API takes the *total* index N, so

    Y(N, k; x; q) = C(N, k) [x]^k [1-x]^(N-k),     0 <= k <= N,

where [.] is the q-integer.  At q = 1 this is exactly the classical Bernstein
basis polynomial B(k, N, x).  Y vanishes below the diagonal (N < k).

The family's exponential generating function in t is

    F_k(t, x; q) = ([x] t)^k / k! * exp([1-x] t),

whose series expansion over the Gaussian-binomial/Stirling double sum is
implemented separately (``gen_fun_series``) so the two routes can be compared
numerically.

Note that sum_j Y(n, j; x; q) = ([x] + [1-x])^n, which is 1 only at q = 1:
the q-operator built from these weights is *not* a convex combination for
q != 1, and no such normalisation is assumed anywhere.
"""

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .bernstein import _check_positive, _check_unit_interval
from .errors import DomainError
from .qnum import gauss_binomial, q_integer, q_power
from .report import VerificationReport
from .series import DEFAULT_TRUNCATION, SeriesTruncation, binomial_series_sum, checked_sum
from .special import bernoulli_higher, stirling2


def _check_diagonal(n, k):
    if k < 0 or n < 0:
        raise DomainError(f"indices must be non-negative, got n={n}, k={k}")
    if k > n:
        raise DomainError(f"require k <= n, got n={n}, k={k}")


def y_poly(n: int, k: int, x: float, q) -> float:
    """Y(n, k; x; q) = C(n,k) [x]^k [1-x]^(n-k) in the total-index convention."""
    _check_diagonal(n, k)
    _check_unit_interval(x)
    qx = q_integer(x, q)
    q1mx = q_integer(1.0 - x, q)
    return math.comb(n, k) * qx ** k * q1mx ** (n - k)


def y_or_zero(n: int, k: int, x: float, q) -> float:
    """Y with the below-diagonal / out-of-range convention Y = 0."""
    if k < 0 or k > n or n < 0:
        return 0.0
    return y_poly(n, k, x, q)


def y_poly_sumform(n: int, k: int, x: float, q) -> float:
    """Y(n, k; x; q) as the alternating q-power sum

        C(n,k) * sum_{j=0}^{n-k} C(n-k, j) (-1)^j q^(j(1-x)) [x]^(j+k),

    i.e. the binomial expansion of [x]^k (1 - q^(1-x) [x])^(n-k).  Requires the
    real-branch power q^(1-x), hence real q in (0, 1].
    """
    _check_diagonal(n, k)
    _check_unit_interval(x)
    m = n - k
    qx = q_integer(x, q)
    a = q_power(q, 1.0 - x)
    total = 0.0
    for j in range(m + 1):
        total += math.comb(m, j) * (-1) ** j * a ** j * qx ** (j + k)
    return math.comb(n, k) * total


@dataclass(frozen=True)
class GenFunPoint:
    """Evaluation point (t, x, q) of the generating function plus truncation."""

    t: complex
    x: float
    q: float
    truncation: SeriesTruncation = field(default_factory=SeriesTruncation)

    def __post_init__(self):
        if not 0.0 <= self.x <= 1.0:
            raise DomainError(f"x must lie in [0, 1], got {self.x}")


def gen_fun(point: GenFunPoint, k: int):
    """Closed form ([x] t)^k / k! * exp([1-x] t)."""
    if k < 0:
        raise DomainError("k must be >= 0")
    qx = q_integer(point.x, point.q)
    q1mx = q_integer(1.0 - point.x, point.q)
    t = point.t
    exp = cmath.exp if isinstance(t, complex) else math.exp
    return (qx * t) ** k / math.factorial(k) * exp(q1mx * t)


def gen_fun_series(point: GenFunPoint, k: int):
    """Series form of the generating function:

        (-1)^k t^k exp([1-x] t) * sum_l C(k+l-1, l) q^l
                                * sum_m S(m, k) (x log q)^m / m!.

    Requires 0 < q < 1.  Must agree with ``gen_fun``: the (-1)^k prefactor
    cancels against the sign inside the Stirling generating function, and the
    two geometric-type sums rebuild [x]^k / (k! (1-q)^k... ) exactly.
    """
    if k < 0:
        raise DomainError("k must be >= 0")
    q = point.q
    if isinstance(q, complex) or not 0.0 < q < 1.0:
        raise DomainError("series evaluation requires real q in (0, 1)")
    trunc = point.truncation
    lsum = binomial_series_sum(float(k), q, trunc)
    w = point.x * math.log(q)
    msum = checked_sum(
        (stirling2(m, k) * w ** m / math.factorial(m) for m in range(trunc.terms)),
        trunc,
        label="Stirling exponential sum",
    )
    q1mx = q_integer(1.0 - point.x, q)
    t = point.t
    exp = cmath.exp if isinstance(t, complex) else math.exp
    return (-1) ** k * t ** k * exp(q1mx * t) * lsum * msum


def y_from_genfun(n: int, k: int, x: float, q,
                  truncation: SeriesTruncation = DEFAULT_TRUNCATION) -> float:
    """n! * [t^n] of the generating function, extracted from the closed form.

    Only one term of exp([1-x] t) contributes to t^n, so the extraction is
    n! * [x]^k / k! * [1-x]^(n-k) / (n-k)!  -- an independent floating route
    to the same value as ``y_poly``.  ``truncation`` is accepted for interface
    parity with the series route; the extraction itself is exact.
    """
    _check_diagonal(n, k)
    _check_unit_interval(x)
    qx = q_integer(x, q)
    q1mx = q_integer(1.0 - x, q)
    value = float(math.factorial(n))
    value *= qx ** k / math.factorial(k)
    value *= q1mx ** (n - k) / math.factorial(n - k)
    return value


def y_derivative_q1(n: int, k: int, x: float) -> float:
    """d/dx Y(n, k; x; 1) = n (Y(n-1, k-1; x; 1) - Y(n-1, k; x; 1))."""
    _check_positive(n)
    return n * (y_or_zero(n - 1, k - 1, x, 1.0) - y_or_zero(n - 1, k, x, 1.0))


def q_operator(f, n: int, x: float, q) -> float:
    """sum_j f([j]/[n]) Y(n, j; x; q): the operator built on q-spaced nodes."""
    _check_positive(n)
    _check_unit_interval(x)
    qn = q_integer(n, q)
    return sum(f(q_integer(j, q) / qn) * y_poly(n, j, x, q) for j in range(n + 1))


def y_triple_sum(n: int, k: int, x: float, q,
                 truncation: SeriesTruncation = DEFAULT_TRUNCATION,
                 variant: str = "derived"):
    """Coefficient-level series display for Y(n, k; x; q):

        C(n,k) (-1)^k k! / (1-q)^(n-k)
          * sum_l C(k+l-1, l) q^(e_l)
          * sum_m S(m, k) (x log q)^m / m!
          * sum_{j=0}^{n-k} BIN(j) (-1)^j q^(j(1-x))

    Two factors of this display admit alternative readings, selected by
    ``variant``:

      "derived":           BIN(j) = C(n-k, j), e_l = l      (derivable; matches Y)
      "constant-binomial":  BIN(j) = C(n-k, k), e_l = l
      "split-exponent":     BIN(j) = C(n-k, j), e_l = l(1-x)

    The verification suite evaluates all three and records which reading
    reproduces the closed form; none of them is the computational path for Y.
    """
    _check_diagonal(n, k)
    _check_unit_interval(x)
    if isinstance(q, complex) or not 0.0 < q < 1.0:
        raise DomainError("series evaluation requires real q in (0, 1)")
    if variant not in ("derived", "constant-binomial", "split-exponent"):
        raise DomainError(f"unknown variant: {variant!r}")
    m = n - k
    u = q_power(q, 1.0 - x) if variant == "split-exponent" else q
    lsum = binomial_series_sum(float(k), u, truncation)
    w = x * math.log(q)
    msum = checked_sum(
        (stirling2(i, k) * w ** i / math.factorial(i) for i in range(truncation.terms)),
        truncation,
        label="Stirling exponential sum",
    )
    a = q_power(q, 1.0 - x)
    jsum = 0.0
    for j in range(m + 1):
        binom = math.comb(m, k) if variant == "constant-binomial" else math.comb(m, j)
        jsum += binom * (-1) ** j * a ** j
    prefactor = math.comb(n, k) * (-1) ** k * math.factorial(k) / (1.0 - q) ** m
    return prefactor * lsum * msum * jsum


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------

def bernoulli_stirling_identity_check(n: int, k: int, x: float, q,
                                      tol: float = 1e-9) -> VerificationReport:
    """Check Y(n, k; x; q) = [x]^k sum_j C(n,j) B_j^{(k)}([1-x]) S(n-j, k)."""
    _check_diagonal(n, k)
    lhs = y_poly(n, k, x, q)
    qx = q_integer(x, q)
    w = q_integer(1.0 - x, q)
    rhs = qx ** k * sum(
        math.comb(n, j) * bernoulli_higher(j, k, w) * stirling2(n - j, k)
        for j in range(n + 1)
    )
    return VerificationReport.from_values(
        "y_equals_bernoulli_stirling_sum",
        {"n": n, "k": k, "x": x, "q": q},
        lhs, rhs, tol,
    )


def vanishing_sum_check(k: int, x: float, q) -> VerificationReport:
    """Check that the below-diagonal double sum

        [x]^k sum_{n=0}^{k-1} sum_{j=0}^{n} B_j^{(k)}([1-x]) S(n-j, k) / (j! (n-j)!)

    is exactly zero.  Every Stirling factor has first argument < k, so the sum
    vanishes term by term; the evaluation is done in exact rational arithmetic
    and the check demands literal zero.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    w = Fraction(q_integer(1.0 - x, q))
    total = Fraction(0)
    for n in range(k):
        for j in range(n + 1):
            total += (
                bernoulli_higher(j, k, w)
                * stirling2(n - j, k)
                / (math.factorial(j) * math.factorial(n - j))
            )
    lhs = q_integer(x, q) ** k * float(total)
    return VerificationReport.from_values(
        "below_diagonal_sum_vanishes",
        {"k": k, "x": x, "q": q},
        lhs, 0.0, 0.0,
    )


def hermite_sum(k: int, y: float, truncation: SeriesTruncation = DEFAULT_TRUNCATION) -> float:
    """(k!/y^k) sum_n Y(n+k, k; y; 1) 2^n / (n+k)!, truncated.

    Each summand collapses to (2(1-y))^n / n!, so the sum equals e^(2(1-y))
    for every k; that closed value, and the cross-expansion
    e * sum_j H_j(1-y)/j!, are the oracles the verification suite compares
    against.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    if not 0.0 < y <= 1.0:
        raise DomainError(f"y must lie in (0, 1], got {y}")
    prefactor = math.factorial(k) / y ** k
    return checked_sum(
        (
            prefactor * y_poly(n + k, k, y, 1.0) * 2.0 ** n / math.factorial(n + k)
            for n in range(truncation.terms)
        ),
        truncation,
        label="Hermite-relation sum",
    )


@lru_cache(maxsize=None)
def _phillips_weights_and_nodes(n: int, q: float):
    qn = q_integer(n, q)
    weights = tuple(gauss_binomial(n, r, q) for r in range(n + 1))
    nodes = tuple(q_integer(r, q) / qn for r in range(n + 1))
    return weights, nodes


def phillips_operator(f, n: int, x: float, q) -> float:
    """Phillips q-Bernstein operator

        sum_r f([r]/[n]) [n r]_q x^r prod_{s=0}^{n-r-1} (1 - q^s x),

    defined for 0 < q <= 1.  Reduces to the classical Bernstein operator at
    q = 1; for convex f the values decrease in n and stay above f.
    """
    _check_positive(n)
    _check_unit_interval(x)
    if isinstance(q, complex) or not 0.0 < q <= 1.0:
        raise DomainError("q must lie in (0, 1] for the Phillips operator")
    weights, nodes = _phillips_weights_and_nodes(n, float(q))
    total = 0.0
    for r in range(n + 1):
        prod = 1.0
        for s in range(n - r):
            prod *= 1.0 - q ** s * x
        total += f(nodes[r]) * weights[r] * x ** r * prod
    return total
