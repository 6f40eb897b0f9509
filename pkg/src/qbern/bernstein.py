"""Classical Bernstein basis polynomials and the Bernstein operator.

Conventions: B(j, n, x) = C(n,j) x^j (1-x)^(n-j) with B(j, n, x) = 0 for j < 0
or j > n, so recursion edges need no special casing.  The operator samples a
function at the uniform nodes j/n; it reproduces affine functions and, viewed
probabilistically, is the expectation of f(y/n) for a binomial(n, x) variable y.
"""

import math

from .errors import DomainError
from .special import stirling2


def _check_unit_interval(x, name="x"):
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {x}")


def _check_positive(n, name="n"):
    if n < 1:
        raise DomainError(f"{name} must be a positive integer, got {n}")


def basis(j: int, n: int, x: float) -> float:
    """Bernstein basis polynomial C(n,j) x^j (1-x)^(n-j); zero out of range."""
    if j < 0 or j > n:
        return 0.0
    return math.comb(n, j) * x ** j * (1.0 - x) ** (n - j)


def basis_recursive(j: int, n: int, x: float) -> float:
    """Same polynomial built from B(k,m) = (1-x) B(k,m-1) + x B(k-1,m-1)."""
    if j < 0 or j > n:
        return 0.0
    row = [1.0]
    for m in range(1, n + 1):
        nxt = [0.0] * (m + 1)
        for k in range(m):
            nxt[k] += (1.0 - x) * row[k]
            nxt[k + 1] += x * row[k]
        row = nxt
    return row[j]


def basis_derivative(k: int, n: int, x: float) -> float:
    """d/dx B(k, n, x) = n * (B(k-1, n-1, x) - B(k, n-1, x))."""
    _check_positive(n)
    return n * (basis(k - 1, n - 1, x) - basis(k, n - 1, x))


def operator(f, n: int, x: float) -> float:
    """Bernstein operator: sum of f(j/n) B(j, n, x) over j = 0..n."""
    _check_positive(n)
    _check_unit_interval(x)
    return sum(f(j / n) * basis(j, n, x) for j in range(n + 1))


def beta_density(j: int, n: int, x: float) -> float:
    """(n+1) B(j, n, x): the beta(j+1, n+1-j) probability density on [0, 1]."""
    if not 0 <= j <= n:
        raise DomainError(f"require 0 <= j <= n, got j={j}, n={n}")
    _check_unit_interval(x)
    return (n + 1) * basis(j, n, x)


def binomial_pmf(k: int, n: int, x: float) -> float:
    """P(y = k) for a binomial(n, x) variable."""
    if k < 0 or k > n:
        return 0.0
    return math.comb(n, k) * x ** k * (1.0 - x) ** (n - k)


def binomial_moment(n: int, x: float, m: int) -> float:
    """m-th raw moment of binomial(n, x).

    Uses the Stirling expansion E[y^m] = sum_j S(m,j) n(n-1)...(n-j+1) x^j,
    which turns the moment into a short exact-coefficient polynomial in x.
    """
    _check_positive(n)
    _check_unit_interval(x)
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    return sum(stirling2(m, j) * math.perm(n, j) * x ** j for j in range(m + 1))


def operator_as_expectation(f, n: int, x: float) -> float:
    """E[f(y/n)] for binomial(n, x), summed over the pmf.

    The same finite sum as ``operator`` reorganised through the distribution.
    """
    _check_positive(n)
    _check_unit_interval(x)
    return sum(f(k / n) * binomial_pmf(k, n, x) for k in range(n + 1))
