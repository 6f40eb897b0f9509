"""q-calculus primitives: q-integers, Gaussian binomials, generalized binomials.

The deformation parameter q is an ordinary Python scalar.  Two regimes exist:
|q| < 1 (series regime, complex allowed when every exponent is an integer) and
q = 1, which selects the classical limit through an explicit branch rather
than a 0/0 evaluation.  Powers q**x with non-integer x use the principal real
branch exp(x*log(q)) and therefore require real q in (0, 1].
"""

import math
from fractions import Fraction
from numbers import Integral

from .errors import DomainError


def _is_integral(x) -> bool:
    if isinstance(x, Integral):
        return True
    if isinstance(x, float):
        return x.is_integer()
    if isinstance(x, Fraction):
        return x.denominator == 1
    return False


def q_power(q, x):
    """q**x on the principal real branch; q must be in (0, 1] for non-integer x."""
    if q == 1:
        return 1.0
    if _is_integral(x):
        return q ** int(x)
    if isinstance(q, complex):
        raise DomainError("q must be real for non-integer exponents")
    if q <= 0:
        raise DomainError("q must be positive for non-integer exponents")
    if q > 1:
        raise DomainError("q must lie in (0, 1] for non-integer exponents")
    return math.exp(x * math.log(q))


def q_integer(x, q):
    """[x:q] = (1 - q**x) / (1 - q) for q != 1, and x itself at q = 1."""
    if q == 1:
        return x
    if isinstance(q, complex):
        if not _is_integral(x):
            raise DomainError("q must be real for non-integer x")
        return (1 - q ** int(x)) / (1 - q)
    if _is_integral(x):
        n = int(x)
        if q > 0:
            return -math.expm1(n * math.log(q)) / (1.0 - q)
        return (1.0 - q ** n) / (1.0 - q)
    if q <= 0:
        raise DomainError("q must be positive for non-integer x")
    if q > 1:
        raise DomainError("q must lie in (0, 1] for non-integer x")
    return -math.expm1(x * math.log(q)) / (1.0 - q)


def q_addition_split(u, v, q):
    """Split [u+v] into the pair ([u], q**u * [v]); the parts sum to [u+v]."""
    return q_integer(u, q), q_power(q, u) * q_integer(v, q)


def gauss_binomial(n: int, r: int, q):
    """Gaussian binomial [n r] = [n][n-1]...[n-r+1] / [r]!.

    Computed in exact rational arithmetic whenever q is real (any float is a
    dyadic rational), converting back to float at the boundary; this makes
    e.g. the r <-> n-r symmetry hold exactly.  Equals C(n, r) at q = 1.
    """
    if r < 0 or r > n:
        raise DomainError(f"require 0 <= r <= n, got n={n}, r={r}")
    if isinstance(q, complex):
        if q == 1:
            return complex(math.comb(n, r))
        value = 1 + 0j
        for i in range(1, r + 1):
            value *= (1 - q ** (n - r + i)) / (1 - q ** i)
        return value
    qf = Fraction(q)
    if qf == 1:
        value = Fraction(math.comb(n, r))
    else:
        num = Fraction(1)
        den = Fraction(1)
        for i in range(1, r + 1):
            num *= 1 - qf ** (n - r + i)
            den *= 1 - qf ** i
        value = num / den
    if isinstance(q, float):
        return float(value)
    return value


def gen_binomial(z, l: int):
    """Generalized binomial C(z+l-1, l) = z(z+1)...(z+l-1) / l! for complex z."""
    if l < 0:
        raise DomainError("l must be >= 0")
    value = (1 + 0j) if isinstance(z, complex) else 1.0
    for i in range(l):
        value = value * (z + i) / (l - i)
    return value
