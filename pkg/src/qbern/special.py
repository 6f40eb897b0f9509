"""Classical special sequences: second-kind Stirling numbers, higher-order
Bernoulli polynomials, Hermite polynomials.

Each sequence has a fast recursive/closed implementation and, independently,
can be recovered by exact coefficient extraction from its exponential
generating function:

    (-1)^k / k! * (1 - e^t)^k          -> S(n, k)          (Stirling, 2nd kind)
    e^(t z) * (t / (e^t - 1))^v        -> B_n^{(v)}(z)     (higher-order Bernoulli)
    e^(2 z t - t^2)                    -> H_n(z)           (Hermite)

All coefficient work is done over exact rationals; floating conversion happens
only when a polynomial is evaluated at a floating argument.  The extraction
path is deliberately slow and simple so it can serve as an oracle for the
fast path.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError


def _check_nonneg(**kwargs):
    for name, value in kwargs.items():
        if value < 0:
            raise DomainError(f"{name} must be >= 0, got {value}")


# ---------------------------------------------------------------------------
# Fast paths
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple:
    """Row (S(n,0), ..., S(n,n)) of the second-kind Stirling triangle."""
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        above = prev[k] if k < n else 0
        row[k] = k * above + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Second-kind Stirling number S(n, k): partitions of an n-set into k blocks.

    Recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1) with S(0,0) = 1; zero for k > n.
    """
    _check_nonneg(n=n, k=k)
    if k > n:
        return 0
    return _stirling_row(n)[k]


@lru_cache(maxsize=None)
def _bernoulli_higher_numbers(n: int, v: int) -> tuple:
    """Exact values B_j^{(v)}(0) for j = 0..n, via series inversion.

    (t/(e^t - 1))^v is the reciprocal of ((e^t - 1)/t)^v, whose coefficients
    are elementary; the reciprocal is built by the standard triangular
    recurrence.  Coefficients returned in EGF-normalised form (already times j!).
    """
    g = [Fraction(1, math.factorial(j + 1)) for j in range(n + 1)]
    gv = _poly_pow(g, v, n)
    inv = _poly_inverse(gv, n)
    return tuple(inv[j] * math.factorial(j) for j in range(n + 1))


def bernoulli_higher(n: int, v: int, z):
    """Higher-order Bernoulli polynomial B_n^{(v)}(z).

    Exact (Fraction) when z is an int or Fraction, float otherwise.  v = 1
    gives the ordinary Bernoulli polynomials; v = 0 degenerates to z**n.
    """
    _check_nonneg(n=n, v=v)
    numbers = _bernoulli_higher_numbers(n, v)
    exact = isinstance(z, (int, Fraction)) and not isinstance(z, bool)
    total = Fraction(0) if exact else 0.0
    zp = Fraction(1) if exact else 1.0
    for m in range(n + 1):
        coeff = math.comb(n, m) * numbers[n - m]
        total += (coeff if exact else float(coeff)) * zp
        zp = zp * z
    return total


def hermite(n: int, z):
    """Hermite polynomial H_n(z) by the three-term recurrence.

    H_0 = 1, H_1 = 2z, H_{n+1} = 2z*H_n - 2n*H_{n-1}.  Exact for exact z.
    """
    _check_nonneg(n=n)
    if n == 0:
        return z * 0 + 1
    h_prev, h = 1, 2 * z
    for m in range(1, n):
        h_prev, h = h, 2 * z * h - 2 * m * h_prev
    return h


def hermite_coefficients(n: int) -> tuple:
    """Integer coefficients (c_0, ..., c_n) of H_n, lowest power first."""
    _check_nonneg(n=n)
    rows = [[1], [0, 2]]
    for m in range(1, n):
        prev, cur = rows[m - 1], rows[m]
        nxt = [0] * (m + 2)
        for i, c in enumerate(cur):
            nxt[i + 1] += 2 * c
        for i, c in enumerate(prev):
            nxt[i] -= 2 * m * c
        rows.append(nxt)
    return tuple(rows[n])


# ---------------------------------------------------------------------------
# Generating-function oracle
# ---------------------------------------------------------------------------

def _poly_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if i > order or ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ai * bj
    return out


def _poly_pow(a, v, order):
    out = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(v):
        out = _poly_mul(out, a, order)
    return out


def _poly_inverse(a, order):
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    out = [Fraction(0)] * (order + 1)
    out[0] = 1 / Fraction(a[0])
    for m in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, min(m, len(a) - 1) + 1):
            acc += a[i] * out[m - i]
        out[m] = -out[0] * acc
    return out


def _poly_exp(a, order):
    """exp of a series with zero constant term, via sum a^j / j!."""
    if a[0] != 0:
        raise ValueError("exponential expects zero constant term")
    out = [Fraction(1)] + [Fraction(0)] * order
    power = [Fraction(1)] + [Fraction(0)] * order
    fact = 1
    for j in range(1, order + 1):
        power = _poly_mul(power, a, order)
        fact *= j
        if all(c == 0 for c in power):
            break
        for i in range(order + 1):
            out[i] += power[i] / fact
    return out


@dataclass(frozen=True)
class StirlingGF:
    """(-1)^k / k! * (1 - e^t)^k"""

    k: int


@dataclass(frozen=True)
class BernoulliGF:
    """e^(t z) * (t / (e^t - 1))^v, z exact."""

    v: int
    z: Fraction = Fraction(0)


@dataclass(frozen=True)
class HermiteGF:
    """e^(2 z t - t^2), z exact."""

    z: Fraction = Fraction(0)


def series_coefficient(gf, n: int) -> Fraction:
    """Exact n! * [t^n] of one of the three generating functions above.

    Computed by truncated polynomial arithmetic over Fractions, independent of
    the recursive fast paths.
    """
    _check_nonneg(n=n)
    if isinstance(gf, StirlingGF):
        _check_nonneg(k=gf.k)
        one_minus_exp = [Fraction(0)] + [Fraction(-1, math.factorial(j)) for j in range(1, n + 1)]
        p = _poly_pow(one_minus_exp, gf.k, n)
        coeff = Fraction((-1) ** gf.k, math.factorial(gf.k)) * p[n]
    elif isinstance(gf, BernoulliGF):
        _check_nonneg(v=gf.v)
        z = Fraction(gf.z)
        g = [Fraction(1, math.factorial(j + 1)) for j in range(n + 1)]
        core = _poly_inverse(_poly_pow(g, gf.v, n), n)
        etz = [z ** m / math.factorial(m) for m in range(n + 1)]
        coeff = _poly_mul(core, etz, n)[n]
    elif isinstance(gf, HermiteGF):
        z = Fraction(gf.z)
        arg = [Fraction(0), 2 * z, Fraction(-1)] + [Fraction(0)] * max(0, n - 2)
        coeff = _poly_exp(arg[: n + 1], n)[n]
    else:
        raise DomainError(f"unsupported generating-function descriptor: {gf!r}")
    return coeff * math.factorial(n)
