"""Truncation policy and summation helpers for the infinite series in this package.

Two kinds of sums occur.  Entire-function series (Stirling-weighted exponential
sums, the Hermite-weighted sums) converge superexponentially and are summed
directly, with the magnitude of the last retained term checked against the
truncation policy.  The binomial series sum_l C(z+l-1, l) u^l converges only
geometrically with ratio u and can be arbitrarily slow for u near 1, so its
partial sums are extrapolated with Wynn's epsilon algorithm, run in elevated
working precision (mpmath) because the epsilon table loses roughly as many
digits as it gains orders of convergence.  The extrapolated value is built
from exactly the budgeted number of series terms and never consults any
closed form.
"""

from dataclasses import dataclass

import mpmath as mp

from .errors import TruncationError

# Extra decimal digits used while building the epsilon table.
_EXTRAPOLATION_DPS = 40


@dataclass(frozen=True)
class SeriesTruncation:
    """Number of retained terms and the tolerance the tail must meet."""

    terms: int = 64
    tail_tolerance: float = 1e-14

    def __post_init__(self):
        if self.terms < 1:
            raise ValueError("terms must be >= 1")
        if self.tail_tolerance < 0:
            raise ValueError("tail_tolerance must be >= 0")


DEFAULT_TRUNCATION = SeriesTruncation()


def checked_sum(terms, truncation, label="series"):
    """Sum an iterable of at most ``truncation.terms`` values.

    Raises TruncationError if the last retained term is still larger in
    magnitude than the tail tolerance.
    """
    total = 0.0
    last = 0.0
    count = 0
    for term in terms:
        if count >= truncation.terms:
            break
        total += term
        last = term
        count += 1
    if count and abs(last) > truncation.tail_tolerance:
        raise TruncationError(
            f"{label} did not converge within {truncation.terms} terms "
            f"(last term {abs(last):.3e} > tail tolerance {truncation.tail_tolerance:.3e})"
        )
    return total


def _wynn_best(sums):
    """Best limit estimate from Wynn's epsilon table over mpmath partial sums.

    Returns (estimate, stability), where stability is the smallest change
    between consecutive even-column diagonal entries.  The table is walked to
    exhaustion; entries behind a vanishing difference are clamped so a single
    degenerate pair cannot poison the walk.
    """
    tiny = mp.mpf(10) ** (-mp.mp.dps * 4)
    prev_col = [mp.mpf(0)] * (len(sums) + 1)
    col = list(sums)
    best = sums[-1]
    best_change = abs(sums[-1] - sums[-2]) if len(sums) > 1 else mp.inf
    prev_diag = sums[-1]
    parity = 0
    while len(col) > 1:
        nxt = []
        for j in range(len(col) - 1):
            diff = col[j + 1] - col[j]
            if diff == 0:
                diff = tiny
            nxt.append(prev_col[j + 1] + 1 / diff)
        prev_col, col = col, nxt
        parity ^= 1
        if parity == 0:
            diag = col[-1]
            change = abs(diag - prev_diag)
            if change < best_change:
                best_change = change
                best = diag
            prev_diag = diag
    return best, best_change


def binomial_series_sum(z, u, truncation=DEFAULT_TRUNCATION):
    """sum_{l>=0} C(z+l-1, l) u^l estimated from ``truncation.terms`` terms.

    The coefficients follow the ratio recurrence c_{l+1} = c_l (z+l) u / (l+1).
    If the retained terms already meet the tail tolerance the plain partial sum
    is returned; otherwise the partial sums are extrapolated and the
    extrapolation must stabilise below the tolerance (relative to the size of
    the estimate) or TruncationError is raised.
    """
    complex_mode = isinstance(z, complex) or isinstance(u, complex)
    with mp.workdps(_EXTRAPOLATION_DPS):
        zm = mp.mpc(z) if complex_mode else mp.mpf(z)
        um = mp.mpc(u) if complex_mode else mp.mpf(u)
        term = mp.mpc(1) if complex_mode else mp.mpf(1)
        total = term * 0
        sums = []
        for l in range(truncation.terms):
            total = total + term
            sums.append(total)
            term = term * (zm + l) * um / (l + 1)
        last = sums[-1] - sums[-2] if len(sums) > 1 else sums[0]
        if abs(last) <= truncation.tail_tolerance:
            value = sums[-1]
        else:
            value, stability = _wynn_best(sums)
            limit = truncation.tail_tolerance * max(1.0, float(abs(value)))
            if stability > limit:
                raise TruncationError(
                    f"binomial series did not stabilise within {truncation.terms} terms "
                    f"(extrapolation change {float(stability):.3e} > {limit:.3e})"
                )
        return complex(value) if complex_mode else float(value)
