"""Special sequences: each fast path against an independent oracle."""

import math
from fractions import Fraction
from functools import lru_cache

import pytest

from qbern import (
    BernoulliGF,
    DomainError,
    HermiteGF,
    StirlingGF,
    bernoulli_higher,
    hermite,
    hermite_coefficients,
    series_coefficient,
    stirling2,
)


def count_set_partitions(n, k):
    """Brute force: enumerate restricted-growth strings of length n and count
    those using exactly k labels."""
    if n == 0:
        return 1 if k == 0 else 0

    def rec(i, used):
        if i == n:
            return 1 if used == k else 0
        total = 0
        for label in range(min(used + 1, k)):
            total += rec(i + 1, max(used, label + 1))
        return total

    return rec(0, 0)


@lru_cache(maxsize=None)
def bernoulli_number(n):
    """B_n from sum_{j<=n} C(n+1,j) B_j = 0, independent of the library."""
    if n == 0:
        return Fraction(1)
    acc = sum(math.comb(n + 1, j) * bernoulli_number(j) for j in range(n))
    return Fraction(-acc, n + 1)


class TestStirling:
    def test_empty_partition_convention(self):
        assert stirling2(0, 0) == 1

    def test_small_values(self):
        assert stirling2(3, 2) == 3
        assert stirling2(4, 2) == 7

    def test_brute_force_enumeration(self):
        for n in range(9):
            for k in range(n + 2):
                assert stirling2(n, k) == count_set_partitions(n, k)

    def test_structure(self):
        for n in range(13):
            assert stirling2(n, n) == 1
            if n >= 1:
                assert stirling2(n, 1) == 1
            for k in range(n + 1, n + 4):
                assert stirling2(n, k) == 0

    def test_generating_function_extraction(self):
        for n in range(13):
            for k in range(n + 1):
                assert stirling2(n, k) == series_coefficient(StirlingGF(k), n)


class TestBernoulliHigher:
    def test_constant_term(self):
        for v in range(4):
            assert bernoulli_higher(0, v, 0.37) == 1

    def test_order_zero_is_power(self):
        assert bernoulli_higher(3, 0, Fraction(1, 2)) == Fraction(1, 8)
        assert bernoulli_higher(4, 0, 0.5) == pytest.approx(0.0625)

    def test_first_bernoulli_number(self):
        assert bernoulli_higher(1, 1, 0) == Fraction(-1, 2)

    def test_order_one_is_classical(self):
        for n in range(11):
            for z in (Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(3, 4)):
                classical = sum(
                    math.comb(n, j) * bernoulli_number(j) * z ** (n - j)
                    for j in range(n + 1))
                assert bernoulli_higher(n, 1, z) == classical

    def test_generating_function_extraction(self):
        for n in range(11):
            for v in range(5):
                for z in (Fraction(0), Fraction(1, 2), Fraction(-2, 3)):
                    assert bernoulli_higher(n, v, z) == series_coefficient(
                        BernoulliGF(v, z), n)

    def test_float_argument_matches_exact(self):
        for n in range(8):
            exact = bernoulli_higher(n, 2, Fraction(1, 4))
            assert bernoulli_higher(n, 2, 0.25) == pytest.approx(float(exact), rel=1e-13)


class TestHermite:
    def test_examples(self):
        assert hermite(0, 0.37) == 1
        assert hermite(1, 0.5) == 1.0
        assert hermite(2, 1) == 2

    def test_generating_function_extraction(self):
        for n in range(13):
            for z in (Fraction(0), Fraction(1, 2), Fraction(-1, 3)):
                assert hermite(n, z) == series_coefficient(HermiteGF(z), n)

    def test_derivative_relation_exact(self):
        # H_n'(z) = 2n H_{n-1}(z) through integer coefficient arrays
        for n in range(1, 11):
            cn = hermite_coefficients(n)
            deriv = [i * cn[i] for i in range(1, len(cn))]
            expected = [2 * n * c for c in hermite_coefficients(n - 1)]
            assert deriv == expected

    def test_coefficients_match_values(self):
        for n in range(9):
            coeffs = hermite_coefficients(n)
            z = 0.73
            assert sum(c * z ** i for i, c in enumerate(coeffs)) == pytest.approx(
                hermite(n, z), rel=1e-12)


class TestSeriesCoefficient:
    def test_known_coefficients(self):
        assert series_coefficient(StirlingGF(2), 4) == 7
        assert series_coefficient(BernoulliGF(1), 1) == Fraction(-1, 2)
        assert series_coefficient(HermiteGF(Fraction(0)), 2) == -2

    def test_unsupported_descriptor(self):
        with pytest.raises(DomainError):
            series_coefficient(object(), 3)

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            series_coefficient(StirlingGF(1), -1)
