"""q-arithmetic primitives."""

import math
from fractions import Fraction

import pytest

from qbern import DomainError, gauss_binomial, gen_binomial, q_addition_split, q_integer
from qbern.qnum import q_power

Q_GRID = (0.3, 0.7, 0.99)


class TestQInteger:
    def test_zero(self):
        assert q_integer(0, 0.5) == 0.0

    def test_three_at_half(self):
        # 1 + 1/2 + 1/4
        assert q_integer(3, 0.5) == 1.75

    def test_classical_branch_returns_x(self):
        for x in (0, 1, 2.5, 0.3, -1.25):
            assert q_integer(x, 1) == x

    def test_geometric_sum(self):
        for q in Q_GRID:
            for n in range(21):
                assert q_integer(n, q) == pytest.approx(sum(q ** i for i in range(n)), abs=1e-12)

    def test_continuity_near_one(self):
        for x in (0.25, 0.7, 1.9):
            assert abs(q_integer(x, 1 - 1e-8) - x) < 1e-6

    def test_negative_q_integer_exponent(self):
        # (1 - q^-2) / (1 - q) with q = -0.5
        assert q_integer(-2, -0.5) == pytest.approx((1 - 4.0) / 1.5)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            q_integer(0.5, -0.3)
        with pytest.raises(DomainError):
            q_integer(0.5, 1.7)
        with pytest.raises(DomainError):
            q_integer(0.5, 0.5 + 0.1j)

    def test_complex_q_with_integer_x(self):
        q = 0.3 + 0.4j
        assert q_integer(2, q) == pytest.approx(1 + q)


class TestQAdditionSplit:
    def test_unit_split(self):
        # [2:0.5] = 1 + q = 1.5, so the split is ([1], q [1]) = (1, 0.5)
        a, b = q_addition_split(1, 1, 0.5)
        assert (a, b) == (1.0, 0.5)
        assert a + b == q_integer(2, 0.5)

    def test_zero_first_argument(self):
        a, b = q_addition_split(0, 0.8, 0.3)
        assert a == 0.0
        assert b == pytest.approx(q_integer(0.8, 0.3))

    def test_parts_sum_to_whole(self):
        grid = [i * 0.25 for i in range(9)]
        for q in Q_GRID:
            for u in grid:
                for v in grid:
                    a, b = q_addition_split(u, v, q)
                    assert a + b == pytest.approx(q_integer(u + v, q), abs=1e-12)

    def test_fractional_example(self):
        a, b = q_addition_split(0.3, 0.4, 0.7)
        assert a + b == pytest.approx(q_integer(0.7, 0.7), abs=1e-13)


class TestNegationRule:
    """[-u] = -q^(-u) [u]; the variant with exponent +u does not hold."""

    def test_inverse_power_reading_holds(self):
        for q in Q_GRID:
            for u in (0.25, 0.5, 1.0, 1.5, 2.0):
                assert q_integer(-u, q) == pytest.approx(
                    -q_power(q, -u) * q_integer(u, q), abs=1e-12)

    def test_plain_power_reading_fails(self):
        q, u = 0.5, 1.0
        wrong = -q_power(q, u) * q_integer(u, q)
        assert abs(q_integer(-u, q) - wrong) > 0.1


class TestGaussBinomial:
    def test_empty_product(self):
        for n in range(6):
            assert gauss_binomial(n, 0, 0.5) == 1.0

    def test_two_choose_one(self):
        # [2]/[1] = 1 + q
        assert gauss_binomial(2, 1, 0.5) == 1.5

    def test_classical_at_q_one(self):
        assert gauss_binomial(4, 2, 1) == 6
        assert gauss_binomial(4, 2, 1.0) == 6.0

    def test_symmetry_exact(self):
        for q in Q_GRID:
            for n in range(13):
                for r in range(n + 1):
                    assert gauss_binomial(n, r, q) == gauss_binomial(n, n - r, q)

    def test_classical_limit(self):
        q = 1 - 1e-8
        for n in range(11):
            for r in range(n + 1):
                got = gauss_binomial(n, r, q)
                want = math.comb(n, r)
                assert abs(got - want) / want < 1e-6

    def test_exact_rational_input(self):
        value = gauss_binomial(4, 2, Fraction(1, 2))
        assert isinstance(value, Fraction)
        # [4][3]/([2][1]) at q=1/2: (15/8)(7/4) / ((3/2)(1)) = 35/16
        assert value == Fraction(35, 16)

    def test_complex_q(self):
        q = 0.2 + 0.3j
        assert gauss_binomial(2, 1, q) == pytest.approx(1 + q)

    def test_index_errors(self):
        with pytest.raises(DomainError):
            gauss_binomial(3, 4, 0.5)
        with pytest.raises(DomainError):
            gauss_binomial(3, -1, 0.5)


class TestGenBinomial:
    def test_empty_product(self):
        assert gen_binomial(2.7, 0) == 1.0
        assert gen_binomial(1 + 2j, 0) == 1 + 0j

    def test_integer_upper(self):
        # C(z+l-1, l) at z=3, l=2 is C(4,2)
        assert gen_binomial(3.0, 2) == pytest.approx(6.0)

    def test_single_negative_factor(self):
        assert gen_binomial(-2.0, 1) == pytest.approx(-2.0)

    def test_negative_integer_argument_oracle(self):
        # gen_binomial(-m, l) = (-1)^l C(m, l), against the factorial formula
        for m in range(9):
            for l in range(m + 1):
                want = (-1) ** l * math.factorial(m) // (
                    math.factorial(l) * math.factorial(m - l))
                assert gen_binomial(float(-m), l) == pytest.approx(want, abs=1e-12)

    def test_vanishes_past_negative_integer(self):
        assert gen_binomial(-3.0, 4) == 0.0

    def test_complex_argument(self):
        z = 1 + 1j
        assert gen_binomial(z, 2) == pytest.approx(z * (z + 1) / 2)

    def test_negative_l_rejected(self):
        with pytest.raises(DomainError):
            gen_binomial(1.0, -1)
