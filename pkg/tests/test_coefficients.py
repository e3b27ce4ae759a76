"""Tests of coefficients module
"""

import math
import threading
from fractions import Fraction

import pytest

from windschitl.coefficients import (
    CoefficientFamily, CoefficientTable, coeff_a, coeff_a_star, coeff_b,
    coeff_b_expanded, coeff_c, coeff_stirling, family_values,
    get_coefficient_table, lu_constants,
)
from windschitl.exceptions import ParamsInvalid


class TestPrintedValues:

    def test_a(self):
        assert coeff_a(1) == coeff_a(2) == 0
        assert coeff_a(3) == Fraction(1, 1620)
        assert coeff_a(4) == Fraction(-11, 18900)
        assert coeff_a(5) == Fraction(143, 170100)
        assert coeff_a(6) == Fraction(-2260261, 1178793000)

    def test_b(self):
        assert coeff_b(0) == 1
        assert all(coeff_b(n) == 0 for n in (1, 2, 3, 4, 6, 8))
        assert coeff_b(5) == Fraction(1, 1620)
        assert coeff_b(7) == Fraction(-11, 18900)
        assert coeff_b(9) == Fraction(143, 170100)
        assert coeff_b(10) == Fraction(1, 5248800)

    def test_c(self):
        assert coeff_c(0) == 1
        assert coeff_c(1) == 0
        assert coeff_c(2) == Fraction(1, 135)
        assert coeff_c(3) == Fraction(-191, 28350)
        assert coeff_c(4) == Fraction(25127, 2551500)
        assert coeff_c(5) == Fraction(-19084273, 841995000)

    def test_lu(self):
        assert lu_constants() == [
            (7, Fraction(1, 810)), (9, Fraction(-67, 42525)), (11, Fraction(19, 8505)),
        ]
        # first correction of Lu's expansion is twice the exp-series a_3
        assert lu_constants()[0][1] == 2 * coeff_a(3)


class TestIdentities:

    def test_a_from_stirling_parts(self):
        """a_n = a'_n - a''_n / 2"""
        for n in range(1, 25):
            prime, dprime = coeff_stirling(n)
            assert coeff_a(n) == prime - dprime / 2

    def test_a_star_reindexes_a(self):
        for k in range(1, 20):
            assert coeff_a_star(2 * k - 1) == coeff_a(k)
            assert coeff_a_star(2 * k) == 0

    def test_b_is_exp_of_a_star_series(self):
        """Compose exp(sum a*_k t^k) as a truncated power series by hand
        """
        order = 16
        series = [Fraction(0)] + [coeff_a_star(k) for k in range(1, order + 1)]
        result = [Fraction(1)] + [Fraction(0)] * order
        power = [Fraction(1)] + [Fraction(0)] * order
        for m in range(1, order + 1):
            power = [
                sum(power[i] * series[n - i] for i in range(n + 1))
                for n in range(order + 1)
            ]
            for n in range(order + 1):
                result[n] += power[n] / math.factorial(m)
        assert [coeff_b(n) for n in range(order + 1)] == result

    def test_b_expanded_agrees(self):
        for n in range(0, 15):
            assert coeff_b_expanded(n) == coeff_b(n)

    def test_c_times_ln_sinh_series(self):
        """(sum c_k u^k)(sum a''_j u^j) = 2 sum a_m u^m for u = t^2
        """
        for m in range(2, 14):
            lhs = sum(coeff_c(k) * coeff_stirling(m - k)[1] for k in range(1, m))
            assert lhs == 2 * coeff_a(m)

    def test_stirling_values(self):
        assert coeff_stirling(1) == (Fraction(1, 12), Fraction(1, 6))
        assert coeff_stirling(2) == (Fraction(-1, 360), Fraction(-1, 180))


class TestFamilyValues:

    def test_ranges(self):
        assert family_values(CoefficientFamily.B, 3) == [(0, 1), (1, 0), (2, 0), (3, 0)]
        assert [n for n, _ in family_values(CoefficientFamily.A, 6)] == [1, 2, 3, 4, 5, 6]
        assert family_values(CoefficientFamily.A, 6)[-1] == (6, Fraction(-2260261, 1178793000))

    def test_lu_ignores_n_max(self):
        assert family_values(CoefficientFamily.LU, 0) == lu_constants()

    def test_below_minimum(self):
        with pytest.raises(ParamsInvalid):
            family_values(CoefficientFamily.A, 0)
        with pytest.raises(ParamsInvalid):
            coeff_a(0)
        with pytest.raises(ParamsInvalid):
            coeff_c(-1)
        with pytest.raises(ParamsInvalid):
            coeff_b_expanded(-1)


class TestCoefficientTable:

    def test_memoized(self):
        table = get_coefficient_table(CoefficientFamily.C)
        coeff_c(8)
        assert table.max_index >= 8
        assert table[8] is coeff_c(8)

    def test_lu_has_no_table(self):
        with pytest.raises(ParamsInvalid):
            CoefficientTable(CoefficientFamily.LU)
        with pytest.raises(ParamsInvalid):
            get_coefficient_table(CoefficientFamily.LU)

    def test_concurrent_growth(self):
        table = CoefficientTable(CoefficientFamily.B)
        results = {}

        def read(n):
            results[n] = table[n]

        threads = [threading.Thread(target=read, args=(n,)) for n in range(20, 0, -1)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(results[n] == coeff_b(n) for n in results)
