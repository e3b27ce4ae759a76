"""Tests of analysis.verify module
"""

from fractions import Fraction

import pytest

from windschitl.analysis import (
    CheckStatus, ORDERING_CHAIN, beta0, f1, probe_f1_shape, verify_ordering,
    verify_remainder, verify_sandwich,
)
from windschitl.exceptions import ContractError, DomainError, ParamsInvalid
from windschitl.numerics import Real, interval_ln


def quarter_grid(start, stop):
    return [Fraction(k, 4) for k in range(4 * start, 4 * stop + 1)]


def test_beta0():
    b = beta0(256)
    assert abs(b.mid().as_fraction() - Fraction(99981, 100000)) < Fraction(1, 10 ** 4)
    assert b.relative_width() < Fraction(2) ** -240


class TestOrdering:

    def test_chain(self):
        assert [f.value for f in ORDERING_CHAIN] == ["w1", "wc1", "w01star", "w01", "wl1"]

    def test_full_grid(self):
        """x = 1, 1.25, ..., 100
        """
        report = verify_ordering(quarter_grid(1, 100), 256)
        assert len(report.items) == 397 * 5
        assert report.count(CheckStatus.VIOLATED) == 0
        assert report.count(CheckStatus.INCONCLUSIVE) == 0
        assert report.exit_code == 0

    def test_relations(self):
        report = verify_ordering([2], 256)
        assert [i.relation for i in report.items] == [
            "gamma < w1", "w1 < wc1", "wc1 < w01star", "w01star < w01", "w01 < wl1",
        ]

    def test_escalation_keeps_certified_cells(self):
        report = verify_ordering([3, 50], 128, escalate_to=512)
        assert report.passed

    def test_grid_below_one(self):
        with pytest.raises(DomainError):
            verify_ordering([Fraction(1, 2)], 256)


class TestSandwich:

    def test_attained_at_one(self):
        report = verify_sandwich([1, 2, 10, 100], 256)
        lower = report.items[0]
        assert lower.relation == "beta0*w1 < gamma"
        assert lower.status is CheckStatus.ATTAINED
        assert lower.details["gap"].contains(0)
        lo, hi = lower.details["gap"].as_fractions()
        assert -Fraction(1, 10 ** 6) < lo and hi < Fraction(1, 10 ** 6)
        assert all(i.status is CheckStatus.CERTIFIED for i in report.items[1:])
        assert report.passed
        assert report.exit_code == 0


class TestF1Shape:

    def test_f1_at_one_is_ln_beta0(self):
        value = f1(Real.from_value(1, 256), 256)
        assert value.overlaps(interval_ln(beta0(256), 256))

    def test_increasing_and_concave(self):
        report = probe_f1_shape([1, 2, 3, 5, 8, 13], 256)
        assert report.items[0].relation == "f1(1) = ln beta0"
        assert report.items[0].status is CheckStatus.ATTAINED
        assert report.count(CheckStatus.CERTIFIED) == 5 + 4
        assert report.passed

    def test_grid_checks(self):
        with pytest.raises(ParamsInvalid):
            probe_f1_shape([1, 2], 256)
        with pytest.raises(ParamsInvalid):
            probe_f1_shape([1, 3, 2], 256)


class TestRemainder:

    def test_bound_holds(self):
        report = verify_remainder(range(4, 9), [1, 2, 5, 10], 256)
        assert len(report.items) == 20
        assert report.count(CheckStatus.CERTIFIED) == 20
        assert report.items[0].relation == "|R_4| <= bound"

    def test_contract(self):
        with pytest.raises(ContractError):
            verify_remainder([3, 4], [1], 256)
        with pytest.raises(DomainError):
            verify_remainder([4], [0], 256)
