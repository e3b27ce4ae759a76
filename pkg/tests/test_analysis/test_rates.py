"""Tests of analysis.rates module
"""

from fractions import Fraction

import pytest

from windschitl.analysis import CheckStatus, RATE_TARGETS, rate_constant, verify_rates
from windschitl.analysis.rates import rate_tolerance
from windschitl.approximations import FormulaId
from windschitl.exceptions import ContractError
from windschitl.numerics import Real


def test_targets():
    assert RATE_TARGETS[FormulaId.W1] == Fraction(-163, 340200)
    assert RATE_TARGETS[FormulaId.WC1] == Fraction(-191, 340200)
    assert RATE_TARGETS[FormulaId.W01] == RATE_TARGETS[FormulaId.W01_STAR] == Fraction(-198, 340200)
    assert RATE_TARGETS[FormulaId.WL1] == Fraction(-268, 340200)
    assert FormulaId.W0 not in RATE_TARGETS


def test_tolerance():
    assert rate_tolerance(Real.from_value(1000, 256)) == Fraction(1, 200)
    assert rate_tolerance(Real.from_value(10000, 256)) == Fraction(1, 20000)


def test_estimates_at_ten_thousand():
    """Within 0.005% of the limit constant at x = 10^4
    """
    for formula, target in RATE_TARGETS.items():
        rate = rate_constant(formula, 10000, 256)
        deviation = abs(rate.relative_deviation())
        assert deviation.hi < Fraction(5, 100000), formula
        assert rate.target == target


def test_verify_rates():
    report = verify_rates(precision_bits=256)
    assert report.check == "rate"
    assert len(report.items) == 2 * len(RATE_TARGETS)
    assert report.passed
    assert report.exit_code == 0
    assert all(item.status is CheckStatus.CERTIFIED for item in report.items)
    first = report.items[0].dump_to_dict()
    assert first["relation"] == "rate w1"
    assert first["target"] == "-163/340200"


def test_contract_errors():
    with pytest.raises(ContractError):
        rate_constant(FormulaId.W0, 1000)
    with pytest.raises(ContractError):
        rate_constant(FormulaId.W1, 5)
    with pytest.raises(ContractError):
        verify_rates(["w1", "w0"], [1000])
