"""Tests of exceptions module
"""

import pytest

from windschitl.exceptions import (
    ContractError, DomainError, ParamsInvalid, PrecisionError, RangeError,
    EXIT_PRECISION, EXIT_USAGE,
)


@pytest.mark.parametrize("exc, code", [
    (ParamsInvalid("bad"), EXIT_USAGE),
    (DomainError("x <= 0", x=0), EXIT_USAGE),
    (ContractError("n < 4", n=3), EXIT_USAGE),
    (RangeError(1e30, 2 ** 40), EXIT_PRECISION),
    (PrecisionError("too narrow", achievable_width="1e-20"), EXIT_PRECISION),
])
def test_exit_codes(exc, code):
    assert exc.exit_code == code


def test_errmsg():
    e = DomainError("grid value out of range", x="0.5")
    assert e.errmsg == {"errmsg": "invalid parameter(s), grid value out of range", "x": "0.5"}
    assert isinstance(e, ValueError)
    assert str(e).startswith("DomainError: ")
    assert e.dump_to_jsonable()["x"] == "0.5"


def test_precision_error_carries_width():
    e = PrecisionError("too narrow", achievable_width="1e-20", shift=512)
    assert e.achievable_width == "1e-20"
    assert e.errmsg["shift"] == 512
    assert isinstance(e, ArithmeticError)
