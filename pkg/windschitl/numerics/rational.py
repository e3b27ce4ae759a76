"""Exact rationals.

:class:`fractions.Fraction` is the rational type: always reduced,
positive denominator, exact and closed under + - * /.
"""

__all__ = [
    "Rational",
    "format_rational",
    "parse_rational",
]

import typing
from fractions import Fraction

from ..exceptions import ParamsInvalid


Rational: typing.TypeAlias = Fraction


def format_rational(value: typing.Union[Fraction, int]) -> str:

    """Serialize as ``"p/q"``, denominator always present

    Example
    -------
    >>> format_rational(Fraction(-11, 18900))
    '-11/18900'
    >>> format_rational(Fraction(1))
    '1/1'
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:

    """Parse ``"p/q"`` (or an integer / decimal literal) exactly
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParamsInvalid("not a rational literal", text=text) from e
