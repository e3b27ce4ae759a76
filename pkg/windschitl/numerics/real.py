"""Extended-precision reals.
"""

__all__ = [
    "Real",
    "RealLike",
    "as_real",
    "resolve_precision",
    "check_precision_range",
    "digits_for_precision",
]

import math
import typing
from fractions import Fraction
from typing import Optional as Opt

import mpmath
from mpmath import libmp

from ..exceptions import ParamsInvalid
from ..data.settings.numerics import get_setting as get_numerics_setting


def resolve_precision(precision_bits: Opt[int]) -> int:

    """Default and check a precision

    :param precision_bits: ``None`` means the configured default
    :raises ParamsInvalid: below ``min_precision_bits``
    """
    setting = get_numerics_setting()
    if precision_bits is None:
        return setting.default_precision_bits
    if precision_bits < setting.min_precision_bits:
        raise ParamsInvalid(
            "precision too small",
            precision_bits=precision_bits, min=setting.min_precision_bits,
        )
    return precision_bits


def check_precision_range(precision_bits: int) -> int:

    """Range check of a user supplied precision

    Internal evaluations may exceed ``max_precision_bits`` by their guard
    bits; only requests coming from outside are capped.

    :raises ParamsInvalid: outside ``[min_precision_bits, max_precision_bits]``
    """
    setting = get_numerics_setting()
    if not setting.min_precision_bits <= precision_bits <= setting.max_precision_bits:
        raise ParamsInvalid(
            "precision out of range",
            precision_bits=precision_bits,
            min=setting.min_precision_bits, max=setting.max_precision_bits,
        )
    return precision_bits


def digits_for_precision(precision_bits: int) -> int:
    """Significant decimal digits printed for a precision (ceil(bits * 0.301)).
    """
    return math.ceil(precision_bits * 0.301)


class Real:

    """Binary floating value with an explicit mantissa width.

    The value is exact as stored; ``precision_bits`` is the width every
    operation derived from it works at.
    """

    __slots__ = ("_raw", "_precision_bits")

    def __init__(self, value: typing.Union[mpmath.mpf, tuple], precision_bits: int) -> None:
        if precision_bits < get_numerics_setting().min_precision_bits:
            raise ParamsInvalid("precision too small", precision_bits=precision_bits)
        self._raw = value._mpf_ if isinstance(value, mpmath.mpf) else value
        self._precision_bits = precision_bits

    @classmethod
    def from_decimal(cls, text: str, precision_bits: int) -> "Real":

        """Parse a decimal literal, rounded to nearest

        No double-precision intermediate: the literal goes straight to
        a binary mantissa of ``precision_bits``.
        """
        try:
            raw = libmp.from_str(text.strip(), precision_bits, libmp.round_nearest)
        except ValueError as e:
            raise ParamsInvalid("not a decimal literal", text=text) from e
        if raw[1] == 0 and raw != libmp.fzero:
            raise ParamsInvalid("not a finite decimal", text=text)
        return cls(raw, precision_bits)

    @classmethod
    def from_value(cls, value: "RealLike", precision_bits: int) -> "Real":
        if isinstance(value, Real):
            return cls(value.raw, precision_bits)
        if isinstance(value, str):
            return cls.from_decimal(value, precision_bits)
        if isinstance(value, bool):
            raise ParamsInvalid("booleans are not reals", value=value)
        if isinstance(value, int):
            return cls(libmp.from_int(value, precision_bits, libmp.round_nearest), precision_bits)
        if isinstance(value, Fraction):
            return cls(libmp.from_rational(
                value.numerator, value.denominator, precision_bits, libmp.round_nearest
            ), precision_bits)
        if isinstance(value, float):
            return cls(libmp.from_float(value), precision_bits)
        if isinstance(value, mpmath.mpf):
            return cls(value._mpf_, precision_bits)
        raise ParamsInvalid("unsupported real type", type=type(value).__name__)

    @property
    def raw(self) -> tuple:
        """mpmath raw tuple (sign, mantissa, exponent, bitcount)"""
        return self._raw

    @property
    def value(self) -> mpmath.mpf:
        return mpmath.mp.make_mpf(self._raw)

    @property
    def precision_bits(self) -> int:
        return self._precision_bits

    def as_fraction(self) -> Fraction:
        """Exact rational value of the stored binary number."""
        return Fraction(*libmp.to_rational(self._raw))

    def to_scientific(self, digits: Opt[int] = None) -> str:

        """Decimal scientific notation

        :param digits: significant digits, default from the precision

        Example
        -------
        >>> Real.from_decimal("0.00018318", 256).to_scientific(4)
        '1.832e-4'
        """
        if digits is None:
            digits = digits_for_precision(self._precision_bits)
        return libmp.to_str(
            self._raw, digits, strip_zeros=False,
            min_fixed=0, max_fixed=0, show_zero_exponent=True,
        )

    def to_decimal(self, digits: Opt[int] = None) -> str:
        """Plain decimal, ``'1.25'``; integers print without a point"""
        value = self.as_fraction()
        if value.denominator == 1:
            return str(value.numerator)
        if digits is None:
            digits = digits_for_precision(self._precision_bits)
        return libmp.to_str(self._raw, digits)

    def is_positive(self) -> bool:
        return libmp.mpf_sign(self._raw) > 0

    def __float__(self) -> float:
        return libmp.to_float(self._raw)

    def __neg__(self) -> "Real":
        return Real(libmp.mpf_neg(self._raw), self._precision_bits)

    def _compare(self, other: typing.Any) -> typing.Any:
        if isinstance(other, Fraction):
            mine = self.as_fraction()
            return (mine > other) - (mine < other)
        if isinstance(other, Real):
            o = other.raw
        elif isinstance(other, mpmath.mpf):
            o = other._mpf_
        elif isinstance(other, bool):
            return NotImplemented
        elif isinstance(other, int):
            o = libmp.from_int(other)
        elif isinstance(other, float):
            o = libmp.from_float(other)
        else:
            return NotImplemented
        return libmp.mpf_cmp(self._raw, o)

    def __lt__(self, other: typing.Any) -> bool:
        c = self._compare(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other: typing.Any) -> bool:
        c = self._compare(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other: typing.Any) -> bool:
        c = self._compare(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other: typing.Any) -> bool:
        c = self._compare(other)
        return c if c is NotImplemented else c >= 0

    def __eq__(self, other: typing.Any) -> bool:
        c = self._compare(other)
        return c if c is NotImplemented else c == 0

    def __hash__(self) -> int:
        return hash(self._raw)

    def __str__(self) -> str:
        return self.to_scientific()

    def __repr__(self) -> str:
        return f"Real({self.to_scientific()}, precision_bits={self._precision_bits})"


RealLike = typing.Union[Real, int, Fraction, str, float, mpmath.mpf]


def as_real(value: RealLike, precision_bits: int) -> Real:
    if isinstance(value, Real) and value.precision_bits == precision_bits:
        return value
    return Real.from_value(value, precision_bits)
