"""Outward-rounded interval arithmetic.

Endpoints are mpmath raw floats; every operation rounds its lower
endpoint toward -inf and its upper endpoint toward +inf at the
interval's precision (``mpmath.libmp.libmpi``), so a derived interval
always contains the exact result for every choice of operand members.
"""

__all__ = [
    "Interval",
    "IntervalLike",
]

import typing
from fractions import Fraction
from typing import Optional as Opt

from mpmath import libmp
from mpmath.libmp import libmpi

from ..exceptions import ParamsInvalid, DomainError
from .real import Real


IntervalLike = typing.Union["Interval", Real, int, Fraction, str]


def _ulp(raw: tuple, precision_bits: int) -> tuple:
    sign, man, exp, bc = raw
    return libmp.from_man_exp(1, exp + bc - precision_bits)


class Interval:

    """Closed interval ``[lo, hi]`` bracketing an exact quantity.

    :ivar precision_bits: working precision of operations on this interval;
        binary operations run at the larger precision of the operands.

    Example
    -------
    >>> third = Interval.from_rational(Fraction(1, 3), 128)
    >>> third.contains(Fraction(1, 3))
    True
    """

    __slots__ = ("_lo", "_hi", "_precision_bits")

    def __init__(self, lo: tuple, hi: tuple, precision_bits: int) -> None:
        if libmp.mpf_gt(lo, hi):
            raise ParamsInvalid(
                "interval endpoints out of order",
                lo=libmp.to_str(lo, 20), hi=libmp.to_str(hi, 20),
            )
        if lo == libmp.fnan or hi == libmp.fnan:
            raise ParamsInvalid("interval endpoint is nan")
        self._lo = lo
        self._hi = hi
        self._precision_bits = precision_bits

    # constructors

    @classmethod
    def from_raw(cls, s: typing.Tuple[tuple, tuple], precision_bits: int) -> "Interval":
        return cls(s[0], s[1], precision_bits)

    @classmethod
    def point(cls, value: Real, precision_bits: Opt[int] = None) -> "Interval":
        """Degenerate interval at an exactly representable value."""
        return cls(value.raw, value.raw, precision_bits or value.precision_bits)

    @classmethod
    def from_rational(cls, value: typing.Union[Fraction, int], precision_bits: int) -> "Interval":
        value = Fraction(value)
        p, q = value.numerator, value.denominator
        return cls(
            libmp.from_rational(p, q, precision_bits, libmp.round_floor),
            libmp.from_rational(p, q, precision_bits, libmp.round_ceiling),
            precision_bits,
        )

    @classmethod
    def from_decimal(cls, text: str, precision_bits: int) -> "Interval":
        """Enclosure of a decimal literal (exact when it is a dyadic number)."""
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParamsInvalid("not a decimal literal", text=text) from e
        return cls.from_rational(value, precision_bits)

    @classmethod
    def coerce(cls, value: IntervalLike, precision_bits: int) -> "Interval":
        if isinstance(value, Interval):
            return value
        if isinstance(value, Real):
            return cls.point(value, precision_bits)
        if isinstance(value, bool):
            raise ParamsInvalid("booleans are not intervals", value=value)
        if isinstance(value, (int, Fraction)):
            return cls.from_rational(value, precision_bits)
        if isinstance(value, str):
            return cls.from_decimal(value, precision_bits)
        raise ParamsInvalid("unsupported interval operand", type=type(value).__name__)

    @classmethod
    def hull_of(cls, intervals: typing.Iterable["Interval"]) -> "Interval":
        it = iter(intervals)
        acc = next(it)
        for other in it:
            acc = acc.hull(other)
        return acc

    # accessors

    @property
    def raw(self) -> typing.Tuple[tuple, tuple]:
        return self._lo, self._hi

    @property
    def lo(self) -> Real:
        return Real(self._lo, self._precision_bits)

    @property
    def hi(self) -> Real:
        return Real(self._hi, self._precision_bits)

    @property
    def precision_bits(self) -> int:
        return self._precision_bits

    def width(self) -> Real:
        """``hi - lo`` rounded up"""
        return Real(libmpi.mpi_delta(self.raw, self._precision_bits), self._precision_bits)

    def mid(self) -> Real:
        return Real(libmpi.mpi_mid(self.raw, self._precision_bits), self._precision_bits)

    def relative_width(self) -> Real:

        """``(hi - lo) / min(|lo|, |hi|)`` rounded up

        :raises DomainError: the interval contains zero
        """
        if self.contains_zero():
            raise DomainError("relative width of an interval containing zero")
        mag = libmpi.mpf_min_max([libmp.mpf_abs(self._lo), libmp.mpf_abs(self._hi)])[0]
        prec = self._precision_bits
        return Real(libmp.mpf_div(
            libmpi.mpi_delta(self.raw, prec), mag, prec, libmp.round_ceiling
        ), prec)

    def is_positive(self) -> bool:
        return libmp.mpf_sign(self._lo) > 0

    def is_negative(self) -> bool:
        return libmp.mpf_sign(self._hi) < 0

    def contains_zero(self) -> bool:
        return libmp.mpf_sign(self._lo) <= 0 <= libmp.mpf_sign(self._hi)

    def is_point(self) -> bool:
        return self._lo == self._hi

    # set relations, exact

    def contains(self, value: typing.Union["Interval", Real, Fraction, int, str]) -> bool:

        """Exact membership test

        A ``str`` is read as an exact decimal; an :class:`Interval` is
        contained when it is a subset.
        """
        if isinstance(value, Interval):
            return self.is_superset(value)
        if isinstance(value, Real):
            return libmp.mpf_le(self._lo, value.raw) and libmp.mpf_le(value.raw, self._hi)
        if isinstance(value, str):
            value = Fraction(value.strip())
        value = Fraction(value)
        lo, hi = self.as_fractions()
        return lo <= value <= hi

    def as_fractions(self) -> typing.Tuple[Fraction, Fraction]:
        return (Fraction(*libmp.to_rational(self._lo)),
                Fraction(*libmp.to_rational(self._hi)))

    def is_superset(self, other: "Interval") -> bool:
        return libmp.mpf_le(self._lo, other._lo) and libmp.mpf_le(other._hi, self._hi)

    def is_subset(self, other: "Interval") -> bool:
        return other.is_superset(self)

    def overlaps(self, other: "Interval") -> bool:
        return libmp.mpf_le(self._lo, other._hi) and libmp.mpf_le(other._lo, self._hi)

    def hull(self, other: "Interval") -> "Interval":
        return Interval(
            libmpi.mpf_min_max([self._lo, other._lo])[0],
            libmpi.mpf_min_max([self._hi, other._hi])[1],
            max(self._precision_bits, other._precision_bits),
        )

    def intersect(self, other: "Interval") -> Opt["Interval"]:
        """``None`` when disjoint"""
        if not self.overlaps(other):
            return None
        return Interval(
            libmpi.mpf_min_max([self._lo, other._lo])[1],
            libmpi.mpf_min_max([self._hi, other._hi])[0],
            max(self._precision_bits, other._precision_bits),
        )

    def certify_lt(self, other: "Interval") -> Opt[bool]:

        """Certified ``self < other``

        :returns: ``True`` when every member of self is below every member
            of other, ``False`` when no member of self is below any member
            of other, ``None`` when the intervals overlap.
        """
        return libmpi.mpi_lt(self.raw, other.raw)

    def certify_gt(self, other: "Interval") -> Opt[bool]:
        return other.certify_lt(self)

    # arithmetic

    def _prec(self, other: "Interval") -> int:
        return max(self._precision_bits, other._precision_bits)

    def _wrap(self, s: typing.Tuple[tuple, tuple], prec: int) -> "Interval":
        return Interval(s[0], s[1], prec)

    def __add__(self, other: IntervalLike) -> "Interval":
        other = Interval.coerce(other, self._precision_bits)
        prec = self._prec(other)
        return self._wrap(libmpi.mpi_add(self.raw, other.raw, prec), prec)

    __radd__ = __add__

    def __sub__(self, other: IntervalLike) -> "Interval":
        other = Interval.coerce(other, self._precision_bits)
        prec = self._prec(other)
        return self._wrap(libmpi.mpi_sub(self.raw, other.raw, prec), prec)

    def __rsub__(self, other: IntervalLike) -> "Interval":
        return Interval.coerce(other, self._precision_bits) - self

    def __mul__(self, other: IntervalLike) -> "Interval":
        other = Interval.coerce(other, self._precision_bits)
        prec = self._prec(other)
        return self._wrap(libmpi.mpi_mul(self.raw, other.raw, prec), prec)

    __rmul__ = __mul__

    def __truediv__(self, other: IntervalLike) -> "Interval":

        """
        :raises DomainError: divisor contains zero
        """
        other = Interval.coerce(other, self._precision_bits)
        if other.contains_zero():
            raise DomainError("division by an interval containing zero",
                              divisor=repr(other))
        prec = self._prec(other)
        return self._wrap(libmpi.mpi_div(self.raw, other.raw, prec), prec)

    def __rtruediv__(self, other: IntervalLike) -> "Interval":
        return Interval.coerce(other, self._precision_bits) / self

    def __neg__(self) -> "Interval":
        return self._wrap(libmpi.mpi_neg(self.raw), self._precision_bits)

    def __abs__(self) -> "Interval":
        return self._wrap(libmpi.mpi_abs(self.raw), self._precision_bits)

    def __pow__(self, n: int) -> "Interval":

        """Integer power

        :raises DomainError: negative power of an interval containing zero
        """
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParamsInvalid("only integer powers, see interval_pow", n=n)
        if n < 0 and self.contains_zero():
            raise DomainError("negative power of an interval containing zero")
        if n < 0:
            return 1 / (self ** (-n))
        return self._wrap(libmpi.mpi_pow_int(self.raw, n, self._precision_bits),
                          self._precision_bits)

    def square(self) -> "Interval":
        return self._wrap(libmpi.mpi_square(self.raw, self._precision_bits),
                          self._precision_bits)

    def scale2(self, n: int) -> "Interval":
        """Exact multiplication by 2**n"""
        return self._wrap((libmp.mpf_shift(self._lo, n), libmp.mpf_shift(self._hi, n)),
                          self._precision_bits)

    def with_precision(self, precision_bits: int) -> "Interval":
        """Same set, rounded outward to ``precision_bits``"""
        return self._wrap(libmpi.mpi_pos(self.raw, precision_bits), precision_bits)

    def widen_ulps(self, n: int = 1) -> "Interval":

        """Move each endpoint out by ``n`` units in its last place

        Exact zero endpoints stay put.
        """
        prec = self._precision_bits
        lo, hi = self._lo, self._hi
        for _ in range(n):
            if lo != libmp.fzero:
                lo = libmp.mpf_sub(lo, _ulp(lo, prec), prec, libmp.round_floor)
            if hi != libmp.fzero:
                hi = libmp.mpf_add(hi, _ulp(hi, prec), prec, libmp.round_ceiling)
        return self._wrap((lo, hi), prec)

    # presentation

    def to_str(self, digits: int) -> str:
        return "[%s, %s]" % (self.lo.to_scientific(digits), self.hi.to_scientific(digits))

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.raw == other.raw

    def __hash__(self) -> int:
        return hash(self.raw)

    def __repr__(self) -> str:
        return "Interval%s" % libmpi.mpi_str(self.raw, self._precision_bits)

