"""Interval elementary functions.

exp, ln and pi come from mpmath's directed-rounding kernels and are
then moved out by one ulp per endpoint. sinh and sinh(t)/t use their
own Taylor kernel below |t| = 1, where e^t - e^-t cancels.
"""

__all__ = [
    "interval_exp",
    "interval_ln",
    "interval_sqrt",
    "interval_pow",
    "interval_pi",
    "interval_sinh",
    "interval_sinhc",
    "rational_to_interval",
]

import typing
from fractions import Fraction

from mpmath import libmp
from mpmath.libmp import libmpi

from ..exceptions import DomainError, RangeError, ParamsInvalid
from ..data.settings.numerics import get_setting as get_numerics_setting
from .interval import Interval

# extra bits the Taylor kernel carries before rounding to the caller's precision
GUARD_BITS = 20


def _check_precision(precision_bits: int) -> None:
    if precision_bits < get_numerics_setting().min_precision_bits:
        raise ParamsInvalid("precision too small", precision_bits=precision_bits)


def _check_exp_range(*ends: tuple) -> None:
    limit = get_numerics_setting().max_exp_argument
    raw_limit = libmp.from_float(limit)
    for end in ends:
        if libmp.mpf_gt(libmp.mpf_abs(end), raw_limit):
            raise RangeError(argument=libmp.to_str(end, 20), limit=limit)


def rational_to_interval(value: typing.Union[Fraction, int], precision_bits: int) -> Interval:
    """Outward-rounded enclosure of an exact rational"""
    _check_precision(precision_bits)
    return Interval.from_rational(value, precision_bits)


def interval_pi(precision_bits: int) -> Interval:
    _check_precision(precision_bits)
    return Interval.from_raw(libmpi.mpi_pi(precision_bits), precision_bits).widen_ulps()


def interval_exp(x: Interval, precision_bits: int) -> Interval:

    """Enclosure of ``e^t`` for every ``t`` in ``x``

    :raises RangeError: an endpoint exceeds ``max_exp_argument`` in magnitude
    """
    _check_precision(precision_bits)
    _check_exp_range(*x.raw)
    return Interval.from_raw(libmpi.mpi_exp(x.raw, precision_bits), precision_bits).widen_ulps()


def interval_ln(x: Interval, precision_bits: int) -> Interval:

    """Enclosure of ``ln t`` for every ``t`` in ``x``

    :raises DomainError: ``x.lo <= 0``
    """
    _check_precision(precision_bits)
    if not x.is_positive():
        raise DomainError("ln of a non-positive argument", lo=str(x.lo))
    return Interval.from_raw(libmpi.mpi_log(x.raw, precision_bits), precision_bits).widen_ulps()


def interval_sqrt(x: Interval, precision_bits: int) -> Interval:
    _check_precision(precision_bits)
    if x.lo < 0:
        raise DomainError("sqrt of a negative argument", lo=str(x.lo))
    # mpf_sqrt is correctly rounded in the requested direction
    return Interval.from_raw(libmpi.mpi_sqrt(x.raw, precision_bits), precision_bits)


def interval_pow(
    x: Interval,
    y: typing.Union[Interval, int, Fraction],
    precision_bits: int,
) -> Interval:

    """Enclosure of ``x ** y`` for ``x.lo > 0``

    Integer exponents use repeated multiplication; anything else goes
    through ``exp(y * ln x)``.
    """
    _check_precision(precision_bits)
    if not x.is_positive():
        raise DomainError("power of a non-positive base", lo=str(x.lo))
    if isinstance(y, int) and not isinstance(y, bool):
        return x.with_precision(precision_bits) ** y
    wp = precision_bits + GUARD_BITS
    y = Interval.coerce(y, wp)
    return interval_exp(y * interval_ln(x, wp), wp).with_precision(precision_bits)


def _sinhc_point(r: tuple, precision_bits: int) -> Interval:

    """Enclosure of sinh(r)/r for a single r >= 0"""
    if r == libmp.fzero:
        return Interval(libmp.fone, libmp.fone, precision_bits)
    wp = precision_bits + GUARD_BITS
    t = Interval(r, r, wp)
    if libmp.mpf_gt(r, libmp.fone):
        e = interval_exp(t, wp)
        return ((e - 1 / e).scale2(-1) / t).with_precision(precision_bits)

    # sum_k r^(2k)/(2k+1)!; term ratio r^2/((2k+2)(2k+3)) <= 1/6
    r2 = t.square()
    total = Interval(libmp.fone, libmp.fone, wp)
    term = total
    eps = libmp.from_man_exp(1, -wp)
    k = 0
    while True:
        term = term * r2 / ((2 * k + 2) * (2 * k + 3))
        k += 1
        if libmp.mpf_lt(term.raw[1], eps):
            break
        total = total + term
    # the omitted tail is positive and below twice its first term
    tail = Interval(libmp.fzero, libmp.mpf_shift(term.raw[1], 1), wp)
    return (total + tail).with_precision(precision_bits)


def _sinh_point(v: tuple, precision_bits: int) -> Interval:
    r = libmp.mpf_abs(v)
    wp = precision_bits + GUARD_BITS
    out = _sinhc_point(r, wp) * Interval(r, r, wp)
    if libmp.mpf_sign(v) < 0:
        out = -out
    return out.with_precision(precision_bits)


def interval_sinh(x: Interval, precision_bits: int) -> Interval:

    """Enclosure of ``sinh t`` for every ``t`` in ``x``

    sinh is increasing, so each endpoint is enclosed on its own and
    the outer bounds are kept.
    """
    _check_precision(precision_bits)
    _check_exp_range(*x.raw)
    lo = _sinh_point(x.raw[0], precision_bits)
    hi = _sinh_point(x.raw[1], precision_bits)
    return Interval(lo.raw[0], hi.raw[1], precision_bits)


def interval_sinhc(x: Interval, precision_bits: int) -> Interval:

    """Enclosure of ``sinh(t)/t`` (1 at t = 0) for every ``t`` in ``x``

    The function is even and increasing in ``|t|``; its smallest value
    is at the member nearest zero and its largest at the member farthest
    from zero.
    """
    _check_precision(precision_bits)
    lo_abs = libmp.mpf_abs(x.raw[0])
    hi_abs = libmp.mpf_abs(x.raw[1])
    near, far = libmpi.mpf_min_max([lo_abs, hi_abs])
    if x.contains_zero():
        near = libmp.fzero
    _check_exp_range(far)
    return Interval(
        _sinhc_point(near, precision_bits).raw[0],
        _sinhc_point(far, precision_bits).raw[1],
        precision_bits,
    )
