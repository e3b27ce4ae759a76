"""Gamma oracle

Rigorous enclosure of Gamma(x+1) for x > 0 from the two-sided Stirling
bound (the 2n- and (2n-1)-term Stirling sums bracket
``ln Gamma(x+1) - ln(sqrt(2 pi x)(x/e)^x)`` for every x > 0), applied at
a shifted argument ``y = x + m`` and carried back down with
``Gamma(y+1) = Gamma(x+1) (x+1)(x+2)...(x+m)``.

No gamma implementation from a library is involved.
"""

__all__ = [
    "GammaEnclosure",
    "gamma_enclosure",
]

import dataclasses
import functools
import math
import typing
from fractions import Fraction
from typing import Optional as Opt

from mpmath import libmp

from .coefficients import coeff_stirling
from .exceptions import DomainError, PrecisionError
from .log import get_logger, log_operation
from .numerics import (
    Interval, IntervalLike, Real, resolve_precision,
    interval_exp, interval_ln,
)
from .numerics.elementary import GUARD_BITS
from .series import stirling_exponent, stirling_log_prefactor
from .data.settings.reference import get_setting as get_reference_setting

logger = get_logger(__name__)

# share of the relative-width budget given to the Stirling truncation
TRUNCATION_SHARE = Fraction(1, 4)


@dataclasses.dataclass(frozen=True)
class GammaEnclosure:

    """Oracle result

    :ivar log_value: contains ln Gamma(x+1)
    :ivar residual: contains ln Gamma(x+1) - ln(sqrt(2 pi x)(x/e)^x)
    :ivar shift_used: m, the Stirling bound was applied at x + m
    :ivar stirling_terms: terms of the even (lower) Stirling sum, 2n
    """

    log_value: Interval
    residual: Interval
    shift_used: int
    stirling_terms: int
    precision_bits: int

    @functools.cached_property
    def value(self) -> Interval:

        """Enclosure of Gamma(x+1), exponentiated on first access

        :raises RangeError: ln Gamma(x+1) beyond ``max_exp_argument``
        """
        wp = self.precision_bits + GUARD_BITS
        return interval_exp(self.log_value, wp).with_precision(self.precision_bits)

    @property
    def relative_width(self) -> Real:
        """``exp(width of log_value) - 1``, the relative width of ``value``"""
        width = Interval.point(self.log_value.width(), self.precision_bits)
        return (interval_exp(width, self.precision_bits) - 1).hi


def _truncation_width(y_lo: Interval, pairs: int, precision_bits: int) -> Real:
    """Upper bound of ``|B_4n| / (4n(4n-1) y^(4n-1))`` over the shifted argument"""
    head = Interval.from_rational(abs(coeff_stirling(2 * pairs)[0]), precision_bits)
    return (head / y_lo ** (4 * pairs - 1)).hi


def _choose(
    x: Interval,
    budget: Fraction,
    precision_bits: int,
) -> typing.Tuple[int, int]:

    """Smallest shift (from the x_min heuristic) and then smallest pair count
    meeting the truncation budget

    :raises PrecisionError: no admissible (shift, pairs) within the limits
    """
    setting = get_reference_setting()
    x_lo = x.as_fractions()[0]
    shift = max(0, math.ceil(setting.x_min - x_lo))
    best: Opt[Real] = None
    while True:
        if shift > setting.max_shift:
            raise PrecisionError(
                "target width not reachable within the shift limit",
                achievable_width=None if best is None else best.to_scientific(4),
                max_shift=setting.max_shift,
                max_stirling_pairs=setting.max_stirling_pairs,
            )
        y_lo = Interval.point(x.lo, precision_bits) + shift
        for pairs in range(1, setting.max_stirling_pairs + 1):
            width = _truncation_width(y_lo, pairs, precision_bits)
            if best is None or width < best:
                best = width
            if width <= budget:
                return shift, pairs
        if shift == setting.max_shift:
            shift += 1
        else:
            shift = min(setting.max_shift, max(shift + 8, 2 * shift))


@log_operation(summarize=lambda enc: {
    "shift": enc.shift_used, "terms": enc.stirling_terms,
})
def gamma_enclosure(
    x: IntervalLike,
    target_rel_width: typing.Union[Real, Fraction, float, str, None] = None,
    precision_bits: Opt[int] = None,
) -> GammaEnclosure:

    """Enclose Gamma(x+1) to a relative width

    :param target_rel_width: defaults to the reference setting
        ``default_rel_width``; must exceed ``2^(8 - precision_bits)``
    :raises DomainError: x <= 0
    :raises PrecisionError: the target is not reachable at this precision
        or within the shift / term limits; carries ``achievable_width``

    Example
    -------
    >>> gamma_enclosure(10, "1e-30", 256).value.contains(3628800)
    True
    """
    precision_bits = resolve_precision(precision_bits)
    if target_rel_width is None:
        target_rel_width = get_reference_setting().default_rel_width
    if isinstance(target_rel_width, Real):
        target = target_rel_width.as_fraction()
    else:
        target = Fraction(target_rel_width)

    floor = Fraction(2) ** (8 - precision_bits)
    if target <= floor:
        raise PrecisionError(
            "target width below what the precision can carry",
            achievable_width=libmp.to_str(libmp.from_rational(
                floor.numerator, floor.denominator, 53, libmp.round_ceiling), 4),
            target=str(float(target)), precision_bits=precision_bits,
        )

    wp = precision_bits + GUARD_BITS
    x = Interval.coerce(x, wp).with_precision(wp)
    if not x.is_positive():
        raise DomainError("x must be positive", x=str(x.lo))

    shift, pairs = _choose(x, target * TRUNCATION_SHARE, wp)
    logger.debug("oracle parameters chosen", shift=shift, pairs=pairs)

    y = x + shift
    stirling_y = stirling_exponent(y, pairs, wp).value
    log_gamma_y = stirling_log_prefactor(y, wp) + stirling_y
    if shift:
        product = Interval.from_rational(1, wp)
        for j in range(1, shift + 1):
            product = product * (x + j)
        log_value = log_gamma_y - interval_ln(product, wp)
        residual = log_value - stirling_log_prefactor(x, wp)
    else:
        residual = stirling_y
        log_value = log_gamma_y

    enclosure = GammaEnclosure(
        log_value=log_value.with_precision(precision_bits),
        residual=residual.with_precision(precision_bits),
        shift_used=shift,
        stirling_terms=2 * pairs,
        precision_bits=precision_bits,
    )
    achieved = enclosure.relative_width
    if achieved.as_fraction() > target:
        raise PrecisionError(
            "enclosure wider than requested",
            achievable_width=achieved.to_scientific(4),
            target=str(float(target)), precision_bits=precision_bits,
        )
    return enclosure
