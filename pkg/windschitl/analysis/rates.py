"""Leading error constants ``lim x^7 (ln Gamma(x+1) - ln W(x))``
"""

__all__ = [
    "RATE_TARGETS",
    "RATE_PROBE_MIN",
    "RateEstimate",
    "rate_constant",
    "rate_tolerance",
    "verify_rates",
]

import dataclasses
import typing
from fractions import Fraction
from typing import Optional as Opt

from ..approximations import FormulaId, log_correction
from ..exceptions import ContractError
from ..log import get_logger, log_operation
from ..numerics import Interval, Real, RealLike, as_real, resolve_precision, format_rational
from ..numerics.elementary import GUARD_BITS
from .common import as_grid, oracle_residual
from .executor import map_ordered
from .report import CheckItem, CheckStatus, VerificationReport

logger = get_logger(__name__)

RATE_TARGETS: typing.Dict[FormulaId, Fraction] = {
    FormulaId.W1: Fraction(-163, 340200),
    FormulaId.WC1: Fraction(-191, 340200),
    FormulaId.W01: Fraction(-198, 340200),
    FormulaId.W01_STAR: Fraction(-198, 340200),
    FormulaId.WL1: Fraction(-268, 340200),
}
'''W0 is missing: its error decays like x^-5, not x^-7'''

RATE_PROBE_MIN = 10

# next-order correction is O(x^-2) relative: 0.5% at 1e3, 0.005% at 1e4
TOLERANCE_SCALE = 5000


@dataclasses.dataclass(frozen=True)
class RateEstimate:

    formula: FormulaId
    x_probe: Real
    estimate: Interval
    '''Encloses x^7 (ln Gamma(x+1) - ln W(x)) at x_probe'''
    target: Fraction

    def relative_deviation(self) -> Interval:
        """``estimate / target - 1``"""
        return self.estimate / self.target - 1


def rate_tolerance(x: Real) -> Fraction:
    """Relative tolerance ``5000 / x^2`` around the limit constant"""
    return TOLERANCE_SCALE / x.as_fraction() ** 2


def _target(formula: FormulaId) -> Fraction:
    try:
        return RATE_TARGETS[formula]
    except KeyError:
        raise ContractError(
            "formula has no x^-7 rate constant", formula=formula.value,
        ) from None


def rate_constant(
    formula: typing.Union[FormulaId, str],
    x_probe: RealLike,
    precision_bits: Opt[int] = None,
) -> RateEstimate:

    """Probe ``x^7 (ln Gamma(x+1) - ln W(x))`` at one x

    :raises ContractError: x_probe < 10, or the formula is w0
    """
    formula = FormulaId.parse(formula)
    precision_bits = resolve_precision(precision_bits)
    target = _target(formula)
    x = as_real(x_probe, precision_bits)
    if x < RATE_PROBE_MIN:
        raise ContractError("rate probes need x >= %d" % RATE_PROBE_MIN, x_probe=str(x))

    wp = precision_bits + GUARD_BITS
    residual = oracle_residual(x, precision_bits)
    correction = log_correction(formula, x, wp)
    estimate = (Interval.point(x, wp) ** 7 * (residual - correction)).with_precision(precision_bits)
    return RateEstimate(formula=formula, x_probe=x, estimate=estimate, target=target)


def _rate_item(formula: FormulaId, x: Real, precision_bits: int) -> CheckItem:
    rate = rate_constant(formula, x, precision_bits)
    tol = rate_tolerance(x)
    band = Interval.from_rational(rate.target * (1 + tol), precision_bits).hull(
        Interval.from_rational(rate.target * (1 - tol), precision_bits))
    if band.is_superset(rate.estimate):
        status = CheckStatus.CERTIFIED
    elif not band.overlaps(rate.estimate):
        status = CheckStatus.VIOLATED
    else:
        status = CheckStatus.INCONCLUSIVE
    if status is not CheckStatus.CERTIFIED:
        logger.warning("rate estimate not certified", formula=formula.value,
                       x=str(x), status=status.value)
    return CheckItem(
        f"rate {formula.value}",
        status,
        x=x,
        precision_bits=precision_bits,
        estimate=rate.estimate,
        target=format_rational(rate.target),
        tolerance=format_rational(tol),
    )


@log_operation(summarize=lambda report: report.counts())
def verify_rates(
    formulas: typing.Iterable[typing.Union[FormulaId, str]] = tuple(RATE_TARGETS),
    xs: typing.Iterable[RealLike] = (1000, 10000),
    precision_bits: Opt[int] = None,
) -> VerificationReport:

    """Check every rate estimate lies within ``5000 / x^2`` (relative) of its
    limit constant
    """
    precision_bits = resolve_precision(precision_bits)
    formulas = [FormulaId.parse(f) for f in formulas]
    for formula in formulas:
        _target(formula)
    grid = as_grid(xs, precision_bits, minimum=RATE_PROBE_MIN, strict=False)
    cases = [(f, x) for x in grid for f in formulas]
    items = map_ordered(lambda case: _rate_item(case[0], case[1], precision_bits), cases)
    return VerificationReport("rate", precision_bits, items)
