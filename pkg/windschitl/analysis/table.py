"""Relative-error comparison of the closed formulas against the gamma oracle
"""

__all__ = [
    "DEFAULT_TABLE_XS",
    "DEFAULT_TABLE_FORMULAS",
    "ComparisonRow",
    "relative_error",
    "comparison_table",
]

import dataclasses
import typing
from fractions import Fraction
from typing import Optional as Opt

from ..approximations import FormulaId, log_correction
from ..log import get_logger, log_operation
from ..numerics import Interval, Real, RealLike, resolve_precision, interval_exp
from ..numerics.elementary import GUARD_BITS
from ..data.settings.analysis import get_setting as get_analysis_setting
from .common import as_grid, oracle_residual
from .executor import map_ordered

logger = get_logger(__name__)

DEFAULT_TABLE_XS: typing.Tuple[int, ...] = (1, 2, 5, 10, 20, 50, 100)
DEFAULT_TABLE_FORMULAS: typing.Tuple[FormulaId, ...] = (
    FormulaId.W1, FormulaId.WC1, FormulaId.W01, FormulaId.WL1,
)

# expected error ~ 1e-4 x^-7; the oracle is asked for 1e-6 of that
EXPECTED_ERROR_SCALE = Fraction(1, 10 ** 4)
ORACLE_SHARE = Fraction(1, 10 ** 6)


@dataclasses.dataclass(frozen=True)
class ComparisonRow:

    """Relative errors ``|W(x) - Gamma(x+1)| / Gamma(x+1)`` at one x

    :ivar errors: upper bound of each error enclosure
    :ivar enclosures: the error enclosures themselves
    :ivar starved: formulas whose enclosure is too wide to trust the
        printed digits (lo and hi differ by more than the starvation
        threshold)
    """

    x: Real
    errors: typing.Dict[FormulaId, Real]
    enclosures: typing.Dict[FormulaId, Interval]
    starved: typing.Tuple[FormulaId, ...] = ()

    @property
    def is_starved(self) -> bool:
        return bool(self.starved)

    def formatted(self, digits: int) -> typing.Dict[FormulaId, str]:
        return {f: e.to_scientific(digits) for f, e in self.errors.items()}


def relative_error(correction: Interval, residual: Interval, precision_bits: int) -> Interval:
    """``|exp(L_W - S) - 1|`` from the two log corrections"""
    return abs(interval_exp(correction - residual, precision_bits) - 1)


def _expected_error(x: Real) -> Fraction:
    x_q = x.as_fraction()
    return EXPECTED_ERROR_SCALE / max(Fraction(1), x_q) ** 7


def _row(
    x: Real,
    formulas: typing.Sequence[FormulaId],
    precision_bits: int,
) -> ComparisonRow:
    wp = precision_bits + GUARD_BITS
    threshold = Fraction(get_analysis_setting().starvation_threshold)
    residual = oracle_residual(x, precision_bits, _expected_error(x) * ORACLE_SHARE)
    errors: typing.Dict[FormulaId, Real] = {}
    enclosures: typing.Dict[FormulaId, Interval] = {}
    starved = []
    for formula in formulas:
        err = relative_error(log_correction(formula, x, wp), residual, wp) \
            .with_precision(precision_bits)
        enclosures[formula] = err
        errors[formula] = err.hi
        lo, hi = err.as_fractions()
        if hi - lo > threshold * hi:
            starved.append(formula)
            logger.warning("precision starved cell", x=str(x),
                           formula=formula.value, precision_bits=precision_bits)
    return ComparisonRow(x=x, errors=errors, enclosures=enclosures, starved=tuple(starved))


@log_operation(exclude=("xs",), summarize=lambda rows: {"rows": len(rows)})
def comparison_table(
    xs: typing.Iterable[RealLike] = DEFAULT_TABLE_XS,
    formulas: typing.Iterable[typing.Union[FormulaId, str]] = DEFAULT_TABLE_FORMULAS,
    precision_bits: Opt[int] = None,
) -> typing.List[ComparisonRow]:

    """One row per x, in input order

    :raises DomainError: some x <= 0
    :raises PrecisionError: the oracle cannot reach the needed width

    Example
    -------
    >>> row, = comparison_table([1], ["w1"], 256)
    >>> row.errors[FormulaId.W1].to_scientific(4)
    '1.832e-4'
    """
    precision_bits = resolve_precision(precision_bits)
    formulas = [FormulaId.parse(f) for f in formulas]
    grid = as_grid(xs, precision_bits)
    return map_ordered(lambda x: _row(x, formulas, precision_bits), grid)
