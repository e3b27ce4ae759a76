"""Certified inequality checks on grids

Every check compares log corrections (see :mod:`windschitl.approximations`):
``S(x) = ln Gamma(x+1) - ln(sqrt(2 pi x)(x/e)^x)`` from the oracle against
``L_W(x)`` of each formula. A strict inequality is certified when the two
enclosures are disjoint in the right order; overlap is inconclusive,
never a violation.
"""

__all__ = [
    "ORDERING_CHAIN",
    "beta0",
    "f1",
    "verify_ordering",
    "verify_sandwich",
    "probe_f1_shape",
    "verify_remainder",
]

import typing
from fractions import Fraction
from typing import Optional as Opt

from ..approximations import (
    FormulaId, ExpansionFamily, ExpansionSpec,
    log_correction, expansion_log_correction, remainder_bound_enclosure,
)
from ..exceptions import ContractError, ParamsInvalid
from ..log import get_logger, log_operation
from ..numerics import (
    Interval, Real, RealLike, resolve_precision,
    interval_exp, interval_ln, interval_pi, interval_sinh, interval_sqrt,
)
from ..numerics.elementary import GUARD_BITS
from .common import as_grid, oracle_residual
from .executor import map_ordered
from .report import CheckItem, CheckStatus, VerificationReport, certify

logger = get_logger(__name__)

ORDERING_CHAIN: typing.Tuple[FormulaId, ...] = (
    FormulaId.W1, FormulaId.WC1, FormulaId.W01_STAR, FormulaId.W01, FormulaId.WL1,
)
'''Increasing order of the formulas for x >= 1'''

# |Gamma(2)/W1(1) - beta0| must stay below this for the x = 1 cell
ATTAINED_TOLERANCE = Fraction(1, 10 ** 6)


def beta0(precision_bits: Opt[int] = None) -> Interval:

    """Enclosure of ``e / sqrt(2 pi sinh 1 + pi/405)``, about 0.99981

    The sharp constant with ``beta0 W1(x) < Gamma(x+1)`` for x >= 1.
    """
    precision_bits = resolve_precision(precision_bits)
    wp = precision_bits + GUARD_BITS
    one = Interval.from_rational(1, wp)
    pi = interval_pi(wp)
    radicand = pi.scale2(1) * interval_sinh(one, wp) + pi / 405
    return (interval_exp(one, wp) / interval_sqrt(radicand, wp)).with_precision(precision_bits)


def _relation(left: str, right: str) -> str:
    return f"{left} < {right}"


def _ordering_items(x: Real, precision_bits: int) -> typing.List[CheckItem]:
    wp = precision_bits + GUARD_BITS
    residual = oracle_residual(x, precision_bits)
    corrections = [log_correction(f, x, wp) for f in ORDERING_CHAIN]
    items = [CheckItem(
        _relation("gamma", ORDERING_CHAIN[0].value),
        certify(residual.certify_lt(corrections[0])),
        x=x, precision_bits=precision_bits,
    )]
    for (left, lc), (right, rc) in zip(
        zip(ORDERING_CHAIN, corrections), zip(ORDERING_CHAIN[1:], corrections[1:])
    ):
        items.append(CheckItem(
            _relation(left.value, right.value),
            certify(lc.certify_lt(rc)),
            x=x, precision_bits=precision_bits,
            gap=rc - lc,
        ))
    return items


def _escalated_ordering_items(
    x: Real,
    precision_bits: int,
    escalate_to: Opt[int],
) -> typing.List[CheckItem]:
    items = _ordering_items(x, precision_bits)
    prec = precision_bits
    while escalate_to is not None and any(
        i.status is CheckStatus.INCONCLUSIVE for i in items
    ):
        if prec * 2 > escalate_to:
            break
        prec *= 2
        logger.info("escalating precision", x=str(x), precision_bits=prec)
        items = _ordering_items(Real(x.raw, prec), prec)
    for item in items:
        if item.status is CheckStatus.INCONCLUSIVE:
            logger.warning("inconclusive ordering cell", x=str(x),
                           relation=item.relation, precision_bits=prec)
    return items


@log_operation(exclude=("x_grid",), summarize=lambda report: report.counts())
def verify_ordering(
    x_grid: typing.Iterable[RealLike],
    precision_bits: Opt[int] = None,
    escalate_to: Opt[int] = None,
) -> VerificationReport:

    """Certify ``Gamma < W1 < Wc1 < W01* < W01 < Wl1`` at every grid point

    :param escalate_to: re-run inconclusive points at doubled precision
        up to this many bits
    :raises DomainError: a grid value below 1
    """
    precision_bits = resolve_precision(precision_bits)
    grid = as_grid(x_grid, precision_bits, minimum=1, strict=False)
    rows = map_ordered(
        lambda x: _escalated_ordering_items(x, precision_bits, escalate_to), grid
    )
    return VerificationReport("ordering", precision_bits, [i for row in rows for i in row])


def _sandwich_items(x: Real, ln_beta0: Interval, precision_bits: int) -> typing.List[CheckItem]:
    wp = precision_bits + GUARD_BITS
    residual = oracle_residual(x, precision_bits)
    w1 = log_correction(FormulaId.W1, x, wp)

    # ln Gamma(x+1) - ln(beta0 W1(x)), zero at x = 1
    gap = residual - w1 - ln_beta0
    verdict = (w1 + ln_beta0).certify_lt(residual)
    status = certify(verdict)
    if verdict is None and x == 1:
        lo, hi = gap.as_fractions()
        if -ATTAINED_TOLERANCE < lo and hi < ATTAINED_TOLERANCE:
            status = CheckStatus.ATTAINED
    lower = CheckItem(
        "beta0*w1 < gamma", status,
        x=x, precision_bits=precision_bits, gap=gap,
    )
    upper = CheckItem(
        "gamma < w1", certify(residual.certify_lt(w1)),
        x=x, precision_bits=precision_bits, gap=w1 - residual,
    )
    return [lower, upper]


@log_operation(exclude=("x_grid",), summarize=lambda report: report.counts())
def verify_sandwich(
    x_grid: typing.Iterable[RealLike],
    precision_bits: Opt[int] = None,
) -> VerificationReport:

    """Certify ``beta0 W1(x) < Gamma(x+1) < W1(x)`` on the grid

    At x = 1 the lower bound holds with equality; that cell is reported
    as ``ATTAINED`` when the enclosure of ``ln Gamma(2) - ln(beta0 W1(1))``
    contains zero within ``1e-6``.
    """
    precision_bits = resolve_precision(precision_bits)
    grid = as_grid(x_grid, precision_bits, minimum=1, strict=False)
    ln_beta0 = interval_ln(beta0(precision_bits + GUARD_BITS), precision_bits + GUARD_BITS)
    rows = map_ordered(lambda x: _sandwich_items(x, ln_beta0, precision_bits), grid)
    return VerificationReport("sandwich", precision_bits, [i for row in rows for i in row])


def f1(x: Real, precision_bits: int) -> Interval:
    """``f1(x) = ln Gamma(x+1) - ln W1(x)``, increasing and concave on [1, inf)"""
    wp = precision_bits + GUARD_BITS
    return oracle_residual(x, precision_bits) - log_correction(FormulaId.W1, x, wp)


@log_operation(exclude=("x_grid",), summarize=lambda report: report.counts())
def probe_f1_shape(
    x_grid: typing.Iterable[RealLike],
    precision_bits: Opt[int] = None,
) -> VerificationReport:

    """Finite-difference shape check of f1 on a grid

    Positive first differences (increasing) between neighbours and
    decreasing slopes (concave) over every three consecutive points.
    When the grid starts at 1, ``f1(1) = ln beta0`` is checked as well.

    :raises ParamsInvalid: fewer than 3 points or not strictly increasing
    """
    precision_bits = resolve_precision(precision_bits)
    grid = as_grid(x_grid, precision_bits, minimum=1, strict=False)
    if len(grid) < 3:
        raise ParamsInvalid("f1 shape needs at least 3 grid points", points=len(grid))
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ParamsInvalid("f1 grid must be strictly increasing")

    wp = precision_bits + GUARD_BITS
    values = map_ordered(lambda x: f1(x, precision_bits), grid)
    points = [Interval.point(x, wp) for x in grid]
    zero = Interval.from_rational(0, wp)
    items: typing.List[CheckItem] = []

    if grid[0] == 1:
        ln_b0 = interval_ln(beta0(wp), wp)
        items.append(CheckItem(
            "f1(1) = ln beta0",
            CheckStatus.ATTAINED if values[0].overlaps(ln_b0) else CheckStatus.VIOLATED,
            x=grid[0], precision_bits=precision_bits,
            f1=values[0], ln_beta0=ln_b0,
        ))

    slopes = []
    for i in range(len(grid) - 1):
        diff = values[i + 1] - values[i]
        items.append(CheckItem(
            "f1 increasing", certify(zero.certify_lt(diff)),
            x=grid[i], precision_bits=precision_bits, difference=diff,
        ))
        slopes.append(diff / (points[i + 1] - points[i]))
    for i in range(len(slopes) - 1):
        bend = slopes[i + 1] - slopes[i]
        items.append(CheckItem(
            "f1 concave", certify(bend.certify_lt(zero)),
            x=grid[i + 1], precision_bits=precision_bits, slope_change=bend,
        ))
    return VerificationReport("f1shape", precision_bits, items)


def _remainder_item(n: int, x: Real, precision_bits: int) -> CheckItem:
    wp = precision_bits + GUARD_BITS
    residual = oracle_residual(x, precision_bits)
    partial = expansion_log_correction(ExpansionSpec(ExpansionFamily.EXP_SERIES, n - 1), x, wp)
    remainder = abs(residual - partial)
    bound = remainder_bound_enclosure(n, x, wp)
    if remainder.hi <= bound.lo:
        status = CheckStatus.CERTIFIED
    elif remainder.lo > bound.hi:
        status = CheckStatus.VIOLATED
    else:
        status = CheckStatus.INCONCLUSIVE
    return CheckItem(
        f"|R_{n}| <= bound", status,
        x=x, precision_bits=precision_bits,
        n=n, remainder=remainder, bound=bound.hi,
    )


@log_operation(summarize=lambda report: report.counts())
def verify_remainder(
    ns: typing.Iterable[int] = range(4, 9),
    xs: typing.Iterable[RealLike] = (1, 2, 5, 10),
    precision_bits: Opt[int] = None,
) -> VerificationReport:

    """Check the exp-series tail bound
    ``|R_n(x)| <= |B_2n| / (2n(2n-1) x^(2n-1))``, where
    ``R_n(x) = S(x) - (x/2) ln(sinh(1/x) x) - sum_{k=3}^{n-1} a_k x^-(2k-1)``

    :raises ContractError: some n < 4
    """
    precision_bits = resolve_precision(precision_bits)
    ns = list(ns)
    if any(n < 4 for n in ns):
        raise ContractError("remainder bound needs n >= 4", ns=ns)
    grid = as_grid(xs, precision_bits)
    cases = [(n, x) for n in ns for x in grid]
    items = map_ordered(lambda case: _remainder_item(case[0], case[1], precision_bits), cases)
    return VerificationReport("remainder", precision_bits, items)
