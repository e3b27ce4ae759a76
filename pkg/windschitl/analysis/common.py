"""Helpers shared by the analysis operations.
"""

__all__ = [
    "oracle_target",
    "oracle_residual",
    "as_grid",
]

import typing
from fractions import Fraction
from typing import Optional as Opt

from ..exceptions import DomainError
from ..numerics import Interval, Real, RealLike, as_real
from ..reference import gamma_enclosure
from ..data.settings.reference import get_setting as get_reference_setting

# the oracle is asked for 2^16 ulps of headroom above the precision floor
ORACLE_HEADROOM_BITS = 16


def oracle_target(precision_bits: int, wanted: Opt[Fraction] = None) -> Fraction:

    """Relative width to ask the oracle for

    ``wanted`` (default: the reference setting ``default_rel_width``),
    but never below what ``precision_bits`` can deliver.
    """
    if wanted is None:
        wanted = Fraction(get_reference_setting().default_rel_width)
    return max(wanted, Fraction(2) ** (ORACLE_HEADROOM_BITS - precision_bits))


def oracle_residual(
    x: Real,
    precision_bits: int,
    wanted: Opt[Fraction] = None,
) -> Interval:
    """Enclosure of ``ln Gamma(x+1) - ln(sqrt(2 pi x)(x/e)^x)``"""
    return gamma_enclosure(x, oracle_target(precision_bits, wanted), precision_bits).residual


def as_grid(
    values: typing.Iterable[RealLike],
    precision_bits: int,
    minimum: typing.Union[int, Fraction] = 0,
    strict: bool = True,
) -> typing.List[Real]:

    """Convert grid values and check their lower bound

    :param strict: ``x > minimum`` when true, ``x >= minimum`` otherwise
    :raises DomainError: a value violates the bound
    """
    grid = [as_real(v, precision_bits) for v in values]
    for x in grid:
        if (x <= minimum) if strict else (x < minimum):
            raise DomainError(
                "grid value out of range", x=str(x),
                bound=(">" if strict else ">=") + str(minimum),
            )
    return grid
