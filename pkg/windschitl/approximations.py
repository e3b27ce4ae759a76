"""Windschitl-type closed formulas and truncated expansions of Gamma(x+1)

Every approximation here has the shape
``sqrt(2 pi x) (x/e)^x * exp(L(x))``; ``L`` is its *log correction*.
Comparisons between formulas and against the gamma oracle are done on
log corrections, where the shared Stirling prefactor drops out exactly.

With ``t = 1/x`` and ``s = sinh(t)/t``:

======== =====================================================
w0       ``(x/2) ln s``
w1       ``(x/2) ln(s + t^6/810)``
w01      ``(x/2) ln s + t^5/1620``
w01star  ``(x/2) ln s + ln(1 + t^5/1620)``
wc1      ``(x/2)(1 + t^4/135) ln s``
wl1      ``(x/2) ln(sinh(t + t^7/810) / t)``
======== =====================================================
"""

__all__ = [
    "FormulaId",
    "ExpansionFamily",
    "ExpansionSpec",
    "log_correction",
    "expansion_log_correction",
    "stirling_prefactor",
    "eval_formula",
    "eval_expansion",
    "remainder_bound",
    "remainder_bound_enclosure",
]

import dataclasses
import enum
import typing
from fractions import Fraction
from typing import Optional as Opt

from .coefficients import coeff_a, coeff_b, coeff_c
from .exceptions import ContractError, DomainError, ParamsInvalid
from .numerics import (
    Interval, IntervalLike, Real, bernoulli, resolve_precision,
    interval_exp, interval_ln, interval_pi, interval_sinhc, interval_sqrt,
)
from .numerics.elementary import GUARD_BITS
from .series import stirling_log_prefactor
from .utils import load_enum

# below this an integer x uses x^x / e^x directly
DIRECT_POWER_LIMIT = 30


@enum.unique
class FormulaId(enum.Enum):

    W0 = "w0"
    W1 = "w1"
    W01 = "w01"
    W01_STAR = "w01star"
    WC1 = "wc1"
    WL1 = "wl1"

    @classmethod
    def parse(cls, name: typing.Union[str, "FormulaId"]) -> "FormulaId":
        try:
            return load_enum(cls, name.lower() if isinstance(name, str) else name)
        except ValueError as e:
            raise ParamsInvalid(
                "unknown formula", formula=name,
                choices=",".join(f.value for f in cls),
            ) from e


@enum.unique
class ExpansionFamily(enum.Enum):

    EXP_SERIES = "exp"
    '''``(x/2) ln s + sum_{k=3}^{n} a_k x^-(2k-1)``'''
    MULT_SERIES = "mult"
    '''``(x/2) ln s + ln(1 + sum_{k=1}^{n} b_k x^-k)``'''
    EXPONENT_SERIES = "exponent"
    '''``(x/2)(sum_{k=0}^{n} c_k x^-2k) ln s``'''

    @property
    def min_truncation(self) -> int:
        """Smallest index with a nonzero correction coefficient"""
        return {
            ExpansionFamily.EXP_SERIES: 3,
            ExpansionFamily.MULT_SERIES: 5,
            ExpansionFamily.EXPONENT_SERIES: 2,
        }[self]


@dataclasses.dataclass(frozen=True)
class ExpansionSpec:

    family: ExpansionFamily
    truncation_n: int

    def __post_init__(self):
        if self.truncation_n < self.family.min_truncation:
            raise ContractError(
                "truncation below family minimum",
                family=self.family.value,
                truncation_n=self.truncation_n,
                min_truncation=self.family.min_truncation,
            )


def _prepare(x: IntervalLike, wp: int) -> typing.Tuple[Interval, Interval, Interval]:
    """x, t = 1/x and ln(sinh t / t), all at ``wp``"""
    x = Interval.coerce(x, wp).with_precision(wp)
    if not x.is_positive():
        raise DomainError("x must be positive", x=str(x.lo))
    t = 1 / x
    return x, t, interval_ln(interval_sinhc(t, wp), wp)


def _half(x: Interval) -> Interval:
    return x.scale2(-1)


def _w0(x: Interval, t: Interval, ln_s: Interval, wp: int) -> Interval:
    return _half(x) * ln_s


def _w1(x: Interval, t: Interval, ln_s: Interval, wp: int) -> Interval:
    s = interval_sinhc(t, wp)
    return _half(x) * interval_ln(s + t ** 6 / 810, wp)


def _w01(x: Interval, t: Interval, ln_s: Interval, wp: int) -> Interval:
    return _half(x) * ln_s + t ** 5 / 1620


def _w01_star(x: Interval, t: Interval, ln_s: Interval, wp: int) -> Interval:
    return _half(x) * ln_s + interval_ln(1 + t ** 5 / 1620, wp)


def _wc1(x: Interval, t: Interval, ln_s: Interval, wp: int) -> Interval:
    return _half(x) * (1 + t ** 4 / 135) * ln_s


def _wl1(x: Interval, t: Interval, ln_s: Interval, wp: int) -> Interval:
    # sinh(u)/t = (sinh(u)/u) (1 + t^6/810), u = t + t^7/810
    t6 = t ** 6 / 810
    u = t * (1 + t6)
    return _half(x) * (interval_ln(interval_sinhc(u, wp), wp) + interval_ln(1 + t6, wp))


_FORMULAS: typing.Dict[
    FormulaId, typing.Callable[[Interval, Interval, Interval, int], Interval]
] = {
    FormulaId.W0: _w0,
    FormulaId.W1: _w1,
    FormulaId.W01: _w01,
    FormulaId.W01_STAR: _w01_star,
    FormulaId.WC1: _wc1,
    FormulaId.WL1: _wl1,
}


def log_correction(
    formula: typing.Union[FormulaId, str],
    x: IntervalLike,
    precision_bits: Opt[int] = None,
) -> Interval:

    """Enclosure of ``ln W(x) - ln(sqrt(2 pi x)(x/e)^x)``

    :raises DomainError: x <= 0
    """
    formula = FormulaId.parse(formula)
    precision_bits = resolve_precision(precision_bits)
    wp = precision_bits + GUARD_BITS
    x, t, ln_s = _prepare(x, wp)
    return _FORMULAS[formula](x, t, ln_s, wp).with_precision(precision_bits)


def _poly(coeffs: typing.Sequence[Fraction], z: Interval, wp: int) -> Interval:
    """``sum_k coeffs[k] z^k``"""
    acc = Interval.from_rational(coeffs[-1], wp)
    for c in reversed(coeffs[:-1]):
        acc = acc * z + Interval.from_rational(c, wp)
    return acc


def expansion_log_correction(
    spec: ExpansionSpec,
    x: IntervalLike,
    precision_bits: Opt[int] = None,
) -> Interval:
    """Log correction of a truncated expansion, see :class:`ExpansionFamily`"""
    precision_bits = resolve_precision(precision_bits)
    wp = precision_bits + GUARD_BITS
    x, t, ln_s = _prepare(x, wp)
    n = spec.truncation_n
    base = _half(x) * ln_s

    if spec.family is ExpansionFamily.EXP_SERIES:
        # sum_{k=3}^{n} a_k t^(2k-1) = t^5 sum_{j=0}^{n-3} a_(j+3) (t^2)^j
        tail = _poly([coeff_a(k) for k in range(3, n + 1)], t.square(), wp) * t ** 5
        out = base + tail
    elif spec.family is ExpansionFamily.MULT_SERIES:
        series = _poly([coeff_b(k) for k in range(0, n + 1)], t, wp)
        out = base + interval_ln(series, wp)
    else:
        series = _poly([coeff_c(k) for k in range(0, n + 1)], t.square(), wp)
        out = base * series
    return out.with_precision(precision_bits)


def stirling_prefactor(x: IntervalLike, precision_bits: Opt[int] = None) -> Interval:

    """Enclosure of ``sqrt(2 pi x) (x/e)^x``

    Integer x up to 30 uses ``x^x / e^x`` directly; everything else goes
    through ``exp`` of :func:`windschitl.series.stirling_log_prefactor`.
    """
    precision_bits = resolve_precision(precision_bits)
    wp = precision_bits + GUARD_BITS
    x = Interval.coerce(x, wp).with_precision(wp)
    if not x.is_positive():
        raise DomainError("x must be positive", x=str(x.lo))

    lo, hi = x.as_fractions()
    if lo == hi and lo.denominator == 1 and lo <= DIRECT_POWER_LIMIT:
        n = lo.numerator
        e = interval_exp(Interval.from_rational(1, wp), wp)
        root = interval_sqrt(interval_pi(wp).scale2(1) * x, wp)
        out = root * Interval.from_rational(n ** n, wp) / e ** n
    else:
        out = interval_exp(stirling_log_prefactor(x, wp), wp)
    return out.with_precision(precision_bits)


def eval_formula(
    formula: typing.Union[FormulaId, str],
    x: IntervalLike,
    precision_bits: Opt[int] = None,
) -> Interval:

    """Enclosure of the closed formula's value W(x)

    Example
    -------
    >>> eval_formula(FormulaId.W1, 1, 256).mid().to_scientific(8)
    '1.0001832e+0'
    """
    precision_bits = resolve_precision(precision_bits)
    wp = precision_bits + GUARD_BITS
    correction = log_correction(formula, x, wp)
    return (stirling_prefactor(x, wp) * interval_exp(correction, wp)) \
        .with_precision(precision_bits)


def eval_expansion(
    spec: ExpansionSpec,
    x: IntervalLike,
    precision_bits: Opt[int] = None,
) -> Interval:
    """Enclosure of the truncated expansion's value"""
    precision_bits = resolve_precision(precision_bits)
    wp = precision_bits + GUARD_BITS
    correction = expansion_log_correction(spec, x, wp)
    return (stirling_prefactor(x, wp) * interval_exp(correction, wp)) \
        .with_precision(precision_bits)


def remainder_bound_enclosure(
    n: int,
    x: IntervalLike,
    precision_bits: Opt[int] = None,
) -> Interval:

    """Enclosure of ``|B_2n| / (2n(2n-1) x^(2n-1))``

    Bounds the tail of the exp-series after its ``a_(n-1)`` term.

    :raises ContractError: n < 4
    """
    if n < 4:
        raise ContractError("remainder bound needs n >= 4", n=n)
    precision_bits = resolve_precision(precision_bits)
    x = Interval.coerce(x, precision_bits)
    if not x.is_positive():
        raise DomainError("x must be positive", x=str(x.lo))
    head = Interval.from_rational(abs(bernoulli(2 * n)) / (2 * n * (2 * n - 1)), precision_bits)
    return head / x ** (2 * n - 1)


def remainder_bound(
    n: int,
    x: IntervalLike,
    precision_bits: Opt[int] = None,
) -> Real:
    """``|B_2n| / (2n(2n-1) x^(2n-1))`` rounded up"""
    return remainder_bound_enclosure(n, x, precision_bits).hi
