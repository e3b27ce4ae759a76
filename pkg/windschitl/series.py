"""Bracketing truncations of ln(sinh t / t) and of Stirling's series

Both series alternate in sign from their second term on, and every
truncation bounds the function from one side: an even number of terms
from below, an odd number from above. Two consecutive truncations
therefore enclose the function.
"""

__all__ = [
    "BracketKind",
    "TruncatedSeries",
    "ln_sinh_over_t",
    "stirling_exponent",
    "partial_ln_sinh_over_t",
    "partial_stirling_exponent",
    "stirling_log_prefactor",
]

import dataclasses
import enum
import typing
from fractions import Fraction

from .coefficients import coeff_stirling
from .exceptions import DomainError, ParamsInvalid
from .numerics import (
    Interval, IntervalLike, resolve_precision,
    interval_ln, interval_pi,
)


@enum.unique
class BracketKind(enum.Enum):

    LOWER = "lower"
    UPPER = "upper"
    ENCLOSURE = "enclosure"

    @classmethod
    def for_terms(cls, terms: int) -> "BracketKind":
        return cls.LOWER if terms % 2 == 0 else cls.UPPER


@dataclasses.dataclass(frozen=True)
class TruncatedSeries:

    """A truncation of one of the bracketing series

    :ivar terms_used: number of series terms summed (the larger count
        for an enclosure)
    :ivar value: for ``LOWER`` / ``UPPER`` an enclosure of the partial sum;
        for ``ENCLOSURE`` an interval containing the function itself
    """

    terms_used: int
    value: Interval
    bracket_kind: BracketKind

    def contains(self, value: typing.Any) -> bool:
        return self.value.contains(value)


def _horner(coeffs: typing.Sequence[Fraction], z: Interval, precision_bits: int) -> Interval:
    """``sum_{k=1}^{m} coeffs[k-1] z^k``, highest term first"""
    acc = Interval.from_rational(coeffs[-1], precision_bits)
    for c in reversed(coeffs[:-1]):
        acc = acc * z + Interval.from_rational(c, precision_bits)
    return acc * z


def _check_terms(terms: int) -> None:
    if terms < 1:
        raise ParamsInvalid("at least one series term is required", terms=terms)


def _positive(value: IntervalLike, name: str, precision_bits: int) -> Interval:
    value = Interval.coerce(value, precision_bits)
    if not value.is_positive():
        raise DomainError(f"{name} must be positive", **{name: str(value.lo)})
    return value


def _ln_sinh_terms(t: Interval, terms: int, precision_bits: int) -> Interval:
    coeffs = [coeff_stirling(k)[1] for k in range(1, terms + 1)]
    return _horner(coeffs, t.square(), precision_bits)


def _stirling_terms(x: Interval, terms: int, precision_bits: int) -> Interval:
    # sum a'_k x^-(2k-1) = (1/x) sum a'_k w^(k-1), w = x^-2
    coeffs = [coeff_stirling(k)[0] for k in range(1, terms + 1)]
    inv = 1 / x
    w = inv.square()
    head = Interval.from_rational(coeffs[0], precision_bits)
    if terms == 1:
        return head * inv
    return (head + _horner(coeffs[1:], w, precision_bits)) * inv


def partial_ln_sinh_over_t(
    t: IntervalLike,
    terms: int,
    precision_bits: typing.Optional[int] = None,
) -> TruncatedSeries:

    """``sum_{k=1}^{terms} 2^2k B_2k t^2k / (2k (2k)!)``

    A lower bound of ln(sinh t / t) for even ``terms`` and an upper
    bound for odd ``terms``, for every t > 0.
    """
    precision_bits = resolve_precision(precision_bits)
    _check_terms(terms)
    t = _positive(t, "t", precision_bits)
    return TruncatedSeries(
        terms_used=terms,
        value=_ln_sinh_terms(t, terms, precision_bits),
        bracket_kind=BracketKind.for_terms(terms),
    )


def ln_sinh_over_t(
    t: IntervalLike,
    n: int,
    precision_bits: typing.Optional[int] = None,
) -> TruncatedSeries:

    """Enclosure of ln(sinh t / t) between the 2n- and (2n-1)-term truncations

    :raises DomainError: t <= 0, or t not certified below pi
    """
    precision_bits = resolve_precision(precision_bits)
    _check_terms(n)
    t = _positive(t, "t", precision_bits)
    if t.certify_lt(interval_pi(precision_bits)) is not True:
        raise DomainError("t must be below pi", t=str(t.hi))

    upper = _ln_sinh_terms(t, 2 * n - 1, precision_bits)
    last = Interval.from_rational(coeff_stirling(2 * n)[1], precision_bits) \
        * t ** (4 * n)
    lower = upper + last
    return TruncatedSeries(
        terms_used=2 * n,
        value=Interval.from_raw((lower.raw[0], upper.raw[1]), precision_bits),
        bracket_kind=BracketKind.ENCLOSURE,
    )


def partial_stirling_exponent(
    x: IntervalLike,
    terms: int,
    precision_bits: typing.Optional[int] = None,
) -> TruncatedSeries:

    """``sum_{k=1}^{terms} B_2k / (2k(2k-1) x^(2k-1))``

    Lower bound of ln(Gamma(x+1)) - ln(sqrt(2 pi x)(x/e)^x) for even
    ``terms``, upper bound for odd ``terms``, for every x > 0.
    """
    precision_bits = resolve_precision(precision_bits)
    _check_terms(terms)
    x = _positive(x, "x", precision_bits)
    return TruncatedSeries(
        terms_used=terms,
        value=_stirling_terms(x, terms, precision_bits),
        bracket_kind=BracketKind.for_terms(terms),
    )


def stirling_exponent(
    x: IntervalLike,
    n: int,
    precision_bits: typing.Optional[int] = None,
) -> TruncatedSeries:

    """Enclosure of ln(Gamma(x+1)) - ln(sqrt(2 pi x)(x/e)^x), any x > 0

    Lies between the 2n-term and the (2n-1)-term Stirling sums; the
    width is the magnitude of the 2n-th term,
    ``|B_4n| / (4n(4n-1) x^(4n-1))``.
    """
    precision_bits = resolve_precision(precision_bits)
    _check_terms(n)
    x = _positive(x, "x", precision_bits)

    upper = _stirling_terms(x, 2 * n - 1, precision_bits)
    last = Interval.from_rational(coeff_stirling(2 * n)[0], precision_bits) \
        / x ** (4 * n - 1)
    lower = upper + last
    return TruncatedSeries(
        terms_used=2 * n,
        value=Interval.from_raw((lower.raw[0], upper.raw[1]), precision_bits),
        bracket_kind=BracketKind.ENCLOSURE,
    )


def stirling_log_prefactor(
    x: IntervalLike,
    precision_bits: typing.Optional[int] = None,
) -> Interval:
    """``ln(sqrt(2 pi x) (x/e)^x) = (x + 1/2) ln x - x + ln(2 pi)/2``"""
    precision_bits = resolve_precision(precision_bits)
    x = _positive(x, "x", precision_bits)
    ln_2pi = interval_ln(interval_pi(precision_bits).scale2(1), precision_bits)
    return (x + Fraction(1, 2)) * interval_ln(x, precision_bits) - x + ln_2pi.scale2(-1)
