"""Coefficient families of the Windschitl-type expansions

All families are exact rationals built from Bernoulli numbers with
integer factorials and powers of two.

Families
--------
- ``A``: exponent series ``exp(sum a_n x^-(2n-1))`` of the gamma / Windschitl ratio
- ``A_STAR``: the same coefficients re-indexed by power, ``a*_(2k-1) = a_k``
- ``B``: multiplicative series ``1 + sum b_n x^-n``
- ``C``: series in the Windschitl exponent ``(x/2)(1 + sum c_n x^-2n)``
- ``STIRLING_PRIME`` / ``STIRLING_DPRIME``: ``a'_n`` of Stirling's series
  and ``a''_n`` of the ln(sinh t / t) series
- ``LU``: three fixed constants of Lu's expansion
"""

__all__ = [
    "CoefficientFamily",
    "CoefficientTable",
    "get_coefficient_table",
    "coeff_a",
    "coeff_a_star",
    "coeff_b",
    "coeff_b_expanded",
    "coeff_c",
    "coeff_stirling",
    "lu_constants",
    "family_values",
]

import enum
import math
import threading
import typing
from fractions import Fraction

from .exceptions import ParamsInvalid
from .log import get_logger
from .numerics.bernoulli import bernoulli
from .data.settings.numerics import get_setting as get_numerics_setting

logger = get_logger(__name__)


@enum.unique
class CoefficientFamily(enum.Enum):

    A = "a"
    A_STAR = "astar"
    B = "b"
    C = "c"
    STIRLING_PRIME = "stirling_prime"
    STIRLING_DPRIME = "stirling_dprime"
    LU = "lu"

    @property
    def min_index(self) -> int:
        """Smallest valid index"""
        if self in (CoefficientFamily.B, CoefficientFamily.C):
            return 0
        return 1


def _a_term(n: int) -> Fraction:
    return Fraction(
        (2 * n * math.factorial(2 * n - 2) - 2 ** (2 * n - 1)) * bernoulli(2 * n),
        2 * n * math.factorial(2 * n),
    )


def _a_star_term(n: int) -> Fraction:
    return Fraction(
        ((n + 1) * math.factorial(n - 1) - 2 ** n) * bernoulli(n + 1),
        (n + 1) * math.factorial(n + 1),
    )


def _stirling_prime_term(n: int) -> Fraction:
    return bernoulli(2 * n) / (2 * n * (2 * n - 1))


def _stirling_dprime_term(n: int) -> Fraction:
    return 2 ** (2 * n) * bernoulli(2 * n) / (2 * n * math.factorial(2 * n))


def _b_term(n: int, previous: typing.Sequence[Fraction]) -> Fraction:
    # exp-composition: n b_n = sum_{k=1}^{n} k a*_k b_{n-k}
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(1, n + 1):
        acc += k * coeff_a_star(k) * previous[n - k]
    return acc / n


def _c_term(n: int, previous: typing.Sequence[Fraction]) -> Fraction:
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(1, n + 1):
        acc += Fraction(
            2 ** (2 * k + 2) * bernoulli(2 * k + 2),
            2 * (k + 1) * math.factorial(2 * k + 2),
        ) * previous[n - k]
    return 6 * bernoulli(2 * n + 2) / ((n + 1) * (2 * n + 1)) - 6 * acc


class CoefficientTable:

    """Memoized values of one family

    ``table[n]`` computes every missing entry up to ``n`` in order,
    so recurrence families see their earlier values. Growth is serialized
    by a lock; the grown list is published in one assignment.
    """

    def __init__(self, family: CoefficientFamily) -> None:
        if family is CoefficientFamily.LU:
            raise ParamsInvalid("LU constants are not an indexed family")
        self.__family = family
        self.__entries: typing.List[Fraction] = []
        self.__lock = threading.Lock()

    @property
    def family(self) -> CoefficientFamily:
        return self.__family

    @property
    def max_index(self) -> int:
        return self.__family.min_index + len(self.__entries) - 1

    def __getitem__(self, n: int) -> Fraction:
        offset = n - self.__family.min_index
        if offset < 0:
            raise ParamsInvalid(
                "coefficient index below family minimum",
                family=self.__family.value, n=n,
                min_index=self.__family.min_index,
            )
        entries = self.__entries
        if offset < len(entries):
            return entries[offset]
        self.__extend(n)
        return self.__entries[offset]

    def __extend(self, n: int) -> None:
        with self.__lock:
            entries = list(self.__entries)
            first = self.__family.min_index
            if n - first < len(entries):
                return
            ceiling = get_numerics_setting().coefficient_ceiling
            if n > ceiling:
                logger.warning("coefficient index beyond practical ceiling",
                               family=self.__family.value, n=n, ceiling=ceiling)
            start = first + len(entries)
            for m in range(start, n + 1):
                entries.append(self.__compute(m, entries))
            logger.debug("coefficient table extended",
                         family=self.__family.value, start=start, end=n)
            self.__entries = entries

    def __compute(self, n: int, entries: typing.Sequence[Fraction]) -> Fraction:
        family = self.__family
        if family is CoefficientFamily.A:
            return _a_term(n)
        if family is CoefficientFamily.A_STAR:
            return _a_star_term(n)
        if family is CoefficientFamily.STIRLING_PRIME:
            return _stirling_prime_term(n)
        if family is CoefficientFamily.STIRLING_DPRIME:
            return _stirling_dprime_term(n)
        if family is CoefficientFamily.B:
            return _b_term(n, entries)
        return _c_term(n, entries)


_tables: typing.Dict[CoefficientFamily, CoefficientTable] = {
    family: CoefficientTable(family)
    for family in CoefficientFamily
    if family is not CoefficientFamily.LU
}


def get_coefficient_table(family: CoefficientFamily) -> CoefficientTable:
    try:
        return _tables[family]
    except KeyError:
        raise ParamsInvalid("no table for family", family=family.value) from None


def coeff_a(n: int) -> Fraction:

    """``a_n = (2n(2n-2)! - 2^(2n-1)) B_2n / (2n (2n)!)``

    Example
    -------
    >>> coeff_a(3)
    Fraction(1, 1620)
    """
    return _tables[CoefficientFamily.A][n]


def coeff_a_star(n: int) -> Fraction:
    """``a*_n = ((n+1)(n-1)! - 2^n) B_(n+1) / ((n+1)(n+1)!)``"""
    return _tables[CoefficientFamily.A_STAR][n]


def coeff_b(n: int) -> Fraction:
    """Coefficients of ``1 + sum_{n>=1} b_n x^-n``, ``b_0 = 1``"""
    return _tables[CoefficientFamily.B][n]


def coeff_b_expanded(n: int) -> Fraction:

    """``b_n`` from the expanded Bernoulli form, without the a* table

    ``b_n = (1/n) sum_{k=1}^{n} (1/(k+1) - 2^k/((k+1)^2 (k-1)!)) B_(k+1) b_(n-k)``,
    summed over every k including those where ``B_(k+1)`` vanishes.
    Kept as an independent check of :func:`coeff_b`.
    """
    if n < 0:
        raise ParamsInvalid("coefficient index below family minimum", family="b", n=n)
    values = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(1, m + 1):
            weight = Fraction(1, k + 1) - Fraction(
                2 ** k, (k + 1) ** 2 * math.factorial(k - 1)
            )
            acc += weight * bernoulli(k + 1) * values[m - k]
        values.append(acc / m)
    return values[n]


def coeff_c(n: int) -> Fraction:
    """Coefficients of the exponent ``(x/2)(1 + sum c_n x^-2n)``, ``c_0 = 1``"""
    return _tables[CoefficientFamily.C][n]


def coeff_stirling(n: int) -> typing.Tuple[Fraction, Fraction]:

    """``(a'_n, a''_n)``

    ``a'_n = B_2n / (2n(2n-1))`` is the Stirling series coefficient of
    ``x^-(2n-1)``, ``a''_n = 2^2n B_2n / (2n (2n)!)`` the coefficient of
    ``t^2n`` in ln(sinh t / t). ``a'_n - a''_n / 2 = a_n``.
    """
    return (_tables[CoefficientFamily.STIRLING_PRIME][n],
            _tables[CoefficientFamily.STIRLING_DPRIME][n])


_LU_CONSTANTS: typing.Tuple[typing.Tuple[int, Fraction], ...] = (
    (7, Fraction(1, 810)),
    (9, Fraction(-67, 42525)),
    (11, Fraction(19, 8505)),
)


def lu_constants() -> typing.List[typing.Tuple[int, Fraction]]:
    """``[(7, a_7), (9, a_9), (11, a_11)]`` of Lu's expansion"""
    return list(_LU_CONSTANTS)


def family_values(
    family: CoefficientFamily,
    n_max: int,
) -> typing.List[typing.Tuple[int, Fraction]]:

    """``(n, value)`` pairs from the family minimum up to ``n_max``

    ``LU`` ignores ``n_max`` and returns its three constants.
    """
    if family is CoefficientFamily.LU:
        return lu_constants()
    if n_max < family.min_index:
        raise ParamsInvalid(
            "n_max below family minimum",
            family=family.value, n_max=n_max, min_index=family.min_index,
        )
    table = _tables[family]
    return [(n, table[n]) for n in range(family.min_index, n_max + 1)]
