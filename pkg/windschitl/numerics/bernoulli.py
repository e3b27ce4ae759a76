"""Bernoulli numbers over exact rationals.
"""

__all__ = [
    "BernoulliTable",
    "bernoulli",
    "get_bernoulli_table",
]

import math
import threading
import typing
from fractions import Fraction

from ..exceptions import ParamsInvalid
from ..log import get_logger
from ..data.settings.numerics import get_setting as get_numerics_setting

logger = get_logger(__name__)


class BernoulliTable:

    """Memoized B_0, B_1, ... with the B_1 = -1/2 convention.

    Entries come from the defining recurrence
    ``sum_{j=0}^{m} binomial(m+1, j) B_j = 0`` for m >= 1, so
    ``B_m = -1/(m+1) * sum_{j<m} binomial(m+1, j) B_j``.
    Odd entries above 1 are stored as exact zeros without summing.

    Growth happens under a lock; a read of an index already computed
    never waits on it.
    """

    def __init__(self) -> None:
        self.__entries: typing.List[Fraction] = [Fraction(1)]
        self.__lock = threading.Lock()

    @property
    def max_index(self) -> int:
        return len(self.__entries) - 1

    @property
    def entries(self) -> typing.Tuple[Fraction, ...]:
        return tuple(self.__entries)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise ParamsInvalid("Bernoulli index must be non-negative", n=n)
        entries = self.__entries
        if n < len(entries):
            return entries[n]
        self.__extend(n)
        return self.__entries[n]

    def __extend(self, n: int) -> None:
        with self.__lock:
            entries = list(self.__entries)
            if n < len(entries):
                return
            ceiling = get_numerics_setting().bernoulli_ceiling
            if n > ceiling:
                logger.warning("Bernoulli index beyond practical ceiling",
                               n=n, ceiling=ceiling)
            start = len(entries)
            for m in range(start, n + 1):
                if m > 1 and m % 2 == 1:
                    entries.append(Fraction(0))
                    continue
                acc = Fraction(0)
                for j in range(m):
                    if entries[j]:
                        acc += math.comb(m + 1, j) * entries[j]
                entries.append(-acc / (m + 1))
            logger.debug("Bernoulli table extended", start=start, end=n)
            # publish the grown list in one assignment
            self.__entries = entries


_table = BernoulliTable()


def get_bernoulli_table() -> BernoulliTable:
    return _table


def bernoulli(n: int) -> Fraction:

    """B_n as an exact rational, B_1 = -1/2

    Example
    -------
    >>> bernoulli(12)
    Fraction(-691, 2730)
    """
    return _table[n]
