"""Verification report module.
"""

__all__ = [
    "CheckStatus",
    "CheckItem",
    "VerificationReport",
    "certify",
]

import enum
import typing
from typing import Optional as Opt

from ..exceptions import EXIT_OK, EXIT_VIOLATED, EXIT_INCONCLUSIVE
from ..numerics import Interval, Real
from ..utils import dump_enum


@enum.unique
class CheckStatus(enum.Enum):

    CERTIFIED = "certified"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"
    '''Enclosures overlap at this precision; not a violation'''
    ATTAINED = "attained"
    '''Both sides are equal by construction (the sharp constant at x = 1)'''

    @property
    def passed(self) -> bool:
        return self in (CheckStatus.CERTIFIED, CheckStatus.ATTAINED)


def certify(verdict: Opt[bool]) -> CheckStatus:
    """Map a certified comparison (True / False / None) to a status"""
    if verdict is None:
        return CheckStatus.INCONCLUSIVE
    return CheckStatus.CERTIFIED if verdict else CheckStatus.VIOLATED


class CheckItem:

    """One checked relation at one grid point

    :ivar relation: e.g. ``"w1 < wc1"``
    :ivar x: grid point, ``None`` for point-free checks
    :ivar details: enclosures and parameters behind the verdict
    """

    def __init__(self,
        relation: str,
        status: CheckStatus,
        x: Opt[Real] = None,
        precision_bits: Opt[int] = None,
        **details: typing.Any,
    ) -> None:
        self.relation = relation
        self.status = status
        self.x = x
        self.precision_bits = precision_bits
        self.details = details

    def dump_to_dict(self, digits: int = 6) -> typing.Dict[str, typing.Any]:
        out: typing.Dict[str, typing.Any] = {
            "relation": self.relation,
            "x": None if self.x is None else self.x.to_decimal(digits),
            "status": dump_enum(self.status),
        }
        if self.precision_bits is not None:
            out["precision_bits"] = self.precision_bits
        for k, v in self.details.items():
            if isinstance(v, Interval):
                v = v.to_str(digits)
            elif isinstance(v, Real):
                v = v.to_scientific(digits)
            out[k] = v
        return out

    def __repr__(self) -> str:
        return f"CheckItem({self.relation!r}, {self.status.name}, x={self.x})"


class VerificationReport:

    """Outcome of one verification run

    Items keep the order of the grid they were produced from.
    """

    def __init__(self,
        check: str,
        precision_bits: int,
        items: typing.Iterable[CheckItem] = (),
    ) -> None:
        self.__check = check
        self.__precision_bits = precision_bits
        self.__items: typing.List[CheckItem] = list(items)

    @property
    def check(self) -> str:
        return self.__check

    @property
    def precision_bits(self) -> int:
        return self.__precision_bits

    @property
    def items(self) -> typing.List[CheckItem]:
        return self.__items

    def extend(self, items: typing.Iterable[CheckItem]) -> None:
        self.__items.extend(items)

    def count(self, status: CheckStatus) -> int:
        return sum(1 for item in self.__items if item.status is status)

    def counts(self) -> typing.Dict[str, int]:
        return {status.value: self.count(status) for status in CheckStatus}

    def with_status(self, status: CheckStatus) -> typing.List[CheckItem]:
        return [item for item in self.__items if item.status is status]

    @property
    def violated(self) -> bool:
        return self.count(CheckStatus.VIOLATED) > 0

    @property
    def inconclusive(self) -> bool:
        return self.count(CheckStatus.INCONCLUSIVE) > 0

    @property
    def passed(self) -> bool:
        return all(item.status.passed for item in self.__items)

    @property
    def exit_code(self) -> int:

        """0 all passed, 1 any violation, 4 inconclusive without violation
        """
        if self.violated:
            return EXIT_VIOLATED
        if self.inconclusive:
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    def dump_rows(self, digits: int = 6) -> typing.List[typing.Dict[str, typing.Any]]:
        return [item.dump_to_dict(digits) for item in self.__items]

    def dump_to_dict(self, digits: int = 6) -> typing.Dict[str, typing.Any]:
        return {
            "check": self.__check,
            "precision_bits": self.__precision_bits,
            "counts": self.counts(),
            "rows": self.dump_rows(digits),
        }

    def __repr__(self) -> str:
        return f"VerificationReport({self.__check!r}, {self.counts()})"
