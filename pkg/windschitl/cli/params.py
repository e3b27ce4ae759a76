"""Click parameter types of the command line.
"""

__all__ = [
    "GridType",
    "IndexRangeType",
    "CommaListType",
    "GRID",
    "INDEX_RANGE",
    "COMMA_LIST",
]

import typing
from fractions import Fraction

import click


def _fraction(text: str) -> Fraction:
    return Fraction(text.strip())


class GridType(click.ParamType):

    """``start:stop:step`` with both endpoints included, exact decimal steps

    ``1:2:0.25`` gives 1, 1.25, 1.5, 1.75, 2.
    """

    name = "grid"

    def convert(self, value, param, ctx) -> typing.List[Fraction]:
        if isinstance(value, list):
            return value
        parts = value.split(":")
        if len(parts) != 3:
            self.fail(f"{value!r} is not start:stop:step", param, ctx)
        try:
            start, stop, step = (_fraction(p) for p in parts)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} has a non-decimal component", param, ctx)
        if step <= 0:
            self.fail("grid step must be positive", param, ctx)
        if stop < start:
            self.fail("grid stop is below start", param, ctx)
        count = int((stop - start) / step)
        return [start + k * step for k in range(count + 1)]


class IndexRangeType(click.ParamType):

    """``a:b`` (inclusive), a single integer, or ``a,b,c``"""

    name = "range"

    def convert(self, value, param, ctx) -> typing.List[int]:
        if isinstance(value, list):
            return value
        try:
            if ":" in value:
                lo, hi = (int(p) for p in value.split(":"))
                if hi < lo:
                    self.fail(f"{value!r} is empty", param, ctx)
                return list(range(lo, hi + 1))
            return [int(p) for p in value.split(",")]
        except ValueError:
            self.fail(f"{value!r} is not an index range", param, ctx)


class CommaListType(click.ParamType):

    """Comma separated tokens, whitespace stripped, empties dropped"""

    name = "list"

    def convert(self, value, param, ctx) -> typing.List[str]:
        if isinstance(value, list):
            return value
        items = [v.strip() for v in value.split(",") if v.strip()]
        if not items:
            self.fail("empty list", param, ctx)
        return items


GRID = GridType()
INDEX_RANGE = IndexRangeType()
COMMA_LIST = CommaListType()
