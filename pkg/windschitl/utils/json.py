"""JSON output of windschitl values.

Rationals are written as ``"p/q"`` strings, reals and interval endpoints
in scientific notation, so the output never passes through a float.
"""

__all__ = [
    "JsonEncoder",
    "dumps_to_json",
]

import dataclasses
import enum
import json
import typing
from fractions import Fraction
from typing import Optional as Opt

from ..numerics import Interval, Real, format_rational


class JsonEncoder(json.JSONEncoder):

    """
    :ivar digits: significant digits of reals and intervals;
        ``None`` uses each value's own precision
    """

    def __init__(self, *args, digits: Opt[int] = None, **kwargs):
        super().__init__(*args, **kwargs)
        self.digits = digits

    def default(self, o):
        if isinstance(o, Fraction):
            return format_rational(o)
        if isinstance(o, Real):
            return o.to_scientific(self.digits)
        if isinstance(o, Interval):
            return [o.lo.to_scientific(self.digits), o.hi.to_scientific(self.digits)]
        if isinstance(o, enum.Enum):
            return o.value
        if dataclasses.is_dataclass(o) and not isinstance(o, type):
            return {f.name: getattr(o, f.name) for f in dataclasses.fields(o)}
        if isinstance(o, (set, frozenset)):
            return list(o)

        return super().default(o)


def dumps_to_json(obj: typing.Any, digits: Opt[int] = None) -> str:

    """将对象序列化为JSON字符串

    Keys keep their insertion order; identical input gives identical output.
    """
    return json.dumps(obj, cls=JsonEncoder, digits=digits)
