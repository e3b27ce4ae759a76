"""Rendering of command results as text, CSV or JSON.

Every command hands over a list of rows (dicts of already formatted
strings) so the three formats carry the same digits.
"""

__all__ = [
    "OutputFormat",
    "CliConfig",
    "render",
]

import csv
import dataclasses
import enum
import io
import typing
from typing import Optional as Opt

from ..numerics import digits_for_precision
from ..utils.json import dumps_to_json

Row = typing.Dict[str, typing.Any]


@enum.unique
class OutputFormat(enum.Enum):

    TEXT = "text"
    CSV = "csv"
    JSON = "json"


@dataclasses.dataclass(frozen=True)
class CliConfig:

    """Options shared by every subcommand

    :ivar digits: ``--digits``; ``None`` leaves the choice to the command
    """

    precision_bits: int
    output_format: OutputFormat = OutputFormat.TEXT
    digits: Opt[int] = None

    def digits_or(self, default: Opt[int] = None) -> int:
        if self.digits is not None:
            return self.digits
        if default is not None:
            return default
        return digits_for_precision(self.precision_bits)


def _columns(rows: typing.Sequence[Row]) -> typing.List[str]:
    columns: typing.List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def _csv(rows: typing.Sequence[Row], columns: Opt[typing.Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=list(columns or _columns(rows)),
        restval="", extrasaction="ignore", lineterminator="\n",
    )
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buffer.getvalue().rstrip("\n")


def render(
    command: str,
    config: CliConfig,
    rows: typing.Sequence[Row],
    text_lines: typing.Callable[[], typing.Iterable[str]],
    columns: Opt[typing.Sequence[str]] = None,
    **extra: typing.Any,
) -> str:

    """Output of one command, without the trailing newline

    :param text_lines: produces the human readable form
    :param columns: CSV header; defaults to the row keys in first-seen order
    :param extra: additional top level JSON members
    """
    if config.output_format is OutputFormat.JSON:
        return dumps_to_json({
            "command": command,
            "precision_bits": config.precision_bits,
            **extra,
            "rows": list(rows),
        })
    if config.output_format is OutputFormat.CSV:
        return _csv(rows, columns)
    return "\n".join(text_lines())
