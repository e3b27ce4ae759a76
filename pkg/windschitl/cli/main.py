"""Command-line interface for windschitl.

Usage:
    windschitl coeffs a 6                        # a_1 .. a_6 as p/q
    windschitl approx w1 1                       # enclosure of W1(1)
    windschitl gamma 0.5 --width 1e-30           # oracle enclosure of Gamma(1.5)
    windschitl table --format csv                # the relative-error table
    windschitl verify ordering --grid 1:100:0.25 # certified formula ordering

Exit codes: 0 success, 1 a verification was violated, 2 bad usage or
arguments outside a domain, 3 precision or exponent range exhausted,
4 a verification stayed inconclusive.
"""

__all__ = [
    "cli",
]

import functools
import typing
from fractions import Fraction

import click

from .. import __version__
from ..analysis import (
    DEFAULT_TABLE_FORMULAS, DEFAULT_TABLE_XS, RATE_TARGETS,
    comparison_table, probe_f1_shape, verify_ordering, verify_rates,
    verify_remainder, verify_sandwich, VerificationReport,
)
from ..approximations import (
    ExpansionFamily, ExpansionSpec, FormulaId, eval_expansion, eval_formula,
)
from ..coefficients import CoefficientFamily, family_values
from ..exceptions import EXIT_OK, ParamsInvalid, WindschitlException
from ..log import bind_logger_contextvars, clear_logger_contextvars, get_logger
from ..numerics import Interval, check_precision_range, format_rational, resolve_precision
from ..reference import gamma_enclosure
from ..data.settings.analysis import get_setting as get_analysis_setting
from .output import CliConfig, OutputFormat, render
from .params import COMMA_LIST, GRID, INDEX_RANGE

logger = get_logger(__name__)

COEFF_FAMILIES = ("a", "astar", "b", "c", "stirling", "lu")
CHECKS = ("ordering", "sandwich", "remainder", "rate", "f1shape")

DEFAULT_GRID = "1:100:0.25"
DEFAULT_REMAINDER_NS = "4:8"
DEFAULT_REMAINDER_XS = "1,2,5,10"
DEFAULT_RATE_XS = "1000,10000"


def common_options(func: typing.Callable[..., int]) -> typing.Callable[..., None]:

    """Add ``--precision``, ``--format`` and ``--digits`` to a subcommand

    The wrapped callback receives a :class:`CliConfig` first and returns
    the exit code. Windschitl exceptions are reported on stderr and mapped
    to their ``exit_code``.
    """

    @functools.wraps(func)
    def wrapper(precision_bits, output_format, digits, **kwargs):
        ctx = click.get_current_context()
        try:
            config = CliConfig(
                precision_bits=check_precision_range(resolve_precision(precision_bits)),
                output_format=OutputFormat(output_format),
                digits=digits,
            )
            bind_logger_contextvars(command=ctx.info_name, precision_bits=config.precision_bits)
            code = func(config, **kwargs)
        except WindschitlException as e:
            logger.info("command failed", error=e.name, exit_code=e.exit_code)
            click.echo(f"Error: {e}", err=True)
            code = e.exit_code
        finally:
            clear_logger_contextvars()
        ctx.exit(code)

    for option in reversed((
        click.option("--precision", "precision_bits", type=int, default=None,
                     help="Working precision in bits (64 to 4096, default 256)."),
        click.option("--format", "output_format", default="text", show_default=True,
                     type=click.Choice([f.value for f in OutputFormat])),
        click.option("--digits", type=click.IntRange(min=1), default=None,
                     help="Significant digits of printed reals."),
    )):
        wrapper = option(wrapper)
    return wrapper


@click.group()
@click.version_option(version=__version__, prog_name="windschitl")
def cli():
    """
    Certified Windschitl-type approximations of the gamma function.

    Examples:

        windschitl coeffs b 10          # b_0 .. b_10

        windschitl approx wl1 2.5       # enclosure of Wl1(2.5)

        windschitl table                # relative errors at 1, 2, 5, ..., 100

        windschitl verify remainder     # tail bound of the exp-series
    """
    pass


@cli.command()
@click.argument("family", type=click.Choice(COEFF_FAMILIES))
@click.argument("n_max", type=int)
@common_options
def coeffs(config: CliConfig, family: str, n_max: int) -> int:
    """
    Print exact coefficients as p/q, from the family minimum to N_MAX.

    ``stirling`` prints a'_n and a''_n side by side; ``lu`` prints its
    three fixed constants whatever N_MAX is.

    Examples:

        windschitl coeffs a 6

        windschitl coeffs lu 0
    """
    if family == "stirling":
        primes = family_values(CoefficientFamily.STIRLING_PRIME, n_max)
        dprimes = family_values(CoefficientFamily.STIRLING_DPRIME, n_max)
        rows = [
            {"n": n, "stirling_prime": format_rational(p), "stirling_dprime": format_rational(d)}
            for (n, p), (_, d) in zip(primes, dprimes)
        ]
    else:
        rows = [
            {"n": n, "value": format_rational(v)}
            for n, v in family_values(CoefficientFamily(family), n_max)
        ]
    click.echo(render(
        "coeffs", config, rows,
        lambda: (",".join(str(v) for v in row.values()) for row in rows),
        family=family,
    ))
    return EXIT_OK


def _approximation(name: str, x: str, precision_bits: int) -> Interval:
    """``w1`` style formula names, or ``family:n`` for a truncated expansion"""
    if ":" not in name:
        return eval_formula(FormulaId.parse(name), x, precision_bits)
    family, _, n = name.partition(":")
    try:
        spec = ExpansionSpec(ExpansionFamily(family.lower()), int(n))
    except ValueError as e:
        raise ParamsInvalid(
            "unknown expansion", expansion=name,
            choices=",".join(f.value for f in ExpansionFamily),
        ) from e
    return eval_expansion(spec, x, precision_bits)


def _interval_row(value: Interval, digits: int) -> typing.Dict[str, str]:
    return {
        "lo": value.lo.to_scientific(digits),
        "hi": value.hi.to_scientific(digits),
        "mid": value.mid().to_scientific(digits),
    }


@cli.command()
@click.argument("formula")
@click.argument("x")
@common_options
def approx(config: CliConfig, formula: str, x: str) -> int:
    """
    Enclose an approximation of Gamma(X+1).

    FORMULA is one of w0, w1, w01, w01star, wc1, wl1, or a truncated
    expansion written FAMILY:N with FAMILY one of exp, mult, exponent.

    Examples:

        windschitl approx w1 1

        windschitl approx exp:8 2.5
    """
    value = _approximation(formula, x, config.precision_bits)
    row = {"formula": formula, "x": x, **_interval_row(value, config.digits_or())}
    click.echo(render(
        "approx", config, [row],
        lambda: (f"{k:<4}{row[k]}" for k in ("lo", "hi", "mid")),
    ))
    return EXIT_OK


@cli.command()
@click.argument("x")
@click.option("--width", default=None,
              help="Relative width of the enclosure (default 1e-40).")
@common_options
def gamma(config: CliConfig, x: str, width: typing.Optional[str]) -> int:
    """
    Enclose Gamma(X+1) with the Stirling-bound oracle.

    Examples:

        windschitl gamma 20

        windschitl gamma 0.5 --width 1e-25
    """
    try:
        target = None if width is None else Fraction(width)
    except (ValueError, ZeroDivisionError) as e:
        raise ParamsInvalid("width is not a decimal", width=width) from e
    enclosure = gamma_enclosure(x, target, config.precision_bits)
    row = {
        "x": x,
        **_interval_row(enclosure.value, config.digits_or()),
        "shift": enclosure.shift_used,
        "terms": enclosure.stirling_terms,
    }
    click.echo(render(
        "gamma", config, [row],
        lambda: (f"{k:<6}{row[k]}" for k in ("lo", "hi", "mid", "shift", "terms")),
    ))
    return EXIT_OK


def _aligned(header: typing.Sequence[str], body: typing.Sequence[typing.Sequence[str]]):
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    for r in [header, *body]:
        yield "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()


@cli.command()
@click.option("--xs", type=COMMA_LIST, default=None,
              help="Comma separated x values (default 1,2,5,10,20,50,100).")
@click.option("--formulas", type=COMMA_LIST, default=None,
              help="Comma separated formulas (default w1,wc1,w01,wl1).")
@common_options
def table(
    config: CliConfig,
    xs: typing.Optional[typing.List[str]],
    formulas: typing.Optional[typing.List[str]],
) -> int:
    """
    Relative errors |W(x) - Gamma(x+1)| / Gamma(x+1) against the oracle.

    Cells are upper bounds of certified enclosures printed with 4
    significant digits (``--digits`` overrides). In text output a
    trailing ``*`` marks a precision-starved cell.

    Examples:

        windschitl table

        windschitl table --xs 2 --formulas w1 --format csv
    """
    formula_ids = [FormulaId.parse(f) for f in (formulas or DEFAULT_TABLE_FORMULAS)]
    digits = config.digits_or(get_analysis_setting().table_digits)
    rows = comparison_table(xs or DEFAULT_TABLE_XS, formula_ids, config.precision_bits)

    columns = ["x", *(f.value for f in formula_ids)]
    dumped = []
    for row in rows:
        cells = row.formatted(digits)
        dumped.append({
            "x": row.x.to_decimal(),
            **{f.value: cells[f] for f in formula_ids},
            "starved": [f.value for f in row.starved],
        })

    def text_lines():
        body = [
            [d["x"], *(d[f.value] + ("*" if f.value in d["starved"] else "")
                       for f in formula_ids)]
            for d in dumped
        ]
        return _aligned(columns, body)

    click.echo(render("table", config, dumped, text_lines, columns=columns))
    return EXIT_OK


def _run_check(
    check: str,
    precision_bits: int,
    grid: typing.Optional[typing.List[Fraction]],
    xs: typing.Optional[typing.List[str]],
    ns: typing.Optional[typing.List[int]],
    x_probe: typing.Optional[typing.List[str]],
    formula: typing.Optional[typing.List[str]],
    escalate_to: typing.Optional[int],
) -> VerificationReport:
    if check in ("ordering", "sandwich", "f1shape"):
        grid = grid if grid is not None else GRID.convert(DEFAULT_GRID, None, None)
        if check == "ordering":
            return verify_ordering(grid, precision_bits, escalate_to)
        if check == "sandwich":
            return verify_sandwich(grid, precision_bits)
        return probe_f1_shape(grid, precision_bits)
    if check == "remainder":
        return verify_remainder(
            ns if ns is not None else INDEX_RANGE.convert(DEFAULT_REMAINDER_NS, None, None),
            xs if xs is not None else COMMA_LIST.convert(DEFAULT_REMAINDER_XS, None, None),
            precision_bits,
        )
    return verify_rates(
        formula if formula is not None else tuple(RATE_TARGETS),
        x_probe if x_probe is not None else COMMA_LIST.convert(DEFAULT_RATE_XS, None, None),
        precision_bits,
    )


@cli.command()
@click.argument("check", required=False, type=click.Choice(CHECKS))
@click.option("--check", "check_option", type=click.Choice(CHECKS), default=None,
              help="Same as the CHECK argument.")
@click.option("--grid", type=GRID, default=None,
              help="start:stop:step, endpoints included "
                   f"(ordering, sandwich, f1shape; default {DEFAULT_GRID}).")
@click.option("--xs", type=COMMA_LIST, default=None,
              help=f"x values of the remainder check (default {DEFAULT_REMAINDER_XS}).")
@click.option("--n", "ns", type=INDEX_RANGE, default=None,
              help=f"n range a:b of the remainder check (default {DEFAULT_REMAINDER_NS}).")
@click.option("--x", "x_probe", type=COMMA_LIST, default=None,
              help=f"Probe points of the rate check (default {DEFAULT_RATE_XS}).")
@click.option("--formula", type=COMMA_LIST, default=None,
              help="Formulas of the rate check (default w1,wc1,w01,w01star,wl1).")
@click.option("--escalate-to", type=int, default=None,
              help="Retry inconclusive ordering cells at doubled precision up to this.")
@common_options
def verify(
    config: CliConfig,
    check: typing.Optional[str],
    check_option: typing.Optional[str],
    **params,
) -> int:
    """
    Run a certified check and report every cell.

    CHECK is one of ordering, sandwich, remainder, rate, f1shape.
    Exit status is 0 when every cell passed, 1 when any was violated
    and 4 when some stayed inconclusive without a violation.

    Examples:

        windschitl verify ordering --grid 1:100:0.25

        windschitl verify remainder --n 4:8 --xs 1,2,5,10

        windschitl verify rate --formula w1 --x 1000
    """
    if check and check_option and check != check_option:
        raise click.UsageError(f"CHECK {check!r} disagrees with --check {check_option!r}")
    check = check or check_option
    if check is None:
        raise click.UsageError("missing CHECK (one of %s)" % ", ".join(CHECKS))

    report = _run_check(check, config.precision_bits, **params)
    rows = report.dump_rows(config.digits_or())

    def text_lines():
        for row in rows:
            where = "" if row["x"] is None else f"  x={row['x']}"
            yield f"{row['status']:<13}{row['relation']}{where}"
        yield " ".join(f"{k}={v}" for k, v in report.counts().items())

    click.echo(render(
        "verify", config, rows, text_lines,
        check=check, counts=report.counts(),
    ))
    return report.exit_code
