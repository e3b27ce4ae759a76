"""Numerical substrate: exact rationals, Bernoulli numbers,
extended-precision reals and outward-rounded intervals.
"""

__all__ = [
    "Rational", "format_rational", "parse_rational",
    "BernoulliTable", "bernoulli", "get_bernoulli_table",
    "Real", "RealLike", "as_real", "resolve_precision", "check_precision_range",
    "digits_for_precision",
    "Interval", "IntervalLike",
    "interval_exp", "interval_ln", "interval_sqrt", "interval_pow",
    "interval_pi", "interval_sinh", "interval_sinhc", "rational_to_interval",
]

from .rational import Rational, format_rational, parse_rational
from .bernoulli import BernoulliTable, bernoulli, get_bernoulli_table
from .real import (
    Real, RealLike, as_real, resolve_precision, check_precision_range,
    digits_for_precision,
)
from .interval import Interval, IntervalLike
from .elementary import (
    interval_exp, interval_ln, interval_sqrt, interval_pow,
    interval_pi, interval_sinh, interval_sinhc, rational_to_interval,
)
