"""Analysis operations: comparison table, rate constants and certified
inequality checks, all driven by the gamma oracle.
"""

__all__ = [
    "ComparisonRow",
    "comparison_table",
    "relative_error",
    "DEFAULT_TABLE_XS",
    "DEFAULT_TABLE_FORMULAS",
    "RATE_TARGETS",
    "RateEstimate",
    "rate_constant",
    "verify_rates",
    "ORDERING_CHAIN",
    "beta0",
    "f1",
    "verify_ordering",
    "verify_sandwich",
    "probe_f1_shape",
    "verify_remainder",
    "CheckStatus",
    "CheckItem",
    "VerificationReport",
]

from .report import CheckStatus, CheckItem, VerificationReport
from .table import (
    ComparisonRow, comparison_table, relative_error,
    DEFAULT_TABLE_XS, DEFAULT_TABLE_FORMULAS,
)
from .rates import RATE_TARGETS, RateEstimate, rate_constant, verify_rates
from .verify import (
    ORDERING_CHAIN, beta0, f1,
    verify_ordering, verify_sandwich, probe_f1_shape, verify_remainder,
)
