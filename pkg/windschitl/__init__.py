"""Windschitl - certified Windschitl-type approximations of the gamma function.
"""

__version__ = "0.1.0"
__all__ = [
    "FormulaId",
    "ExpansionFamily",
    "ExpansionSpec",
    "eval_formula",
    "eval_expansion",
    "log_correction",
    "gamma_enclosure",
    "GammaEnclosure",
    "CoefficientFamily",
    "family_values",
]

from .approximations import (
    FormulaId, ExpansionFamily, ExpansionSpec,
    eval_formula, eval_expansion, log_correction,
)
from .coefficients import CoefficientFamily, family_values
from .reference import GammaEnclosure, gamma_enclosure
