"""Command line of windschitl, see :mod:`windschitl.cli.main`.
"""

__all__ = [
    "cli",
]

from .main import cli
