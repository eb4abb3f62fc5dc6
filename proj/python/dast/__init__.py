"""Semantic-complexity toolkit: rule files, derivation lattices, complexity
metrics, judgment scoring, paired-corpus analysis and the deviation model.

Everything lives in the compiled extension; this package re-exports it.
"""

from ._dast import *  # noqa: F401,F403
from . import _dast

__version__ = "0.1.0"
__all__ = [name for name in dir(_dast) if not name.startswith("_")]
