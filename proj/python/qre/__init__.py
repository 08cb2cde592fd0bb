"""Exact R-matrix and reflection-equation toolkit."""

from ._qre import *  # noqa: F401,F403

__version__ = "0.1.0"
