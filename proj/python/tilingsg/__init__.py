"""Tiling inverse semigroups, tight spectra and germ groupoids of substitution tilings."""

from ._core import *  # noqa: F401,F403
from ._core import TilingError

__all__ = [name for name in dir() if not name.startswith("_")]
