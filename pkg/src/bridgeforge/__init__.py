"""Combinatorial verification toolkit for genus-one two-bridge knot groups."""

__version__ = "0.1.0"

from .slope import Frac, GenusOneKnot

__all__ = ["Frac", "GenusOneKnot", "__version__"]
