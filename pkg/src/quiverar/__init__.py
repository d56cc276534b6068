"""Exact computations for Auslander-Reiten theory of path algebras of acyclic quivers."""

from .linalg import InputError, RationalMatrix
from .quiver import Quiver, parse_quiver

__all__ = ["InputError", "RationalMatrix", "Quiver", "parse_quiver"]
__version__ = "0.1.0"
