"""Duality calculus for bimodule expressions and zig-zag reduction of string diagrams."""

from .expr import BoundaryError, Label, ParseError, boundary, parse, to_text
from .rewrite import equivalent, normalize

__all__ = ["BoundaryError", "Label", "ParseError", "boundary", "parse", "to_text", "equivalent", "normalize"]
