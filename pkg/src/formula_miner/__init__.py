"""Detect sum/product formula code in Java sources, reconstruct the formulas and measure their density."""

from .constraints import check, vars, writes
from .corpus import SourceUnit, count_loc, strip_comments
from .formula import reconstruct, render_mathml, render_text
from .metrics import density, estimate
from .patterns import PatternKind, PatternMatch, match_all, match_kind, resolve_precedence

__version__ = "0.1.0"

__all__ = [
    "PatternKind", "PatternMatch", "SourceUnit", "check", "count_loc", "density", "estimate",
    "match_all", "match_kind", "reconstruct", "render_mathml", "render_text", "resolve_precedence",
    "strip_comments", "vars", "writes",
]
