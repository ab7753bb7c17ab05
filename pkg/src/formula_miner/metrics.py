"""Density metrics, recall-corrected estimates and loop fractions.

All arithmetic is exact (:class:`fractions.Fraction`); rounding happens only
in :func:`format_percent`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction

from .patterns import TABLE2_KINDS, PatternKind

DEFAULT_RECALL = Fraction(3091, 10000)


class UndefinedDensity(ZeroDivisionError):
    pass


def as_fraction(x) -> Fraction:
    # go through str so 0.3091 means 3091/10000, not its binary approximation
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(str(x))


def density(num: int, den: int) -> Fraction:
    if den == 0:
        raise UndefinedDensity(f"density {num}/0 is undefined")
    if num < 0 or den < 0:
        raise ValueError("counts must be non-negative")
    return Fraction(num, den)


def estimate(rho, recall) -> Fraction:
    """Recall-corrected density ``rho / recall``."""
    recall = as_fraction(recall)
    if not 0 < recall <= 1:
        raise ValueError(f"recall must lie in (0, 1], got {recall}")
    return as_fraction(rho) / recall


def format_percent(value) -> str:
    """Percent with two decimals; values under 0.1% keep two significant digits."""
    if value is None:
        return "undefined"
    value = as_fraction(value)
    with localcontext() as ctx:
        ctx.prec = 40
        p = Decimal(value.numerator * 100) / Decimal(value.denominator)
        if p == 0:
            return "0.00%"
        if abs(p) < Decimal("0.1"):
            quantum = Decimal(1).scaleb(p.adjusted() - 1)
        else:
            quantum = Decimal("0.01")
        q = p.quantize(quantum, rounding=ROUND_HALF_UP)
    return f"{q:f}%"


@dataclass
class ScanTotals:
    projects: int = 0
    nonempty_projects: int = 0
    fc_projects: int = 0
    files: int = 0
    fc_files: int = 0
    loc: int = 0
    lofc: int = 0
    matches: int = 0
    per_pattern: dict = field(default_factory=dict)  # PatternKind -> (matches, lofc)
    loops_simple: int = 0
    loops_nested: int = 0
    sp_simple: int = 0
    sp_nested: int = 0


@dataclass(frozen=True)
class DensityReport:
    rho_files: Fraction | None
    rho_loc: Fraction | None
    rho_files_est: Fraction | None
    rho_loc_est: Fraction | None
    recall_used: Fraction


@dataclass(frozen=True)
class LoopFractions:
    simple: Fraction | None
    nested: Fraction | None
    simple_est: Fraction | None
    nested_est: Fraction | None


def _maybe_density(num, den):
    return density(num, den) if den else None


def density_report(totals: ScanTotals, recall=DEFAULT_RECALL) -> DensityReport:
    recall = as_fraction(recall)
    rf = _maybe_density(totals.fc_files, totals.files)
    rl = _maybe_density(totals.lofc, totals.loc)
    return DensityReport(
        rho_files=rf,
        rho_loc=rl,
        rho_files_est=None if rf is None else estimate(rf, recall),
        rho_loc_est=None if rl is None else estimate(rl, recall),
        recall_used=recall,
    )


def loop_fractions(totals: ScanTotals, recall=DEFAULT_RECALL) -> LoopFractions:
    """Share of simple / nested loops that are SP-formula code, raw and recall-corrected."""
    simple = _maybe_density(totals.sp_simple, totals.loops_simple)
    nested = _maybe_density(totals.sp_nested, totals.loops_nested)
    return LoopFractions(
        simple=simple,
        nested=nested,
        simple_est=None if simple is None else estimate(simple, recall),
        nested_est=None if nested is None else estimate(nested, recall),
    )


def _lines(matches) -> set:
    out = set()
    for m in matches:
        out.update(range(m.start_line, m.end_line + 1))
    return out


def aggregate(results, projects=None) -> ScanTotals:
    """Fold per-file results into corpus totals.

    ``results`` are objects with ``project``, ``loc``, ``accepted`` (SP matches
    that survived constraints and precedence) and ``loops`` (loop-count matches).
    ``projects`` lists every project scanned, including ones without Java files.
    """
    t = ScanTotals()
    per_kind_matches: dict = {}
    per_kind_lofc: dict = {}
    nonempty: set = set()
    fc: set = set()
    seen_projects: set = set(projects or ())
    for r in results:
        seen_projects.add(r.project)
        t.files += 1
        t.loc += r.loc
        if r.loc > 0:
            nonempty.add(r.project)
        accepted = list(r.accepted)
        if accepted:
            t.fc_files += 1
            fc.add(r.project)
        t.lofc += len(_lines(accepted))
        t.matches += len(accepted)
        by_kind: dict = {}
        for m in accepted:
            by_kind.setdefault(m.kind, []).append(m)
            if m.kind in TABLE2_KINDS:
                if m.kind.nested:
                    t.sp_nested += 1
                else:
                    t.sp_simple += 1
        for kind, ms in by_kind.items():
            per_kind_matches[kind] = per_kind_matches.get(kind, 0) + len(ms)
            per_kind_lofc[kind] = per_kind_lofc.get(kind, 0) + len(_lines(ms))
        for m in r.loops:
            if m.kind is PatternKind.LOOP_SIMPLE:
                t.loops_simple += 1
            elif m.kind is PatternKind.LOOP_NESTED:
                t.loops_nested += 1
    t.projects = len(seen_projects)
    t.nonempty_projects = len(nonempty)
    t.fc_projects = len(fc)
    t.per_pattern = {k: (per_kind_matches[k], per_kind_lofc[k]) for k in PatternKind if k in per_kind_matches}
    return t
