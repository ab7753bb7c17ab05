"""Scan and evaluation drivers shared by the CLI and the tests."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import evaluation
from .constraints import ConstraintReport, check
from .corpus import SourceUnit, dedup, discover, load_unit
from .formula import FormulaRecord, to_record
from .metrics import (DEFAULT_RECALL, DensityReport, LoopFractions, ScanTotals, aggregate, as_fraction,
                      density, density_report, loop_fractions)
from .patterns import DEFAULT_KINDS, VECTOR_KINDS, PatternMatch, match_all, resolve_precedence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScanConfig:
    roots: tuple = ()
    enabled: frozenset = DEFAULT_KINDS
    recall: Fraction = DEFAULT_RECALL
    workers: int = 1
    dedup: bool = False
    vectors: bool = False
    verbosity: int = 0

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        r = as_fraction(self.recall)
        if not 0 < r <= 1:
            raise ValueError(f"recall must lie in (0, 1], got {self.recall}")
        object.__setattr__(self, "recall", r)

    def kinds(self) -> frozenset:
        kinds = frozenset(self.enabled)
        if self.vectors:
            kinds |= frozenset(VECTOR_KINDS)
        return kinds


@dataclass(frozen=True)
class FileResult:
    project: str
    relative_path: str
    loc: int
    total_lines: int
    content_hash: str
    records: tuple[FormulaRecord, ...] = ()
    rejected: tuple[ConstraintReport, ...] = ()
    loops: tuple[PatternMatch, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def accepted(self) -> tuple[PatternMatch, ...]:
        return tuple(r.match for r in self.records)


@dataclass
class ScanResult:
    files: list[FileResult]
    projects: list[str]
    totals: ScanTotals
    report: DensityReport
    loops: LoopFractions
    skipped: list[tuple[str, str]] = field(default_factory=list)

    @property
    def records(self) -> list[FormulaRecord]:
        return [r for f in self.files for r in f.records]


def analyze_unit(unit: SourceUnit, kinds=DEFAULT_KINDS) -> FileResult:
    """match_all, constraints, precedence, then formula reconstruction for one file."""
    raw = match_all(unit, kinds)
    loops = tuple(m for m in raw if not m.kind.sp)
    accepted, rejected = [], []
    for m in raw:
        if not m.kind.sp:
            continue
        report = check(m)
        if report.accepted:
            accepted.append(m)
        else:
            rejected.append(report)
    survivors = resolve_precedence(accepted)
    return FileResult(
        project=unit.project,
        relative_path=unit.relative_path,
        loc=unit.loc,
        total_lines=unit.total_lines,
        content_hash=unit.content_hash,
        records=tuple(to_record(m) for m in survivors),
        rejected=tuple(rejected),
        loops=loops,
        warnings=unit.warnings,
    )


def plan(roots) -> tuple[list[str], list[tuple[str, str, str]]]:
    """Projects and ``(project, project_dir, file)`` jobs for the given roots.

    Every immediate subdirectory of a root is a project; ``.java`` files
    lying directly in a root form a project named after the root.
    """
    projects: set[str] = set()
    jobs = []
    for root in roots:
        root = Path(root)
        files = discover(root)
        subdirs = sorted(p for p in root.iterdir() if p.is_dir() and not p.name.startswith("."))
        for d in subdirs:
            projects.add(d.name)
        loose = root.resolve().name or "root"
        for path in files:
            rel = path.relative_to(root)
            if len(rel.parts) == 1:
                projects.add(loose)
                jobs.append((loose, str(root), str(path)))
            else:
                jobs.append((rel.parts[0], str(root / rel.parts[0]), str(path)))
    jobs.sort(key=lambda j: (j[0], Path(j[2]).relative_to(j[1]).as_posix(), j[1]))
    return sorted(projects), jobs


def _scan_job(args):
    (project, project_dir, path), kinds = args
    try:
        unit = load_unit(path, project_dir, project)
    except OSError as exc:
        return ("skip", path, str(exc))
    return analyze_unit(unit, kinds)


def scan(config: ScanConfig) -> ScanResult:
    projects, jobs = plan(config.roots)
    kinds = config.kinds()
    work = [(job, kinds) for job in jobs]
    if config.workers == 1 or len(work) < 2:
        outputs = [_scan_job(w) for w in work]
    else:
        chunk = max(1, len(work) // (config.workers * 8))
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            # map keeps input order, so the merge below is deterministic
            outputs = list(pool.map(_scan_job, work, chunksize=chunk))
    files, skipped = [], []
    for out in outputs:
        if isinstance(out, tuple):
            logger.warning("skipping unreadable file %s: %s", out[1], out[2])
            skipped.append((out[1], out[2]))
            continue
        files.append(out)
        for r in out.rejected:
            logger.info("rejected %s: %s", r.match.match_id, r.describe())
    if config.dedup:
        files = dedup(files)
    totals = aggregate(files, projects)
    return ScanResult(files, projects, totals, density_report(totals, config.recall),
                      loop_fractions(totals, config.recall), skipped)


@dataclass
class EvalResult:
    files: int
    annotated_files: int
    loc: int
    annotated_lines: int
    fragments: int
    annotations: list
    detections: list[PatternMatch]
    recall: evaluation.RecallResult
    precision: evaluation.PrecisionResult | None = None

    @property
    def fc_files(self) -> int:
        return len({a.file for a in self.annotations})

    @property
    def rho_files(self):
        return density(self.fc_files, self.files) if self.files else None

    @property
    def rho_loc(self):
        return density(self.annotated_lines, self.loc) if self.loc else None


def evaluate(root, manifest_text: str, judgments: dict | None = None, kinds=DEFAULT_KINDS) -> EvalResult:
    """Run the detector over an annotated corpus and score it against the oracle.

    Files named in the manifest have their tags removed before scanning;
    detection ids are path based (no project prefix).
    """
    root = Path(root)
    annotated = set(evaluation.parse_oracle_manifest(manifest_text))
    paths = {p.relative_to(root).as_posix(): p for p in discover(root)}
    missing = sorted(annotated - set(paths))
    if missing:
        raise FileNotFoundError("annotated files not found under root: " + ", ".join(missing))
    annotations = []
    detections = []
    loc = 0
    annotated_lines = 0
    for rel in sorted(paths):
        raw = paths[rel].read_bytes()
        text = raw.decode("utf-8", errors="replace")
        if rel in annotated:
            try:
                text, anns = evaluation.parse_oracle(text, rel)
            except evaluation.OracleError as exc:
                raise evaluation.OracleError(f"{rel}: {exc.message}", exc.line) from exc
            annotations.extend(anns)
            lines = set()
            for a in anns:
                lines.update(a.lines())
            annotated_lines += len(lines)
        unit = SourceUnit.from_text(text, project="", relative_path=rel, raw=raw)
        loc += unit.loc
        detections.extend(analyze_unit(unit, kinds).accepted)
    result = EvalResult(
        files=len(paths),
        annotated_files=len(annotated),
        loc=loc,
        annotated_lines=annotated_lines,
        fragments=len(annotations),
        annotations=annotations,
        detections=detections,
        recall=evaluation.recall(detections, annotations),
    )
    if judgments is not None:
        result.precision = evaluation.precision((m.match_id, judgments.get(m.match_id)) for m in detections)
    return result


def default_workers() -> int:
    env = os.environ.get("FORMULA_MINER_WORKERS")
    if env:
        return int(env)
    return os.cpu_count() or 1
