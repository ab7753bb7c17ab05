"""CSV and summary writers."""

from __future__ import annotations

import csv

from .metrics import DensityReport, LoopFractions, ScanTotals, density, format_percent
from .patterns import TABLE2_KINDS, VECTOR_KINDS

CSV_COLUMNS = (
    "project", "file_path", "pattern_kind", "start_line", "end_line",
    "snippet", "formula_text", "formula_mathml",
)


class ReportError(OSError):
    pass


def record_sort_key(record):
    return record.match.sort_key()


def emit_csv(records, sink) -> int:
    """Write a header and one row per record; returns the number of data rows."""
    writer = csv.writer(sink, lineterminator="\n")
    rows = 0
    try:
        writer.writerow(CSV_COLUMNS)
        for r in sorted(records, key=record_sort_key):
            m = r.match
            writer.writerow((m.project, m.path, m.kind.value, m.start_line, m.end_line,
                             m.snippet, r.text, r.mathml))
            rows += 1
    except OSError as exc:
        raise ReportError(f"CSV output incomplete after {rows} data rows: {exc}") from exc
    return rows


def read_csv(source):
    """Rows of an emitted CSV as dicts (line numbers as ints)."""
    out = []
    for row in csv.DictReader(source):
        row["start_line"] = int(row["start_line"])
        row["end_line"] = int(row["end_line"])
        out.append(row)
    return out


_TABLE_ROWS = (
    ("#projects", "projects"),
    ("#nonempty", "nonempty_projects"),
    ("#fc projects", "fc_projects"),
    ("#files", "files"),
    ("#fc files", "fc_files"),
    ("LOC", "loc"),
    ("LOFC", "lofc"),
    ("#matches", "matches"),
)


def emit_summary(totals: ScanTotals, report: DensityReport, sink, loops: LoopFractions | None = None) -> None:
    w = sink.write
    w("# formula-miner summary\n")
    w("# LOC = non-blank lines after comment removal (not cloc); LOFC = distinct lines of accepted matches\n")
    w(f"# estimates divide by recall {format_percent(report.recall_used)}\n")
    table = [(label, f"{getattr(totals, attr):,}") for label, attr in _TABLE_ROWS]
    table += [
        ("rho_files", format_percent(report.rho_files)),
        ("rho_LOC", format_percent(report.rho_loc)),
        ("~rho_files", format_percent(report.rho_files_est)),
        ("~rho_LOC", format_percent(report.rho_loc_est)),
    ]
    width = max(len(label) for label, _ in table)
    for label, value in table:
        w(f"{label:<{width}}  {value:>14}\n")
    w("\n")
    for _label, attr in _TABLE_ROWS:
        w(f"{attr}={getattr(totals, attr)}\n")
    w(f"rho_files={format_percent(report.rho_files)}\n")
    w(f"rho_LOC={format_percent(report.rho_loc)}\n")
    w(f"rho_files_est={format_percent(report.rho_files_est)}\n")
    w(f"rho_LOC_est={format_percent(report.rho_loc_est)}\n")
    w(f"recall={format_percent(report.recall_used)}\n")
    kinds = list(TABLE2_KINDS) + [k for k in VECTOR_KINDS if k in totals.per_pattern]
    for kind in kinds:
        n, lofc = totals.per_pattern.get(kind, (0, 0))
        rho = format_percent(density(lofc, totals.loc)) if totals.loc else "undefined"
        w(f"pattern.{kind.value}.matches={n}\n")
        w(f"pattern.{kind.value}.lofc={lofc}\n")
        w(f"pattern.{kind.value}.rho_LOC={rho}\n")
    w(f"loops_simple={totals.loops_simple}\n")
    w(f"loops_nested={totals.loops_nested}\n")
    w(f"sp_simple={totals.sp_simple}\n")
    w(f"sp_nested={totals.sp_nested}\n")
    if loops is not None:
        w(f"loop_fraction_simple={format_percent(loops.simple)}\n")
        w(f"loop_fraction_nested={format_percent(loops.nested)}\n")
        w(f"loop_fraction_simple_est={format_percent(loops.simple_est)}\n")
        w(f"loop_fraction_nested_est={format_percent(loops.nested_est)}\n")
