"""Command-line interface: ``fetch``, ``scan``, ``eval`` and ``patterns``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import evaluation
from .corpus import RepoManifest, fetch
from .metrics import DEFAULT_RECALL, as_fraction, format_percent
from .patterns import CATALOG, DEFAULT_KINDS, PatternKind, slot_names
from .pipeline import ScanConfig, default_workers, evaluate, scan
from .reporting import ReportError, emit_csv, emit_summary

logger = logging.getLogger("formula_miner")

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def _recall_arg(text: str):
    try:
        value = as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text}")
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError("recall must lie in (0, 1]")
    return value


def _workers_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}")
    if n < 1:
        raise argparse.ArgumentTypeError("workers must be at least 1")
    return n


def _patterns_arg(text: str) -> frozenset:
    try:
        kinds = PatternKind.parse_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if not kinds:
        raise argparse.ArgumentTypeError("empty pattern list")
    return frozenset(kinds)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="formula-miner",
        description="Detect sum/product formula code in Java sources and measure its density.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fetch", help="shallow-clone the repositories listed in a manifest")
    p.add_argument("manifest", help="file with one URL[<TAB>branch] per line")
    p.add_argument("dest", help="directory receiving one clone per repository")

    p = sub.add_parser("scan", help="detect formula code and report densities")
    p.add_argument("roots", nargs="+", help="corpus roots; each subdirectory is one project")
    p.add_argument("--csv", metavar="PATH", help="write accepted matches as CSV ('-' for stdout)")
    p.add_argument("--report", metavar="PATH", help="write the summary here instead of stdout")
    p.add_argument("--recall", type=_recall_arg, default=DEFAULT_RECALL,
                   help="recall used for the estimated densities (default 0.3091)")
    p.add_argument("--workers", type=_workers_arg, default=None,
                   help="worker processes (default: $FORMULA_MINER_WORKERS or CPU count)")
    p.add_argument("--dedup", action="store_true", help="drop files whose content was already seen")
    p.add_argument("--vectors", action="store_true", help="also run the experimental vector patterns")
    p.add_argument("--patterns", type=_patterns_arg, default=None, metavar="LIST",
                   help="comma-separated pattern kinds (default: the ten SP kinds plus loop counters)")
    p.add_argument("-v", "--verbose", action="count", default=0,
                   help="log rejected matches and their failing constraints")

    p = sub.add_parser("eval", help="recall/precision against an annotated oracle")
    p.add_argument("root", help="corpus root holding the oracle files")
    p.add_argument("oracle_manifest", help="file listing annotated files relative to ROOT")
    p.add_argument("--judgments", metavar="PATH", help="CSV of match_id,judgment for precision")
    p.add_argument("-v", "--verbose", action="count", default=0)

    sub.add_parser("patterns", help="print the pattern catalog")
    return parser


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def cmd_scan(args) -> int:
    workers = args.workers
    if workers is None:
        try:
            workers = default_workers()
        except ValueError:
            print("formula-miner: FORMULA_MINER_WORKERS must be an integer", file=sys.stderr)
            return EXIT_USAGE
    enabled = args.patterns if args.patterns is not None else DEFAULT_KINDS
    try:
        config = ScanConfig(roots=tuple(args.roots), enabled=enabled, recall=args.recall, workers=workers,
                            dedup=args.dedup, vectors=args.vectors, verbosity=args.verbose)
    except ValueError as exc:
        print(f"formula-miner: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = scan(config)
    except OSError as exc:
        print(f"formula-miner: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    try:
        if args.csv:
            sink, close = _open_out(args.csv)
            try:
                emit_csv(result.records, sink)
            finally:
                if close:
                    sink.close()
        sink, close = _open_out(args.report)
        try:
            emit_summary(result.totals, result.report, sink, result.loops)
        finally:
            if close:
                sink.close()
    except (ReportError, OSError) as exc:
        print(f"formula-miner: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_fetch(args) -> int:
    try:
        manifest = RepoManifest.parse(Path(args.manifest).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        print(f"formula-miner: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    failures: list = []
    cloned = fetch(manifest, args.dest, failures=failures)
    for path in cloned:
        print(path)
    for url, message in failures:
        print(f"failed: {url}: {message}", file=sys.stderr)
    if failures and not cloned:
        return EXIT_FAILURE
    return EXIT_OK


def _pct(value) -> str:
    return "n/a" if value is None else format_percent(value)


def cmd_eval(args) -> int:
    try:
        manifest_text = Path(args.oracle_manifest).read_text(encoding="utf-8")
        judgments = None
        if args.judgments:
            judgments = evaluation.read_judgments(Path(args.judgments).read_text(encoding="utf-8"))
        result = evaluate(args.root, manifest_text, judgments)
    except evaluation.UnjudgedError as exc:
        print("formula-miner: detections without a judgment:", file=sys.stderr)
        for match_id in exc.ids:
            print(f"  {match_id}", file=sys.stderr)
        return EXIT_FAILURE
    except (OSError, ValueError) as exc:
        print(f"formula-miner: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    r = result.recall
    sp = sum(1 for a in result.annotations if a.sp)
    print(f"files={result.files}")
    print(f"annotated_files={result.annotated_files}")
    print(f"fragments={result.fragments}")
    print(f"sp_fragments={sp}")
    print(f"oracle_rho_files={_pct(result.rho_files)}")
    print(f"oracle_rho_LOC={_pct(result.rho_loc)}")
    print(f"detections={len(result.detections)}")
    print(f"hits={r.hits}")
    if r.value is None:
        print("recall=n/a")
    else:
        print(f"recall={r.hits}/{r.total} ({format_percent(r.value)})")
    p = result.precision
    if p is not None:
        print(f"precision_any={_pct(p.any)}")
        print(f"precision_correct={_pct(p.correct_level)}")
        print(f"precision_complete={_pct(p.complete_level)}")
    return EXIT_OK


def cmd_patterns(args) -> int:
    for kind, (title, shape, rule, family) in CATALOG.items():
        flags = []
        if kind.nested:
            flags.append("nested")
        if kind.experimental:
            flags.append("experimental")
        if not kind.sp:
            flags.append("loop counter")
        print(f"{kind.value}: {title}" + (f" [{', '.join(flags)}]" if flags else ""))
        print(f"  shape: {shape}")
        if rule:
            print(f"  classification: {rule}")
        if family:
            print(f"  constraints: {family}")
        slots = slot_names(kind)
        if slots:
            print(f"  slots: {', '.join(slots)}")
    return EXIT_OK


COMMANDS = {"fetch": cmd_fetch, "scan": cmd_scan, "eval": cmd_eval, "patterns": cmd_patterns}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    level = logging.WARNING
    if getattr(args, "verbose", 0) >= 2:
        level = logging.DEBUG
    elif getattr(args, "verbose", 0) == 1:
        level = logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
