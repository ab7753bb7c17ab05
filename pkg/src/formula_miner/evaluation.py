"""Tag-annotated oracle files, recall and the three-level precision protocol."""

from __future__ import annotations

import bisect
import csv
import re
from dataclasses import dataclass, field
from fractions import Fraction

TAGS = ("SimpleNestedLoop", "DoubleNestedLoop", "SimpleArithmetic", "Matrix", "Vector")
LOOP_TAGS = frozenset(["SimpleNestedLoop", "DoubleNestedLoop"])
JUDGMENTS = ("none", "wrong", "correct", "complete")
_JUDGMENT_ALIASES = {"partial": "correct"}

_TAG_RE = re.compile(
    r'<(?P<close>/)?(?P<name>' + "|".join(TAGS) + r')'
    r'(?:\s+sp\s*=\s*"(?P<sp>[^"]*)")?\s*>'
)


# a tag may directly follow these words: "return <SimpleArithmetic>..."
_NOT_A_TYPE = frozenset(["return", "throw", "else", "case", "yield", "do", "assert"])
_WORD_BEFORE_RE = re.compile(r"[\w$]+$")


class OracleError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.message = message
        self.line = line


@dataclass(frozen=True)
class TagSite:
    """Text removed from the annotated file, located in the cleaned text."""

    offset: int
    seq: int
    text: str


@dataclass(frozen=True)
class OracleAnnotation:
    tag: str
    file: str
    start_line: int
    end_line: int
    sp: bool
    sites: tuple[TagSite, ...] = field(default=(), compare=False, repr=False)

    def lines(self) -> range:
        return range(self.start_line, self.end_line + 1)


def _is_generic(text: str, pos: int) -> bool:
    # List<Vector>, Map<K, Matrix>, Foo.<Vector>bar(): a type argument, not a tag.
    # Type arguments hug their type name, so "x <Vector>" is a tag.
    if pos == 0:
        return False
    c = text[pos - 1]
    if c.isalnum() or c in "_$":
        m = _WORD_BEFORE_RE.search(text, 0, pos)
        return not (m and m.group() in _NOT_A_TYPE)
    k = pos - 1
    while k >= 0 and text[k] in " \t":
        k -= 1
    return k >= 0 and text[k] in "?.,<"


def _line_of(line_starts, offset: int) -> int:
    return bisect.bisect_right(line_starts, offset)


def parse_oracle(text: str, file: str = "") -> tuple[str, list[OracleAnnotation]]:
    """Strip oracle tags; returned line numbers refer to the cleaned text.

    A line holding nothing but tags is removed entirely, so the cleaned text
    is the unannotated source.
    """
    out: list[str] = []
    clean_len = 0
    seq = 0
    stack: list[dict] = []
    done: list[dict] = []
    orig_line = 0
    for line in text.splitlines(keepends=True):
        orig_line += 1
        tags = [m for m in _TAG_RE.finditer(line) if m.group("close") or not _is_generic(line, m.start())]
        if not tags:
            out.append(line)
            clean_len += len(line)
            continue
        rest = "".join(line[a:b] for a, b in _gaps(line, tags))
        whole = not rest.strip()
        events = []
        if whole:
            events = [(clean_len, m) for m in tags]
            first_site_text = {id(tags[0]): line}
        else:
            first_site_text = {}
            pieces = []
            cursor = 0
            pos = clean_len
            for m in tags:
                chunk = line[cursor:m.start()]
                pieces.append(chunk)
                pos += len(chunk)
                events.append((pos, m))
                cursor = m.end()
            pieces.append(line[cursor:])
            line = "".join(pieces)
        for pos, m in events:
            site_text = first_site_text.get(id(m), "" if whole else m.group())
            site = TagSite(pos, seq, site_text)
            seq += 1
            name = m.group("name")
            if m.group("close"):
                if not stack:
                    raise OracleError(f"closing </{name}> without an open tag", orig_line)
                top = stack.pop()
                if top["tag"] != name:
                    raise OracleError(f"</{name}> closes <{top['tag']}>", orig_line)
                top["close"] = pos
                top["sites"].append(site)
                done.append(top)
            else:
                sp_attr = m.group("sp")
                if sp_attr not in (None, "true", "false"):
                    raise OracleError(f'sp attribute must be "true" or "false", got "{sp_attr}"', orig_line)
                sp = sp_attr == "true"
                if sp and name not in LOOP_TAGS:
                    raise OracleError(f"<{name}> is not a loop tag and cannot carry sp=\"true\"", orig_line)
                stack.append({"tag": name, "sp": sp, "open": pos, "sites": [site], "line": orig_line})
        if not whole:
            out.append(line)
            clean_len += len(line)
    if stack:
        raise OracleError(f"<{stack[-1]['tag']}> is never closed", stack[-1]["line"])
    clean = "".join(out)
    line_starts = [0] + [m.end() for m in re.finditer("\n", clean)]
    annotations = []
    for a in sorted(done, key=lambda a: a["sites"][0].seq):
        start = _line_of(line_starts, a["open"])
        end = _line_of(line_starts, max(a["close"] - 1, a["open"]))
        annotations.append(OracleAnnotation(a["tag"], file, start, max(start, end), a["sp"], tuple(a["sites"])))
    return clean, annotations


def _gaps(line: str, tags):
    cursor = 0
    for m in tags:
        yield cursor, m.start()
        cursor = m.end()
    yield cursor, len(line)


def insert_tags(clean: str, annotations) -> str:
    """Inverse of :func:`parse_oracle`."""
    sites = sorted((s for a in annotations for s in a.sites), key=lambda s: (s.offset, s.seq))
    parts = []
    cursor = 0
    for s in sites:
        parts.append(clean[cursor:s.offset])
        parts.append(s.text)
        cursor = s.offset
    parts.append(clean[cursor:])
    return "".join(parts)


def parse_oracle_manifest(text: str) -> list[str]:
    """Annotated file paths, one per line, relative to the corpus root."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


@dataclass(frozen=True)
class RecallResult:
    hits: int
    total: int

    @property
    def value(self) -> Fraction | None:
        return Fraction(self.hits, self.total) if self.total else None


@dataclass(frozen=True)
class PrecisionResult:
    detections: int
    wrong: int
    correct: int
    complete: int

    def _frac(self, n):
        return Fraction(n, self.detections) if self.detections else None

    @property
    def any(self) -> Fraction | None:
        return self._frac(self.wrong + self.correct + self.complete)

    @property
    def correct_level(self) -> Fraction | None:
        return self._frac(self.correct + self.complete)

    @property
    def complete_level(self) -> Fraction | None:
        return self._frac(self.complete)


@dataclass(frozen=True)
class EvalMetrics:
    recall: RecallResult
    precision: PrecisionResult | None = None


def _span_of(d):
    path = getattr(d, "path", None)
    if path is None:
        path = getattr(d, "file")
    return path, d.start_line, d.end_line


def recall(detections, annotations) -> RecallResult:
    """Share of sp-flagged fragments overlapped by some detection.

    A detection credits the outermost overlapping fragment not yet credited,
    so one detection never counts twice and a nested fragment counts only
    when a second detection reaches it.
    """
    fragments = [a for a in annotations if a.sp]
    by_file: dict = {}
    for a in fragments:
        by_file.setdefault(a.file, []).append(a)
    depth = {}
    for fs in by_file.values():
        for i, a in enumerate(fs):
            # equal spans: the one opened first counts as the outer one
            depth[id(a)] = sum(
                1 for j, b in enumerate(fs)
                if j != i and b.start_line <= a.start_line and a.end_line <= b.end_line
                and ((b.start_line, b.end_line) != (a.start_line, a.end_line) or j < i)
            )
    credited = set()
    for d in sorted((_span_of(d) for d in detections)):
        path, s, e = d
        candidates = [a for a in by_file.get(path, ()) if a.start_line <= e and s <= a.end_line and id(a) not in credited]
        if not candidates:
            continue
        best = min(candidates, key=lambda a: (depth[id(a)], a.start_line, a.end_line))
        credited.add(id(best))
    return RecallResult(len(credited), len(fragments))


def normalize_judgment(j: str) -> str:
    j = j.strip().lower()
    j = _JUDGMENT_ALIASES.get(j, j)
    if j not in JUDGMENTS:
        raise ValueError(f"unknown judgment {j!r}; expected one of {', '.join(JUDGMENTS)}")
    return j


class UnjudgedError(ValueError):
    def __init__(self, ids):
        self.ids = list(ids)
        super().__init__("no judgment for: " + ", ".join(self.ids))


def precision(judged) -> PrecisionResult:
    """``judged`` yields ``(match_id, judgment)``; a judgment of None means unjudged."""
    counts = dict.fromkeys(JUDGMENTS, 0)
    missing = []
    n = 0
    for match_id, j in judged:
        n += 1
        if j is None:
            missing.append(match_id)
            continue
        counts[normalize_judgment(j)] += 1
    if missing:
        raise UnjudgedError(missing)
    return PrecisionResult(n, counts["wrong"], counts["correct"], counts["complete"])


def read_judgments(text: str) -> dict:
    """``match_id,judgment`` rows; an optional header row is skipped."""
    out = {}
    for row in csv.reader(text.splitlines()):
        if not row or not row[0].strip() or row[0].startswith("#"):
            continue
        if row[0].strip() == "match_id":
            continue
        if len(row) < 2:
            raise ValueError(f"judgment row without a judgment: {row[0]}")
        out[row[0].strip()] = normalize_judgment(row[1])
    return out
