"""Syntactic sum/product patterns over Java loops, plus vector and loop-count patterns.

Each kind is matched over a :class:`~formula_miner.lexer.TokenStream`. Loop
headers, increment spellings and accumulation statements are recognised
with compiled regular expressions on whitespace-normalised token text;
statement and block extents come from the stream's bracket table.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .corpus import SourceUnit
from .lexer import BINARY_PRECEDENCE, LOWEST_OPS, TokenStream, is_ident


class PatternKind(enum.Enum):
    FIS = "FIS"
    FES = "FES"
    FIA = "FIA"
    FEC = "FEC"
    NFISS = "NFISS"
    NFESS = "NFESS"
    NFIAS = "NFIAS"
    NFECS = "NFECS"
    NFIAA = "NFIAA"
    NFECC = "NFECC"
    VEC_ADD = "VEC_ADD"
    VEC_DOT = "VEC_DOT"
    LOOP_SIMPLE = "LOOP_SIMPLE"
    LOOP_NESTED = "LOOP_NESTED"

    # lookups go through the string value: Enum.__hash__ is slow on hot paths
    @property
    def nested(self) -> bool:
        return self._value_ in _NESTED

    @property
    def sp(self) -> bool:
        return self._value_ not in ("LOOP_SIMPLE", "LOOP_NESTED")

    @property
    def experimental(self) -> bool:
        return self._value_ in ("VEC_ADD", "VEC_DOT")

    @property
    def order(self) -> int:
        return _ORDER[self._value_]

    @classmethod
    def parse_list(cls, text: str) -> set["PatternKind"]:
        kinds = set()
        for name in text.split(","):
            name = name.strip().upper()
            if not name:
                continue
            if name == "FEA":  # spelling used once in prose for FEC
                name = "FEC"
            kinds.add(cls(name))
        return kinds


_NESTED = frozenset(["NFISS", "NFESS", "NFIAS", "NFECS", "NFIAA", "NFECC", "LOOP_NESTED"])
_ORDER = {k.value: i for i, k in enumerate(PatternKind)}

TABLE2_KINDS = (
    PatternKind.FIS, PatternKind.FES, PatternKind.FIA, PatternKind.FEC,
    PatternKind.NFISS, PatternKind.NFESS, PatternKind.NFIAS, PatternKind.NFECS,
    PatternKind.NFIAA, PatternKind.NFECC,
)
VECTOR_KINDS = (PatternKind.VEC_ADD, PatternKind.VEC_DOT)
LOOP_KINDS = (PatternKind.LOOP_SIMPLE, PatternKind.LOOP_NESTED)
DEFAULT_KINDS = frozenset(TABLE2_KINDS + LOOP_KINDS)

_INDEX_FOR = frozenset([PatternKind.FIS, PatternKind.FIA])
_INDEX_NESTED = frozenset([PatternKind.NFISS, PatternKind.NFIAS, PatternKind.NFIAA])
_EACH_FOR = frozenset([PatternKind.FES, PatternKind.FEC])
_EACH_NESTED = frozenset([PatternKind.NFESS, PatternKind.NFECS, PatternKind.NFECC])


@dataclass(frozen=True)
class LoopLevel:
    """Header of one loop: ``for (var = lower; var rel_op limit; ...)`` or ``for (T var : limit)``."""

    var: str
    lower: str | None
    limit: str
    rel_op: str | None
    foreach: bool


@dataclass(frozen=True)
class VectorSlots:
    targets: tuple[str, ...]
    operands: tuple[tuple[str, str], tuple[str, str]]  # operands[i][j] = exp_{i+1,j+1}


@dataclass(frozen=True)
class CapturedRoles:
    levels: tuple[LoopLevel, ...] = ()
    accu: str | None = None
    op: str | None = None
    exp3: str | None = None
    blocks: tuple[str, ...] = ()
    assign_form: str | None = None  # "compound" or "expanded"
    vector: VectorSlots | None = None

    @property
    def index_vars(self) -> tuple[str, ...]:
        return tuple(level.var for level in self.levels)

    @property
    def exp1(self) -> str | None:
        return self.levels[0].lower if self.levels else None

    @property
    def exp2(self) -> str | None:
        return self.levels[0].limit if self.levels else None

    @property
    def rel_op(self) -> str | None:
        return self.levels[0].rel_op if self.levels else None

    @property
    def entry(self) -> str | None:
        if len(self.levels) == 2 and self.levels[0].foreach:
            return self.levels[0].var
        return None

    @property
    def elem(self) -> str | None:
        if self.levels and self.levels[-1].foreach:
            return self.levels[-1].var
        return None


@dataclass(frozen=True)
class PatternMatch:
    kind: PatternKind
    project: str
    path: str
    start_line: int
    end_line: int
    snippet: str
    roles: CapturedRoles

    @property
    def unit_ref(self) -> tuple[str, str]:
        return (self.project, self.path)

    @property
    def match_id(self) -> str:
        where = f"{self.project}/{self.path}" if self.project else self.path
        return f"{where}:{self.start_line}-{self.end_line}:{self.kind.value}"

    def sort_key(self):
        return (self.project, self.path, self.start_line, self.kind.order, self.end_line)

    def lines(self) -> range:
        return range(self.start_line, self.end_line + 1)


# --- regular expressions over normalised token text -----------------------

_ID = r"(?:[^\W\d]|\$)[\w$]*"
_TYPE = rf"{_ID}(?:\s?\.\s?{_ID})*(?:\s?<[^;=]*>)?(?:\s?\[\s?\])*"
_INIT_RE = re.compile(rf"^(?:final\s)?(?:{_TYPE}\s)?(?P<ind>{_ID})\s?=\s?(?P<exp>.+)$")
_INCREMENT_RE = re.compile(
    rf"^(?:(?P<a>{_ID})\s?=\s?(?P=a)\s?\+\s?1|(?P<b>{_ID})\s?\+=\s?1|\+\+\s?(?P<c>{_ID})|(?P<d>{_ID})\s?\+\+)$"
)
_FOREACH_DECL_RE = re.compile(rf"^(?:(?:final|@{_ID})\s)*{_TYPE}\s(?P<var>{_ID})$")
_LVALUE_RE = re.compile(
    rf"^(?:this\s?\.\s?)?{_ID}(?:\s?\.\s?{_ID})*(?P<subs>(?:\s?\[[^\[\]]*(?:\[[^\[\]]*\][^\[\]]*)*\]){{0,2}})$"
)

_OPD = (
    rf"{_ID}(?:\s?\(\s?[\w$]*\s?\))?(?:\s?\[\s?[\w$]+\s?\])?"
    rf"(?:\s?\.\s?{_ID}(?:\s?\(\s?[\w$]*\s?\))?(?:\s?\[\s?[\w$]+\s?\])?)*"
)
_DECL = rf"(?:(?:final\s)?{_TYPE}\s)?"
_VEC_DOT_RE = re.compile(
    rf"^{_DECL}(?P<var>{_OPD})\s?=\s?(?P<p>\(\s?)?(?P<e11>{_OPD})\s?\*\s?(?P<e21>{_OPD})"
    rf"\s?\+\s?(?P<e12>{_OPD})\s?\*\s?(?P<e22>{_OPD})\s?(?(p)\))$"
)
_VEC_ADD_RE = re.compile(rf"^{_DECL}(?P<var>{_OPD})\s?=\s?(?P<e1>{_OPD})\s?\+\s?(?P<e2>{_OPD})$")

REL_OPS = ("<", "<=", ">", ">=", "!=")
ACCU_OPS = ("+", "-", "*", "/")

# Operators that may stay at top level of exp3 in ``accu = accu op exp3``
# without changing the grouping to ``(accu op a) op' b``.
_EXPANDED_ALLOWED = {
    "+": {"+", "-", "*", "/", "%"},
    "-": {"*", "/", "%"},
    "*": {"*", "/"},
    "/": set(),
}
_LOW_PRECEDENCE = {op for op, p in BINARY_PRECEDENCE.items() if p < 11} | LOWEST_OPS


@dataclass
class _Accu:
    first: int
    last: int
    accu: str
    base: str | None
    sub_vars: frozenset
    op: str
    exp3: str
    form: str


@dataclass
class _Loop:
    start: int
    end: int
    level: LoopLevel | None
    body: list
    braced: bool
    contains_loop: bool = False
    nested_in_loop: bool = False


class _Analysis:
    """Per-unit loop structure shared by all kinds."""

    def __init__(self, text: str, project: str = "", path: str = ""):
        self.project = project
        self.path = path
        self.ts = TokenStream(text)
        self.loops: list[_Loop] = []
        self.loop_at: dict[int, _Loop] = {}
        self._accu_cache: dict[int, _Accu | None] = {}
        self._find_loops()

    # -- structure --------------------------------------------------------

    def _find_loops(self):
        ts = self.ts
        toks = ts.toks
        n = len(toks)
        for i, t in enumerate(toks):
            if t != "for" or i + 1 >= n or toks[i + 1] != "(":
                continue
            close = ts.match[i + 1]
            if close < 0 or close + 1 >= n:
                continue
            b = close + 1
            end = ts.stmt_end(b)
            if toks[b] == "{":
                body = ts.split_statements(b + 1, end - 1)
                braced = True
            else:
                body = [(b, end)]
                braced = False
            loop = _Loop(i, end, self._parse_header(i + 2, close - 1), body, braced)
            self.loops.append(loop)
            self.loop_at[i] = loop
        stack: list[_Loop] = []
        for loop in self.loops:
            while stack and loop.start > stack[-1].end:
                stack.pop()
            if stack:
                loop.nested_in_loop = True
                for outer in stack:
                    outer.contains_loop = True
            stack.append(loop)

    def _parse_header(self, lo: int, hi: int) -> LoopLevel | None:
        ts = self.ts
        if hi < lo:
            return None
        semis = ts.find_top_level(lo, hi, (";",))
        if len(semis) == 2:
            s1, s2 = semis
            if s1 == lo or s2 == s1 + 1 or s2 == hi:
                return None
            if ts.find_top_level(lo, s1 - 1, (",",)) or ts.find_top_level(s2 + 1, hi, (",",)):
                return None
            init = _INIT_RE.match(ts.join(lo, s1 - 1))
            if not init:
                return None
            var = init.group("ind")
            inc = _INCREMENT_RE.match(ts.join(s2 + 1, hi))
            if not inc or next(g for g in inc.groups() if g) != var:
                return None
            c = s1 + 1
            toks = ts.toks
            if toks[c] != var or c + 2 > s2 - 1 or toks[c + 1] not in REL_OPS:
                return None
            limit_ops = ts.top_level_binary_ops(c + 2, s2 - 1)
            if limit_ops & _LOW_PRECEDENCE:
                return None
            return LoopLevel(var, init.group("exp"), ts.join(c + 2, s2 - 1), toks[c + 1], False)
        if semis:
            return None
        colons = ts.find_top_level(lo, hi, (":",))
        if not colons or colons[0] == hi:
            return None
        decl = _FOREACH_DECL_RE.match(ts.join(lo, colons[0] - 1))
        if not decl:
            return None
        return LoopLevel(decl.group("var"), None, ts.join(colons[0] + 1, hi), None, True)

    def accumulation(self, first: int, last: int) -> _Accu | None:
        if first in self._accu_cache:
            return self._accu_cache[first]
        acc = self._parse_accumulation(first, last)
        self._accu_cache[first] = acc
        return acc

    def _parse_accumulation(self, first: int, last: int) -> _Accu | None:
        ts = self.ts
        toks = ts.toks
        if toks[last] != ";" or last - first < 3:
            return None
        assigns = ts.find_top_level(first, last - 1, ("=", "+=", "-=", "*=", "/="))
        if not assigns:
            return None
        k = assigns[0]
        if k == first:
            return None
        lhs = ts.join(first, k - 1)
        lv = _LVALUE_RE.match(lhs)
        if not lv:
            return None
        if toks[k] != "=":
            if k + 1 > last - 1:
                return None
            op, form = toks[k][0], "compound"
            e_first = k + 1
        else:
            width = k - first
            r = k + 1
            if r + width + 1 > last - 1 or toks[r:r + width] != toks[first:k]:
                return None
            op = toks[r + width]
            if op not in ACCU_OPS:
                return None
            e_first = r + width + 1
            if ts.top_level_binary_ops(e_first, last - 1) - _EXPANDED_ALLOWED[op]:
                return None
            form = "expanded"
        if e_first > last - 1:
            return None
        base = lvalue_base(ts, first, k - 1)
        sub_vars: set[str] = set()
        for b in ts.find_top_level(first, k - 1, ("[",)):
            m = ts.match[b]
            if m > b:
                sub_vars |= _vars_in(ts, b + 1, m - 1)
        return _Accu(first, last, lhs, base, frozenset(sub_vars), op, ts.join(e_first, last - 1), form)

    # -- match construction -------------------------------------------------

    def _block(self, body, lo: int, hi: int) -> str:
        if hi < lo:
            return ""
        return self.ts.join(body[lo][0], body[hi][1])

    def _make(self, kind, first: int, last: int, roles: CapturedRoles) -> PatternMatch:
        ts = self.ts
        start_off, end_off = ts.starts[first], ts.ends[last]
        return PatternMatch(
            kind=kind,
            project=self.project,
            path=self.path,
            start_line=ts.line_of(start_off),
            end_line=ts.line_of(end_off - 1),
            snippet=ts.text[start_off:end_off],
            roles=roles,
        )

    def match_single(self, loop: _Loop, kind: PatternKind) -> PatternMatch | None:
        level = loop.level
        if level is None or level.foreach != (kind in _EACH_FOR):
            return None
        for idx, (s, e) in enumerate(loop.body):
            acc = self.accumulation(s, e)
            if acc is None or classify_single(level, acc.base, acc.sub_vars) is not kind:
                continue
            body = loop.body
            roles = CapturedRoles(
                levels=(level,),
                accu=acc.accu,
                op=acc.op,
                exp3=acc.exp3,
                blocks=(self._block(body, 0, idx - 1), self._block(body, idx + 1, len(body) - 1)),
                assign_form=acc.form,
            )
            return self._make(kind, loop.start, loop.end, roles)
        return None

    def match_nested(self, outer: _Loop, kind: PatternKind) -> PatternMatch | None:
        o_level = outer.level
        foreach = kind in _EACH_NESTED
        if o_level is None or o_level.foreach != foreach:
            return None
        for idx, (s, _e) in enumerate(outer.body):
            inner = self.loop_at.get(s)
            if inner is None or inner.level is None:
                continue
            i_level = inner.level
            if i_level.foreach != foreach or i_level.var == o_level.var:
                continue
            for jdx, (s2, e2) in enumerate(inner.body):
                acc = self.accumulation(s2, e2)
                if acc is None:
                    continue
                if classify_nested(o_level, i_level, acc.base, acc.sub_vars) is not kind:
                    continue
                ob, ib = outer.body, inner.body
                roles = CapturedRoles(
                    levels=(o_level, i_level),
                    accu=acc.accu,
                    op=acc.op,
                    exp3=acc.exp3,
                    blocks=(
                        self._block(ob, 0, idx - 1),
                        self._block(ib, 0, jdx - 1),
                        self._block(ib, jdx + 1, len(ib) - 1),
                        self._block(ob, idx + 1, len(ob) - 1),
                    ),
                    assign_form=acc.form,
                )
                return self._make(kind, outer.start, outer.end, roles)
        return None

    def match_loops(self, kind: PatternKind) -> list[PatternMatch]:
        if kind is PatternKind.LOOP_SIMPLE:
            return [self._make(kind, lp.start, lp.end, CapturedRoles())
                    for lp in self.loops if not lp.contains_loop]
        if kind is PatternKind.LOOP_NESTED:
            return [self._make(kind, lp.start, lp.end, CapturedRoles())
                    for lp in self.loops if lp.contains_loop and not lp.nested_in_loop]
        if kind.nested:
            attempt = self.match_nested
        else:
            attempt = self.match_single
        out = []
        last_end = -1
        for loop in self.loops:
            if loop.start <= last_end:
                continue  # non-overlapping, like successive regex searches
            m = attempt(loop, kind)
            if m is not None:
                out.append(m)
                last_end = loop.end
        return out

    # -- vector statements ------------------------------------------------

    def simple_statements(self) -> list[tuple[int, int]]:
        """Brace-free expression statements, in source order."""
        ts = self.ts
        toks, match = ts.toks, ts.match
        n = len(toks)
        out = []
        starts = [0] + [k + 1 for k, t in enumerate(toks) if t in (";", "{", "}")]
        for s in starts:
            while s < n and toks[s] in ("if", "while", "for") and s + 1 < n and toks[s + 1] == "(":
                s = ts.skip_group(s + 1)
            while s < n and toks[s] in ("else", "do"):
                s += 1
            if s >= n or toks[s] in (";", "{", "}"):
                continue
            k = s
            ok = False
            while k < n:
                t = toks[k]
                if t == ";":
                    ok = True
                    break
                if t in ("{", "}", ")", "]"):
                    break
                if t in ("(", "["):
                    if match[k] < 0:
                        break
                    k = match[k] + 1
                    continue
                k += 1
            if ok:
                out.append((s, k))
        return out

    def match_vectors(self, kind: PatternKind) -> list[PatternMatch]:
        ts = self.ts
        stmts = self.simple_statements()
        out = []
        if kind is PatternKind.VEC_DOT:
            for s, e in stmts:
                m = _VEC_DOT_RE.match(ts.join(s, e - 1))
                if m:
                    slots = VectorSlots(
                        (m.group("var"),),
                        ((m.group("e11"), m.group("e12")), (m.group("e21"), m.group("e22"))),
                    )
                    out.append(self._make(kind, s, e, CapturedRoles(vector=slots)))
            return out
        k = 0
        while k + 1 < len(stmts):
            (s1, e1), (s2, e2) = stmts[k], stmts[k + 1]
            m1 = _VEC_ADD_RE.match(ts.join(s1, e1 - 1)) if s2 == e1 + 1 else None
            m2 = _VEC_ADD_RE.match(ts.join(s2, e2 - 1)) if m1 else None
            if m1 and m2:
                slots = VectorSlots(
                    (m1.group("var"), m2.group("var")),
                    ((m1.group("e1"), m2.group("e1")), (m1.group("e2"), m2.group("e2"))),
                )
                out.append(self._make(kind, s1, e2, CapturedRoles(vector=slots)))
                k += 2
            else:
                k += 1
        return out

    def match_kind(self, kind: PatternKind) -> list[PatternMatch]:
        if kind in VECTOR_KINDS:
            return self.match_vectors(kind)
        return self.match_loops(kind)


def classify_single(level: LoopLevel, base: str | None, sub_vars) -> PatternKind:
    if level.foreach:
        return PatternKind.FEC if base == level.var else PatternKind.FES
    return PatternKind.FIA if level.var in sub_vars else PatternKind.FIS


def classify_nested(outer: LoopLevel, inner: LoopLevel, base: str | None, sub_vars) -> PatternKind | None:
    if outer.foreach:
        if base == outer.var:
            return PatternKind.NFECS
        if base == inner.var:
            return PatternKind.NFECC
        return PatternKind.NFESS
    in_outer, in_inner = outer.var in sub_vars, inner.var in sub_vars
    if in_outer and in_inner:
        return PatternKind.NFIAA
    if in_outer:
        return PatternKind.NFIAS
    if in_inner:
        return None  # family over the inner index would need reordered sums
    return PatternKind.NFISS


def lvalue_base(ts: TokenStream, first: int, last: int) -> str | None:
    """Base identifier of the lvalue chain ending at token ``last``."""
    toks, match = ts.toks, ts.match
    j = last
    prev_ident = None
    while j >= first:
        t = toks[j]
        if t in ("]", ")"):
            m = match[j]
            if m < first or m < 0:
                return None
            j = m - 1
            continue
        if t in ("this", "super") and prev_ident is not None:
            return prev_ident
        if is_ident(t):
            if j - 1 >= first and toks[j - 1] == ".":
                prev_ident = t
                j -= 2
                continue
            if j + 1 < len(toks) and toks[j + 1] == "(":
                return None
            return t
        return None
    return None


def _vars_in(ts: TokenStream, lo: int, hi: int) -> set[str]:
    toks = ts.toks
    out = set()
    for k in range(lo, hi + 1):
        t = toks[k]
        if not is_ident(t):
            continue
        prev = toks[k - 1] if k > lo else ""
        nxt = toks[k + 1] if k < hi else ""
        if prev in ("@", "::", "new"):
            continue
        if prev == ".":
            if k - 2 >= lo and toks[k - 2] in ("this", "super") and nxt != "(":
                out.add(t)
            continue
        if nxt == "(":
            continue
        if prev == "(" and nxt == ")" and k + 2 <= hi:
            after = toks[k + 2]
            if is_ident(after) or after[0].isdigit() or after[0] in "(\"'":
                continue  # cast type
        out.add(t)
    return out


def analyze(unit: SourceUnit | str) -> _Analysis:
    if isinstance(unit, str):
        return _Analysis(unit)
    return _Analysis(unit.stripped_text, unit.project, unit.relative_path)


def match_kind(kind: PatternKind, unit: SourceUnit | str, analysis: _Analysis | None = None) -> list[PatternMatch]:
    """Every non-overlapping occurrence of ``kind`` in the unit, by start line."""
    if analysis is None:
        analysis = analyze(unit)
    return analysis.match_kind(kind)


def match_all(unit: SourceUnit | str, enabled=DEFAULT_KINDS) -> list[PatternMatch]:
    """Raw matches of every enabled kind, ordered by (start line, kind)."""
    text = unit if isinstance(unit, str) else unit.stripped_text
    enabled = set(enabled)
    if not (enabled & set(VECTOR_KINDS)) and "for" not in text:
        return []
    analysis = analyze(unit)
    out = []
    for kind in sorted(enabled, key=lambda k: k.order):
        out.extend(analysis.match_kind(kind))
    out.sort(key=lambda m: (m.start_line, m.kind.order, m.end_line))
    return out


def resolve_precedence(matches):
    """Drop non-nested SP matches that share a line with any nested SP match."""
    nested_lines = set()
    for m in matches:
        if m.kind.sp and m.kind.nested:
            nested_lines.update(m.lines())
    if not nested_lines:
        return list(matches)
    out = []
    for m in matches:
        if m.kind.sp and not m.kind.nested and any(line in nested_lines for line in m.lines()):
            continue
        out.append(m)
    return out


CATALOG = {
    PatternKind.FIS: ("for-loop for sum/product",
                      "for (index = exp1; index REL exp2; index++) { block1 accu op= exp3; block2 }",
                      "accu is not indexed by the loop index", "for_sum"),
    PatternKind.FES: ("foreach-loop for sum/product",
                      "for (T elem : exp2) { block1 accu op= exp3; block2 }",
                      "accu is not the loop variable", "for_sum"),
    PatternKind.FIA: ("for-loop for arrays",
                      "for (index = exp1; index REL exp2; index++) { block1 accu[..index..] op= exp3; block2 }",
                      "accu subscript uses the loop index", "for_sum"),
    PatternKind.FEC: ("foreach-loop for arrays/collections",
                      "for (T elem : exp2) { block1 elem... op= exp3; block2 }",
                      "accu is (a part of) the loop variable", "for_sum"),
    PatternKind.NFISS: ("for-loops for sum/product of sums/products",
                        "for (i..) { block1 for (j..) { block2 accu op= exp3; block3 } block4 }",
                        "accu indexed by neither loop index", "nested_for"),
    PatternKind.NFESS: ("foreach-loops for sum/product of sums/products",
                        "for (T entry : exp1) { block1 for (U elem : exp2) { block2 accu op= exp3; block3 } block4 }",
                        "accu is neither loop variable", "nested_foreach"),
    PatternKind.NFIAS: ("for-loops for array of products/sums",
                        "for (i..) { block1 for (j..) { block2 accu[..i..] op= exp3; block3 } block4 }",
                        "accu subscript uses the outer index only", "nested_for"),
    PatternKind.NFECS: ("foreach-loops for array/collection of products/sums",
                        "for (T entry : exp1) { block1 for (U elem : exp2) { block2 entry op= exp3; block3 } block4 }",
                        "accu is the outer loop variable", "nested_foreach"),
    PatternKind.NFIAA: ("for-loops for array of arrays",
                        "for (i..) { block1 for (j..) { block2 accu[..i..][..j..] op= exp3; block3 } block4 }",
                        "accu subscripts use both indices", "nested_for"),
    PatternKind.NFECC: ("foreach-loops for array/collection of arrays/collections",
                        "for (T entry : exp1) { block1 for (U elem : exp2) { block2 elem op= exp3; block3 } block4 }",
                        "accu is the inner loop variable", "nested_foreach"),
    PatternKind.VEC_ADD: ("2D vector addition (experimental, off by default)",
                          "var1 = exp11 + exp21; var2 = exp12 + exp22;", "", "vector"),
    PatternKind.VEC_DOT: ("2D scalar product (experimental, off by default)",
                          "var = exp11 * exp21 + exp12 * exp22;", "", "vector"),
    PatternKind.LOOP_SIMPLE: ("any for/foreach loop without a loop in its body", "for (...) body", "", None),
    PatternKind.LOOP_NESTED: ("outermost for/foreach loop containing another loop",
                              "for (...) { ... for (...) ... }", "", None),
}

SLOT_NAMES = {
    "for_sum": ("index", "exp1", "exp2", "rel_op", "accu", "op", "exp3", "block1", "block2"),
    "foreach_sum": ("elem", "exp2", "accu", "op", "exp3", "block1", "block2"),
    "nested_for": ("index_outer", "index_inner", "exp1_outer", "exp2_outer", "exp1_inner", "exp2_inner",
                   "rel_ops", "accu", "op", "exp3", "block1", "block2", "block3", "block4"),
    "nested_foreach": ("entry", "exp1", "elem", "exp2", "accu", "op", "exp3",
                       "block1", "block2", "block3", "block4"),
    "vector": ("var(s)", "exp11", "exp12", "exp21", "exp22"),
    None: (),
}


def family_of(kind: PatternKind) -> str | None:
    return CATALOG[kind][3]


def slot_names(kind: PatternKind) -> tuple:
    family = family_of(kind)
    if family == "for_sum" and kind in (PatternKind.FES, PatternKind.FEC):
        family = "foreach_sum"
    return SLOT_NAMES[family]
