"""Variable-role extraction and the per-family constraint sets.

``vars`` and ``writes`` work on captured text slots, so they are string
functions; both re-tokenize with the shared lexer and only ever report base
identifiers (``a.b.c`` contributes ``a``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .lexer import ASSIGN_OPS, TokenStream, is_ident
from .patterns import CapturedRoles, PatternKind, PatternMatch, family_of, lvalue_base


@dataclass(frozen=True)
class Verdict:
    id: str
    passed: bool
    offending: frozenset = field(default_factory=frozenset)
    note: str = ""


@dataclass(frozen=True)
class ConstraintReport:
    match: PatternMatch | None
    verdicts: tuple[Verdict, ...]

    @property
    def accepted(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failed(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def describe(self) -> str:
        parts = []
        for v in self.failed():
            syms = ",".join(sorted(v.offending))
            parts.append(f"{v.id}{{{syms}}}" + (f" {v.note}" if v.note else ""))
        return "; ".join(parts) or "accepted"


CONSTRAINT_IDS = {
    "for_sum": ("C1", "C2", "C3", "C4", "C5"),
    "nested_for": ("N1", "N2", "N3", "N4", "N5", "N6"),
    "nested_foreach": ("E1", "E2", "E3", "E4", "E5"),
    "vector": ("V1", "V2", "V3", "V4", "V5"),
}


@lru_cache(maxsize=4096)
def _stream(text: str) -> TokenStream:
    return TokenStream(text)


@lru_cache(maxsize=16384)
def vars(expr: str | None) -> frozenset:  # noqa: A001 - mirrors the math name
    """Identifiers occurring in ``expr``: no method names, no member names, no type names."""
    if not expr:
        return frozenset()
    ts = _stream(expr)
    toks = ts.toks
    n = len(toks)
    out = set()
    for k, t in enumerate(toks):
        if not is_ident(t):
            continue
        prev = toks[k - 1] if k else ""
        nxt = toks[k + 1] if k + 1 < n else ""
        if prev in ("@", "::", "new"):
            continue
        if nxt == "(":
            continue
        if prev == ".":
            # this.x / super.x name a field of the enclosing object
            if k >= 2 and toks[k - 2] in ("this", "super") and (k < 3 or toks[k - 3] != "."):
                out.add(t)
            continue
        if prev == "(" and nxt == ")" and k + 2 < n:
            after = toks[k + 2]
            if is_ident(after) or after[0].isdigit() or after[0] in "(\"'":
                continue  # cast
        if nxt == "." and k + 2 < n and toks[k + 2] == "class":
            continue
        out.add(t)
    return frozenset(out - _lambda_params(ts))


def _lambda_params(ts: TokenStream) -> set:
    # Java forbids a lambda parameter from shadowing a local, so dropping the name everywhere is safe
    toks = ts.toks
    params = set()
    for k, t in enumerate(toks):
        if t != "->" or not k:
            continue
        prev = toks[k - 1]
        if is_ident(prev):
            params.add(prev)
        elif prev == ")" and ts.match[k - 1] >= 0:
            for j in range(ts.match[k - 1] + 1, k - 1):
                if is_ident(toks[j]) and toks[j + 1] in (",", ")"):
                    params.add(toks[j])
    return params


def vars_of(*exprs) -> frozenset:
    out: frozenset = frozenset()
    for e in exprs:
        out |= vars(e)
    return out


@lru_cache(maxsize=16384)
def writes(block: str | None) -> frozenset:
    """Base identifiers assigned (plain, compound, ``++``/``--``) or declared by a foreach in ``block``."""
    if not block:
        return frozenset()
    ts = _stream(block)
    toks = ts.toks
    n = len(toks)
    out = set()
    for k, t in enumerate(toks):
        if t in ASSIGN_OPS:
            if k:
                base = lvalue_base(ts, 0, k - 1)
                if base:
                    out.add(base)
        elif t in ("++", "--"):
            prev = toks[k - 1] if k else ""
            postfix = bool(prev) and (is_ident(prev) or prev in ("]", ")"))
            if prev == ")":
                opener = ts.match[k - 1]
                if opener > 0 and toks[opener - 1] in ("for", "while", "if", "switch", "synchronized"):
                    postfix = False
            if postfix:
                base = lvalue_base(ts, 0, k - 1)
            else:
                base = _forward_base(toks, k + 1)
            if base:
                out.add(base)
        elif t == ":" and k >= 2 and is_ident(toks[k - 1]):
            # foreach header: for (T v : xs)
            j = k - 1
            depth_open = _enclosing_open(ts, j)
            if depth_open is not None and depth_open >= 1 and toks[depth_open - 1] == "for":
                out.add(toks[k - 1])
    return frozenset(out)


def writes_of(*blocks) -> frozenset:
    out: frozenset = frozenset()
    for b in blocks:
        out |= writes(b)
    return out


def _forward_base(toks, k: int) -> str | None:
    while k < len(toks) and toks[k] == "(":
        k += 1
    if k >= len(toks):
        return None
    t = toks[k]
    if t in ("this", "super") and k + 2 < len(toks) and toks[k + 1] == ".":
        t = toks[k + 2]
    return t if is_ident(t) else None


def _enclosing_open(ts: TokenStream, j: int) -> int | None:
    # nearest "(" before j whose match lies after j
    toks, match = ts.toks, ts.match
    k = j - 1
    while k >= 0:
        if toks[k] == "(" and match[k] > j:
            return k
        if toks[k] in (";", "{", "}"):
            return None
        k -= 1
    return None


def accu_base(accu: str | None) -> str | None:
    if not accu:
        return None
    ts = _stream(accu)
    if not ts.toks:
        return None
    return lvalue_base(ts, 0, len(ts.toks) - 1)


def _check(cid: str, bad, note: str = "") -> Verdict:
    bad = frozenset(x for x in bad if x)
    return Verdict(cid, not bad, bad, note if bad else "")


def check_for_sum(roles: CapturedRoles, match: PatternMatch | None = None) -> ConstraintReport:
    level = roles.levels[0]
    index = level.var
    exp2, exp3 = level.limit, roles.exp3
    block1, block2 = roles.blocks
    accu = accu_base(roles.accu)
    block_writes = writes_of(block1, block2)
    expr_writes = writes_of(exp2, exp3)
    verdicts = (
        _check("C1", {accu} & vars_of(exp2, exp3)),
        _check("C2", {index} & vars(exp2)),
        _check("C3", vars(roles.accu) & block_writes),
        _check("C4", {index} & (block_writes | writes(exp3))),
        _check("C5", vars_of(exp2, exp3) & (block_writes | expr_writes)),
    )
    return ConstraintReport(match, verdicts)


def check_nested_for(roles: CapturedRoles, match: PatternMatch | None = None) -> ConstraintReport:
    outer, inner = roles.levels
    exp3 = roles.exp3
    b1, b2, b3, b4 = roles.blocks
    accu = accu_base(roles.accu)
    all_writes = writes_of(b1, b2, b3, b4)
    verdicts = (
        _check("N1", {accu} & vars_of(outer.limit, inner.lower, inner.limit, exp3)),
        _check("N2", ({outer.var} & vars(outer.limit)) | ({inner.var} & vars(inner.limit))),
        _check("N3", vars(roles.accu) & all_writes),
        _check("N4", {outer.var, inner.var} & (all_writes | writes(exp3))),
        _check("N5", vars(outer.limit) & (all_writes | writes(outer.limit))),
        _check("N6", vars_of(inner.lower, inner.limit, exp3) & writes_of(b2, b3, exp3, inner.limit)),
    )
    return ConstraintReport(match, verdicts)


def check_nested_foreach(roles: CapturedRoles, match: PatternMatch | None = None) -> ConstraintReport:
    outer, inner = roles.levels
    entry, elem = outer.var, inner.var
    exp1, exp2, exp3 = outer.limit, inner.limit, roles.exp3
    b1, b2, b3, b4 = roles.blocks
    accu = accu_base(roles.accu)
    # the accumulation statement is not part of any block, so it is exempt here
    all_writes = writes_of(b1, b2, b3, b4)
    verdicts = (
        _check("E1", {entry} & all_writes),
        _check("E2", {elem} & writes_of(b2, b3)),
        _check("E3", vars(exp1) & all_writes),
        _check("E4", vars_of(exp2, exp3) & writes_of(b2, b3, exp3)),
        _check("E5", {accu} & (vars(exp3) | all_writes)),
    )
    return ConstraintReport(match, verdicts)


# --- vectors -----------------------------------------------------------------

_MEMBER_INDEX = {"x": 0, "getX()": 0, "get(0)": 0, "y": 1, "getY()": 1, "get(1)": 1}
_ID = r"(?:[^\W\d]|\$)[\w$]*"
_MEMBER_RE = re.compile(rf"^(?P<src>.+?)\s?\.\s?(?P<s>x|y|getX\s?\(\s?\)|getY\s?\(\s?\)|get\s?\(\s?[01]\s?\))$")
_SUBSCRIPT_RE = re.compile(r"^(?P<src>.+?)\s?\[\s?(?P<i>[^\[\]]+?)\s?\]$")
_NAME_RE = re.compile(rf"^(?P<p>{_ID}?)(?P<s>[xyXY01])$")


def _component(expr: str) -> tuple[str, int | None] | None:
    expr = expr.strip()
    m = _MEMBER_RE.match(expr)
    if m:
        return m.group("src"), _MEMBER_INDEX[re.sub(r"\s", "", m.group("s"))]
    m = _SUBSCRIPT_RE.match(expr)
    if m:
        i = m.group("i")
        return m.group("src"), int(i) if i in ("0", "1") else None
    m = _NAME_RE.match(expr)
    if m:
        prefix = m.group("p")
        if prefix.endswith("_"):
            prefix = prefix[:-1]
        if prefix and is_ident(prefix):
            s = m.group("s").lower()
            return prefix, 0 if s in ("x", "0") else 1
    return None


def source(expr: str) -> str | None:
    c = _component(expr)
    return c[0] if c else None


def index(expr: str) -> int | None:
    c = _component(expr)
    return c[1] if c else None


def check_vector(roles: CapturedRoles, kind: PatternKind, match: PatternMatch | None = None) -> ConstraintReport:
    slots = roles.vector
    (e11, e12), (e21, e22) = slots.operands
    unknown = frozenset(e for e in (e11, e12, e21, e22, *slots.targets) if _component(e) is None)
    note = "unrecognized component access" if unknown else ""

    def same(a, b):
        return a is not None and a == b

    def fail_if(cid, ok, exprs):
        bad = frozenset(e for e in exprs if _component(e) is None) if not ok else frozenset()
        if not ok and not bad:
            bad = frozenset(exprs)
        return Verdict(cid, ok, bad, note if (not ok and unknown & bad) else "")

    verdicts = [
        fail_if("V1", same(source(e11), source(e12)) and same(source(e21), source(e22)), (e11, e12, e21, e22)),
        fail_if("V2", same(index(e11), index(e21)) and same(index(e12), index(e22)), (e11, e12, e21, e22)),
    ]
    if kind is PatternKind.VEC_ADD:
        v1, v2 = slots.targets
        verdicts.append(fail_if("V3", same(index(v1), index(e11)) and same(index(e11), index(e21)), (v1, e11, e21)))
        verdicts.append(fail_if("V4", same(index(v2), index(e12)) and same(index(e12), index(e22)), (v2, e12, e22)))
        verdicts.append(fail_if("V5", same(source(v1), source(v2)), (v1, v2)))
    return ConstraintReport(match, tuple(verdicts))


def check(match: PatternMatch) -> ConstraintReport:
    """Evaluate the constraint family that belongs to the match's kind."""
    family = family_of(match.kind)
    if family == "for_sum":
        return check_for_sum(match.roles, match)
    if family == "nested_for":
        return check_nested_for(match.roles, match)
    if family == "nested_foreach":
        return check_nested_foreach(match.roles, match)
    if family == "vector":
        return check_vector(match.roles, match.kind, match)
    return ConstraintReport(match, ())
