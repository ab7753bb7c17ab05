"""Formula trees built from accepted matches, with text and MathML renderers.

Source expressions stay opaque (:class:`Raw`): the tree only adds the
mathematical structure around them (big operators, bounds, families,
vectors), so every leaf can be traced back to a captured slot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .constraints import source
from .patterns import LoopLevel, PatternKind, PatternMatch

MATHML_NS = "http://www.w3.org/1998/Math/MathML"

_ATOMIC_RE = re.compile(r"^[\w$.]+(?:\([^()]*\)|\[[^\[\]]*\])*(?:\.[\w$]+(?:\([^()]*\)|\[[^\[\]]*\])*)*$")
_INT_RE = re.compile(r"^\d+$")

_MO = {"+": "+", "-": "&#x2212;", "*": "&#x22C5;", "/": "/", "=": "="}


def _atomic(text: str) -> bool:
    return bool(_ATOMIC_RE.match(text))


def _parenthesized(text: str) -> bool:
    """True when ``text`` is one parenthesised group, e.g. ``(a + b)`` but not ``(a) + (b)``."""
    if not (text.startswith("(") and text.endswith(")")):
        return False
    depth = 0
    for k, c in enumerate(text):
        depth += c == "("
        depth -= c == ")"
        if depth == 0 and k < len(text) - 1:
            return False
    return True


def _paren_ml(inner: str) -> str:
    return f"<mrow><mo>(</mo>{inner}<mo>)</mo></mrow>"


class Node:
    atomic = True

    def text(self) -> str:
        raise NotImplementedError

    def mathml(self) -> str:
        raise NotImplementedError

    def operand_text(self) -> str:
        return self.text() if self.atomic else f"({self.text()})"

    def operand_mathml(self) -> str:
        return self.mathml() if self.atomic else _paren_ml(self.mathml())


@dataclass(frozen=True)
class Raw(Node):
    """Opaque source expression."""

    src: str

    @property
    def atomic(self):
        return _atomic(self.src)

    def text(self):
        return self.src

    def mathml(self):
        return f"<mtext>{escape(self.src)}</mtext>"


@dataclass(frozen=True)
class Num(Node):
    value: int

    @property
    def atomic(self):
        return self.value >= 0

    def text(self):
        return str(self.value)

    def mathml(self):
        if self.value < 0:
            return f"<mrow><mo>&#x2212;</mo><mn>{-self.value}</mn></mrow>"
        return f"<mn>{self.value}</mn>"


@dataclass(frozen=True)
class Initial(Node):
    """Value of the accumulator before the loop runs."""

    accu: str

    def text(self):
        return f"{self.accu}_0"

    def mathml(self):
        return f"<msub><mtext>{escape(self.accu)}</mtext><mn>0</mn></msub>"


@dataclass(frozen=True)
class Binary(Node):
    left: Node
    op: str
    right: Node
    atomic = False

    def text(self):
        return f"{self.left.operand_text()} {self.op} {self.right.operand_text()}"

    def mathml(self):
        return f"<mrow>{self.left.operand_mathml()}<mo>{_MO[self.op]}</mo>{self.right.operand_mathml()}</mrow>"


@dataclass(frozen=True)
class Offset(Node):
    """``base - 1`` for exclusive upper bounds."""

    base: Node
    atomic = False

    def text(self):
        return f"{self.base.operand_text()}-1"

    def mathml(self):
        return f"<mrow>{self.base.operand_mathml()}<mo>&#x2212;</mo><mn>1</mn></mrow>"


@dataclass(frozen=True)
class Recip(Node):
    denominator: Node
    atomic = False

    def text(self):
        inner = self.denominator.text()
        if _parenthesized(inner):
            return f"1/{inner}"
        return f"1/({inner})"

    def mathml(self):
        return f"<mfrac><mn>1</mn>{self.denominator.mathml()}</mfrac>"


@dataclass(frozen=True)
class IndexRange:
    binder: str
    lower: Node
    upper: Node

    def text(self):
        return f"{self.binder}={self.lower.text()}..{self.upper.text()}"

    def under_ml(self):
        return f"<mrow><mi>{escape(self.binder)}</mi><mo>=</mo>{self.lower.mathml()}</mrow>"

    def over_ml(self):
        return self.upper.mathml()


@dataclass(frozen=True)
class GuardedRange:
    """Ascending index from ``lower`` while ``binder rel_op limit`` holds."""

    binder: str
    lower: Node
    rel_op: str
    limit: Node

    def text(self):
        return f"{self.binder}={self.lower.text()}.. while {self.binder} {self.rel_op} {self.limit.text()}"

    def under_ml(self):
        b = escape(self.binder)
        return (f"<mrow><mi>{b}</mi><mo>=</mo>{self.lower.mathml()}<mo>,</mo>"
                f"<mi>{b}</mi><mo>{escape(self.rel_op)}</mo>{self.limit.mathml()}</mrow>")

    def over_ml(self):
        return None


@dataclass(frozen=True)
class Membership:
    binder: str
    collection: Node

    def text(self):
        return f"{self.binder} in {self.collection.text()}"

    def under_ml(self):
        return f"<mrow><mi>{escape(self.binder)}</mi><mo>&#x2208;</mo>{self.collection.mathml()}</mrow>"

    def over_ml(self):
        return None


@dataclass(frozen=True)
class BigOp(Node):
    kind: str  # "sum" or "prod"
    domain: IndexRange | GuardedRange | Membership
    body: Node

    def text(self):
        return f"{self.kind}({self.domain.text()}, {self.body.text()})"

    def mathml(self):
        sym = "&#x2211;" if self.kind == "sum" else "&#x220F;"
        over = self.domain.over_ml()
        if over is None:
            head = f"<munder><mo>{sym}</mo>{self.domain.under_ml()}</munder>"
        else:
            head = f"<munderover><mo>{sym}</mo>{self.domain.under_ml()}{over}</munderover>"
        return f"<mrow>{head}{self.body.operand_mathml()}</mrow>"


@dataclass(frozen=True)
class Family(Node):
    """Indexed family ``(body)`` with one member per domain value."""

    domain: IndexRange | GuardedRange | Membership
    body: Node

    def text(self):
        return f"family({self.domain.text()}, {self.body.text()})"

    def mathml(self):
        base = _paren_ml(self.body.mathml())
        over = self.domain.over_ml()
        if over is None:
            return f"<msub>{base}{self.domain.under_ml()}</msub>"
        return f"<msubsup>{base}{self.domain.under_ml()}{over}</msubsup>"


@dataclass(frozen=True)
class Vector(Node):
    components: tuple[Node, ...]
    name: str | None = None  # common source of the components, if known

    def text(self):
        if self.name is not None:
            return f"<{self.name}>"
        return "<" + ", ".join(c.text() for c in self.components) + ">"

    def mathml(self):
        rows = "".join(f"<mtr><mtd>{c.mathml()}</mtd></mtr>" for c in self.components)
        return _paren_ml(f"<mtable>{rows}</mtable>")


@dataclass(frozen=True)
class Inner(Node):
    left: Vector
    right: Vector

    def text(self):
        return f"inner({self.left.text()},{self.right.text()})"

    def mathml(self):
        return (f"<mrow><mo>&#x27E8;</mo>{self.left.mathml()}<mo>,</mo>"
                f"{self.right.mathml()}<mo>&#x27E9;</mo></mrow>")


@dataclass(frozen=True)
class Assign(Node):
    target: Node
    value: Node
    atomic = False

    def text(self):
        return f"{self.target.text()} = {self.value.text()}"

    def mathml(self):
        return f"<mrow>{self.target.mathml()}<mo>=</mo>{self.value.mathml()}</mrow>"


@dataclass(frozen=True)
class Formula:
    root: Node
    approximate: bool = False
    note: str = ""


@dataclass(frozen=True)
class FormulaRecord:
    match: PatternMatch
    formula: Formula
    text: str
    mathml: str


def render_text(f: Formula) -> str:
    out = f.root.text()
    if f.note:
        out += f"  [{f.note}]"
    return out


def render_mathml(f: Formula) -> str:
    return f'<math xmlns="{MATHML_NS}" display="block">{f.root.mathml()}</math>'


def _expr(src: str) -> Node:
    if _INT_RE.match(src):
        return Num(int(src))
    return Raw(src)


def _domain(level: LoopLevel, notes: list) -> IndexRange | GuardedRange | Membership:
    if level.foreach:
        return Membership(level.var, _expr(level.limit))
    lower, limit = _expr(level.lower), _expr(level.limit)
    op = level.rel_op
    if op == "<=":
        notes.append("inclusive upper bound")
        return IndexRange(level.var, lower, limit)
    if op in ("<", "!="):
        if op == "!=":
            notes.append(f"non-canonical bound: {level.var} != {level.limit} read as <")
        upper = Num(limit.value - 1) if isinstance(limit, Num) else Offset(limit)
        return IndexRange(level.var, lower, upper)
    notes.append(f"non-canonical bound: guarded by {level.var} {op} {level.limit}")
    return GuardedRange(level.var, lower, op, limit)


def _big(op: str, domain, body: Node) -> BigOp:
    if op in ("+", "-"):
        return BigOp("sum", domain, body)
    if op == "/":
        body = _recip(body)
    return BigOp("prod", domain, body)


def _recip(body: Node) -> Node:
    # 1/(prod ...) stays a product of reciprocals all the way down
    if isinstance(body, BigOp):
        return BigOp(body.kind, body.domain, _recip(body.body))
    return Recip(body)


def _combine(accu: Node, op: str, rhs: Node) -> Binary:
    # accu_0 op sum(...) for + and -, accu_0 * prod(...) for * and /
    return Binary(accu, op if op in ("+", "-") else "*", rhs)


def reconstruct(match: PatternMatch) -> Formula:
    """Instantiate the formula template for an accepted match."""
    kind, roles = match.kind, match.roles
    notes: list[str] = []

    if kind in (PatternKind.VEC_DOT, PatternKind.VEC_ADD):
        return _reconstruct_vector(match)

    op = roles.op
    accu = roles.accu
    exp3 = _expr(roles.exp3)
    domains = [_domain(level, notes) for level in roles.levels]

    if kind in (PatternKind.FIS, PatternKind.FES):
        root = Assign(Raw(accu), _combine(Initial(accu), op, _big(op, domains[0], exp3)))
    elif kind in (PatternKind.FIA, PatternKind.FEC):
        rhs = Recip(exp3) if op == "/" else exp3
        root = Family(domains[0], _combine(Raw(accu), op, rhs))
    elif kind in (PatternKind.NFISS, PatternKind.NFESS):
        inner = _big(op, domains[1], exp3)
        root = Assign(Raw(accu), _combine(Initial(accu), op, _big(op, domains[0], inner)))
    elif kind in (PatternKind.NFIAS, PatternKind.NFECS):
        root = Family(domains[0], _combine(Raw(accu), op, _big(op, domains[1], exp3)))
    elif kind in (PatternKind.NFIAA, PatternKind.NFECC):
        rhs = Recip(exp3) if op == "/" else exp3
        root = Family(domains[0], Family(domains[1], _combine(Raw(accu), op, rhs)))
    else:
        raise ValueError(f"no formula template for {kind.value}")

    approximate = any(n.startswith("non-canonical") for n in notes)
    return Formula(root, approximate, "; ".join(notes))


def _reconstruct_vector(match: PatternMatch) -> Formula:
    slots = match.roles.vector
    (e11, e12), (e21, e22) = slots.operands
    a = Vector((Raw(e11), Raw(e12)), source(e11))
    b = Vector((Raw(e21), Raw(e22)), source(e21))
    if match.kind is PatternKind.VEC_DOT:
        return Formula(Assign(Raw(slots.targets[0]), Inner(a, b)))
    v1, v2 = slots.targets
    target = Vector((Raw(v1), Raw(v2)), source(v1))
    return Formula(Assign(target, Binary(a, "+", b)))


def to_record(match: PatternMatch) -> FormulaRecord:
    f = reconstruct(match)
    return FormulaRecord(match, f, render_text(f), render_mathml(f))
