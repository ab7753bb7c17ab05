"""Random FIS loops and an independent evaluator for their reconstructed text."""

import ast
import random
import re
from fractions import Fraction

BODIES = ["i", "{c}", "i * {c}", "(i + {c})", "i * i + {c}", "{c} * i - {c2}", "(i + {c}) * (i + {c2})", "i - {c}"]
NONZERO = ["(i + {c})", "{c}", "i * i + {c}", "(i + {c}) * (i + {c2})"]
OPS = ["+", "-", "*", "/"]
RELS = ["<", "<=", "!="]

_TEXT_RE = re.compile(
    r"^(?P<acc>\w+) = (?P=acc)_0 (?P<op>[-+*]) (?P<big>sum|prod)"
    r"\((?P<var>\w+)=(?P<lo>-?\d+)\.\.(?P<hi>-?\d+), (?P<body>.*)\)(?:  \[[^\]]*\])?$"
)


def random_fis(rng: random.Random):
    """Java source for one FIS loop plus the parameters needed to run it."""
    op = rng.choice(OPS)
    rel = rng.choice(RELS)
    lo = rng.randint(0, 8)
    hi = rng.randint(lo, 8) if rel == "!=" else rng.randint(0, 8)
    body = rng.choice(NONZERO if op == "/" else BODIES).format(c=rng.randint(1, 8), c2=rng.randint(1, 8))
    init = rng.randint(1, 8)
    form = rng.choice(["compound", "expanded"])
    if form == "compound":
        stmt = f"acc {op}= {body};"
    else:
        stmt = f"acc = acc {op} {_operand(op, body)};"
    src = f"for (int i = {lo}; i {rel} {hi}; i++) {{\n    {stmt}\n}}\n"
    return src, dict(op=op, rel=rel, lo=lo, hi=hi, body=body, init=init)


def _operand(op, body):
    # acc - a - b is not acc - (a - b): keep the expanded form equivalent to the compound one
    top_additive = any(t in ("+", "-") for t in _top_level_ops(body))
    needs = (op in "-*" and top_additive) or (op == "/" and _top_level_ops(body))
    return f"({body})" if needs else body


def _top_level_ops(expr):
    depth, out = 0, []
    for ch in expr:
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and ch in "+-*/":
            out.append(ch)
    return out


def run_loop(p) -> Fraction:
    acc = Fraction(p["init"])
    i = p["lo"]
    cond = {"<": lambda a, b: a < b, "<=": lambda a, b: a <= b, "!=": lambda a, b: a != b}[p["rel"]]
    while cond(i, p["hi"]):
        v = evaluate(p["body"], {"i": Fraction(i)})
        if p["op"] == "+":
            acc += v
        elif p["op"] == "-":
            acc -= v
        elif p["op"] == "*":
            acc *= v
        else:
            acc /= v
        i += 1
    return acc


def evaluate(expr: str, env) -> Fraction:
    return _eval(ast.parse(expr, mode="eval").body, env)


def _eval(node, env):
    if isinstance(node, ast.Constant):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        return env[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval(node.operand, env)
    if isinstance(node, ast.BinOp):
        a, b = _eval(node.left, env), _eval(node.right, env)
        ops = {ast.Add: a.__add__, ast.Sub: a.__sub__, ast.Mult: a.__mul__, ast.Div: a.__truediv__}
        return ops[type(node.op)](b)
    raise ValueError(f"unsupported expression: {ast.dump(node)}")


def interpret(text: str, init) -> Fraction:
    """Value of ``acc`` described by a reconstructed formula, given ``acc_0``."""
    m = _TEXT_RE.match(text)
    if not m:
        raise ValueError(f"unrecognized formula text: {text}")
    lo, hi = int(m["lo"]), int(m["hi"])
    big = Fraction(0) if m["big"] == "sum" else Fraction(1)
    for k in range(lo, hi + 1):
        v = evaluate(m["body"], {m["var"]: Fraction(k)})
        big = big + v if m["big"] == "sum" else big * v
    acc0 = Fraction(init)
    return {"+": acc0 + big, "-": acc0 - big, "*": acc0 * big}[m["op"]]
