"""Token-level view of comment-stripped Java text.

Regular expressions alone cannot balance braces, so every pattern in this
package works on a :class:`TokenStream`: a regex tokenizer plus a
precomputed bracket-matching table that lets callers jump over balanced
``(...)``, ``[...]`` and ``{...}`` groups and find statement boundaries.
"""

from __future__ import annotations

import bisect
import re
from itertools import accumulate, chain

_TOKEN_RE = re.compile(
    r'''
      """[\s\S]*?"""                         # text block
    | "(?:[^"\\\n]|\\.)*"?                   # string literal (unterminated stops at EOL)
    | '(?:[^'\\\n]|\\.)*'?                   # char literal
    | (?:[^\W\d]|\$)[\w$]*                   # identifier or keyword
    | (?:\d|\.\d)(?:[\w.]|(?<=[eEpP])[+-])*  # numeric literal
    | >>>=|<<=|>>=|>>>|\.\.\.|->|::|\+\+|--|&&|\|\||[-+*/%&|^!=<>]=|<<|>>
    | \S
    ''',
    re.VERBOSE,
)

# Same tokens, each with the whitespace run before it; findall stays in C.
_SPACED_TOKEN_RE = re.compile(r"(\s*)(" + _TOKEN_RE.pattern + ")", re.VERBOSE)

OPENERS = {"(": ")", "[": "]", "{": "}"}
CLOSERS = {")": "(", "]": "[", "}": "{"}
_BRACKETS = frozenset("()[]{}")

KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while var record yield
    true false null
    """.split()
)

ASSIGN_OPS = frozenset(
    ["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="]
)

# Binary operator precedence (higher binds tighter). Assignment, lambda and
# the conditional operator sit below everything listed here.
BINARY_PRECEDENCE = {
    "*": 12, "/": 12, "%": 12,
    "+": 11, "-": 11,
    "<<": 10, ">>": 10, ">>>": 10,
    "<": 9, ">": 9, "<=": 9, ">=": 9, "instanceof": 9,
    "==": 8, "!=": 8,
    "&": 7, "^": 6, "|": 5, "&&": 4, "||": 3,
}
LOWEST_OPS = frozenset(["?", ":", "->"]) | ASSIGN_OPS


def is_ident(tok: str) -> bool:
    c = tok[0]
    return (c.isalpha() or c in "_$") and tok not in KEYWORDS


def is_word(tok: str) -> bool:
    c = tok[0]
    return c.isalpha() or c in "_$"


def _is_operand_end(tok: str) -> bool:
    c = tok[0]
    if c.isalnum() or c in "_$\"'.":
        return tok not in KEYWORDS or tok in ("this", "super", "true", "false", "null")
    return tok in (")", "]", "++", "--")


class TokenStream:
    """Tokens of one piece of Java text with bracket matching and line lookup."""

    __slots__ = ("text", "toks", "starts", "ends", "match", "_line_starts")

    def __init__(self, text: str):
        self.text = text
        pairs = _SPACED_TOKEN_RE.findall(text)
        toks = [t for _, t in pairs]
        ends = list(accumulate(map(len, chain.from_iterable(pairs))))[1::2]
        self.toks = toks
        self.ends = ends
        self.starts = [e - len(t) for e, t in zip(ends, toks)]
        self.match = _match_brackets(toks)
        self._line_starts: list[int] | None = None

    def __len__(self) -> int:
        return len(self.toks)

    def line_of(self, offset: int) -> int:
        """1-based line number of a character offset."""
        if self._line_starts is None:
            self._line_starts = [0] + [m.end() for m in re.finditer("\n", self.text)]
        return bisect.bisect_right(self._line_starts, offset)

    def join(self, i: int, j: int) -> str:
        """Text of tokens ``i..j`` with every whitespace run collapsed to one space."""
        if j < i:
            return ""
        toks, starts, ends = self.toks, self.starts, self.ends
        parts = [toks[i]]
        for k in range(i + 1, j + 1):
            if starts[k] > ends[k - 1]:
                parts.append(" ")
            parts.append(toks[k])
        return "".join(parts)

    def span_text(self, i: int, j: int) -> str:
        return self.text[self.starts[i]:self.ends[j]]

    def skip_group(self, i: int) -> int:
        """Index just past the balanced group opening at ``i`` (or ``len`` if unbalanced)."""
        m = self.match[i]
        return len(self.toks) if m < 0 else m + 1

    def find_top_level(self, i: int, j: int, targets) -> list[int]:
        """Indices in ``i..j`` of tokens in ``targets`` that are not nested in brackets."""
        out = []
        toks, match = self.toks, self.match
        k = i
        while k <= j:
            t = toks[k]
            if t in targets:
                out.append(k)
            if t in OPENERS and match[k] >= 0:
                k = match[k] + 1
                continue
            k += 1
        return out

    def top_level_binary_ops(self, i: int, j: int) -> set[str]:
        """Binary/ternary/assignment operators at bracket depth 0 within ``i..j``."""
        ops: set[str] = set()
        toks, match = self.toks, self.match
        k = i
        prev = None
        while k <= j:
            t = toks[k]
            if t in OPENERS:
                m = match[k]
                if m < 0 or m > j:
                    ops.add("?unbalanced")
                    return ops
                # a parenthesised operand following an operand is a call or index
                prev = toks[m]
                k = m + 1
                continue
            if t in CLOSERS:
                ops.add("?unbalanced")
                return ops
            if t in BINARY_PRECEDENCE or t in LOWEST_OPS:
                if t in ("+", "-") and (prev is None or not _is_operand_end(prev)):
                    pass  # unary sign
                else:
                    ops.add(t)
            prev = t
            k += 1
        return ops

    def stmt_end(self, i: int) -> int:
        """Index of the last token of the statement starting at token ``i``."""
        toks = self.toks
        n = len(toks)
        if i >= n:
            return n - 1
        while True:
            t = toks[i]
            if t == "{":
                m = self.match[i]
                return n - 1 if m < 0 else m
            if t == ";":
                return i
            nxt = toks[i + 1] if i + 1 < n else ""
            if t in ("for", "while") and nxt == "(":
                i = self.skip_group(i + 1)
                if i >= n:
                    return n - 1
                continue
            if t == "if" and nxt == "(":
                body = self.skip_group(i + 1)
                end = self.stmt_end(body) if body < n else n - 1
                if end + 1 < n and toks[end + 1] == "else":
                    i = end + 2
                    if i >= n:
                        return n - 1
                    continue
                return end
            if t in ("switch", "synchronized") and nxt == "(":
                k = self.skip_group(i + 1)
                return self.stmt_end(k) if k < n else n - 1
            if t == "do":
                end = self.stmt_end(i + 1)
                k = end + 1
                if k < n and toks[k] == "while" and k + 1 < n and toks[k + 1] == "(":
                    k = self.skip_group(k + 1)
                    if k < n and toks[k] == ";":
                        return k
                    return min(k, n) - 1
                return end
            if t == "try":
                k = i + 1
                if k < n and toks[k] == "(":
                    k = self.skip_group(k)
                k = self.stmt_end(k) + 1 if k < n else n
                while k < n and toks[k] in ("catch", "finally"):
                    if toks[k] == "catch" and k + 1 < n and toks[k + 1] == "(":
                        k = self.skip_group(k + 1)
                    else:
                        k += 1
                    if k >= n:
                        return n - 1
                    k = self.stmt_end(k) + 1
                return k - 1
            if t in ("case", "default"):
                hits = self._scan_to(i, (":", "->"))
                return hits
            if t in ("class", "interface", "enum", "record"):
                k = i
                while k < n and toks[k] not in ("{", ";"):
                    k += 1
                return self.stmt_end(k) if k < n else n - 1
            if is_word(t) and t not in KEYWORDS and nxt == ":" :
                i += 2  # labelled statement
                if i >= n:
                    return n - 1
                continue
            return self._scan_to(i, (";",))

    def _scan_to(self, i: int, stops) -> int:
        toks, match = self.toks, self.match
        n = len(toks)
        k = i
        while k < n:
            t = toks[k]
            if t in stops:
                return k
            if t in OPENERS:
                m = match[k]
                if m < 0:
                    return n - 1
                k = m + 1
                continue
            if t in CLOSERS:
                return k - 1  # closing bracket of an enclosing construct
            k += 1
        return n - 1

    def split_statements(self, lo: int, hi: int) -> list[tuple[int, int]]:
        """Top-level statements within tokens ``lo..hi`` as ``(first, last)`` pairs."""
        out = []
        k = lo
        while k <= hi:
            e = self.stmt_end(k)
            if e < k:
                e = k
            e = min(e, hi)
            out.append((k, e))
            k = e + 1
        return out


def _match_brackets(toks: list[str]) -> list[int]:
    match = [-1] * len(toks)
    stack: list[int] = []
    brackets = [k for k, t in enumerate(toks) if t in _BRACKETS]
    for k in brackets:
        t = toks[k]
        if t in OPENERS:
            stack.append(k)
            continue
        want = CLOSERS[t]
        # tolerate stray closers and unclosed openers in broken code
        for depth in range(len(stack) - 1, -1, -1):
            if toks[stack[depth]] == want:
                o = stack[depth]
                del stack[depth:]
                match[o] = k
                match[k] = o
                break
    return match
