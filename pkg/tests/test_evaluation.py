from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from formula_miner.evaluation import (LOOP_TAGS, TAGS, OracleAnnotation, OracleError, UnjudgedError, insert_tags,
                                      normalize_judgment, parse_oracle, parse_oracle_manifest, precision,
                                      read_judgments, recall)


def test_parse_whole_line_and_inline_tags():
    text = ("class X {\n"
            "  <SimpleNestedLoop sp=\"true\">\n"
            "  for (;;) { s += 1; }\n"
            "  </SimpleNestedLoop>\n"
            "  int m = <SimpleArithmetic>a + b</SimpleArithmetic>;\n"
            "}\n")
    clean, anns = parse_oracle(text, "X.java")
    assert clean == "class X {\n  for (;;) { s += 1; }\n  int m = a + b;\n}\n"
    assert [(a.tag, a.start_line, a.end_line, a.sp) for a in anns] == [
        ("SimpleNestedLoop", 2, 2, True), ("SimpleArithmetic", 3, 3, False)]
    assert all(a.file == "X.java" for a in anns)
    assert insert_tags(clean, anns) == text


def test_generics_are_not_tags():
    text = "List<Vector> a; Map<String, Matrix> m; Foo.<Vector>bar();\n"
    clean, anns = parse_oracle(text)
    assert clean == text and anns == []


def test_tag_after_return_keyword():
    clean, anns = parse_oracle("return <SimpleArithmetic>x * 2</SimpleArithmetic>;\n")
    assert clean == "return x * 2;\n"
    assert len(anns) == 1


@pytest.mark.parametrize("text,line", [
    ("<Matrix>\nx\n", 1),
    ("x\n</Vector>\n", 2),
    ("<Matrix>\n</Vector>\n", 2),
    ('<SimpleNestedLoop sp="maybe">\n</SimpleNestedLoop>\n', 1),
    ('<Matrix sp="true">\n</Matrix>\n', 1),
])
def test_malformed_oracles(text, line):
    with pytest.raises(OracleError) as info:
        parse_oracle(text)
    assert info.value.line == line


def test_manifest_parsing():
    assert parse_oracle_manifest("# c\nsrc/A.java\n\n  src/B.java \n") == ["src/A.java", "src/B.java"]


code_line = st.text(alphabet="abc xyz=+;(){}", max_size=12)


@st.composite
def annotated(draw):
    """Annotated text built from a random well-nested tag sequence."""
    parts, stack = [], []
    for _ in range(draw(st.integers(0, 14))):
        choice = draw(st.sampled_from(["code", "open", "close", "newline"]))
        if choice == "open":
            tag = draw(st.sampled_from(TAGS))
            sp = draw(st.sampled_from([None, "false"] + (["true"] if tag in LOOP_TAGS else [])))
            attr = "" if sp is None else f' sp="{sp}"'
            prefix = "\n" if draw(st.booleans()) else " "
            parts.append(f"{prefix}<{tag}{attr}>")
            stack.append(tag)
        elif choice == "close" and stack:
            parts.append(f"</{stack.pop()}>")
        elif choice == "newline":
            parts.append("\n")
        else:
            parts.append(draw(code_line))
    while stack:
        parts.append(f"</{stack.pop()}>")
    parts.append("\n")
    return "".join(parts)


@given(annotated())
def test_parse_insert_round_trip(text):
    clean, anns = parse_oracle(text)
    assert insert_tags(clean, anns) == text
    assert "<Simple" not in clean and "</" not in clean
    n_lines = max(1, clean.count("\n"))
    for a in anns:
        assert 1 <= a.start_line <= a.end_line <= n_lines + 1


def _ann(file, s, e, sp=True, tag="SimpleNestedLoop"):
    return OracleAnnotation(tag, file, s, e, sp)


class Det:
    def __init__(self, path, s, e):
        self.path, self.start_line, self.end_line = path, s, e


def test_recall_overlap_and_single_credit():
    outer, inner = _ann("A", 5, 9), _ann("A", 6, 8)
    other = _ann("B", 1, 3)
    no_sp = _ann("A", 20, 22, sp=False)
    r = recall([Det("A", 5, 9)], [outer, inner, other, no_sp])
    assert (r.hits, r.total) == (1, 3)
    r = recall([Det("A", 5, 9), Det("A", 7, 7), Det("A", 20, 21)], [outer, inner, other, no_sp])
    assert (r.hits, r.total) == (2, 3)
    assert recall([], [no_sp]).value is None


spans = st.tuples(st.integers(1, 20), st.integers(0, 5)).map(lambda t: (t[0], t[0] + t[1]))


@given(st.lists(spans, max_size=8), st.lists(spans, max_size=8), st.randoms())
def test_recall_permutation_invariant(ann_spans, det_spans, rnd):
    anns = [_ann("F", s, e) for s, e in ann_spans]
    dets = [Det("F", s, e) for s, e in det_spans]
    base = recall(dets, anns)
    rnd.shuffle(dets)
    assert recall(dets, anns) == base
    assert base.hits <= min(len(anns), len(dets))


def test_recall_matches_published_arithmetic():
    assert recall([Det("F", i, i) for i in range(34)], [_ann("F", i, i) for i in range(110)]).value == Fraction(34, 110)


def test_precision_levels():
    judged = [(f"m{i}", "wrong") for i in range(5)] + [(f"p{i}", "partial") for i in range(23)]
    judged += [(f"c{i}", "complete") for i in range(153)]
    p = precision(judged)
    assert p.any == 1
    assert p.correct_level == Fraction(176, 181)
    assert p.complete_level == Fraction(153, 181)


def test_precision_none_judgment_counts_against_all_levels():
    p = precision([("a", "none"), ("b", "complete")])
    assert (p.any, p.correct_level, p.complete_level) == (Fraction(1, 2),) * 3


def test_precision_unjudged():
    with pytest.raises(UnjudgedError) as info:
        precision([("a", "complete"), ("b", None)])
    assert info.value.ids == ["b"]


def test_empty_precision_undefined():
    assert precision([]).any is None


def test_judgments_csv():
    got = read_judgments("match_id,judgment\n# note\nx:1-2:FIS, Complete\ny:3-3:FES,partial\n")
    assert got == {"x:1-2:FIS": "complete", "y:3-3:FES": "correct"}
    with pytest.raises(ValueError):
        normalize_judgment("great")
    with pytest.raises(ValueError):
        read_judgments("only_id\n")
