from fractions import Fraction
from types import SimpleNamespace

import pytest
from hypothesis import given, strategies as st

from formula_miner.metrics import (DEFAULT_RECALL, ScanTotals, UndefinedDensity, aggregate, as_fraction, density,
                                   density_report, estimate, format_percent, loop_fractions)
from formula_miner.patterns import CapturedRoles, PatternKind, PatternMatch

K = PatternKind


def test_density_exact():
    assert density(1713, 199457) == Fraction(1713, 199457)
    assert density(0, 5) == 0
    with pytest.raises(UndefinedDensity):
        density(1, 0)
    with pytest.raises(ValueError):
        density(-1, 3)


def test_estimate():
    assert estimate(Fraction(1, 10), Fraction(1, 2)) == Fraction(1, 5)
    assert estimate(Fraction(1, 10), 1) == Fraction(1, 10)
    for bad in (0, -0.5, 1.5):
        with pytest.raises(ValueError):
            estimate(Fraction(1, 10), bad)


def test_as_fraction_uses_decimal_text():
    assert as_fraction(0.3091) == DEFAULT_RECALL
    assert as_fraction("0.5") == Fraction(1, 2)


@pytest.mark.parametrize("value,text", [
    (Fraction(1713, 199457), "0.86%"),
    (Fraction(13094, 30275938), "0.043%"),
    (Fraction(34, 110), "30.91%"),
    (Fraction(1, 2), "50.00%"),
    (Fraction(1, 8000), "0.013%"),
    (Fraction(1, 200), "0.50%"),
    (0, "0.00%"),
    (None, "undefined"),
    (Fraction(1, 800), "0.13%"),
])
def test_format_percent(value, text):
    assert format_percent(value) == text


def test_format_percent_half_up():
    assert format_percent(Fraction(1, 8)) == "12.50%"
    assert format_percent(Fraction(12345, 1000000)) == "1.23%"
    assert format_percent(Fraction(12355, 1000000)) == "1.24%"


counts = st.integers(0, 10**7)


@given(counts, st.integers(1, 10**7), st.integers(1, 1000))
def test_density_scale_invariant(num, den, k):
    assert density(num * k, den * k) == density(num, den)


@given(st.integers(0, 10**6), st.integers(1, 10**6),
       st.fractions(min_value=Fraction(1, 10**4), max_value=1), st.fractions(min_value=Fraction(1, 10**4), max_value=1))
def test_estimate_monotone_in_recall(num, den, r1, r2):
    rho = density(num, den)
    lo, hi = sorted((r1, r2))
    assert estimate(rho, hi) <= estimate(rho, lo)
    assert estimate(rho, 1) == rho


def _m(kind, s, e):
    return PatternMatch(kind, "p", "A.java", s, e, "", CapturedRoles())


def _file(project, loc, accepted=(), loops=()):
    return SimpleNamespace(project=project, loc=loc, accepted=list(accepted), loops=list(loops))


def test_aggregate_line_union_and_counts():
    files = [
        _file("a", 100, [_m(K.NFISS, 3, 9), _m(K.FIS, 20, 22), _m(K.FES, 21, 23)],
              [_m(K.LOOP_NESTED, 3, 9), _m(K.LOOP_SIMPLE, 5, 7), _m(K.LOOP_SIMPLE, 20, 22)]),
        _file("a", 50),
        _file("b", 0),
    ]
    t = aggregate(files, ["a", "b", "c"])
    assert (t.projects, t.nonempty_projects, t.fc_projects) == (3, 1, 1)
    assert (t.files, t.fc_files, t.loc, t.matches) == (3, 1, 150, 3)
    assert t.lofc == 7 + 4  # 3..9 plus 20..23
    assert t.per_pattern[K.FIS] == (1, 3)
    assert (t.loops_simple, t.loops_nested, t.sp_simple, t.sp_nested) == (2, 1, 2, 1)


def test_reports_with_zero_denominators():
    rep = density_report(ScanTotals())
    assert rep.rho_files is None and rep.rho_loc_est is None
    loops = loop_fractions(ScanTotals(loops_simple=4, sp_simple=1))
    assert loops.simple == Fraction(1, 4) and loops.nested is None
