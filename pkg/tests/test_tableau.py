import random

import pytest
from hypothesis import given, settings, strategies as st

from stripconcave import (
    ConvexConfig,
    GTPattern,
    InputError,
    SkewTableau,
    content,
    kostka,
    pattern_to_tableau,
    tableau_to_pattern,
)
from stripconcave.fixtures import skew_tableau, trapezoid_pattern

from oracles import enumerate_patterns, enumerate_tableaux, pattern_nu, random_pattern


def test_fixture_bijection():
    t = pattern_to_tableau(trapezoid_pattern())
    assert t == skew_tableau()
    assert content(t) == (3, 2, 3)
    assert tableau_to_pattern(t).rows == trapezoid_pattern().rows


def test_single_cell():
    p = GTPattern(ConvexConfig.trapezoid(1, 0), ((), (1,)))
    t = pattern_to_tableau(p)
    assert t.outer == (1,) and t.inner == () and t.rows == ((1,),)
    assert content(t) == (1,)


def test_empty_tableau_zero_content():
    p = GTPattern(ConvexConfig.trapezoid(2, 0), ((), (0,), (0, 0)))
    t = pattern_to_tableau(p)
    assert t.outer == (0, 0) and all(r == () for r in t.rows)
    assert content(t) == (0, 0)


def test_non_skew_when_inner_empty():
    p = GTPattern(ConvexConfig.trapezoid(3, 0), ((), (2,), (2, 1), (2, 2, 1)))
    t = pattern_to_tableau(p)
    assert t.inner == ()
    assert t.rows == ((1, 1), (2, 3), (3,))


def test_validation_rejects_bad_tableaux():
    with pytest.raises(InputError):
        SkewTableau((2,), (), ((2, 1),))  # row decreasing
    with pytest.raises(InputError):
        SkewTableau((1, 1), (), ((1,), (1,)))  # column not strict
    with pytest.raises(InputError):
        SkewTableau((2, 1), (), ((1, 1),))  # wrong row count
    with pytest.raises(InputError):
        SkewTableau((1,), (2,), ((),))  # inner outside outer
    with pytest.raises(InputError):
        SkewTableau((1,), (), ((5,),))  # entry exceeds n


def test_pattern_preconditions():
    with pytest.raises(InputError, match="shift"):
        pattern_to_tableau(GTPattern(ConvexConfig.trapezoid(1, 0), ((), (-1,))))
    with pytest.raises(InputError, match="integer"):
        from fractions import Fraction

        pattern_to_tableau(
            GTPattern(ConvexConfig.trapezoid(1, 0), ((), (Fraction(1, 2),)))
        )
    with pytest.raises(InputError, match="nested"):
        pattern_to_tableau(
            GTPattern(ConvexConfig.trapezoid(1, 1), ((3,), (2, 1)))
        )


def test_tableau_to_pattern_staircase():
    t = SkewTableau((2, 1), (), ((1, 1), (2,)))
    assert pattern_to_tableau(tableau_to_pattern(t)) == t
    deep = SkewTableau((2, 1, 1), (), ((1, 1), (2,), (3,)))
    assert tableau_to_pattern(deep).rows == ((), (2,), (2, 1), (2, 1, 1))


def test_counting_matches_direct_enumeration():
    cases = [
        ((2, 1, 0), (), (1, 1, 1)),
        ((3, 1), (1,), (2, 1)),
        ((6, 4, 3, 1, 1), (5, 2), (3, 2, 3)),
        ((2, 2), (1,), (1, 2)),
    ]
    for lam, bar, nu in cases:
        shape_outer = tuple(v for v in lam)
        direct = enumerate_tableaux(shape_outer, bar, nu)
        assert direct == kostka(lam, bar, nu), (lam, bar, nu)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_round_trip_random_patterns(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    m = rng.randint(0, 3)
    p = random_pattern(rng, n, m, 0, 6)
    t = pattern_to_tableau(p)
    assert tableau_to_pattern(t).rows == p.rows
    assert content(t) == pattern_nu(p.rows)


def test_round_trip_all_small_tableaux():
    for rows in enumerate_patterns((3, 2), (1,)):
        p = GTPattern(ConvexConfig.trapezoid(1, 1), rows)
        t = pattern_to_tableau(p)
        assert tableau_to_pattern(t).rows == rows


def test_json_round_trip():
    t = skew_tableau()
    assert SkewTableau.from_json(t.to_json()) == t
    with pytest.raises(InputError):
        SkewTableau.from_json({"outer": [1]})
