import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from stripconcave import (
    BoundarySpec,
    FacetInequality,
    InputError,
    boundary,
    check_trapezoid,
    count_scaled_points,
    deficits,
    facet_count_consistent,
    facet_count_formula,
    facets,
    integrate,
    kostka,
    shift_mu,
)
from stripconcave.fixtures import trapezoid_array, trapezoid_pattern

from oracles import enumerate_patterns, random_pattern, pattern_nu


def test_facet_counts_match_examples():
    assert len(facets(1, 2)) == 4
    assert len(facets(2, 0)) == 2
    assert len(facets(2, 1)) == 8
    assert facet_count_formula(3, 1) == 17
    assert facet_count_formula(1, 4) == 8
    assert facet_count_formula(2, 0) == 2


def test_facet_count_formula_agreement():
    for m in range(7):
        assert len(facets(1, m)) == 2 * m == facet_count_formula(1, m)
    for n in range(2, 5):
        for m in range(1, 4):
            assert len(facets(n, m)) == facet_count_formula(n, m), (n, m)


def test_facet_count_divergence_without_top_row():
    # one extra chamber facet per the classification when m = 0, n >= 3
    for n in (3, 4, 5):
        report = facet_count_consistent(n, 0)
        assert not report["consistent"]
        assert report["enumerated"] == report["formula"] + 1


def test_facets_n2_m0_contents():
    fs = facets(2, 0)
    assert all(f.kind == "horn" and len(f.I) == 1 for f in fs)
    assert {f.I for f in fs} == {(1,), (2,)}


def test_facets_deduplicated_and_sorted():
    fs = facets(3, 2)
    keys = [(f.kind, f.I, f.J, f.j) for f in fs]
    assert len(keys) == len(set(keys))
    horn = [k for k in keys if k[0] == "horn"]
    assert horn == sorted(horn, key=lambda k: (len(k[1]) + len(k[2]), (k[1], k[2])))


def test_facet_evaluation_on_fixture():
    spec = boundary(trapezoid_array())
    for f in facets(3, 2):
        assert f.evaluate(spec) >= 0, f


def test_chamber_facets_evaluate_steps():
    f = FacetInequality("chamber_lambda", j=2)
    spec = BoundarySpec((5, 3, 3), (), (0, 0, 0), (4, 4, 3))
    assert f.evaluate(spec) == 0
    fb = FacetInequality("chamber_lambda_bar", j=1)
    spec2 = BoundarySpec((5, 3, 3), (2, 1), (0,), (0,))
    assert fb.evaluate(spec2) == 1


def test_min_over_J_equals_deficit():
    # minimizing the J-part of a horn inequality over all J recovers -D_k
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 4)
        m = rng.randint(0, 4)
        lam = tuple(sorted((rng.randint(-4, 8) for _ in range(n + m)), reverse=True))
        bar = tuple(sorted((rng.randint(-4, 8) for _ in range(m)), reverse=True))
        profile = deficits(lam, bar, n)
        for k in range(n + 1):
            best = 0
            for mask in range(1 << m):
                J = [j + 1 for j in range(m) if mask >> j & 1]
                if any(j + k > n + m for j in J):
                    continue
                val = sum(lam[j + k - 1] - bar[j - 1] for j in J)
                best = min(best, val)
            assert best == -profile[k], (lam, bar, k)


def test_kostka_base_cases():
    assert kostka((1, 0), (), (1,)) == 1
    assert kostka((2, 1, 0), (), (1, 1, 1)) == 2
    assert kostka((), (), ()) == 1
    assert kostka((1,), (), (2,)) == 0  # unbalanced
    assert kostka((1, 2), (), (1, 2)) == 0  # not a partition


def test_kostka_fixture_contains_pattern():
    K = kostka((6, 4, 3, 1, 1), (5, 2), (3, 2, 3))
    assert K >= 1
    rows_seen = set(enumerate_patterns((6, 4, 3, 1, 1), (5, 2)))
    assert trapezoid_pattern().rows in rows_seen
    matching = [r for r in rows_seen if pattern_nu(r) == (3, 2, 3)]
    assert len(matching) == K


def test_kostka_rejects_fractions():
    from fractions import Fraction

    with pytest.raises(InputError):
        kostka((Fraction(3, 2), 0), (), (Fraction(3, 2),))


def test_kostka_permutation_invariance_fixture():
    base = kostka((6, 4, 3, 1, 1), (5, 2), (3, 2, 3))
    for p in permutations((3, 2, 3)):
        assert kostka((6, 4, 3, 1, 1), (5, 2), p) == base


def test_count_scaled_points():
    lam, bar, nu = (2, 1, 0), (), (1, 1, 1)
    assert count_scaled_points(lam, bar, nu, 1) == kostka(lam, bar, nu)
    for k in (1, 2, 3):
        counts = {count_scaled_points(lam, bar, p, k) for p in permutations(nu)}
        assert len(counts) == 1
    # empty polytope stays empty under scaling
    for k in (1, 2, 3):
        assert count_scaled_points((2, 0), (), (3, -1), k) == 0
    with pytest.raises(InputError):
        count_scaled_points(lam, bar, nu, 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_kostka_positive_iff_feasible(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    m = rng.randint(0, 2)
    p = random_pattern(rng, n, m, 0, 4)
    lam, bar = p.rows[-1], p.rows[0]
    nu = list(pattern_nu(p.rows))
    if rng.random() < 0.5:  # perturb, possibly off the polytope
        i = rng.randrange(n)
        j = rng.randrange(n)
        nu[i] += 3
        nu[j] -= 3
    nu = tuple(nu)
    spec = BoundarySpec(lam, bar, (0,) * n, nu)
    feasible = check_trapezoid(spec, n, m).feasible
    assert (kostka(lam, bar, nu) > 0) == feasible


def test_horn_facets_valid_on_random_boundaries():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(2, 4)
        m = rng.randint(0, 3)
        p = random_pattern(rng, n, m, 0, 6)
        mu = tuple(rng.randint(-3, 3) for _ in range(n))
        spec = boundary(integrate(p, mu))
        for f in facets(n, m):
            assert f.evaluate(spec) >= 0, (f, spec)
