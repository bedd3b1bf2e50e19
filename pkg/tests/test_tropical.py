import random
from fractions import Fraction as Q
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from alcove import rational as rat
from alcove.polytopes import normalize_point
from alcove.rootsystems import build_root_system
from alcove.tropical import (first0_to_sumzero, sumzero_to_first0,
                             trop_combine, trop_hull_contains,
                             trop_hull_vs_alcoved, trop_normalize)


def test_combine_examples():
    assert trop_combine(0, (0, 0, 1), 0, (0, 1, 0)) == rat.vector([0, 0, 0])
    x = rat.vector([0, 2, 3])
    assert trop_combine(5, x, 5, x) == x  # idempotent after normalization
    assert trop_combine(0, (0, 0, 1), 1, (0, 1, 0)) == rat.vector([0, 0, 1])


def test_combine_dimension_mismatch():
    with pytest.raises(ValueError):
        trop_combine(0, (0, 1), 0, (0, 1, 2))


def test_normalization():
    assert trop_normalize((3, 4, 5)) == rat.vector([0, 1, 2])
    assert trop_normalize((0, -1)) == rat.vector([0, -1])


def test_membership_examples():
    V = [(0, 0, 1), (0, 1, 0)]
    assert trop_hull_contains(V, (0, 0, 1))       # generator
    assert trop_hull_contains(V, (0, 0, 0))       # the min combination
    assert not trop_hull_contains(V, (0, 1, 1))   # the missing square vertex


def test_membership_empty_generators():
    with pytest.raises(ValueError):
        trop_hull_contains([], (0, 1))


def _oracle(gens, x):
    """Exhaustive: try every canonical shift combination."""
    cands = [sorted({x[j] - v[j] for j in range(len(x))}) for v in gens]
    for lams in product(*cands):
        combo = tuple(min(lams[i] + gens[i][j] for i in range(len(gens)))
                      for j in range(len(x)))
        if combo == x:
            return True
    return False


def test_membership_criterion_against_grid_oracle():
    grid = [(Q(0), Q(a), Q(b)) for a in range(-2, 3) for b in range(-2, 3)]
    rng = random.Random(8)
    gen_sets = list(combinations(grid, 1)) + list(combinations(grid, 2))
    gen_sets += [tuple(rng.sample(grid, 3)) for _ in range(60)]
    for gens in gen_sets:
        for x in grid:
            assert trop_hull_contains(list(gens), x) == _oracle(list(gens), x)


def test_square_separation():
    rep = trop_hull_vs_alcoved([(0, 0, 1), (0, 1, 0)])
    assert not rep.equal
    assert rat.vector([0, 1, 1]) in rep.outside_vertices
    full = trop_hull_vs_alcoved([(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)])
    assert full.equal and full.outside_vertices == ()
    single = trop_hull_vs_alcoved([(0, 5, -3)])
    assert single.equal


coords = st.fractions(min_value=-3, max_value=3, max_denominator=3)
points3 = st.tuples(st.just(Q(0)), coords, coords)


@settings(max_examples=60, deadline=None)
@given(st.lists(points3, min_size=1, max_size=4), points3,
       st.fractions(min_value=-2, max_value=2, max_denominator=2))
def test_hull_monotone_and_closed_under_combine(vs, x, lam):
    if trop_hull_contains(vs, x):
        assert trop_hull_contains(vs + [(Q(0), Q(1), Q(1))], x)  # monotone in V
        y = trop_combine(lam, x, 0, vs[0])
        assert trop_hull_contains(vs, y)  # combinations stay inside


@settings(max_examples=40, deadline=None)
@given(st.lists(points3, min_size=1, max_size=4),
       st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=2),
                min_size=4, max_size=4))
def test_tropical_hull_inside_alcoved_hull(vs, lams):
    rs = build_root_system("A", 2)
    hull = trop_hull_vs_alcoved(vs).alcoved
    # random tropical combinations satisfy every alcoved constraint
    combo = None
    for lam, v in zip(lams, vs):
        shifted = tuple(lam + vv for vv in v)
        combo = shifted if combo is None else tuple(map(min, combo, shifted))
    p = normalize_point(rs, trop_normalize(combo))
    assert hull.contains(p)


def test_two_point_hull_is_a_path():
    # between consecutive shift breakpoints the combination is affine, so the
    # hull of two points is a concatenation of ordinary segments
    x = rat.vector([0, 2, -1])
    y = rat.vector([0, -1, 3])
    breaks = sorted({yv - xv for xv, yv in zip(x, y)})
    for a, b in zip(breaks, breaks[1:]):
        mid = (a + b) / 2
        pa = trop_combine(a, x, 0, y)
        pb = trop_combine(b, x, 0, y)
        pm = trop_combine(mid, x, 0, y)
        assert pm == tuple((u + v) / 2 for u, v in zip(pa, pb))
    # beyond the extreme breakpoints the combination sits at an endpoint
    assert trop_combine(breaks[0] - 1, x, 0, y) == trop_normalize(x)
    assert trop_combine(breaks[-1] + 1, x, 0, y) == trop_normalize(y)


def test_coordinate_conversions_roundtrip():
    p = rat.vector([0, 1, 2])
    sz = first0_to_sumzero(p)
    assert sum(sz) == 0
    assert sumzero_to_first0(sz) == p
