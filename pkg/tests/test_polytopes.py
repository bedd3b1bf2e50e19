import random
from fractions import Fraction as Q
from itertools import combinations

import pytest

from alcove import rational as rat
from alcove.constructions import SymmetricSpec, symmetric_alcoved
from alcove.errors import EmptyPolytopeError, UnboundedPolytopeError
from alcove.polytopes import (alcoved_hull, f_vector, hpolytope_from_json,
                              hpolytope_to_json, in_span, incidence,
                              is_generating_set, is_simple, lp_max,
                              make_alcoved, normalize_point, polytope_dim,
                              reduced_coordinates, support_value, vertices,
                              vpolytope_from_json, vpolytope_to_json)
from alcove.rootsystems import build_root_system, reflection_matrix


@pytest.fixture(scope="module")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="module")
def square(a2):
    return alcoved_hull([(0, 0, 1), (0, 1, 0)], a2)


def test_square_vertices(square, a2):
    V = vertices(square)
    expected = {normalize_point(a2, p)
                for p in [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)]}
    assert set(V.vertices) == expected
    assert f_vector(square) == (4, 4, 1)
    assert is_simple(square)
    assert polytope_dim(square) == 2


def test_square_incidence(square):
    inc = incidence(square)
    assert inc.n_facets == 4
    assert [m.bit_count() for m in inc.vertex_facet] == [2, 2, 2, 2]
    # the two non-facet roots support one vertex each
    assert sorted(m.bit_count() for m in inc.vertex_support) == [2, 2, 3, 3]


def test_square_generating(square):
    assert is_generating_set(square, [(0, 0, 1), (0, 1, 0)]).ok
    chk = is_generating_set(square, [(0, 0, 1)])
    assert not chk.ok and chk.witness is not None


def test_generating_set_rejects_outside_point(square):
    with pytest.raises(ValueError):
        is_generating_set(square, [(0, 5, 5)])


def test_hexagon(a2):
    P = make_alcoved(a2, [(a, 1) for a in a2.roots])
    assert f_vector(P) == (6, 6, 1)


def test_unbounded_error():
    rs = build_root_system("B", 2)
    with pytest.raises(UnboundedPolytopeError):
        make_alcoved(rs, [((1, 0), 1), ((-1, 0), 1)])


def test_empty_error(a2):
    a = (1, -1, 0)
    cons = [(a, Q(-1)), (tuple(-v for v in a), Q(-1))]
    with pytest.raises(EmptyPolytopeError):
        make_alcoved(a2, cons)


def test_duplicate_and_nonroot_constraints(a2):
    with pytest.raises(ValueError):
        make_alcoved(a2, [((1, -1, 0), 1), ((1, -1, 0), 2)])
    with pytest.raises(ValueError):
        make_alcoved(a2, [((1, 1, 0), 1)])


def test_f4_object_valid_outside_symmetric_window():
    # lambda < mu violates the symmetric window but the H-polytope is fine
    rs = build_root_system("F", 4)
    cons = [(a, Q(1) if rs.is_long(a) else Q(2)) for a in rs.roots]
    P = make_alcoved(rs, cons)
    assert len(vertices(P).vertices) > 0


def test_singleton_hull(a2):
    P = alcoved_hull([(1, 2, 3)], a2)
    V = vertices(P)
    assert V.vertices == (normalize_point(a2, (1, 2, 3)),)
    assert f_vector(P) == (1,)
    value, arg = lp_max(P, (1, -1, 0))
    assert arg == V.vertices[0]
    assert value == rat.dot(rat.vector([1, -1, 0]), V.vertices[0])


def test_lp_max_b4_direction():
    rs = build_root_system("B", 4)
    P = symmetric_alcoved(SymmetricSpec(rs, 3, 2))
    value, arg = lp_max(P, (1, 0, 0, 0))
    assert value == 2
    vmax = max(rat.dot(rat.vector([1, 0, 0, 0]), v) for v in vertices(P).vertices)
    assert vmax == value
    assert P.contains(arg)


def test_lp_max_f4_nonfacet_support():
    rs = build_root_system("F", 4)
    P = symmetric_alcoved(SymmetricSpec(rs, 1, 1))
    long_dir = (1, 1, 0, 0)
    value, _ = lp_max(P, long_dir)
    assert value == 1
    assert max(rat.dot(rat.vector(long_dir), v) for v in vertices(P).vertices) == 1


def test_d4_example_counts():
    from alcove.claims import d4_example_polytope
    P = d4_example_polytope()
    assert len(vertices(P).vertices) == 96
    assert f_vector(P) == (96, 192, 120, 24, 1)
    assert is_simple(P)
    inc = incidence(P)
    assert all(m.bit_count() == 4 for m in inc.vertex_facet)


def test_b2_degenerate_square_simple():
    rs = build_root_system("B", 2)
    P = symmetric_alcoved(SymmetricSpec(rs, 1, 1))  # lam = mu collapses to a square
    assert f_vector(P) == (4, 4, 1)
    assert is_simple(P)
    inc = incidence(P)
    assert inc.n_facets == 4  # short-root constraints support only vertices here
    assert len(P.constraints) == 8


def test_vertices_satisfy_constraints_and_span_tightness():
    rs = build_root_system("B", 3)
    P = symmetric_alcoved(SymmetricSpec(rs, 3, 2))
    V = vertices(P)
    for v in V.vertices:
        assert P.contains(v)
        tight = [a for a, c in P.constraints if rat.dot(a, v) == c]
        assert rat.rank(tight) == 3


def test_symmetric_vertex_sets_invariant_under_simple_reflections():
    for spec in (SymmetricSpec(build_root_system("B", 2), 3, 2),
                 SymmetricSpec(build_root_system("A", 3), 1),
                 SymmetricSpec(build_root_system("G", 2), Q(7, 4), 1)):
        P = symmetric_alcoved(spec)
        verts = set(vertices(P).vertices)
        for b in spec.rs.basis:
            m = reflection_matrix(b)
            assert {rat.mat_vec(m, v) for v in verts} == verts


def test_alcoved_hull_minimality():
    rng = random.Random(5)
    rs = build_root_system("A", 2)
    for _ in range(25):
        pts = [normalize_point(rs, tuple(Q(rng.randint(-4, 4)) for _ in range(3)))
               for _ in range(rng.randint(1, 4))]
        hull = alcoved_hull(pts, rs)
        # any all-roots polytope containing the points dominates the hull rhs
        bigger = {a: c + Q(rng.randint(0, 3)) for a, c in hull.constraints}
        for a, c in hull.constraints:
            assert c <= bigger[a]
        # and every point satisfies the hull with at least one tight root
        for p in pts:
            assert hull.contains(p)


def _brute_vertices(P):
    from alcove.polytopes import _reduced_rows, ambient_point
    rows, rhs = _reduced_rows(P)
    n = P.rs.rank
    found = set()
    for idx in combinations(range(len(rows)), n):
        sub = rat.matrix([rows[i] for i in idx])
        try:
            y = rat.solve_linear(sub, tuple(rhs[i] for i in idx))
        except Exception:
            continue
        if all(rat.dot(rows[i], y) <= rhs[i] for i in range(len(rows))):
            found.add(ambient_point(P.rs, y))
    return sorted(found)


def test_double_description_matches_brute_force():
    rng = random.Random(23)
    for _ in range(15):
        fam, rank = rng.choice((("A", 2), ("A", 3), ("B", 2), ("G", 2)))
        rs = build_root_system(fam, rank)
        pts = [normalize_point(rs, tuple(Q(rng.randint(-5, 5), rng.choice((1, 2)))
                                         for _ in range(rs.ambient_dim)))
               for _ in range(rng.randint(1, 3))]
        P = alcoved_hull(pts, rs)
        assert list(vertices(P).vertices) == _brute_vertices(P)


def test_reduced_coordinates_and_span(a2):
    with pytest.raises(ValueError):
        reduced_coordinates(a2, rat.vector([1, 1, 1]))
    assert in_span(a2, rat.vector([1, -1, 0]))
    assert not in_span(a2, rat.vector([1, 1, 1]))
    rs6 = build_root_system("E", 6)
    assert in_span(rs6, rs6.roots[0])
    # e7 needs an e7/e8 component only b1 provides, in a fixed ratio
    assert not in_span(rs6, rat.vector([0, 0, 0, 0, 0, 0, 1, 0]))


def test_normalize_point_families(a2):
    assert sum(normalize_point(a2, (1, 2, 3))) == 0
    rsb = build_root_system("B", 2)
    assert normalize_point(rsb, (1, 2)) == rat.vector([1, 2])
    with pytest.raises(ValueError):
        normalize_point(a2, (1, 2))


def test_hpolytope_json_roundtrip():
    rs = build_root_system("B", 2)
    P = symmetric_alcoved(SymmetricSpec(rs, 3, 2))
    data = hpolytope_to_json(P)
    P2 = hpolytope_from_json(data)
    assert set(P2.constraints) == set(P.constraints)
    V = vertices(P)
    assert vpolytope_from_json(vpolytope_to_json(V)).vertices == V.vertices


def test_support_value_matches_lp_max():
    rs = build_root_system("C", 3)
    P = symmetric_alcoved(SymmetricSpec(rs, 4, 3))
    for a in rs.roots[:10]:
        assert support_value(P, a) == lp_max(P, a)[0]
