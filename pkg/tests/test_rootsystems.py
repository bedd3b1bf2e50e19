from fractions import Fraction as Q

import pytest

from alcove import rational as rat
from alcove.errors import VerificationError
from alcove.rootsystems import (build_root_system, coxeter_element,
                                coxeter_number, dynkin_adjacency,
                                e8_paper_data, from_json, gamma_orbit_partition,
                                highest_root, reflect, reflection_matrix,
                                root_coefficients, theta_roots, to_json,
                                tree_geodesic)

ALL_TYPES = [("A", 1, 2), ("A", 2, 3), ("A", 5, 6), ("A", 7, 8),
             ("B", 2, 4), ("B", 3, 6), ("B", 4, 8),
             ("C", 2, 4), ("C", 3, 6), ("C", 4, 8),
             ("D", 4, 6), ("D", 5, 8),
             ("E", 6, 12), ("E", 7, 18), ("E", 8, 30),
             ("F", 4, 12), ("G", 2, 6)]


@pytest.mark.parametrize("family,rank,h", ALL_TYPES)
def test_counts_and_coxeter_number(family, rank, h):
    rs = build_root_system(family, rank)
    assert coxeter_number(rs) == h
    assert len(rs.roots) == rank * h
    assert set(rs.roots) == {rat.vec_neg(r) for r in rs.roots}


@pytest.mark.parametrize("family,rank", [("A", 0), ("B", 1), ("D", 3),
                                         ("E", 5), ("E", 9), ("F", 3), ("G", 4)])
def test_invalid_ranks(family, rank):
    with pytest.raises(ValueError):
        build_root_system(family, rank)


def test_a1_roots():
    rs = build_root_system("A", 1)
    assert set(rs.roots) == {rat.vector([1, -1]), rat.vector([-1, 1])}


def test_d4_roots():
    rs = build_root_system("D", 4)
    assert len(rs.roots) == 24
    for r in rs.roots:
        assert sorted(abs(v) for v in r) == [0, 0, 1, 1]


def test_f4_long_short_split():
    rs = build_root_system("F", 4)
    longs = [r for r in rs.roots if rs.is_long(r)]
    shorts = [r for r in rs.roots if not rs.is_long(r)]
    assert len(longs) == 24 and len(shorts) == 24
    assert all(rat.dot(r, r) == 2 for r in longs)
    assert all(rat.dot(r, r) == 1 for r in shorts)
    assert all(sorted(abs(v) for v in r) == [0, 0, 1, 1] for r in longs)


def test_reflect_examples():
    a1 = build_root_system("A", 1)
    root = rat.vector([1, -1])
    assert reflect(root, rat.vector([1, 0])) == rat.vector([0, 1])
    for rs_args in (("B", 4),):
        rs = build_root_system(*rs_args)
        b2, b3 = rs.basis[1], rs.basis[2]
        assert reflect(b3, b2) == rat.vec_add(b2, b3)  # = a_2 - a_4


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4), ("F", 4), ("G", 2)])
def test_reflect_negates_own_normal(family, rank):
    rs = build_root_system(family, rank)
    for a in rs.roots:
        assert reflect(a, a) == rat.vec_neg(a)


def test_reflect_zero_vector():
    with pytest.raises(ValueError):
        reflect(rat.vector([0, 0]), rat.vector([1, 2]))


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 3), ("C", 3), ("D", 4),
                                         ("F", 4), ("G", 2), ("E", 6)])
def test_reflections_permute_roots(family, rank):
    rs = build_root_system(family, rank)
    roots = set(rs.roots)
    for a in rs.basis:
        assert {reflect(a, r) for r in roots} == roots


def test_coxeter_element_a1():
    rs = build_root_system("A", 1)
    omega = coxeter_element(rs)
    assert omega == rat.matrix([[0, 1], [1, 0]])
    assert rat.matrix_order(omega, 5) == 2


def test_coxeter_element_d4_order():
    rs = build_root_system("D", 4)
    assert rat.matrix_order(coxeter_element(rs), 100) == 6


def test_theta_roots_bn():
    for n in (2, 3, 4):
        rs = build_root_system("B", n)
        thetas = theta_roots(rs)
        e = lambda i: tuple(Q(1) if j == i else Q(0) for j in range(n))
        assert thetas[n - 1] == e(n - 1)
        for i in range(n - 1):
            assert thetas[i] == rat.vec_add(e(n - 1), e(i))


def test_theta_roots_f4():
    rs = build_root_system("F", 4)
    thetas = theta_roots(rs)
    assert thetas[0] == rat.vector([1, 0, -1, 0])
    assert thetas[1] == rat.vector([1, -1, 0, 0])
    assert thetas[2] == rat.vector(["1/2", "-1/2", "-1/2", "1/2"])
    assert thetas[3] == rat.vector(["1/2", "-1/2", "-1/2", "-1/2"])


@pytest.mark.parametrize("n", [2, 4, 6])
def test_theta_roots_an_are_suffix_sums(n):
    rs = build_root_system("A", n)
    thetas = theta_roots(rs)
    for i in range(n):
        total = rs.basis[i]
        for j in range(i + 1, n):
            total = rat.vec_add(total, rs.basis[j])
        assert thetas[i] == total


@pytest.mark.parametrize("family,rank", [("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8)])
def test_theta_roots_are_geodesic_sums(family, rank):
    rs = build_root_system(family, rank)
    thetas = theta_roots(rs)
    adj = dynkin_adjacency(rs)
    for i in range(rank):
        path = tree_geodesic(adj, i, rank - 1)
        total = None
        for p in path:
            total = rs.basis[p] if total is None else rat.vec_add(total, rs.basis[p])
        assert thetas[i] == total


@pytest.mark.parametrize("family,rank,h", ALL_TYPES)
def test_orbit_partition(family, rank, h):
    rs = build_root_system(family, rank)
    orbits = gamma_orbit_partition(rs)
    assert len(orbits) == rank
    assert all(len(o) == h for o in orbits)
    union = set().union(*map(set, orbits))
    assert union == set(rs.roots)


@pytest.mark.parametrize("family,rank", [("B", 3), ("C", 3), ("F", 4), ("G", 2)])
def test_weyl_preserves_length_classes(family, rank):
    rs = build_root_system(family, rank)
    for b in rs.basis:
        for r in rs.roots:
            assert rs.is_long(reflect(b, r)) == rs.is_long(r)


@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4), ("E", 6)])
def test_simply_laced_equal_lengths(family, rank):
    rs = build_root_system(family, rank)
    assert rs.simply_laced
    lengths = {rat.dot(r, r) for r in rs.roots}
    assert len(lengths) == 1


def test_e8_paper_data_first_columns():
    b_matrix, omega_basis, theta_basis = e8_paper_data()
    cols = rat.columns(b_matrix)
    assert cols[0] == rat.vector(["1/2", "-1/2", "-1/2", "-1/2",
                                  "-1/2", "-1/2", "-1/2", "1/2"])
    theta_cols = rat.columns(theta_basis)
    assert theta_cols[0] == rat.vector([1, 0, 1, 1, 1, 1, 1, 1])
    assert rat.matrix_order(omega_basis, 40) == 30


def test_e8_matrices_consistent_with_realization():
    rs = build_root_system("E", 8)
    b_matrix, omega_basis, theta_basis = e8_paper_data()
    assert rs.basis == rat.columns(b_matrix)
    # the printed Coxeter matrix is the ambient one conjugated into basis coords
    ambient = coxeter_element(rs)
    binv = rat.mat_inverse(b_matrix)
    assert rat.mat_mul(rat.mat_mul(binv, ambient), b_matrix) == omega_basis
    # printed theta columns agree with the computed theta roots
    thetas = theta_roots(rs)
    for i, col in enumerate(rat.columns(theta_basis)):
        assert rat.mat_vec(b_matrix, col) == thetas[i]


def test_e6_highest_root_disagrees_with_printed_line():
    rs = build_root_system("E", 6)
    coeffs = root_coefficients(rs, highest_root(rs))
    assert coeffs == rat.vector([1, 2, 2, 3, 2, 1])
    assert sum(coeffs) == 11  # = h - 1; the printed coefficients sum to 12
    assert list(coeffs) != [1, 2, 3, 3, 2, 1]


def test_e7_highest_root_matches_printed_line():
    rs = build_root_system("E", 7)
    coeffs = root_coefficients(rs, highest_root(rs))
    assert coeffs == rat.vector([2, 2, 3, 4, 3, 2, 1])
    assert sum(coeffs) == 17


@pytest.mark.parametrize("family,rank", [("A", 2), ("D", 4), ("F", 4)])
def test_basis_coefficients_unimodal_sign(family, rank):
    rs = build_root_system(family, rank)
    for r in rs.roots:
        coeffs = root_coefficients(rs, r)
        assert all(c.denominator == 1 for c in coeffs)
        assert all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)


def test_reflection_matrices_orthogonal_on_span():
    rs = build_root_system("F", 4)
    for b in rs.basis:
        m = reflection_matrix(b)
        assert rat.mat_mul(m, m) == rat.identity(4)
        for r in rs.roots[:8]:
            assert rat.dot(rat.mat_vec(m, r), rat.mat_vec(m, r)) == rat.dot(r, r)


def test_json_roundtrip():
    rs = build_root_system("G", 2)
    data = to_json(rs)
    assert from_json(data) == rs
    bad = dict(data)
    bad["basis"] = [data["basis"][1], data["basis"][0]]
    with pytest.raises(VerificationError):
        from_json(bad)
