"""Irreducible reduced root systems with fixed rational coordinate realizations.

Each system carries a chosen simple-root basis in a fixed order; the order
matters because Coxeter elements, theta roots, and orbit partitions all
depend on it.  Realizations:

  A_n   roots e_i - e_j inside the sum-zero subspace of R^{n+1}
  B_n   +-e_i and +-e_i +- e_j in R^n
  C_n   +-2 e_i and +-e_i +- e_j in R^n
  D_n   +-e_i +- e_j in R^n, fork leaves numbered first
  E8    +-e_i +- e_j plus half-integer vectors with an even number of
        minus signs; basis from the published 8x8 column matrix
  E6/E7 subsystems of E8 spanned by a recorded subset of that basis
  F4    +-a_i, +-a_i +- a_j, and (1/2)(+-a_1 +-a_2 +-a_3 +-a_4) in R^4
  G2    +-(e_i - e_j) and +-(2e_i - e_j - e_k) in the sum-zero subspace of R^3
"""

from __future__ import annotations

import json
from fractions import Fraction as Q
from functools import lru_cache
from importlib import resources
from itertools import combinations, product

from . import rational as rat
from .errors import VerificationError
from .rational import Matrix, Vector, dot

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class RootSystem:
    """Immutable root system with a fixed realization and basis ordering."""

    __slots__ = ("family", "rank", "ambient_dim", "roots", "basis", "_index", "_long_set")

    def __init__(self, family: str, rank: int, ambient_dim: int,
                 roots: tuple[Vector, ...], basis: tuple[Vector, ...]):
        self.family = family
        self.rank = rank
        self.ambient_dim = ambient_dim
        self.roots = roots
        self.basis = basis
        self._index = {r: i for i, r in enumerate(roots)}
        lengths = {dot(r, r) for r in roots}
        if len(lengths) > 2:
            raise VerificationError(f"{family}{rank}: more than two root lengths")
        long_sq = max(lengths)
        self._long_set = frozenset(r for r in roots if dot(r, r) == long_sq)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.name}, {len(self.roots)} roots)"

    def __eq__(self, other) -> bool:
        return (isinstance(other, RootSystem)
                and self.family == other.family and self.rank == other.rank
                and self.basis == other.basis and self.roots == other.roots)

    def __hash__(self) -> int:
        return hash((self.family, self.rank, self.basis))

    def root_index(self, root: Vector) -> int:
        try:
            return self._index[root]
        except KeyError:
            raise ValueError(f"{root} is not a root of {self.name}") from None

    def is_root(self, v: Vector) -> bool:
        return v in self._index

    def is_long(self, root: Vector) -> bool:
        """True for long roots; in simply-laced systems every root is long."""
        if root not in self._index:
            raise ValueError(f"{root} is not a root of {self.name}")
        return root in self._long_set

    @property
    def simply_laced(self) -> bool:
        return len(self._long_set) == len(self.roots)


def _unit(dim: int, i: int, value=1) -> Vector:
    return tuple(Q(value) if j == i else Q(0) for j in range(dim))


def _sorted_roots(roots) -> tuple[Vector, ...]:
    return tuple(sorted(set(roots)))


def _a_roots(n: int) -> tuple[list[Vector], list[Vector]]:
    dim = n + 1
    roots = []
    for i in range(dim):
        for j in range(dim):
            if i != j:
                roots.append(rat.vec_sub(_unit(dim, i), _unit(dim, j)))
    basis = [rat.vec_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(n)]
    return roots, basis


def _bc_roots(n: int, family: str) -> tuple[list[Vector], list[Vector]]:
    roots = []
    for i in range(n):
        scale = 2 if family == "C" else 1
        roots.append(_unit(n, i, scale))
        roots.append(_unit(n, i, -scale))
    for i in range(n):
        for j in range(i + 1, n):
            for si, sj in product((1, -1), repeat=2):
                roots.append(rat.vec_add(_unit(n, i, si), _unit(n, j, sj)))
    basis = [rat.vec_sub(_unit(n, i), _unit(n, i + 1)) for i in range(n - 1)]
    basis.append(_unit(n, n - 1, 2 if family == "C" else 1))
    return roots, basis


def _d_roots(n: int) -> tuple[list[Vector], list[Vector]]:
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for si, sj in product((1, -1), repeat=2):
                roots.append(rat.vec_add(_unit(n, i, si), _unit(n, j, sj)))
    # Fork leaves first, then the path walks toward e_1 - e_2.
    basis = [rat.vec_sub(_unit(n, n - 2), _unit(n, n - 1)),
             rat.vec_add(_unit(n, n - 2), _unit(n, n - 1))]
    for i in range(3, n + 1):
        basis.append(rat.vec_sub(_unit(n, n - i), _unit(n, n - i + 1)))
    return roots, basis


def _e8_roots() -> list[Vector]:
    roots = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si, sj in product((1, -1), repeat=2):
                roots.append(rat.vec_add(_unit(8, i, si), _unit(8, j, sj)))
    half = Q(1, 2)
    for signs in product((1, -1), repeat=8):
        if sum(1 for s in signs if s < 0) % 2 == 0:
            roots.append(tuple(half * s for s in signs))
    return roots


def _f4_roots() -> tuple[list[Vector], list[Vector]]:
    roots = []
    for i in range(4):
        roots.append(_unit(4, i))
        roots.append(_unit(4, i, -1))
    for i in range(4):
        for j in range(i + 1, 4):
            for si, sj in product((1, -1), repeat=2):
                roots.append(rat.vec_add(_unit(4, i, si), _unit(4, j, sj)))
    half = Q(1, 2)
    for signs in product((1, -1), repeat=4):
        roots.append(tuple(half * s for s in signs))
    basis = [rat.vec_sub(_unit(4, 1), _unit(4, 2)),
             rat.vec_sub(_unit(4, 2), _unit(4, 3)),
             _unit(4, 3),
             tuple(half * s for s in (1, -1, -1, -1))]
    return roots, basis


def _g2_roots() -> tuple[list[Vector], list[Vector]]:
    roots = []
    for i in range(3):
        for j in range(3):
            if i != j:
                roots.append(rat.vec_sub(_unit(3, i), _unit(3, j)))
    for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
        long_root = tuple(Q(2) if t == i else Q(-1) for t in range(3))
        roots.append(long_root)
        roots.append(rat.vec_neg(long_root))
    basis = [rat.vec_sub(_unit(3, 0), _unit(3, 1)),
             (Q(-2), Q(1), Q(1))]
    return roots, basis


def _load_data(name: str) -> dict:
    with resources.files("alcove.data").joinpath(name).open() as fh:
        return json.load(fh)


@lru_cache(maxsize=None)
def e8_paper_data() -> tuple[Matrix, Matrix, Matrix]:
    """The published E8 basis matrix B, the Coxeter matrix in basis
    coordinates, and the matrix whose columns are the theta roots in basis
    coordinates."""
    data = _load_data("e8_matrices.json")
    b = rat.matrix(data["B"])
    omega = rat.matrix(data["omega_basis"])
    theta = rat.matrix(data["Theta_basis"])
    return b, omega, theta


@lru_cache(maxsize=None)
def _e_subsystem(rank: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recorded (column subset, basis ordering) for E6/E7 inside E8.

    The ordering is pinned so that the theta roots are geodesic sums in the
    Dynkin tree and the Coxeter orbits of the theta roots partition the
    system; see scripts/pin_e_numbering.py for the search that produced it.
    """
    data = _load_data("e67_numbering.json")
    entry = data[f"E{rank}"]
    return tuple(entry["columns"]), tuple(entry["order"])


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system of the given type in its fixed realization."""
    family = family.upper()
    if family not in _RANK_RANGE:
        raise ValueError(f"unknown family {family!r}")
    lo, hi = _RANK_RANGE[family]
    if rank < lo or (hi is not None and rank > hi):
        raise ValueError(f"invalid rank {rank} for family {family}")

    if family == "A":
        roots, basis = _a_roots(rank)
        dim = rank + 1
    elif family in ("B", "C"):
        roots, basis = _bc_roots(rank, family)
        dim = rank
    elif family == "D":
        roots, basis = _d_roots(rank)
        dim = rank
    elif family == "F":
        roots, basis = _f4_roots()
        dim = 4
    elif family == "G":
        roots, basis = _g2_roots()
        dim = 3
    else:  # E6, E7, E8
        dim = 8
        all_roots = _e8_roots()
        b_matrix, _, _ = e8_paper_data()
        cols = rat.columns(b_matrix)
        if rank == 8:
            roots = all_roots
            basis = list(cols)
        else:
            col_idx, order = _e_subsystem(rank)
            span = [cols[i] for i in col_idx]
            roots = [r for r in all_roots if _in_span(span, r)]
            basis = [cols[i] for i in order]

    rs = RootSystem(family, rank, dim, _sorted_roots(roots), tuple(basis))
    _validate_counts(rs)
    return rs


def _in_span(span: list[Vector], v: Vector) -> bool:
    return rat.rank(span) == rat.rank(span + [list(v)])


_EXPECTED_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


def _validate_counts(rs: RootSystem) -> None:
    expected = _EXPECTED_COUNT[rs.family](rs.rank)
    if len(rs.roots) != expected:
        raise VerificationError(f"{rs.name}: {len(rs.roots)} roots, expected {expected}")
    if len(rs.basis) != rs.rank:
        raise VerificationError(f"{rs.name}: basis size {len(rs.basis)} != rank")
    for b in rs.basis:
        if not rs.is_root(b):
            raise VerificationError(f"{rs.name}: basis element {b} is not a root")


def reflect(a: Vector, x: Vector) -> Vector:
    """Reflect x in the hyperplane perpendicular to a."""
    aa = dot(a, a)
    if aa == 0:
        raise ValueError("cannot reflect in the zero vector")
    coeff = 2 * dot(a, x) / aa
    return rat.vec_sub(x, rat.vec_scale(coeff, a))


def reflection_matrix(a: Vector) -> Matrix:
    dim = len(a)
    cols = [reflect(a, _unit(dim, j)) for j in range(dim)]
    return rat.mat_from_columns(cols)


def simple_reflections(rs: RootSystem) -> tuple[Matrix, ...]:
    return tuple(reflection_matrix(b) for b in rs.basis)


@lru_cache(maxsize=None)
def coxeter_element(rs: RootSystem) -> Matrix:
    """Ambient matrix of s_1 o s_2 o ... o s_n (rightmost factor applied first)."""
    result = rat.identity(rs.ambient_dim)
    for refl in simple_reflections(rs):
        result = rat.mat_mul(result, refl)
    return result


@lru_cache(maxsize=None)
def coxeter_number(rs: RootSystem) -> int:
    """Order of the Coxeter element; cross-checked against |roots| / rank."""
    omega = coxeter_element(rs)
    order = rat.matrix_order(omega, cap=2 * len(rs.roots) + 2)
    if order * rs.rank != len(rs.roots):
        raise VerificationError(
            f"{rs.name}: Coxeter order {order} inconsistent with |roots|/rank "
            f"= {len(rs.roots)}/{rs.rank}")
    return order


@lru_cache(maxsize=None)
def theta_roots(rs: RootSystem) -> tuple[Vector, ...]:
    """The roots s_n o ... o s_{i+1}(b_i) for i = 1..n (so the last one is b_n)."""
    n = rs.rank
    out = []
    for i in range(n):
        v = rs.basis[i]
        for j in range(i + 1, n):
            v = reflect(rs.basis[j], v)
        if not rs.is_root(v):
            raise VerificationError(f"{rs.name}: theta_{i + 1} = {v} is not a root")
        out.append(v)
    return tuple(out)


@lru_cache(maxsize=None)
def gamma_orbit_partition(rs: RootSystem) -> tuple[tuple[Vector, ...], ...]:
    """Orbits of the theta roots under powers of the Coxeter element.

    Verified to be pairwise disjoint, each of size equal to the Coxeter
    number, with union the whole root set.
    """
    omega = coxeter_element(rs)
    h = coxeter_number(rs)
    orbits = []
    seen: set[Vector] = set()
    for theta in theta_roots(rs):
        orbit = []
        v = theta
        for _ in range(h):
            if not rs.is_root(v):
                raise VerificationError(f"{rs.name}: orbit left the root set at {v}")
            orbit.append(v)
            v = rat.mat_vec(omega, v)
        if v != theta:
            raise VerificationError(f"{rs.name}: orbit of {theta} not closed after h steps")
        if len(set(orbit)) != h:
            raise VerificationError(f"{rs.name}: orbit of {theta} has repeats")
        if seen & set(orbit):
            raise VerificationError(f"{rs.name}: orbits overlap")
        seen |= set(orbit)
        orbits.append(tuple(orbit))
    if len(seen) != len(rs.roots):
        raise VerificationError(f"{rs.name}: orbits cover {len(seen)} of {len(rs.roots)} roots")
    return tuple(orbits)


def root_coefficients(rs: RootSystem, root: Vector) -> Vector:
    """Coordinates of a root in the simple-root basis (exact Gram solve)."""
    gram = rat.matrix([[dot(bi, bj) for bj in rs.basis] for bi in rs.basis])
    rhs = tuple(dot(b, root) for b in rs.basis)
    return rat.solve_linear(gram, rhs)


def highest_root(rs: RootSystem) -> Vector:
    """The positive root of maximal height (sum of basis coefficients)."""
    best = None
    best_height = None
    for r in rs.roots:
        coeffs = root_coefficients(rs, r)
        height = sum(coeffs)
        if best_height is None or height > best_height:
            best, best_height = r, height
    return best


def positive_roots(rs: RootSystem) -> tuple[Vector, ...]:
    pos = []
    for r in rs.roots:
        coeffs = root_coefficients(rs, r)
        if all(c >= 0 for c in coeffs):
            pos.append(r)
    if 2 * len(pos) != len(rs.roots):
        raise VerificationError(f"{rs.name}: positive roots are not half the system")
    return tuple(pos)


def dynkin_adjacency(rs: RootSystem) -> dict[int, set[int]]:
    """Edges of the Dynkin diagram on basis indices (0-based)."""
    n = rs.rank
    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if dot(rs.basis[i], rs.basis[j]) != 0:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def tree_geodesic(adj: dict[int, set[int]], start: int, end: int) -> list[int]:
    """Vertex path between two nodes of a tree."""
    parent = {start: None}
    stack = [start]
    while stack:
        u = stack.pop()
        if u == end:
            break
        for v in adj[u]:
            if v not in parent:
                parent[v] = u
                stack.append(v)
    path = [end]
    while path[-1] != start:
        path.append(parent[path[-1]])
    return path[::-1]


def to_json(rs: RootSystem) -> dict:
    return {
        "type": rs.family,
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "basis": [[rat.format_q(x) for x in b] for b in rs.basis],
        "roots": [[rat.format_q(x) for x in r] for r in rs.roots],
    }


def from_json(data: dict) -> RootSystem:
    rs = build_root_system(data["type"], data["rank"])
    basis = tuple(rat.vector(b) for b in data["basis"])
    roots = tuple(rat.vector(r) for r in data["roots"])
    if basis != rs.basis or roots != rs.roots:
        raise VerificationError("serialized system disagrees with the fixed realization")
    return rs
