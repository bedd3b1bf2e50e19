"""Alcoved polytopes: H-representation over root normals, exact LP support
values, vertex enumeration, incidence, and face counting.

Geometry runs in reduced coordinates over the simple-root basis of the
system's span, so types whose roots live in a proper subspace (A, G2, E6,
E7) are handled uniformly.  All results are exact.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from math import lcm
from typing import Iterable, NamedTuple, Sequence

from . import linprog, rational as rat
from ._kernel import enumerate_vertices
from .errors import EmptyPolytopeError, ResourceLimitError, UnboundedPolytopeError
from .rational import Vector, dot
from .rootsystems import RootSystem

DEFAULT_RAY_CAP = 10 ** 6
DEFAULT_FACE_CAP = 10 ** 6


def _ray_cap() -> int:
    return int(os.environ.get("ALCOVE_MAX_DD_RAYS", DEFAULT_RAY_CAP))


@dataclass(frozen=True)
class HPolytope:
    """Intersection of root halfspaces <a, x> <= c_a, one per distinct root."""

    rs: RootSystem
    constraints: tuple[tuple[Vector, Q], ...]

    def rhs_for(self, root: Vector) -> Q:
        for a, c in self.constraints:
            if a == root:
                return c
        raise KeyError(f"no constraint with normal {root}")

    def contains(self, point: Vector) -> bool:
        return all(dot(a, point) <= c for a, c in self.constraints)


@dataclass(frozen=True)
class VPolytope:
    vertices: tuple[Vector, ...]
    ambient_dim: int


@dataclass(frozen=True)
class IncidenceStructure:
    """Exact vertex-facet and vertex-support incidence.

    Facets are geometric: constraints tight on the same (dim-1)-dimensional
    vertex set are merged into one facet class.  Support incidence covers
    every root of the system, facet or not.
    """

    facet_members: tuple[tuple[int, ...], ...]   # constraint indices per facet
    vertex_facet: tuple[int, ...]                # per vertex, bitmask over facets
    support_values: tuple[Q, ...]                # per root index of rs.roots
    vertex_support: tuple[int, ...]              # per vertex, bitmask over roots

    @property
    def n_facets(self) -> int:
        return len(self.facet_members)


class GenSetCheck(NamedTuple):
    ok: bool
    witness: Vector | None  # a root whose support hyperplane misses the set


# -- span / reduced coordinates ----------------------------------------------

@lru_cache(maxsize=None)
def _gram(rs: RootSystem) -> rat.Matrix:
    return rat.matrix([[dot(bi, bj) for bj in rs.basis] for bi in rs.basis])


def reduced_coordinates(rs: RootSystem, x: Vector) -> Vector:
    """Coordinates of x in the simple-root basis; raises if x is off-span."""
    rhs = tuple(dot(b, x) for b in rs.basis)
    y = rat.solve_linear(_gram(rs), rhs)
    if ambient_point(rs, y) != tuple(x):
        raise ValueError("point does not lie in the span of the root system")
    return y


def ambient_point(rs: RootSystem, y: Sequence[Q]) -> Vector:
    out = [Q(0)] * rs.ambient_dim
    for coeff, b in zip(y, rs.basis):
        for i, v in enumerate(b):
            out[i] += coeff * v
    return tuple(out)


def in_span(rs: RootSystem, x: Vector) -> bool:
    try:
        reduced_coordinates(rs, x)
        return True
    except ValueError:
        return False


def normalize_point(rs: RootSystem, x) -> Vector:
    """Map a point into the realization's coordinate convention.

    Types A and G2 live in the sum-zero subspace; representatives modulo the
    all-ones line are shifted there.  Other types pass through unchanged.
    """
    x = rat.vector(x)
    if len(x) != rs.ambient_dim:
        raise ValueError(f"expected {rs.ambient_dim} coordinates, got {len(x)}")
    if rs.family in ("A", "G"):
        mean = sum(x) / len(x)
        return tuple(v - mean for v in x)
    return x


def _reduced_rows(P: HPolytope) -> tuple[list[Vector], list[Q]]:
    rows = [tuple(dot(a, b) for b in P.rs.basis) for a, _ in P.constraints]
    rhs = [c for _, c in P.constraints]
    return rows, rhs


# -- construction -------------------------------------------------------------

def make_alcoved(rs: RootSystem, constraints: Iterable[tuple], validate: bool = True) -> HPolytope:
    """Validated alcoved polytope from (root, rhs) pairs.

    Validation checks the constraint normals are distinct roots and that the
    region is nonempty and bounded within the span of the system (by LP).
    """
    cons = []
    seen = set()
    for a, c in constraints:
        a = rat.vector(a)
        if not rs.is_root(a):
            raise ValueError(f"constraint normal {a} is not a root of {rs.name}")
        if a in seen:
            raise ValueError(f"duplicate constraint normal {a}")
        seen.add(a)
        cons.append((a, rat.q(c)))
    P = HPolytope(rs, tuple(cons))
    if validate:
        rows, rhs = _reduced_rows(P)
        n = rs.rank
        linprog.feasible_point(rows, rhs, n)  # EmptyPolytopeError if not
        for j in range(n):
            e = [Q(0)] * n
            for sign in (1, -1):
                e[j] = Q(sign)
                linprog.lp_value(rows, rhs, tuple(e))  # UnboundedPolytopeError if not
            e[j] = Q(0)
    return P


def alcoved_hull(points: Sequence, rs: RootSystem) -> HPolytope:
    """Smallest alcoved polytope containing the points: one constraint per
    root, right-hand side the maximum over the points."""
    pts = [normalize_point(rs, p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    for p in pts:
        reduced_coordinates(rs, p)  # raises off-span
    cons = [(a, max(dot(a, p) for p in pts)) for a in rs.roots]
    return HPolytope(rs, tuple(cons))


# -- LP over a polytope --------------------------------------------------------

def lp_max(P: HPolytope, direction) -> tuple[Q, Vector]:
    """Exact maximum of <direction, x> over P with an optimal point."""
    direction = rat.vector(direction)
    rows, rhs = _reduced_rows(P)
    obj = tuple(dot(direction, b) for b in P.rs.basis)
    value, y = linprog.lp_solve(rows, rhs, obj)
    return value, ambient_point(P.rs, y)


def support_value(P: HPolytope, direction) -> Q:
    """Exact maximum of <direction, x> over P (value only, via the dual LP)."""
    direction = rat.vector(direction)
    rows, rhs = _reduced_rows(P)
    obj = tuple(dot(direction, b) for b in P.rs.basis)
    return linprog.lp_value(rows, rhs, obj)


# -- vertex enumeration --------------------------------------------------------

def _integerize(rows: list[Vector], rhs: list[Q]) -> tuple[list[tuple[int, ...]], list[int]]:
    int_rows, int_rhs = [], []
    for row, c in zip(rows, rhs):
        scale = lcm(*(v.denominator for v in row), c.denominator)
        int_rows.append(tuple(int(v * scale) for v in row))
        int_rhs.append(int(c * scale))
    return int_rows, int_rhs


@lru_cache(maxsize=32)
def _vertex_data(P: HPolytope, cap: int) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Sorted ambient vertices of P and their tight-constraint bitmasks."""
    rows, rhs = _reduced_rows(P)
    n = P.rs.rank
    order = sorted(range(len(rows)), key=lambda i: (rows[i], rhs[i]))
    srows = [rows[i] for i in order]
    srhs = [rhs[i] for i in order]
    int_rows, int_rhs = _integerize(srows, srhs)

    lower, upper = [], []
    for j in range(n):
        e = [Q(0)] * n
        e[j] = Q(1)
        try:
            hi = linprog.lp_value(srows, srhs, tuple(e))
            e[j] = Q(-1)
            lo = -linprog.lp_value(srows, srhs, tuple(e))
        except EmptyPolytopeError:
            return (), ()
        lower.append((lo.numerator, lo.denominator))
        upper.append((hi.numerator, hi.denominator))

    raw = enumerate_vertices(int_rows, int_rhs, lower, upper, cap)

    items = []
    for nums, den, mask in raw:
        y = tuple(Q(v, den) for v in nums)
        x = ambient_point(P.rs, y)
        orig_mask = 0
        for pos, bit_i in enumerate(order):
            if mask >> pos & 1:
                orig_mask |= 1 << bit_i
        items.append((x, orig_mask))
    items.sort()
    verts = tuple(x for x, _ in items)
    if len(set(verts)) != len(verts):
        raise AssertionError("duplicate vertices out of the kernel")
    return verts, tuple(m for _, m in items)


def vertices(P: HPolytope, max_rays: int | None = None) -> VPolytope:
    """All vertices of P by double description, in sorted order."""
    cap = max_rays if max_rays is not None else _ray_cap()
    verts, _ = _vertex_data(P, cap)
    if not verts:
        raise EmptyPolytopeError("polytope has no vertices (empty system)")
    return VPolytope(verts, P.rs.ambient_dim)


def polytope_dim(P: HPolytope, max_rays: int | None = None) -> int:
    cap = max_rays if max_rays is not None else _ray_cap()
    verts, _ = _vertex_data(P, cap)
    return _affine_dim(P.rs, verts)


def _affine_dim(rs: RootSystem, verts: Sequence[Vector]) -> int:
    if not verts:
        return -1
    v0 = verts[0]
    return rat.rank([rat.vec_sub(v, v0) for v in verts[1:]])


@lru_cache(maxsize=32)
def _incidence_data(P: HPolytope, cap: int):
    verts, masks = _vertex_data(P, cap)
    if not verts:
        raise EmptyPolytopeError("polytope has no vertices (empty system)")
    nv = len(verts)
    dim = _affine_dim(P.rs, verts)

    # facet classes: group constraints by tight vertex set of affine dim-1
    tight_sets: dict[int, list[int]] = {}
    for i in range(len(P.constraints)):
        tv = 0
        for t in range(nv):
            if masks[t] >> i & 1:
                tv |= 1 << t
        if tv == 0:
            continue
        members = [verts[t] for t in range(nv) if tv >> t & 1]
        if _affine_dim(P.rs, members) == dim - 1:
            tight_sets.setdefault(tv, []).append(i)
    facet_sets = sorted(tight_sets.items(), key=lambda kv: kv[1][0])
    facet_members = tuple(tuple(v) for _, v in facet_sets)
    vertex_facet = [0] * nv
    for j, (tv, _) in enumerate(facet_sets):
        for t in range(nv):
            if tv >> t & 1:
                vertex_facet[t] |= 1 << j

    roots = P.rs.roots
    support_values = []
    vertex_support = [0] * nv
    for ri, a in enumerate(roots):
        vals = [dot(a, v) for v in verts]
        mx = max(vals)
        support_values.append(mx)
        for t in range(nv):
            if vals[t] == mx:
                vertex_support[t] |= 1 << ri

    inc = IncidenceStructure(facet_members, tuple(vertex_facet),
                             tuple(support_values), tuple(vertex_support))
    facet_vertex_sets = tuple(tv for tv, _ in facet_sets)
    return verts, masks, dim, inc, facet_vertex_sets


def incidence(P: HPolytope, max_rays: int | None = None) -> IncidenceStructure:
    cap = max_rays if max_rays is not None else _ray_cap()
    return _incidence_data(P, cap)[3]


def is_simple(P: HPolytope, max_rays: int | None = None) -> bool:
    """True iff every vertex lies on exactly dim(P) facets."""
    cap = max_rays if max_rays is not None else _ray_cap()
    verts, _, dim, inc, _ = _incidence_data(P, cap)
    return all(m.bit_count() == dim for m in inc.vertex_facet)


def f_vector(P: HPolytope, max_rays: int | None = None,
             max_faces: int | None = None) -> tuple[int, ...]:
    """Face counts by dimension, vertices first, the polytope itself last."""
    cap = max_rays if max_rays is not None else _ray_cap()
    face_cap = max_faces if max_faces is not None else DEFAULT_FACE_CAP
    verts, _, dim, _, facet_sets = _incidence_data(P, cap)
    nv = len(verts)
    full = (1 << nv) - 1

    faces: set[int] = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for f in frontier:
            for g0 in facet_sets:
                g = f & g0
                if g and g != f and g not in faces:
                    faces.add(g)
                    nxt.append(g)
                    if len(faces) > face_cap:
                        raise ResourceLimitError(
                            f"face count exceeds cap {face_cap}")
        frontier = nxt

    counts = [0] * (dim + 1)
    for f in faces:
        members = [verts[t] for t in range(nv) if f >> t & 1]
        counts[_affine_dim(P.rs, members)] += 1
    return tuple(counts)


# -- generating sets -----------------------------------------------------------

def is_generating_set(P: HPolytope, points: Sequence) -> GenSetCheck:
    """Do the points touch the support hyperplane of every root?

    Points must lie in P (checked exactly; ValueError otherwise).  The
    support values of P are computed by LP, never by vertex enumeration.
    """
    pts = [normalize_point(P.rs, p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    for p in pts:
        reduced_coordinates(P.rs, p)  # off-span points are not in P
        if not P.contains(p):
            raise ValueError(f"point {p} lies outside the polytope")
    for a in P.rs.roots:
        sup_s = max(dot(a, p) for p in pts)
        if sup_s != support_value(P, a):
            return GenSetCheck(False, a)
    return GenSetCheck(True, None)


# -- serialization ---------------------------------------------------------------

def hpolytope_to_json(P: HPolytope) -> dict:
    return {
        "type": P.rs.family,
        "rank": P.rs.rank,
        "constraints": [
            {"root": [rat.format_q(v) for v in a], "rhs": rat.format_q(c)}
            for a, c in P.constraints
        ],
    }


def hpolytope_from_json(data: dict, validate: bool = True) -> HPolytope:
    from .rootsystems import build_root_system
    rs = build_root_system(data["type"], data["rank"])
    cons = [(rat.vector(e["root"]), rat.q(e["rhs"])) for e in data["constraints"]]
    return make_alcoved(rs, cons, validate=validate)


def vpolytope_to_json(V: VPolytope) -> dict:
    return {"vertices": [[rat.format_q(v) for v in vert] for vert in V.vertices]}


def vpolytope_from_json(data: dict) -> VPolytope:
    verts = tuple(rat.vector(v) for v in data["vertices"])
    if not verts:
        raise ValueError("vertex list is empty")
    return VPolytope(verts, len(verts[0]))
