"""The explicit generator constructions: A_n corner points, symmetric
polytopes with their seed vertices and Coxeter orbits, the rank-2
consecutive-root construction, the F4 long/short duality, and the E8
incidence certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cmp_to_key

from . import polytopes as poly, rational as rat
from .errors import EmptyPolytopeError, VerificationError, WindowError
from .polytopes import HPolytope, is_generating_set, make_alcoved, support_value
from .rational import Vector, dot
from .rootsystems import (RootSystem, build_root_system, coxeter_element,
                          coxeter_number, e8_paper_data, theta_roots)

E8_INCIDENCE_PAIRS = ((17, 1), (20, 1), (16, 2), (18, 2), (17, 3), (15, 4),
                      (20, 4), (9, 5), (14, 5), (13, 6), (12, 7), (11, 8),
                      (20, 8), (25, 8))


@dataclass(frozen=True)
class SymmetricSpec:
    """Parameters of a Weyl-invariant alcoved polytope.

    lam is the right-hand side on long roots.  mu is the short-root value,
    required exactly for the two-length families (B, C, F4, G2); simply-laced
    systems use lam alone.
    """

    rs: RootSystem
    lam: Q
    mu: Q | None = None

    def __post_init__(self):
        object.__setattr__(self, "lam", rat.q(self.lam))
        if self.mu is not None:
            object.__setattr__(self, "mu", rat.q(self.mu))
        if self.lam <= 0:
            raise WindowError("lambda must be positive")
        if self.rs.simply_laced:
            if self.mu is not None:
                raise WindowError(f"{self.rs.name} is simply laced; mu does not apply")
        else:
            if self.mu is None or self.mu <= 0:
                raise WindowError(f"{self.rs.name} needs a positive mu")
            if self.rs.family in ("B", "C", "F") and not self.mu <= self.lam <= 2 * self.mu:
                raise WindowError(
                    f"need mu <= lambda <= 2 mu, got lambda={self.lam}, mu={self.mu}")
            # The G2 window is checked by LP support in symmetric_alcoved.

    def rhs(self, root: Vector) -> Q:
        return self.lam if self.rs.is_long(root) else self.mu


def f4_case(lam: Q, mu: Q) -> int:
    """Which of the two F4 parameter regimes applies; the closed middle
    interval counts as case 1 (the smaller generating set)."""
    if Q(4, 3) * mu <= lam <= Q(3, 2) * mu:
        return 1
    return 2


def symmetric_alcoved(spec: SymmetricSpec) -> HPolytope:
    """The Weyl-invariant polytope with per-length-class right-hand sides.

    Invariance c_{w(a)} = c_a is verified for every simple reflection; for
    G2 the (lambda, mu) window is certified by LP (every root hyperplane
    must support), since no closed form is fixed for that family.
    """
    rs = spec.rs
    cons = tuple((a, spec.rhs(a)) for a in rs.roots)
    P = HPolytope(rs, cons)
    rhs_of = dict(cons)
    for b in rs.basis:
        for a in rs.roots:
            from .rootsystems import reflect
            if rhs_of[reflect(b, a)] != rhs_of[a]:
                raise VerificationError("constraint family is not Weyl invariant")
    if rs.family == "G":
        for a in rs.roots:
            if support_value(P, a) != rhs_of[a]:
                raise WindowError(
                    f"G2 window violated: root {a} supports at "
                    f"{support_value(P, a)} < {rhs_of[a]}")
    return P


def _verify_vertex(P: HPolytope, x: Vector, tight: list[Vector]) -> None:
    if not P.contains(x):
        raise VerificationError(f"seed {x} is not inside the polytope")
    if rat.rank(tight) != P.rs.rank:
        raise VerificationError("tight supports at the seed do not span")


def seed_vertex(spec: SymmetricSpec) -> tuple[Vector, ...]:
    """Seed vertices whose Coxeter orbit generates the symmetric polytope.

    One point for every type except the outer F4 regime, which needs two.
    Each returned point is verified to be a vertex: it satisfies every
    constraint and lies on rank-many independent support hyperplanes.
    """
    rs = spec.rs
    P = symmetric_alcoved(spec)
    if rs.family == "F" and f4_case(spec.lam, spec.mu) == 2:
        lam, mu = spec.lam, spec.mu
        seeds = []
        for x in ((mu, mu - lam, lam - 2 * mu, Q(0)),
                  (mu, lam - 2 * mu, mu - lam, Q(0))):
            x = rat.vector(x)
            tight = [a for a, c in P.constraints if dot(a, x) == c]
            _verify_vertex(P, x, tight)
            seeds.append(x)
        return tuple(seeds)

    if rs.name == "E8":
        b_matrix, _, _ = e8_paper_data()
        cols = rat.columns(b_matrix)
        x = rat.vec_scale(spec.lam / 2, rat.vec_add(cols[1], cols[2]))
    else:
        thetas = theta_roots(rs)
        system = rat.matrix(thetas)
        rhs = tuple(spec.rhs(t) for t in thetas)
        if rs.ambient_dim == rs.rank:
            x = rat.solve_linear(system, rhs)
        else:
            # Solve inside the span: x = sum y_j b_j.
            reduced = rat.matrix([[dot(t, b) for b in rs.basis] for t in thetas])
            y = rat.solve_linear(reduced, rhs)
            x = poly.ambient_point(rs, y)
    tight = [a for a, c in P.constraints if dot(a, x) == c]
    _verify_vertex(P, x, tight)
    return (x,)


def coxeter_orbit(rs: RootSystem, points) -> tuple[Vector, ...]:
    """Union of the orbits of the points under powers of the Coxeter element,
    deduplicated and sorted."""
    omega = coxeter_element(rs)
    h = coxeter_number(rs)
    out = set()
    for p in points:
        v = rat.vector(p)
        for _ in range(h):
            out.add(v)
            v = rat.mat_vec(omega, v)
    return tuple(sorted(out))


@lru_cache(maxsize=64)
def symmetric_generators(spec: SymmetricSpec) -> tuple[Vector, ...]:
    """The theorem's generating set: the Coxeter orbit of the seed.

    Verified generating by LP over every root.  Cardinality is the Coxeter
    number except in the outer F4 regime (at most 24 there).  Cached: the
    LP verification over large systems is the expensive step."""
    rs = spec.rs
    P = symmetric_alcoved(spec)
    seeds = seed_vertex(spec)
    orbit = coxeter_orbit(rs, seeds)
    ok, witness = is_generating_set(P, orbit)
    if not ok:
        raise VerificationError(f"orbit misses the support hyperplane of {witness}")
    h = coxeter_number(rs)
    if rs.family == "F" and f4_case(spec.lam, spec.mu) == 2:
        if len(orbit) > 2 * h:
            raise VerificationError(f"orbit size {len(orbit)} exceeds 2h")
    elif len(orbit) != h:
        raise VerificationError(f"orbit size {len(orbit)} != Coxeter number {h}")
    return orbit


def generators_certificate(spec: SymmetricSpec) -> dict:
    seeds = seed_vertex(spec)
    orbit = symmetric_generators(spec)
    return {
        "type": spec.rs.family,
        "rank": spec.rs.rank,
        "lambda": rat.format_q(spec.lam),
        "mu": None if spec.mu is None else rat.format_q(spec.mu),
        "seed_points": [[rat.format_q(v) for v in p] for p in seeds],
        "orbit_points": [[rat.format_q(v) for v in p] for p in orbit],
        "verified": True,
    }


# -- A_n ------------------------------------------------------------------------

def _c_lookup(c, n: int):
    if isinstance(c, dict):
        return lambda i, j: rat.q(c[(i, j)])
    return lambda i, j: rat.q(c[i][j])


def an_support_closure(c, n: int) -> dict[tuple[int, int], Q]:
    """Exact support values of the system x_i - x_j <= c_ij.

    The support value of x_i - x_j is the shortest-path distance from i to j
    in the complete digraph weighted by c (the LP dual of the difference
    system), computed by Floyd-Warshall over exact rationals.  A negative
    cycle means the system is infeasible.
    """
    look = _c_lookup(c, n)
    dim = n + 1
    dist = [[Q(0) if i == j else look(i, j) for j in range(dim)] for i in range(dim)]
    for k in range(dim):
        dk = dist[k]
        for i in range(dim):
            dik = dist[i][k]
            row = dist[i]
            for j in range(dim):
                alt = dik + dk[j]
                if alt < row[j]:
                    row[j] = alt
    for i in range(dim):
        if dist[i][i] < 0:
            raise EmptyPolytopeError("difference system has a negative cycle")
    return {(i, j): dist[i][j] for i in range(dim) for j in range(dim) if i != j}


def an_generators(c, n: int, tighten: bool = True) -> tuple[Vector, ...]:
    """The n+1 corner generators of an A_n polytope given by x_i - x_j <= c_ij.

    c maps ordered index pairs over 0..n to right-hand sides (dict keyed by
    (i, j) or a nested list with ignored diagonal).  With tighten=True the
    right-hand sides are first replaced by the polytope's exact support
    values, making the construction total on feasible input; with
    tighten=False, input violating the triangle bounds c_ik <= c_ij + c_jk
    is rejected.  Points are returned as representatives in R^{n+1} with
    coordinate k equal to 0 in the k-th point.
    """
    look = _c_lookup(c, n)
    rs = build_root_system("A", n)
    dim = n + 1

    def root(i, j):
        e = [Q(0)] * dim
        e[i], e[j] = Q(1), Q(-1)
        return tuple(e)

    pairs = [(i, j) for i in range(dim) for j in range(dim) if i != j]
    if tighten:
        cvals = an_support_closure(c, n)  # raises EmptyPolytopeError
    else:
        cvals = {(i, j): look(i, j) for i, j in pairs}
        for i, j in pairs:
            for k in range(dim):
                if k != i and k != j and cvals[i, k] - cvals[j, k] > cvals[i, j]:
                    raise ValueError(
                        f"triangle condition fails at ({i},{j},{k}); "
                        f"tighten the right-hand sides first")
    P = make_alcoved(rs, [(root(i, j), cvals[i, j]) for i, j in pairs],
                     validate=False)

    points = []
    for k in range(dim):
        p = tuple(Q(0) if l == k else cvals[l, k] for l in range(dim))
        points.append(p)
    # Verification: all inside, and every support value is attained.
    for p in points:
        norm = poly.normalize_point(rs, p)
        if not P.contains(norm):
            raise VerificationError(f"corner point {p} fell outside the polytope")
    for i, j in pairs:
        attained = max(dot(root(i, j), poly.normalize_point(rs, p)) for p in points)
        if attained != cvals[i, j]:
            raise VerificationError(f"support of x_{i}-x_{j} not attained")
    return tuple(points)


# -- rank 2 ----------------------------------------------------------------------

def _angle_sorted(rs: RootSystem) -> list[Vector]:
    """Roots in cyclic order in the plane of the system."""
    reduced = {a: (dot(a, rs.basis[0]), dot(a, rs.basis[1])) for a in rs.roots}
    # Coordinates relative to a plane basis keep the cyclic order of angles
    # (possibly reflected), which is all consecutiveness needs.
    gram = _plane_coords(rs)
    pts = {a: gram[a] for a in rs.roots}

    def half(u):
        return 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1

    def cmp(a, b):
        ua, ub = pts[a], pts[b]
        ha, hb = half(ua), half(ub)
        if ha != hb:
            return -1 if ha < hb else 1
        cross = ua[0] * ub[1] - ua[1] * ub[0]
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(rs.roots, key=cmp_to_key(cmp))


def _plane_coords(rs: RootSystem) -> dict[Vector, tuple[Q, Q]]:
    b1, b2 = rs.basis
    # Gram-Schmidt inside the span: u2 = b2 - proj_{b1} b2 (rational).
    u2 = rat.vec_sub(b2, rat.vec_scale(dot(b1, b2) / dot(b1, b1), b1))
    return {a: (dot(a, b1), dot(a, u2)) for a in rs.roots}


def rank2_generators(P: HPolytope) -> tuple[Vector, ...]:
    """One vertex per disjoint consecutive root pair in cyclic angle order,
    so at most half as many points as roots; always a generating set
    (symmetry not required)."""
    rs = P.rs
    if rs.rank != 2:
        raise ValueError(f"{rs.name} is not a rank-2 system")
    order = _angle_sorted(rs)
    sups = {a: support_value(P, a) for a in rs.roots}
    points = set()
    m = len(order)
    for i in range(0, m, 2):
        a, b = order[i], order[i + 1]
        reduced = rat.matrix([[dot(r, be) for be in rs.basis] for r in (a, b)])
        rhs = (sups[a], sups[b])
        y = rat.solve_linear(reduced, rhs)
        x = poly.ambient_point(rs, y)
        if not P.contains(x):
            raise VerificationError(
                f"consecutive supports of {a} and {b} meet outside the polytope")
        points.add(x)
    out = tuple(sorted(points))
    ok, witness = is_generating_set(P, out)
    if not ok:
        raise VerificationError(f"rank-2 construction misses {witness}")
    return out


# -- F4 duality --------------------------------------------------------------------

F4_DUALITY_MATRIX = tuple(
    tuple(Q(v, 2) for v in row)
    for row in ((1, 1, 0, 0), (1, -1, 0, 0), (0, 0, 1, 1), (0, 0, 1, -1)))


def f4_symmetric_parameters(P: HPolytope) -> tuple[Q, Q]:
    """(lambda, mu) of a symmetric F4 polytope; ValueError if P is not one."""
    if P.rs.family != "F":
        raise ValueError("not an F4 polytope")
    lams = {c for a, c in P.constraints if P.rs.is_long(a)}
    mus = {c for a, c in P.constraints if not P.rs.is_long(a)}
    if len(lams) != 1 or len(mus) != 1 or len(P.constraints) != 48:
        raise ValueError("not a symmetric F4 polytope")
    return lams.pop(), mus.pop()


def f4_duality(P: HPolytope) -> HPolytope:
    """Image of a symmetric F4 polytope under the inverse-transpose of the
    long/short swapping map; equals the symmetric polytope with parameters
    (2 mu, lambda), verified constraint by constraint."""
    lam, mu = f4_symmetric_parameters(P)
    rs = P.rs
    mapped = {}
    for a, c in P.constraints:
        na = rat.mat_vec(F4_DUALITY_MATRIX, a)
        if rs.is_root(na):
            mapped[na] = c
        else:
            na2 = rat.vec_scale(Q(2), na)
            if not rs.is_root(na2):
                raise VerificationError(f"image normal {na} is not a root or half-root")
            mapped[na2] = 2 * c
    expected = symmetric_alcoved(SymmetricSpec(rs, 2 * mu, lam))
    if mapped != dict(expected.constraints):
        raise VerificationError("dual constraint set disagrees with P_{2mu,lambda}")
    return expected


# -- E8 incidence certificate --------------------------------------------------------

def e8_incidence_failures(x: Vector, lam: Q) -> list[tuple[int, int]]:
    """The (power, theta index) pairs from the published list whose root
    hyperplane misses x.  Empty exactly when x touches all listed planes."""
    rs = build_root_system("E", 8)
    omega = coxeter_element(rs)
    thetas = theta_roots(rs)
    failures = []
    for k, i in E8_INCIDENCE_PAIRS:
        r = thetas[i - 1]
        for _ in range(k):
            r = rat.mat_vec(omega, r)
        if dot(r, x) != lam:
            failures.append((k, i))
    return failures


def verify_e8_incidences() -> bool:
    """Check the published E8 seed incidences: the seed lies on all 14 listed
    root hyperplanes and touches every Coxeter orbit of the roots."""
    rs = build_root_system("E", 8)
    b_matrix, _, _ = e8_paper_data()
    cols = rat.columns(b_matrix)
    x = rat.vec_scale(Q(1, 2), rat.vec_add(cols[1], cols[2]))
    failures = e8_incidence_failures(x, Q(1))
    if failures:
        raise VerificationError(f"incidences fail at (power, theta) pairs {failures}")
    omega = coxeter_element(rs)
    h = coxeter_number(rs)
    for i, theta in enumerate(theta_roots(rs), start=1):
        r = theta
        touched = False
        for _ in range(h):
            if dot(r, x) == 1:
                touched = True
                break
            r = rat.mat_vec(omega, r)
        if not touched:
            raise VerificationError(f"seed misses every hyperplane in orbit {i}")
    return True
