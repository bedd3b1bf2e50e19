"""Min-plus tropical convexity for type A.

Points are classes modulo the all-ones line, represented with first
coordinate zero.  Combination is componentwise min of shifted
representatives; hull membership uses the canonical-scalar criterion, which
the test suite validates against an exhaustive oracle before anything else
relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

from . import polytopes as poly, rational as rat
from .rational import Vector, dot
from .rootsystems import build_root_system


def trop_normalize(x) -> Vector:
    """Canonical representative: subtract the first coordinate everywhere."""
    x = rat.vector(x)
    if not x:
        raise ValueError("empty point")
    return tuple(v - x[0] for v in x)


def trop_combine(mu, x: Sequence, nu, y: Sequence) -> Vector:
    """(mu + x) min (nu + y), componentwise, renormalized."""
    mu, nu = rat.q(mu), rat.q(nu)
    x, y = rat.vector(x), rat.vector(y)
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return trop_normalize(tuple(min(mu + a, nu + b) for a, b in zip(x, y)))


def trop_hull_contains(generators: Sequence[Sequence], x) -> bool:
    """Membership of x in the tropical hull of the generators.

    Uses the largest shifts that keep each generator above x: x is in the
    hull iff those canonical shifts reproduce it.
    """
    if not generators:
        raise ValueError("need at least one generator")
    gens = [trop_normalize(v) for v in generators]
    x = trop_normalize(x)
    if any(len(v) != len(x) for v in gens):
        raise ValueError("dimension mismatch")
    combo = None
    for v in gens:
        lam = max(xv - vv for xv, vv in zip(x, v))
        shifted = tuple(lam + vv for vv in v)
        combo = shifted if combo is None else tuple(map(min, combo, shifted))
    return combo == x


@dataclass(frozen=True)
class HullComparison:
    """Alcoved hull versus tropical hull of the same generators."""

    equal: bool
    outside_vertices: tuple[Vector, ...]  # alcoved-hull vertices not in the tropical hull
    alcoved: poly.HPolytope


def trop_hull_vs_alcoved(generators: Sequence[Sequence]) -> HullComparison:
    """Which vertices of the alcoved hull escape the tropical hull.

    The tropical hull is always contained in the alcoved hull; equality
    fails exactly when some alcoved vertex is not tropically reachable.
    """
    if not generators:
        raise ValueError("need at least one generator")
    gens = [trop_normalize(v) for v in generators]
    n = len(gens[0]) - 1
    rs = build_root_system("A", n)
    hull = poly.alcoved_hull(gens, rs)
    outside = []
    for v in poly.vertices(hull).vertices:
        if not trop_hull_contains(gens, v):
            outside.append(trop_normalize(v))
    return HullComparison(not outside, tuple(outside), hull)


def sumzero_to_first0(x) -> Vector:
    return trop_normalize(x)


def first0_to_sumzero(x) -> Vector:
    x = rat.vector(x)
    mean = sum(x) / len(x)
    return tuple(v - mean for v in x)
