"""Minimum generating sets as exact binary set cover.

Universe: the support hyperplanes of every root of the system.  Candidates:
the polytope's vertices.  A generating set must hit every support
hyperplane, so minimum generating sets are exactly minimum covers of this
instance (restricting candidates to vertices loses nothing: any generator
interior to a face can be slid to a vertex of that face).

The solver is a depth-first branch and bound over bitmasks: branch on the
uncovered hyperplane with the fewest remaining covering vertices, bound with
combinatorial lower bounds, prune with an exact-state memo.  Everything is
deterministic: ties break toward lower ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceLimitError
from .polytopes import HPolytope, incidence

MAX_UNBUDGETED_CANDIDATES = 512


@dataclass(frozen=True)
class CoverInstance:
    """Bitmask form of the covering problem.

    universe_labels[i] names hyperplane i (root index); candidate_labels[j]
    names candidate j (vertex index).  candidate_masks[j] has bit i set when
    candidate j lies on hyperplane i.
    """

    n_universe: int
    candidate_masks: tuple[int, ...]
    universe_labels: tuple[int, ...]
    candidate_labels: tuple[int, ...]

    def coverers_of(self, hyp: int) -> tuple[int, ...]:
        return tuple(j for j, m in enumerate(self.candidate_masks) if m >> hyp & 1)


@dataclass(frozen=True)
class CoverSolution:
    chosen: tuple[int, ...]
    size: int
    optimal: bool
    lower_bound: int

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "chosen_vertex_indices": list(self.chosen),
            "optimal": self.optimal,
            "lower_bound": self.lower_bound,
        }


def build_cover_instance(P: HPolytope) -> CoverInstance:
    """Covering instance of a polytope: every root's support hyperplane must
    be hit by a chosen vertex."""
    inc = incidence(P)
    n_univ = len(P.rs.roots)
    masks = tuple(inc.vertex_support)
    if any(v.bit_count() == 0 for v in masks):
        raise AssertionError("vertex with empty support set")
    covered = 0
    for m in masks:
        covered |= m
    if covered != (1 << n_univ) - 1:
        raise AssertionError("some support hyperplane misses every vertex")
    return CoverInstance(n_univ, masks, tuple(range(n_univ)), tuple(range(len(masks))))


def greedy_cover(inst: CoverInstance) -> CoverSolution:
    """Iterative max-coverage; ties break to the lowest candidate id."""
    full = (1 << inst.n_universe) - 1
    covered = 0
    chosen: list[int] = []
    while covered != full:
        best_j = -1
        best_gain = 0
        for j, m in enumerate(inst.candidate_masks):
            gain = (m & ~covered).bit_count()
            if gain > best_gain:
                best_gain, best_j = gain, j
        if best_j < 0:
            raise AssertionError("universe not coverable")
        chosen.append(best_j)
        covered |= inst.candidate_masks[best_j]
    return CoverSolution(tuple(sorted(chosen)), len(chosen), False,
                         cover_lower_bound(inst))


def _coverer_masks(inst: CoverInstance) -> list[int]:
    """Per hyperplane, bitmask over candidates covering it."""
    cov = [0] * inst.n_universe
    for j, m in enumerate(inst.candidate_masks):
        mm = m
        while mm:
            low = mm & -mm
            cov[low.bit_length() - 1] |= 1 << j
            mm ^= low
    return cov


def _bound(uncovered: int, masks: tuple[int, ...], coverers: list[int]) -> int:
    """Max of the density bound and a greedy candidate-disjoint family."""
    if uncovered == 0:
        return 0
    max_gain = 0
    for m in masks:
        g = (m & uncovered).bit_count()
        if g > max_gain:
            max_gain = g
    u = uncovered.bit_count()
    density = -(-u // max_gain)

    hyps = []
    mm = uncovered
    while mm:
        low = mm & -mm
        h = low.bit_length() - 1
        hyps.append((coverers[h].bit_count(), h))
        mm ^= low
    hyps.sort()
    used = 0
    family = 0
    for _, h in hyps:
        if coverers[h] & used == 0:
            family += 1
            used |= coverers[h]
    return max(density, family)


def cover_lower_bound(inst: CoverInstance) -> int:
    """Provable lower bound on any cover of the full universe."""
    return _bound((1 << inst.n_universe) - 1, inst.candidate_masks,
                  _coverer_masks(inst))


def min_cover(inst: CoverInstance, budget_cap: int | None = None) -> CoverSolution:
    """Provably minimum cover by branch and bound.

    budget_cap limits explored nodes; exceeding it returns the incumbent
    flagged non-optimal.  Instances with more than 512 candidates must pass
    an explicit cap so runs stay bounded.
    """
    ncand = len(inst.candidate_masks)
    if budget_cap is None and ncand > MAX_UNBUDGETED_CANDIDATES:
        raise ResourceLimitError(
            f"{ncand} candidates: pass an explicit budget_cap above "
            f"{MAX_UNBUDGETED_CANDIDATES}")

    full = (1 << inst.n_universe) - 1
    masks = inst.candidate_masks
    coverers = _coverer_masks(inst)
    root_lb = _bound(full, masks, coverers)

    incumbent = greedy_cover(inst)
    best_size = incumbent.size
    best_chosen = list(incumbent.chosen)
    if best_size == root_lb:
        return CoverSolution(tuple(sorted(best_chosen)), best_size, True, root_lb)

    nodes = 0
    capped = False
    failed: dict[int, int] = {}  # covered mask -> largest budget proven useless

    def dfs(covered: int, chosen: list[int]) -> None:
        nonlocal best_size, best_chosen, nodes, capped
        if capped:
            return
        nodes += 1
        if budget_cap is not None and nodes > budget_cap:
            capped = True
            return
        uncovered = full & ~covered
        if uncovered == 0:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_chosen = list(chosen)
            return
        budget = best_size - 1 - len(chosen)  # how many more we may add
        if budget <= 0:
            return
        if failed.get(covered, -1) >= budget:
            return
        if _bound(uncovered, masks, coverers) > budget:
            failed[covered] = budget
            return
        # branch on the least-covered uncovered hyperplane
        pick_h = -1
        pick_n = None
        mm = uncovered
        while mm:
            low = mm & -mm
            h = low.bit_length() - 1
            nh = coverers[h].bit_count()
            if pick_n is None or nh < pick_n:
                pick_n, pick_h = nh, h
            mm ^= low
        cands = []
        cm = coverers[pick_h]
        while cm:
            low = cm & -cm
            j = low.bit_length() - 1
            cands.append((-(masks[j] & uncovered).bit_count(), j))
            cm ^= low
        cands.sort()
        before = best_size
        for _, j in cands:
            chosen.append(j)
            dfs(covered | masks[j], chosen)
            chosen.pop()
            if capped:
                return
        if best_size == before:
            failed[covered] = budget

    dfs(0, [])
    return CoverSolution(tuple(sorted(best_chosen)), best_size,
                         not capped, root_lb)


def brute_force_min_cover(inst: CoverInstance) -> CoverSolution:
    """Exhaustive search over subsets in size order; oracle for small instances."""
    full = (1 << inst.n_universe) - 1
    ncand = len(inst.candidate_masks)
    for size in range(0, ncand + 1):
        for combo in combinations(range(ncand), size):
            covered = 0
            for j in combo:
                covered |= inst.candidate_masks[j]
            if covered == full:
                return CoverSolution(tuple(combo), size, True,
                                     cover_lower_bound(inst))
    raise AssertionError("universe not coverable")
