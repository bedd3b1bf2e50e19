"""Pin the E6/E7 sub-basis columns and basis ordering inside E8.

The ordering must satisfy, with s_i the simple reflections in that order:
  (a) for i >= 3 and all j >= i:  s_j o ... o s_{i+1}(b_i) = b_i + ... + b_j
  (b) theta_i equals the sum of basis elements on the Dynkin-tree geodesic
      from b_i to b_n, for every i
  (c) the Coxeter orbits of the theta roots partition the root system.

Among all valid (columns, ordering) pairs we record the lexicographically
smallest, written to src/alcove/data/e67_numbering.json.
"""

from __future__ import annotations

import json
import sys
from itertools import combinations, permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from alcove import rational as rat
from alcove.rootsystems import (RootSystem, _e8_roots, dynkin_adjacency,
                                e8_paper_data, reflect, tree_geodesic)


def induced_adjacency(cols, nodes):
    adj = {i: set() for i in nodes}
    for i in nodes:
        for j in nodes:
            if i < j and rat.dot(cols[i], cols[j]) != 0:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def is_tree_with_arms(adj, arms):
    nodes = list(adj)
    edges = sum(len(v) for v in adj.values()) // 2
    if edges != len(nodes) - 1:
        return False
    branch = [v for v in nodes if len(adj[v]) == 3]
    if len(branch) != 1:
        return False
    b = branch[0]
    found = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        found.append(length)
    return sorted(found) == sorted(arms)


def ordering_valid(basis, roots_set):
    n = len(basis)

    def s(idx, v):
        return reflect(basis[idx], v)

    # (a) running-sum claim for i >= 3 (1-based), i.e. index >= 2 here
    for i in range(2, n):
        v = basis[i]
        total = list(basis[i])
        for j in range(i + 1, n):
            v = s(j, v)
            total = rat.vec_add(tuple(total), basis[j])
            if v != tuple(total):
                return False

    thetas = []
    for i in range(n):
        v = basis[i]
        for j in range(i + 1, n):
            v = s(j, v)
        if v not in roots_set:
            return False
        thetas.append(v)

    # (b) geodesic-sum form of every theta
    adj = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rat.dot(basis[i], basis[j]) != 0:
                adj[i].add(j)
                adj[j].add(i)
    for i in range(n):
        path = tree_geodesic(adj, i, n - 1)
        total = None
        for p in path:
            total = basis[p] if total is None else rat.vec_add(total, basis[p])
        if thetas[i] != total:
            return False

    # (c) orbit partition under the Coxeter element
    omega = rat.identity(8)
    for b in basis:
        refl = rat.mat_from_columns([reflect(b, rat.vector([1 if k == j else 0 for k in range(8)]))
                                     for j in range(8)])
        omega = rat.mat_mul(omega, refl)
    h = len(roots_set) // n
    seen = set()
    for theta in thetas:
        v = theta
        orbit = set()
        for _ in range(h):
            orbit.add(v)
            v = rat.mat_vec(omega, v)
        if v != theta or len(orbit) != h or (seen & orbit):
            return False
        seen |= orbit
    return seen == roots_set


def main():
    b_matrix, _, _ = e8_paper_data()
    cols = rat.columns(b_matrix)
    e8_adj = induced_adjacency(cols, range(8))
    all_roots = set(_e8_roots())

    out = {}
    for rank, arms in ((6, [1, 2, 2]), (7, [1, 2, 3])):
        results = []
        for subset in combinations(range(8), rank):
            adj = induced_adjacency(cols, subset)
            if not is_tree_with_arms(adj, arms):
                continue
            span = [cols[i] for i in subset]
            roots = {r for r in all_roots if rat.rank(list(span)) == rat.rank(list(span) + [list(r)])}
            for order in permutations(subset):
                basis = [cols[i] for i in order]
                if ordering_valid(basis, roots):
                    results.append((subset, order))
        results.sort()
        subset, order = results[0]
        print(f"E{rank}: {len(results)} valid orderings; recording columns={subset} order={order}")
        out[f"E{rank}"] = {"columns": list(subset), "order": list(order)}

    path = Path(__file__).resolve().parents[1] / "src" / "alcove" / "data" / "e67_numbering.json"
    path.write_text(json.dumps(out, indent=2) + "\n")
    print("wrote", path)


if __name__ == "__main__":
    main()
