"""Exact rational linear programming by the two-phase simplex method.

Everything runs over Fraction arithmetic with Bland's rule, which guarantees
termination on the heavily degenerate systems alcoved polytopes produce.

Two entry points:

  lp_solve  -- max c.x over {A x <= b}, primal form, returns an optimal point
  lp_value  -- the same optimum via the dual (min b.y, A^T y = c, y >= 0),
               value only; much faster when A has many rows and few columns
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Sequence

from .errors import EmptyPolytopeError, UnboundedPolytopeError
from .rational import Vector

_OPTIMAL = 0
_UNBOUNDED = 1


def _pivot(tableau: list[list[Q]], basis: list[int], nrows: int, row: int, col: int) -> None:
    inv = 1 / tableau[row][col]
    tableau[row] = [v * inv for v in tableau[row]]
    prow = tableau[row]
    for r in range(nrows):
        if r != row and tableau[r][col] != 0:
            f = tableau[r][col]
            tableau[r] = [v - f * w for v, w in zip(tableau[r], prow)]
    basis[row] = col


def _bland_min(tableau: list[list[Q]], basis: list[int], ncols: int) -> int:
    """Run minimization with the objective in the last row, over columns < ncols."""
    m = len(tableau) - 1
    while True:
        obj = tableau[m]
        col = next((j for j in range(ncols) if obj[j] < 0), None)
        if col is None:
            return _OPTIMAL
        row = None
        best = None
        for r in range(m):
            a = tableau[r][col]
            if a > 0:
                ratio = tableau[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[row]):
                    best, row = ratio, r
        if row is None:
            return _UNBOUNDED
        _pivot(tableau, basis, len(tableau), row, col)


def standard_min(eq_rows: Sequence[Sequence[Q]], eq_rhs: Sequence[Q],
                 costs: Sequence[Q]) -> tuple[Q, tuple[Q, ...]]:
    """Minimize costs.y subject to eq_rows y = eq_rhs, y >= 0.

    Raises EmptyPolytopeError when infeasible, UnboundedPolytopeError when
    the cost is unbounded below.
    """
    m = len(eq_rows)
    n = len(costs)
    total = n + m  # artificials appended
    tableau: list[list[Q]] = []
    for i in range(m):
        sign = -1 if eq_rhs[i] < 0 else 1
        line = [sign * Q(v) for v in eq_rows[i]] + [Q(0)] * m + [sign * Q(eq_rhs[i])]
        line[n + i] = Q(1)
        tableau.append(line)
    basis = [n + i for i in range(m)]

    phase1 = [Q(0)] * n + [Q(1)] * m + [Q(0)]
    tableau.append(phase1)
    for i in range(m):
        tableau[m] = [v - w for v, w in zip(tableau[m], tableau[i])]
    _bland_min(tableau, basis, total)
    if tableau[m][-1] != 0:
        raise EmptyPolytopeError("equality system has no nonnegative solution")
    tableau.pop()
    for r in range(m):
        if basis[r] >= n:  # drive artificials out where possible
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is not None:
                _pivot(tableau, basis, m, r, col)

    phase2 = [Q(c) for c in costs] + [Q(0)] * m + [Q(0)]
    tableau.append(phase2)
    for r in range(m):
        j = basis[r]
        if j < n and tableau[m][j] != 0:
            f = tableau[m][j]
            tableau[m] = [v - f * w for v, w in zip(tableau[m], tableau[r])]
    if _bland_min(tableau, basis, n) == _UNBOUNDED:
        raise UnboundedPolytopeError("cost unbounded below")

    y = [Q(0)] * n
    for r in range(m):
        if basis[r] < n:
            y[basis[r]] = tableau[r][-1]
    return -tableau[m][-1], tuple(y)


def lp_solve(rows: Sequence[Sequence[Q]], rhs: Sequence[Q],
             objective: Sequence[Q]) -> tuple[Q, Vector]:
    """Maximize objective.x over {x : rows[i].x <= rhs[i]}, x free.

    Returns (optimal value, an optimal point)."""
    m = len(rows)
    n = len(objective)
    if any(len(r) != n for r in rows) or len(rhs) != m:
        raise ValueError("dimension mismatch")
    # y = (u, w, slacks), x = u - w
    eq_rows = []
    for i in range(m):
        line = [Q(v) for v in rows[i]] + [-Q(v) for v in rows[i]] + [Q(0)] * m
        line[2 * n + i] = Q(1)
        eq_rows.append(line)
    costs = [-Q(c) for c in objective] + [Q(c) for c in objective] + [Q(0)] * m
    try:
        value, y = standard_min(eq_rows, rhs, costs)
    except UnboundedPolytopeError:
        raise UnboundedPolytopeError("objective is unbounded over the region") from None
    point = tuple(y[j] - y[n + j] for j in range(n))
    return -value, point


def lp_value(rows: Sequence[Sequence[Q]], rhs: Sequence[Q],
             objective: Sequence[Q]) -> Q:
    """Optimal value of lp_solve, computed through the dual program."""
    m = len(rows)
    n = len(objective)
    if any(len(r) != n for r in rows) or len(rhs) != m:
        raise ValueError("dimension mismatch")
    eq_rows = [[Q(rows[i][j]) for i in range(m)] for j in range(n)]
    try:
        value, _ = standard_min(eq_rows, objective, rhs)
    except EmptyPolytopeError:
        raise UnboundedPolytopeError("objective is unbounded over the region") from None
    except UnboundedPolytopeError:
        raise EmptyPolytopeError("constraint system is infeasible") from None
    return value


def feasible_point(rows: Sequence[Sequence[Q]], rhs: Sequence[Q], dim: int) -> Vector:
    """A point satisfying rows[i].x <= rhs[i], or EmptyPolytopeError."""
    _, point = lp_solve(rows, rhs, (Q(0),) * dim)
    return point
