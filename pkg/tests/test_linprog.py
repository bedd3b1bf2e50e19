import random
from fractions import Fraction as Q
from itertools import combinations

import pytest

from alcove import rational as rat
from alcove.errors import EmptyPolytopeError, UnboundedPolytopeError
from alcove.linprog import feasible_point, lp_solve, lp_value


def test_box_max():
    rows = [(Q(1), Q(0)), (Q(-1), Q(0)), (Q(0), Q(1)), (Q(0), Q(-1))]
    rhs = [Q(1), Q(0), Q(1), Q(0)]
    value, x = lp_solve(rows, rhs, (Q(1), Q(1)))
    assert value == 2 and x == (Q(1), Q(1))
    assert lp_value(rows, rhs, (Q(1), Q(1))) == 2


def test_infeasible():
    with pytest.raises(EmptyPolytopeError):
        lp_solve([(Q(1),), (Q(-1),)], [Q(-2), Q(-2)], (Q(0),))
    with pytest.raises(EmptyPolytopeError):
        lp_value([(Q(1),), (Q(-1),)], [Q(-2), Q(-2)], (Q(1),))


def test_unbounded():
    with pytest.raises(UnboundedPolytopeError):
        lp_solve([(Q(1), Q(0))], [Q(5)], (Q(0), Q(1)))
    with pytest.raises(UnboundedPolytopeError):
        lp_value([(Q(1), Q(0))], [Q(5)], (Q(0), Q(1)))


def test_negative_rhs():
    value, x = lp_solve([(Q(1),), (Q(-1),)], [Q(-3), Q(5)], (Q(1),))
    assert value == -3 and x == (Q(-3),)


def test_degenerate_vertex():
    rows = [(Q(1), Q(1)), (Q(1), Q(-1)), (Q(1), Q(0)),
            (Q(-1), Q(0)), (Q(0), Q(-1)), (Q(0), Q(1))]
    rhs = [Q(1)] * 6
    value, x = lp_solve(rows, rhs, (Q(1), Q(0)))
    assert value == 1 and x == (Q(1), Q(0))


def test_feasible_point_on_equality_like_band():
    x = feasible_point([(Q(1), Q(2)), (Q(-1), Q(-2))], [Q(4), Q(-4)], 2)
    assert x[0] + 2 * x[1] == 4


def _brute_max(rows, rhs, obj, n):
    best = None
    for idx in combinations(range(len(rows)), n):
        sub = rat.matrix([rows[i] for i in idx])
        try:
            x = rat.solve_linear(sub, tuple(rhs[i] for i in idx))
        except Exception:
            continue
        if all(rat.dot(rows[i], x) <= rhs[i] for i in range(len(rows))):
            v = rat.dot(obj, x)
            if best is None or v > best:
                best = v
    return best


def test_random_agreement_with_vertex_enumeration():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(1, 3)
        rows, rhs = [], []
        for j in range(n):  # a bounding box keeps everything finite
            e = [Q(0)] * n
            e[j] = Q(1)
            rows.append(tuple(e))
            rhs.append(Q(rng.randint(0, 6)))
            e2 = [Q(0)] * n
            e2[j] = Q(-1)
            rows.append(tuple(e2))
            rhs.append(Q(rng.randint(0, 6)))
        for _ in range(rng.randint(0, 4)):
            rows.append(tuple(Q(rng.randint(-3, 3)) for _ in range(n)))
            rhs.append(Q(rng.randint(-2, 9)))
        obj = tuple(Q(rng.randint(-4, 4)) for _ in range(n))
        try:
            v1, x = lp_solve(rows, rhs, obj)
        except EmptyPolytopeError:
            assert _brute_max(rows, rhs, obj, n) is None
            continue
        assert all(rat.dot(r, x) <= b for r, b in zip(rows, rhs))
        assert rat.dot(obj, x) == v1
        assert lp_value(rows, rhs, obj) == v1
        brute = _brute_max(rows, rhs, obj, n)
        assert brute == v1


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        lp_solve([(Q(1), Q(2))], [Q(1)], (Q(1),))
