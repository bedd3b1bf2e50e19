"""The compiled and pure double-description kernels must agree bit for bit."""

import random
from fractions import Fraction as Q

import pytest

from alcove import linprog
from alcove._kernel import available_kernels
from alcove.constructions import SymmetricSpec, symmetric_alcoved
from alcove.errors import ResourceLimitError
from alcove.polytopes import _integerize, _reduced_rows
from alcove.rootsystems import build_root_system

KERNELS = dict(available_kernels())
HAVE_COMPILED = "compiled" in KERNELS


def _kernel_inputs(P):
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
        hi = linprog.lp_value(srows, srhs, tuple(e))
        e[j] = Q(-1)
        lo = -linprog.lp_value(srows, srhs, tuple(e))
        lower.append((lo.numerator, lo.denominator))
        upper.append((hi.numerator, hi.denominator))
    return int_rows, int_rhs, lower, upper


CASES = [SymmetricSpec(build_root_system("B", 2), 3, 2),
         SymmetricSpec(build_root_system("B", 4), 5, 3),
         SymmetricSpec(build_root_system("F", 4), 7, 5),
         SymmetricSpec(build_root_system("F", 4), 7, 4),
         SymmetricSpec(build_root_system("D", 4), 1)]


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
@pytest.mark.parametrize("spec", CASES, ids=lambda s: s.rs.name + str(s.lam))
def test_kernels_identical_on_polytopes(spec):
    args = _kernel_inputs(symmetric_alcoved(spec))
    out_py = KERNELS["python"](*args, 10 ** 6)
    out_c = KERNELS["compiled"](*args, 10 ** 6)
    assert out_py == out_c


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")
def test_kernels_identical_on_random_boxes():
    rng = random.Random(99)
    for _ in range(30):
        d = rng.randint(1, 3)
        m = rng.randint(1, 8)
        rows = [tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(m)]
        rhs = [rng.randint(-1, 6) for _ in range(m)]
        lower = [(rng.randint(-4, 0), 1) for _ in range(d)]
        upper = [(rng.randint(0, 4), 1) for _ in range(d)]
        out_py = KERNELS["python"](rows, rhs, lower, upper, 10 ** 5)
        out_c = KERNELS["compiled"](rows, rhs, lower, upper, 10 ** 5)
        assert out_py == out_c


def test_ray_cap_raises():
    spec = SymmetricSpec(build_root_system("F", 4), 7, 5)
    args = _kernel_inputs(symmetric_alcoved(spec))
    for impl in KERNELS.values():
        with pytest.raises(ResourceLimitError):
            impl(*args, 10)


def test_high_bit_masks_survive():
    # more than 64 constraint ids forces masks beyond machine-word width
    d = 2
    rows = [(1, 0)] * 70 + [(0, 1)]
    rhs = [5] * 70 + [5]
    lower = [(0, 1), (0, 1)]
    upper = [(5, 1), (5, 1)]
    for name, impl in KERNELS.items():
        out = impl(rows, rhs, lower, upper, 10 ** 4)
        corner = [(v, den, m) for v, den, m in out if v == (5, 5)]
        assert len(corner) == 1, name
        _, _, mask = corner[0]
        assert mask == (1 << 71) - 1, name
