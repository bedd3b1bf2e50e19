"""Exact rational scalars, vectors, and matrices.

Scalars are ``fractions.Fraction`` (always lowest terms, positive
denominator), vectors are tuples of fractions, matrices are tuples of row
tuples.  Everything is immutable and all operations are pure, so values can
be shared freely across threads.  No floating point enters anywhere.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Sequence

from .errors import NoFiniteOrderError, SingularMatrixError

Vector = tuple[Q, ...]
Matrix = tuple[Vector, ...]


def q(value) -> Q:
    """Coerce ints, strings like ``"3/4"``, or fractions to an exact rational."""
    if isinstance(value, Q):
        return value
    if isinstance(value, int):
        return Q(value)
    if isinstance(value, str):
        return Q(value)
    raise TypeError(f"cannot build an exact rational from {type(value).__name__}")


def format_q(value: Q) -> str:
    """Serialize a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vector(entries: Iterable) -> Vector:
    return tuple(q(e) for e in entries)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged rows")
    return out


def zero_vector(dim: int) -> Vector:
    return (Q(0),) * dim


def dot(x: Sequence[Q], y: Sequence[Q]) -> Q:
    """Exact Euclidean inner product."""
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Q(0))


def vec_add(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c: Q, x: Vector) -> Vector:
    c = q(c)
    return tuple(c * a for a in x)


def vec_neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def is_zero_vector(x: Vector) -> bool:
    return all(a == 0 for a in x)


def identity(n: int) -> Matrix:
    return tuple(tuple(Q(1) if i == j else Q(0) for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_vec(m: Matrix, x: Sequence[Q]) -> Vector:
    return tuple(dot(row, x) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("dimension mismatch")
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_from_columns(cols: Sequence[Sequence[Q]]) -> Matrix:
    return transpose(matrix(cols))


def columns(m: Matrix) -> Matrix:
    return transpose(m)


def solve_linear(a: Matrix, b: Sequence[Q]) -> Vector:
    """Solve ``a x = b`` exactly for square nonsingular ``a``.

    Raises SingularMatrixError when no unique solution exists.
    """
    n = len(a)
    if n == 0 or len(a[0]) != n:
        raise ValueError("matrix must be square")
    if len(b) != n:
        raise ValueError("dimension mismatch")
    # Gaussian elimination with exact pivoting on the first nonzero entry.
    aug = [list(row) + [q(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def mat_inverse(m: Matrix) -> Matrix:
    n = len(m)
    cols = [solve_linear(m, tuple(Q(1) if i == j else Q(0) for i in range(n))) for j in range(n)]
    return mat_from_columns(cols)


def rank(rows: Iterable[Sequence[Q]]) -> int:
    """Rank of a collection of row vectors, by exact elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pv = work[r][col]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col] / pv
                work[i] = [v - f * w for v, w in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def matrix_order(m: Matrix, cap: int) -> int:
    """Smallest k >= 1 with m^k = identity; NoFiniteOrderError if none <= cap."""
    n = len(m)
    if n == 0 or len(m[0]) != n:
        raise ValueError("matrix must be square")
    if cap < 1:
        raise ValueError("cap must be positive")
    ident = identity(n)
    power = m
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = mat_mul(power, m)
    raise NoFiniteOrderError(f"no power up to {cap} equals the identity")
