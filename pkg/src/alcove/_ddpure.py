"""Pure-Python double-description kernel.

Clips an exactly-represented vertex set by one integer halfspace at a time.
Vertices are (numerators, denominator) integer tuples in reduced coordinates;
tight-constraint sets are bitmasks.  The compiled twin in ``_ddcore`` must
produce bit-identical output; keep the two in lockstep.
"""

from __future__ import annotations

from itertools import product
from math import gcd

from .errors import ResourceLimitError

KERNEL_NAME = "python"


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    g = den
    for v in nums:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        nums = [v // g for v in nums]
        den //= g
    return tuple(nums), den


def _box_vertices(lower: list[tuple[int, int]], upper: list[tuple[int, int]],
                  nreal: int) -> tuple[list[tuple[int, ...]], list[int], list[int]]:
    d = len(lower)
    choices = []
    for i in range(d):
        lo, up = lower[i], upper[i]
        if lo[0] * up[1] == up[0] * lo[1]:
            choices.append(((lo, (1 << (nreal + 2 * i)) | (1 << (nreal + 2 * i + 1))),))
        else:
            choices.append(((lo, 1 << (nreal + 2 * i)), (up, 1 << (nreal + 2 * i + 1))))
    verts: list[tuple[int, ...]] = []
    dens: list[int] = []
    masks: list[int] = []
    for combo in product(*choices):
        den = 1
        for (_, dv), _ in combo:
            den = den * dv // gcd(den, dv)
        nums = [combo[i][0][0] * (den // combo[i][0][1]) for i in range(d)]
        mask = 0
        for _, bit in combo:
            mask |= bit
        nt, dt = _normalize(nums, den)
        verts.append(nt)
        dens.append(dt)
        masks.append(mask)
    return verts, dens, masks


def enumerate_vertices(rows: list[tuple[int, ...]], rhs: list[int],
                       lower: list[tuple[int, int]], upper: list[tuple[int, int]],
                       cap: int) -> list[tuple[tuple[int, ...], int, int]]:
    """Vertices of {y : rows . y <= rhs} intersected with the bounding box.

    The box must be implied by the constraints (its planes may touch the
    feasible set but must not cut it).  Returns (numerators, denominator,
    tight mask over the real constraint indices) triples in deterministic
    order.  Raises ResourceLimitError when the working vertex count
    exceeds ``cap``.
    """
    d = len(lower)
    m = len(rows)
    verts, dens, masks = _box_vertices(lower, upper, m)
    if len(verts) > cap:
        raise ResourceLimitError(f"initial box has {len(verts)} vertices > cap {cap}")

    need = d - 1  # minimum shared tight constraints for an edge
    for k in range(m):
        row, rhs_k = rows[k], rhs[k]
        nv = len(verts)
        slack = [0] * nv
        for t in range(nv):
            vt = verts[t]
            s = -rhs_k * dens[t]
            for j in range(d):
                rj = row[j]
                if rj:
                    s += rj * vt[j]
            slack[t] = s
        neg = [t for t in range(nv) if slack[t] < 0]
        zero = [t for t in range(nv) if slack[t] == 0]
        pos = [t for t in range(nv) if slack[t] > 0]
        if not pos:
            if zero:
                bit = 1 << k
                for t in zero:
                    masks[t] |= bit
            continue

        bit = 1 << k
        new_verts: list[tuple[int, ...]] = []
        new_dens: list[int] = []
        new_masks: list[int] = []
        for p in neg:
            mp = masks[p]
            sp = slack[p]
            np_nums = verts[p]
            dp = dens[p]
            for q in pos:
                cand = mp & masks[q]
                if _popcount(cand) < need:
                    continue
                # adjacency: no third vertex's tight set contains cand
                adjacent = True
                for t in range(nv):
                    if t != p and t != q and masks[t] & cand == cand:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                sq = slack[q]
                nq_nums = verts[q]
                dq = dens[q]
                nums = [sq * np_nums[j] - sp * nq_nums[j] for j in range(d)]
                den = sq * dp - sp * dq
                nt, dt = _normalize(nums, den)
                new_verts.append(nt)
                new_dens.append(dt)
                new_masks.append(cand | bit)

        keep_verts = [verts[t] for t in neg]
        keep_dens = [dens[t] for t in neg]
        keep_masks = [masks[t] for t in neg]
        for t in zero:
            keep_verts.append(verts[t])
            keep_dens.append(dens[t])
            keep_masks.append(masks[t] | bit)
        keep_verts.extend(new_verts)
        keep_dens.extend(new_dens)
        keep_masks.extend(new_masks)
        verts, dens, masks = keep_verts, keep_dens, keep_masks
        if not verts:
            return []
        if len(verts) > cap:
            raise ResourceLimitError(f"vertex count {len(verts)} exceeds cap {cap} at step {k}")

    real = (1 << m) - 1
    return [(verts[t], dens[t], masks[t] & real) for t in range(len(verts))]


def _popcount(x: int) -> int:
    return x.bit_count()
