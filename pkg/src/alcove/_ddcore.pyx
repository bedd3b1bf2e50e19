# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled double-description kernel.

Same algorithm and same deterministic output as ``_ddpure``; the win is
compiled loop and call overhead (coordinate arithmetic stays on Python
integers, which are arbitrary precision).  Any change here must land in
``_ddpure`` too.
"""

from itertools import product
from math import gcd

from .errors import ResourceLimitError

KERNEL_NAME = "compiled"


cdef _normalize(list nums, den):
    cdef Py_ssize_t i, n = len(nums)
    g = den
    for i in range(n):
        g = gcd(g, nums[i])
        if g == 1:
            break
    if g > 1:
        for i in range(n):
            nums[i] = nums[i] // g
        den = den // g
    return tuple(nums), den


cdef _box_vertices(list lower, list upper, Py_ssize_t nreal):
    cdef Py_ssize_t d = len(lower), i
    choices = []
    for i in range(d):
        lo, up = lower[i], upper[i]
        if lo[0] * up[1] == up[0] * lo[1]:
            both = ((<object>1) << (nreal + 2 * i)) | ((<object>1) << (nreal + 2 * i + 1))
            choices.append(((lo, both),))
        else:
            choices.append(((lo, (<object>1) << (nreal + 2 * i)),
                            (up, (<object>1) << (nreal + 2 * i + 1))))
    verts = []
    dens = []
    masks = []
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


def enumerate_vertices(rows, rhs, lower, upper, cap):
    """Vertices of {y : rows . y <= rhs} within the bounding box.

    See the pure twin for the full contract."""
    cdef Py_ssize_t d = len(lower), m = len(rows)
    cdef Py_ssize_t k, t, j, nv, p, q, idx
    cdef Py_ssize_t need = d - 1
    cdef bint adjacent

    verts, dens, masks = _box_vertices(list(lower), list(upper), m)
    if len(verts) > cap:
        raise ResourceLimitError(
            f"initial box has {len(verts)} vertices > cap {cap}")

    for k in range(m):
        row = rows[k]
        rhs_k = rhs[k]
        nv = len(verts)
        slack = [0] * nv
        for t in range(nv):
            vt = verts[t]
            s = -rhs_k * dens[t]
            for j in range(d):
                rj = row[j]
                if rj:
                    s = s + rj * vt[j]
            slack[t] = s
        neg = [t for t in range(nv) if slack[t] < 0]
        zero = [t for t in range(nv) if slack[t] == 0]
        pos = [t for t in range(nv) if slack[t] > 0]
        bit = (<object>1) << k  # Python int: bit indices exceed C long width
        if not pos:
            for t in zero:
                masks[t] |= bit
            continue

        new_verts = []
        new_dens = []
        new_masks = []
        for idx in range(len(neg)):
            p = neg[idx]
            mp = masks[p]
            sp = slack[p]
            np_nums = verts[p]
            dp = dens[p]
            for q in pos:
                cand = mp & masks[q]
                if cand.bit_count() < need:
                    continue
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
            raise ResourceLimitError(
                f"vertex count {len(verts)} exceeds cap {cap} at step {k}")

    real = ((<object>1) << m) - 1
    return [(verts[t], dens[t], masks[t] & real) for t in range(len(verts))]
