"""Compiled inner loops for the exhaustive oracles.

Copies of the pattern are uint64 bitmaps over the slots of K_n, so these
kernels cover n <= 11; the oracle budgets keep them far below that.
"""

from __future__ import annotations

import numpy as np
from llvmlite import ir
from numba import njit, types
from numba.extending import intrinsic


@intrinsic
def popcount(typingctx, x):
    sig = types.uint64(types.uint64)

    def codegen(context, builder, signature, args):
        fn = builder.module.declare_intrinsic("llvm.ctpop", [ir.IntType(64)])
        return builder.call(fn, args)

    return sig, codegen


@njit(cache=True)
def scan_colorings(masks, want, need_all, lo, hi, num_slots, best, buf):
    """Scan red bitmaps in [lo, hi) for colorings lacking the pattern.

    The pattern is present when some copy has a wanted tone (``need_all``
    false) or when every wanted tone occurs (``need_all`` true).  Only
    colorings whose smaller colour class is at least ``best`` are examined.
    Returns ``(best, count)``; the first ``len(buf)`` bitmaps attaining the
    returned best are written to ``buf``, ``count`` is their full number.
    """
    full = np.uint64(0)
    for t in range(want.shape[0]):
        if want[t]:
            full |= np.uint64(1) << np.uint64(t)
    count = 0
    for value in range(lo, hi):
        red = np.uint64(value)
        pc = np.int64(popcount(red))
        small = pc if pc < num_slots - pc else num_slots - pc
        if small < best:
            continue
        found = np.uint64(0)
        hit = False
        for i in range(masks.shape[0]):
            t = popcount(masks[i] & red)
            if want[t]:
                if not need_all:
                    hit = True
                    break
                found |= np.uint64(1) << t
                if found == full:
                    hit = True
                    break
        if hit:
            continue
        if small > best:
            best = small
            count = 0
        if count < buf.shape[0]:
            buf[count] = red
        count += 1
    return best, count


@njit(cache=True)
def max_free_subgraphs(group_ptr, group_masks, num_slots, best, buf, node_budget):
    """Depth-first search over edge subsets of K_n containing no copy.

    Copies are grouped by their highest slot (CSR layout in ``group_ptr``,
    ``group_masks``); a slot may be added only if it completes no copy of
    its group.  Branches that cannot reach ``best`` edges are cut.  Returns
    ``(best, count, nodes, complete)`` with maximisers written to ``buf``.
    """
    state = np.zeros(num_slots + 1, dtype=np.int8)
    red = np.uint64(0)
    cnt = 0
    depth = 0
    count = 0
    nodes = 0
    while depth >= 0:
        nodes += 1
        if nodes > node_budget:
            return best, count, nodes, False
        if depth == num_slots:
            if cnt > best:
                best = cnt
                count = 0
            if cnt == best:
                if count < buf.shape[0]:
                    buf[count] = red
                count += 1
            depth -= 1
            continue
        bit = np.uint64(1) << np.uint64(depth)
        s = state[depth]
        if s == 0:
            state[depth] = 1
            if cnt + (num_slots - depth) < best:
                state[depth] = 2
                depth -= 1
                continue
            trial = red | bit
            ok = True
            for j in range(group_ptr[depth], group_ptr[depth + 1]):
                if group_masks[j] & ~trial == 0:
                    ok = False
                    break
            if ok:
                red = trial
                cnt += 1
                depth += 1
                state[depth] = 0
            continue
        if s == 1:
            if red & bit:
                red ^= bit
                cnt -= 1
            state[depth] = 2
            if cnt + (num_slots - depth - 1) >= best:
                depth += 1
                state[depth] = 0
            continue
        depth -= 1
    return best, count, nodes, True
