"""Exhaustive ground truth for bal, bal_r, ot and ex on small K_n.

bal, bal_r and ot are each the largest min{e(R), e(B)} over colorings of
K_n that lack the required colour pattern.  Every pattern here is symmetric
under swapping red and blue, so only red bitmaps with the last slot blue are
scanned; each stands for itself and its complement.  Extremal families are
reported as canonical graph6 codes of the smaller colour class (both classes
when they tie), which identifies them up to isomorphism and colour swap.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .canon import canonical_form
from .colorings import Coloring, balanced_targets, tone_set
from .graph import Graph, GraphError, ResourceError, embedding_masks, num_slots, parse_graph6, to_graph6

log = logging.getLogger(__name__)

NONEXISTENT = -1
DEFAULT_SCAN_BUDGET = 1 << 27  # red bitmaps; covers n <= 8
DEFAULT_DFS_BUDGET = 200_000_000  # search nodes
_CHUNK = 1 << 22
_BUF = 1 << 14


@dataclass(frozen=True)
class OracleResult:
    mode: str
    n: int
    graph: str
    value: int
    extremal: tuple[str, ...]
    colorings_scanned: int
    elapsed: float = 0.0
    params: dict = field(default_factory=dict)
    family_verified: bool = True

    @property
    def exists(self) -> bool:
        return self.value != NONEXISTENT

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "mode": self.mode,
            "n": self.n,
            "graph": self.graph,
            "params": self.params,
            "value": self.value if self.exists else "nonexistent",
            "extremal": list(self.extremal),
            "colorings_scanned": self.colorings_scanned,
            "family_verified": self.family_verified,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _pattern(mode: str, e: int, r: int | None, strong: bool) -> tuple[np.ndarray, bool]:
    want = np.zeros(e + 1, dtype=np.bool_)
    if mode == "bal":
        want[list(balanced_targets(e))] = True
        return want, strong
    if mode == "bal_r":
        want[[r, e - r]] = True
        return want, False
    if mode == "ot":
        want[:] = True
        return want, True
    raise GraphError(f"unknown mode {mode!r}")


def _masks(g: Graph, n: int) -> tuple[Graph, np.ndarray]:
    if g.n > n:
        raise GraphError(f"pattern has {g.n} vertices, more than n={n}")
    h = g.without_isolated()
    if h.e < 1:
        raise GraphError("pattern needs at least one edge")
    if num_slots(n) > 63:
        raise GraphError(f"n={n} is beyond the 64-bit kernels")
    return h, np.array(embedding_masks(h, n), dtype=np.uint64)


def pattern_free(c: Coloring, g: Graph, mode: str, r: int | None = None, strong: bool = False) -> bool:
    """True when the coloring lacks the pattern; computed from tone sets, not the kernel."""
    ts = tone_set(c, g)
    if mode == "bal":
        hits = [t in ts for t in balanced_targets(ts.e)]
        return not (all(hits) if strong else any(hits))
    if mode == "bal_r":
        return r not in ts and ts.e - r not in ts
    if mode == "ot":
        return any(t not in ts for t in range(ts.e + 1))
    raise GraphError(f"unknown mode {mode!r}")


def _family(n: int, reds: list[int]) -> tuple[str, ...]:
    total = num_slots(n)
    full = (1 << total) - 1
    codes = set()
    for red in reds:
        pc = red.bit_count()
        classes = []
        if 2 * pc <= total:
            classes.append(red)
        if 2 * pc >= total:
            classes.append(full ^ red)
        for bits in classes:
            codes.add(canonical_form(Graph.from_bits(n, bits)).graph6)
    return tuple(sorted(codes))


def _verify_family(n, g, mode, value, family, r=None, strong=False) -> bool:
    for code in family:
        c = Coloring(n, parse_graph6(code).edges)
        if not verify_extremal(c, g, mode, value, r=r, strong=strong):
            log.error("extremal member %s fails verification", code)
            return False
    return True


def _scan_chunk(masks, want, need_all, lo, hi, total, best):
    buf = np.zeros(_BUF, dtype=np.uint64)
    best, count = _kernels.scan_colorings(masks, want, need_all, lo, hi, total, best, buf)
    if count > buf.shape[0]:
        buf = np.zeros(count, dtype=np.uint64)
        best, count = _kernels.scan_colorings(masks, want, need_all, lo, hi, total, best, buf)
    return int(best), buf[:count].tolist()


def _scan(h: Graph, n: int, masks: np.ndarray, mode: str, r, strong, budget: int, jobs: int = 1):
    total = num_slots(n)
    span = 1 << max(total - 1, 0)
    if span > budget:
        raise ResourceError(f"2^{total - 1} colorings exceed the scan budget {budget}", span)
    want, need_all = _pattern(mode, h.e, r, strong)
    bounds = [(lo, min(span, lo + _CHUNK)) for lo in range(0, span, _CHUNK)]
    best = NONEXISTENT
    kept: list[int] = []
    if jobs > 1 and len(bounds) > 1:
        # workers start without a shared bound; chunk order keeps the merge deterministic
        from concurrent.futures import ProcessPoolExecutor

        args = [(masks, want, need_all, lo, hi, total, NONEXISTENT) for lo, hi in bounds]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_chunk, *zip(*args)))
        best = max(b for b, _ in parts)
        for b, found in parts:
            if b == best:
                kept.extend(found)
        return (best, kept, span) if best != NONEXISTENT else (best, [], span)
    for lo, hi in bounds:
        chunk_best, found = _scan_chunk(masks, want, need_all, lo, hi, total, best)
        if not found:
            continue
        if chunk_best > best:
            best, kept = chunk_best, found
        else:
            kept.extend(found)
    return best, kept, span


def _run(mode: str, n: int, g: Graph, r=None, strong=False, budget=DEFAULT_SCAN_BUDGET,
         jobs: int = 1, verify=True) -> OracleResult:
    t0 = time.perf_counter()
    h, masks = _masks(g, n)
    best, kept, scanned = _scan(h, n, masks, mode, r, strong, budget, jobs)
    family = _family(n, kept) if best != NONEXISTENT else ()
    params = {}
    if r is not None:
        params["r"] = r
    if mode == "bal":
        params["strong"] = strong
    ok = _verify_family(n, h, mode, best, family, r=r, strong=strong) if verify else True
    return OracleResult(mode, n, to_graph6(g), best, family, scanned, time.perf_counter() - t0, params, ok)


def brute_force_bal(n: int, g: Graph, strong: bool = False, budget: int = DEFAULT_SCAN_BUDGET,
                    jobs: int = 1) -> OracleResult:
    return _run("bal", n, g, strong=strong, budget=budget, jobs=jobs)


def brute_force_bal_r(n: int, g: Graph, r: int, budget: int = DEFAULT_SCAN_BUDGET, jobs: int = 1) -> OracleResult:
    if not 0 < r <= g.e // 2:
        raise GraphError(f"r={r} outside (0, {g.e // 2}]")
    return _run("bal_r", n, g, r=r, budget=budget, jobs=jobs)


def brute_force_ot(n: int, g: Graph, budget: int = DEFAULT_SCAN_BUDGET, jobs: int = 1) -> OracleResult:
    return _run("ot", n, g, budget=budget, jobs=jobs)


def brute_force_ex(n: int, g: Graph, budget: int = DEFAULT_DFS_BUDGET) -> OracleResult:
    """ex(n, g) and the extremal graphs Ex(n, g) by depth-first edge addition."""
    t0 = time.perf_counter()
    h, masks = _masks(g, n)
    total = num_slots(n)
    masks = np.sort(masks)
    top = np.array([int(m).bit_length() - 1 for m in masks.tolist()], dtype=np.int64)
    order = np.argsort(top, kind="stable")
    masks, top = masks[order], top[order]
    ptr = np.searchsorted(top, np.arange(total + 1)).astype(np.int64)
    buf = np.zeros(_BUF, dtype=np.uint64)
    best, count, nodes, done = _kernels.max_free_subgraphs(ptr, masks, total, -1, buf, budget)
    if not done:
        raise ResourceError(f"search passed {budget} nodes", nodes)
    if count > buf.shape[0]:
        buf = np.zeros(count, dtype=np.uint64)
        best, count, nodes2, _ = _kernels.max_free_subgraphs(ptr, masks, total, best, buf, budget)
    reds = buf[:count].tolist()
    codes = sorted({canonical_form(Graph.from_bits(n, b)).graph6 for b in reds})
    return OracleResult("ex", n, to_graph6(g), int(best), tuple(codes), int(nodes), time.perf_counter() - t0)


def verify_extremal(c: Coloring, g: Graph, mode: str, claimed_value: int,
                    r: int | None = None, strong: bool = False) -> bool:
    """True iff min{e(R), e(B)} equals the claim and the pattern is absent."""
    if c.min_class != claimed_value:
        return False
    return pattern_free(c, g, mode, r=r, strong=strong)


def family_of(n: int, reds) -> tuple[str, ...]:
    """Canonical codes of the smaller colour classes of the given red bitmaps."""
    return _family(n, list(reds))
