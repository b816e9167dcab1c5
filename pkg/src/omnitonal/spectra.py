"""Cut and induced-edge spectra, and the tonality deciders built on them.

A graph is r-tonal iff some bipartition cuts, and some vertex subset induces,
r or e-r edges; it is omnitonal iff both spectra are all of 0..e.  Both
spectra come from one pass over the 2^n vertex subsets:

    e(G[W]) = e(G[W - v]) + |N(v) & W|        (v the top vertex of W)
    e(W, V-W) = sum_{v in W} deg(v) - 2 e(G[W])
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .graph import Graph, GraphError, is_bipartite, to_graph6


@dataclass(frozen=True)
class Spectrum:
    """Achievable values in [0, max], each with the least vertex bitmask attaining it."""

    max: int
    witness: dict[int, int] = field(default_factory=dict)

    @property
    def achieved(self) -> frozenset[int]:
        return frozenset(self.witness)

    def __contains__(self, value: int) -> bool:
        return value in self.witness

    def sorted(self) -> list[int]:
        return sorted(self.witness)


@lru_cache(maxsize=4096)
def _subset_tables(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    n = g.n
    size = 1 << n
    induced = np.zeros(size, dtype=np.int64)
    degsum = np.zeros(size, dtype=np.int64)
    masks = np.arange(size, dtype=np.int64)
    for v in range(n):
        lo, hi = 1 << v, 1 << (v + 1)
        sub = masks[lo:hi] ^ lo
        induced[lo:hi] = induced[sub] + np.bitwise_count(sub & g.adj[v]).astype(np.int64)
        degsum[lo:hi] = degsum[sub] + g.degree(v)
    cut = degsum - 2 * induced
    induced.setflags(write=False)
    cut.setflags(write=False)
    return induced, cut


def _spectrum(values: np.ndarray, e: int) -> Spectrum:
    uniq, first = np.unique(values, return_index=True)
    return Spectrum(e, {int(v): int(i) for v, i in zip(uniq, first)})


def induced_spectrum(g: Graph) -> Spectrum:
    return _spectrum(_subset_tables(g)[0], g.e)


def cut_spectrum(g: Graph) -> Spectrum:
    return _spectrum(_subset_tables(g)[1], g.e)


def induced_edges(g: Graph, w: int) -> int:
    return sum((g.adj[v] & w).bit_count() for v in range(g.n) if w >> v & 1) // 2


def cut_edges(g: Graph, x: int) -> int:
    outside = ((1 << g.n) - 1) & ~x
    return sum((g.adj[v] & outside).bit_count() for v in range(g.n) if x >> v & 1)


@dataclass(frozen=True)
class ToneWitness:
    holds: bool
    cut_value: int | None = None
    cut_side: int | None = None
    induced_value: int | None = None
    induced_set: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def _pick(spec: Spectrum, targets) -> tuple[int | None, int | None]:
    for t in sorted(set(targets)):
        if t in spec.witness:
            return t, spec.witness[t]
    return None, None


def _tonal_targets(g: Graph, targets) -> ToneWitness:
    cv, cx = _pick(cut_spectrum(g), targets)
    iv, iw = _pick(induced_spectrum(g), targets)
    return ToneWitness(cv is not None and iv is not None, cv, cx, iv, iw)


def is_r_tonal(g: Graph, r: int) -> ToneWitness:
    e = g.e
    if not 0 < r <= e // 2:
        raise GraphError(f"r={r} outside (0, {e // 2}] for a graph with {e} edges")
    return _tonal_targets(g, (r, e - r))


def is_balanceable(g: Graph) -> ToneWitness:
    e = g.e
    if e < 1:
        raise GraphError("balanceability needs at least one edge")
    return _tonal_targets(g, (e // 2, (e + 1) // 2))


@dataclass(frozen=True)
class OmnitonalVerdict:
    holds: bool
    missing_cut: tuple[int, ...]
    missing_induced: tuple[int, ...]
    cut_witness: dict[int, int]
    induced_witness: dict[int, int]

    def __bool__(self) -> bool:
        return self.holds


def is_omnitonal(g: Graph) -> OmnitonalVerdict:
    e = g.e
    if e < 1:
        raise GraphError("omnitonality needs at least one edge")
    cut, ind = cut_spectrum(g), induced_spectrum(g)
    full = range(e + 1)
    miss_c = tuple(r for r in full if r not in cut)
    miss_i = tuple(r for r in full if r not in ind)
    return OmnitonalVerdict(not miss_c and not miss_i, miss_c, miss_i, dict(cut.witness), dict(ind.witness))


@dataclass(frozen=True)
class TonalityReport:
    graph: str
    n: int
    e: int
    cut_spectrum: Spectrum
    induced_spectrum: Spectrum
    balanceable: bool
    omnitonal: bool
    r_tonal: dict[int, bool]
    bipartite: bool

    @property
    def r_tonal_mask(self) -> int:
        return sum(1 << (r - 1) for r, ok in self.r_tonal.items() if ok)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "n": self.n,
            "e": self.e,
            "cut_spectrum": self.cut_spectrum.sorted(),
            "induced_spectrum": self.induced_spectrum.sorted(),
            "balanceable": self.balanceable,
            "omnitonal": self.omnitonal,
            "bipartite": self.bipartite,
            "r_tonal": {str(r): ok for r, ok in sorted(self.r_tonal.items())},
        }


def tonal_report(g: Graph) -> TonalityReport:
    e = g.e
    cut, ind = cut_spectrum(g), induced_spectrum(g)
    r_tonal = {r: bool(is_r_tonal(g, r)) for r in range(1, e // 2 + 1)}
    bal = bool(is_balanceable(g)) if e else False
    omni = bool(is_omnitonal(g)) if e else False
    report = TonalityReport(
        graph=to_graph6(g),
        n=g.n,
        e=e,
        cut_spectrum=cut,
        induced_spectrum=ind,
        balanceable=bal,
        omnitonal=omni,
        r_tonal=r_tonal,
        bipartite=is_bipartite(g)[0],
    )
    if omni and not (bal and report.bipartite):
        raise AssertionError(f"implication chain broken for {report.graph}")
    if e >= 2 and bal != r_tonal[e // 2]:
        raise AssertionError(f"balanceable differs from floor(e/2)-tonal for {report.graph}")
    return report
