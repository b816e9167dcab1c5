"""Red/blue colorings of K_n and the colour patterns of copies inside them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .graph import (
    MAX_VERTICES,
    EdgeSet,
    Graph,
    GraphError,
    embedding_slots,
    iter_bits,
    num_slots,
    slot,
    unslot,
)


@dataclass(frozen=True)
class Coloring:
    """2-coloring of E(K_n); blue is the complement of ``red``."""

    n: int
    red: EdgeSet

    def __post_init__(self):
        if self.red.n != self.n:
            raise GraphError("red edge set lives in a different K_n")

    @classmethod
    def from_red_edges(cls, n: int, edges) -> "Coloring":
        bits = 0
        for u, v in edges:
            bits |= 1 << slot(u, v)
        return cls(n, EdgeSet(n, bits))

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "Coloring":
        return cls(n, EdgeSet(n, bits))

    @property
    def blue(self) -> EdgeSet:
        return self.red.complement()

    @property
    def e_red(self) -> int:
        return len(self.red)

    @property
    def e_blue(self) -> int:
        return num_slots(self.n) - len(self.red)

    @property
    def min_class(self) -> int:
        return min(self.e_red, self.e_blue)

    def complement(self) -> "Coloring":
        return Coloring(self.n, self.blue)

    def red_graph(self) -> Graph:
        return self.red.to_graph()

    def blue_graph(self) -> Graph:
        return self.blue.to_graph()

    def red_mask_array(self) -> np.ndarray:
        return np.array([self.red.bits >> s & 1 for s in range(num_slots(self.n))], dtype=bool)

    def dumps(self) -> str:
        return f"{self.n}; {self.red.bits:x}"

    @classmethod
    def loads(cls, line: str) -> "Coloring":
        try:
            n_text, hex_text = line.strip().split(";")
            return cls.from_bits(int(n_text), int(hex_text.strip(), 16))
        except ValueError as exc:
            raise GraphError(f"bad coloring line {line!r}: {exc}") from None


def _check_nt(n: int, t: int):
    if not 1 <= t < n <= MAX_VERTICES:
        raise GraphError(f"need 1 <= t < n <= {MAX_VERTICES}, got t={t}, n={n}")


def type_A_coloring(n: int, t: int) -> Coloring:
    """Red is the clique on vertices 0..t-1."""
    _check_nt(n, t)
    return Coloring.from_red_edges(n, itertools.combinations(range(t), 2))


def type_B_coloring(n: int, t: int) -> Coloring:
    """Red is the complete bipartite graph between 0..t-1 and t..n-1."""
    _check_nt(n, t)
    return Coloring.from_red_edges(n, [(i, j) for i in range(t) for j in range(t, n)])


def balanced_type_params(n: int, kind: str) -> list[int]:
    """Every t making the type-A(t) or type-B(t) coloring of K_n exactly balanced.

    Pure arithmetic, so it also answers for n beyond the vertex cap.
    """
    total = comb(n, 2)
    if total % 2:
        return []
    half = total // 2
    if kind == "A":
        return [t for t in range(1, n) if comb(t, 2) == half]
    if kind == "B":
        return [t for t in range(1, n) if t * (n - t) == half]
    raise GraphError(f"kind must be 'A' or 'B', got {kind!r}")


def split_graph_coloring(n: int, p: int, extra_edge: bool = False) -> Coloring:
    """Red is the complete (p, n-p)-split graph, optionally plus the least
    slot inside the independent part."""
    if not 0 <= p < n <= MAX_VERTICES:
        raise GraphError(f"need 0 <= p < n <= {MAX_VERTICES}")
    if extra_edge and n - p < 2:
        raise GraphError("extra edge needs two independent vertices")
    edges = list(itertools.combinations(range(p), 2))
    edges += [(i, j) for i in range(p) for j in range(p, n)]
    if extra_edge:
        edges.append((p, p + 1))
    return Coloring.from_red_edges(n, edges)


def ot_star_extremal(n: int, k: int) -> Coloring:
    if k < 1 or n < 4 * k or n > MAX_VERTICES:
        raise GraphError(f"need k >= 1 and 4k <= n <= {MAX_VERTICES}, got n={n}, k={k}")
    if k == 1:
        return Coloring(n, EdgeSet(n, 0))
    if k == 2:
        return Coloring.from_red_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])
    if k == 3:
        return Coloring.from_red_edges(n, [(i, (i + 1) % n) for i in range(n)])
    return split_graph_coloring(n, k - 2)


def bal_K4_extremal(n: int) -> Coloring:
    """Red is floor(n/4) disjoint 4-cycles plus K_1, K_2 or P_2 on the rest."""
    if not 5 <= n <= MAX_VERTICES:
        raise GraphError(f"need 5 <= n <= {MAX_VERTICES}")
    edges = []
    q, rest = divmod(n, 4)
    for i in range(q):
        a = 4 * i
        edges += [(a, a + 1), (a + 1, a + 2), (a + 2, a + 3), (a + 3, a)]
    base = 4 * q
    if rest == 2:
        edges.append((base, base + 1))
    elif rest == 3:
        edges += [(base, base + 1), (base + 1, base + 2)]
    return Coloring.from_red_edges(n, edges)


def is_two_regular(g: Graph) -> bool:
    """Membership test for the 'disjoint union of cycles' family."""
    return all(d == 2 for d in g.degrees())


# -- tones ----------------------------------------------------------------------

@dataclass(frozen=True)
class ToneSet:
    e: int
    witness: dict[int, EdgeSet]

    @property
    def achieved(self) -> frozenset[int]:
        return frozenset(self.witness)

    def __contains__(self, r: int) -> bool:
        return r in self.witness


def tone_set(c: Coloring, g: Graph) -> ToneSet:
    h = g.without_isolated()
    if g.n > c.n:
        raise GraphError(f"pattern on {g.n} vertices does not fit in K_{c.n}")
    slots = embedding_slots(h, c.n)
    if slots.shape[0] == 0:
        return ToneSet(h.e, {})
    tones = c.red_mask_array()[slots].sum(axis=1)
    values, first = np.unique(tones, return_index=True)
    witness = {}
    for r, i in zip(values.tolist(), first.tolist()):
        bits = 0
        for s in slots[i].tolist():
            bits |= 1 << s
        witness[r] = EdgeSet(c.n, bits)
    return ToneSet(h.e, witness)


def balanced_targets(e: int) -> tuple[int, ...]:
    return tuple(sorted({e // 2, (e + 1) // 2}))


@dataclass(frozen=True)
class BalancedResult:
    holds: bool
    witnesses: dict[int, EdgeSet]

    def __bool__(self) -> bool:
        return self.holds


def contains_balanced(c: Coloring, g: Graph, strong: bool = False) -> BalancedResult:
    ts = tone_set(c, g)
    targets = balanced_targets(ts.e)
    found = {r: ts.witness[r] for r in targets if r in ts}
    holds = len(found) == len(targets) if strong else bool(found)
    return BalancedResult(holds, found)


# -- type-A / type-B subcliques -------------------------------------------------

@dataclass(frozen=True)
class TypedClique:
    kind: str
    """'A' or 'B'."""
    colour: str
    """Colour class forming the K_t (type A) or K_{t,t} (type B)."""
    vertices: tuple[int, ...]
    monochromatic: bool = False


def _adjacency(n: int, bits: int) -> list[int]:
    adj = [0] * n
    for s in iter_bits(bits):
        u, v = unslot(s)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _is_clique_t(adj, verts, mask, t) -> bool:
    degs = [(adj[v] & mask).bit_count() for v in verts]
    return degs.count(t - 1) == t and degs.count(0) == t if t > 1 else all(d == 0 for d in degs)


def _is_kt_t(adj, verts, mask, t) -> bool:
    if any((adj[v] & mask).bit_count() != t for v in verts):
        return False
    side = adj[verts[0]] & mask
    other = mask & ~side
    return all((adj[v] & mask) == (other if side >> v & 1 else side) for v in verts)


def find_type_AB_clique(c: Coloring, t: int) -> TypedClique | None:
    """First 2t-subset (lexicographic) whose colouring is type B, else type A,
    else monochromatic (reported as type A)."""
    n = c.n
    if t < 1 or 2 * t > n:
        raise GraphError(f"need 1 <= t and 2t <= n, got t={t}, n={n}")
    red = _adjacency(n, c.red.bits)
    blue = _adjacency(n, c.blue.bits)
    first_a = first_mono = None
    for verts in itertools.combinations(range(n), 2 * t):
        mask = sum(1 << v for v in verts)
        for colour, adj in (("red", red), ("blue", blue)):
            if _is_kt_t(adj, verts, mask, t):
                return TypedClique("B", colour, verts)
        if first_a is None:
            for colour, adj in (("red", red), ("blue", blue)):
                if _is_clique_t(adj, verts, mask, t):
                    first_a = TypedClique("A", colour, verts)
                    break
        if first_mono is None and first_a is None:
            for colour, adj in (("red", red), ("blue", blue)):
                if all((adj[v] & mask).bit_count() == 2 * t - 1 for v in verts):
                    first_mono = TypedClique("A", colour, verts, monochromatic=True)
    return first_a or first_mono
