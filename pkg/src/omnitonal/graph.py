"""Compact simple graphs on at most 16 vertices.

Edges of K_n are indexed in colex order, ``slot(u, v) = v*(v-1)/2 + u`` for
``u < v``.  This is also the bit order of the graph6 format, so an edge
bitmap doubles as the graph6 payload.  The order is frozen: oracle results
and serialized colorings depend on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

import numpy as np

MAX_VERTICES = 16
MAX_SLOTS = comb(MAX_VERTICES, 2)


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class ResourceError(RuntimeError):
    """A computation would exceed its configured budget."""

    def __init__(self, message: str, estimate: int | float | None = None):
        super().__init__(message)
        self.estimate = estimate


def slot(u: int, v: int) -> int:
    if u == v:
        raise GraphError(f"no slot for loop ({u},{u})")
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


_UNSLOT = [(u, v) for v in range(MAX_VERTICES) for u in range(v)]


def unslot(s: int) -> tuple[int, int]:
    return _UNSLOT[s]


def num_slots(n: int) -> int:
    return n * (n - 1) // 2


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True, slots=True)
class EdgeSet:
    """Subset of the edge slots of K_n, stored as an integer bitmap."""

    n: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"ambient size {self.n} outside [0, {MAX_VERTICES}]")
        if self.bits < 0 or self.bits >> num_slots(self.n):
            raise GraphError(f"bitmap has bits beyond slot {num_slots(self.n) - 1}")

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, pair) -> bool:
        return bool(self.bits >> slot(*pair) & 1)

    def slots(self) -> list[int]:
        return list(iter_bits(self.bits))

    def pairs(self) -> list[tuple[int, int]]:
        return [_UNSLOT[s] for s in iter_bits(self.bits)]

    def vertices(self) -> int:
        """Bitmask of vertices touched by some edge."""
        mask = 0
        for u, v in self.pairs():
            mask |= (1 << u) | (1 << v)
        return mask

    def complement(self) -> "EdgeSet":
        return EdgeSet(self.n, ((1 << num_slots(self.n)) - 1) ^ self.bits)

    def to_graph(self) -> "Graph":
        return Graph.from_edges(self.n, self.pairs())


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` has bit ``u`` set iff uv is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency has wrong number of rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise GraphError(f"row {v} has a loop or out-of-range bit")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({u},{v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"bad edge ({u},{v}) for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "Graph":
        return EdgeSet(n, bits).to_graph()

    @property
    def edges(self) -> EdgeSet:
        bits = 0
        for v in range(self.n):
            for u in iter_bits(self.adj[v] & ((1 << v) - 1)):
                bits |= 1 << slot(u, v)
        return EdgeSet(self.n, bits)

    @property
    def e(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edge_list(self) -> list[tuple[int, int]]:
        return self.edges.pairs()

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def relabel(self, perm) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edge_list()])

    def without_isolated(self) -> "Graph":
        keep = [v for v in range(self.n) if self.adj[v]]
        if not keep:
            return Graph(1, (0,))
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(len(keep), [(index[u], index[v]) for u, v in self.edge_list()])

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        edges = self.edge_list() + [(u + shift, v + shift) for u, v in other.edge_list()]
        return Graph.from_edges(self.n + other.n, edges)

    def add_pendant(self, at: int = 0) -> "Graph":
        return Graph.from_edges(self.n + 1, self.edge_list() + [(at, self.n)])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e}, g6={to_graph6(self)!r})"


# -- graph6 -----------------------------------------------------------------

_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    m = num_slots(g.n)
    bits = g.edges.bits
    out = [chr(63 + g.n)]
    for start in range(0, m, 6):
        chunk = 0
        for i in range(6):
            s = start + i
            chunk = (chunk << 1) | (bits >> s & 1 if s < m else 0)
        out.append(chr(63 + chunk))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    data = text.rstrip("\r\n")
    base = 0
    if data.startswith(_HEADER):
        base = len(_HEADER)
        data = data[base:]
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", base + i)
    first = ord(data[0]) - 63
    if first == 63:
        raise Graph6Error("multi-byte size header (n > 62) unsupported", base)
    n = first
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds the {MAX_VERTICES}-vertex cap", base)
    if n == 0:
        raise Graph6Error("graphs need at least one vertex", base)
    m = num_slots(n)
    need = (m + 5) // 6
    if len(data) - 1 < need:
        raise Graph6Error(f"truncated: expected {need} data bytes", base + len(data))
    if len(data) - 1 > need:
        raise Graph6Error("trailing characters after graph data", base + 1 + need)
    bits = 0
    for i in range(need):
        chunk = ord(data[1 + i]) - 63
        for j in range(6):
            s = 6 * i + j
            if chunk >> (5 - j) & 1:
                if s >= m:
                    raise Graph6Error("nonzero padding bits", base + 1 + i)
                bits |= 1 << s
    return Graph.from_bits(n, bits)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors propagate."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if line:
            yield lineno, parse_graph6(line)


# -- constructors -------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"n={n} outside [1, {MAX_VERTICES}]")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(k: int) -> Graph:
    """P_k: k edges on k+1 vertices."""
    if k < 1:
        raise GraphError("path needs k >= 1")
    return Graph.from_edges(k + 1, [(i, i + 1) for i in range(k)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    if k < 1:
        raise GraphError("star needs k >= 1")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError("complete bipartite needs p, q >= 1")
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def complete_split(p: int, q: int) -> Graph:
    """Clique on vertices 0..p-1, independent set p..p+q-1, all cross edges."""
    if p < 0 or q < 0 or p + q < 1:
        raise GraphError("split graph needs p, q >= 0 and p + q >= 1")
    edges = list(itertools.combinations(range(p), 2))
    edges += [(i, p + j) for i in range(p) for j in range(q)]
    return Graph.from_edges(p + q, edges)


_FAMILIES = {
    "path_k": path_graph,
    "star_k": star_graph,
    "cycle_k": cycle_graph,
    "complete_m": complete_graph,
    "complete_bipartite_pq": complete_bipartite,
    "split_pq_complete": complete_split,
}


def named_graph(family: str, *params: int) -> Graph:
    try:
        build = _FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; expected one of {sorted(_FAMILIES)}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters {params} for {family}: {exc}") from None


# -- structure ----------------------------------------------------------------

def is_bipartite(g: Graph) -> tuple[bool, int | None]:
    """Return ``(True, side)`` with ``side`` a vertex bitmask of one colour class,
    or ``(False, None)`` when g has an odd cycle."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if colour[u] < 0:
                    colour[u] = colour[v] ^ 1
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False, None
    side = sum(1 << v for v in range(g.n) if colour[v] == 0)
    return True, side


def is_connected(g: Graph) -> bool:
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    return g.e == g.n - 1 and is_connected(g)


# -- embeddings -----------------------------------------------------------------

DEFAULT_EMBEDDING_BUDGET = 2_000_000


def _slot_array(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    return hi * (hi - 1) // 2 + lo


def _base_copies(g: Graph) -> np.ndarray:
    """Distinct edge sets of g relabeled onto K_{g.n}, as an (m, e) array of
    local vertex pairs packed as slots of K_{g.n}.

    The relabelings form one orbit under the symmetric group, which adjacent
    transpositions generate, so a breadth-first walk over bitmaps visits each
    copy once without touching all k! permutations.
    """
    k = g.n
    moves = []
    for i in range(k - 1):
        swap = list(range(k))
        swap[i], swap[i + 1] = i + 1, i
        moves.append([slot(swap[u], swap[v]) for u, v in _UNSLOT[: num_slots(k)]])
    start = g.edges.bits
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for bits in frontier:
            for move in moves:
                image = 0
                for s_ in iter_bits(bits):
                    image |= 1 << move[s_]
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    rows = sorted(tuple(iter_bits(b)) for b in seen)
    return np.array(rows, dtype=np.int64).reshape(len(rows), g.e)


def count_embeddings(g: Graph, n: int) -> int:
    """Closed-form number of copies of g (isolated vertices ignored) in K_n."""
    from .canon import canonical_form

    h = g.without_isolated()
    if h.e == 0:
        return 0
    if h.n > n:
        return 0
    aut = canonical_form(h).aut_count
    k = h.n
    return comb(n, k) * _falling(k, k) // aut


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


@lru_cache(maxsize=256)
def embedding_slots(g: Graph, n: int, budget: int = DEFAULT_EMBEDDING_BUDGET) -> np.ndarray:
    """All copies of g in K_n as an (N, e) array of sorted slot indices.

    Rows are sorted by bitmap value.  Isolated vertices of g are dropped first.
    """
    h = g.without_isolated()
    if h.e == 0 or h.n > n:
        return np.zeros((0, h.e), dtype=np.int64)
    if not n <= MAX_VERTICES:
        raise GraphError(f"ambient n={n} exceeds cap {MAX_VERTICES}")
    estimate = count_embeddings(h, n)
    if estimate > budget:
        raise ResourceError(f"{estimate} copies of the pattern exceed the budget {budget}", estimate)
    base = _base_copies(h)
    local_u = np.array([_UNSLOT[s][0] for s in range(num_slots(h.n))], dtype=np.int64)
    local_v = np.array([_UNSLOT[s][1] for s in range(num_slots(h.n))], dtype=np.int64)
    subsets = np.array(list(itertools.combinations(range(n), h.n)), dtype=np.int64)
    # subsets are sorted, so the local order u < v is preserved after mapping
    gu = subsets[:, local_u[base]]
    gv = subsets[:, local_v[base]]
    slots = (gv * (gv - 1) // 2 + gu).reshape(-1, h.e)
    slots.sort(axis=1)
    keys = slot_rows_to_ints(slots)
    order = sorted(range(len(keys)), key=keys.__getitem__)
    out = slots[order]
    out.setflags(write=False)
    return out


def slot_rows_to_ints(slots: np.ndarray) -> list[int]:
    """Bitmap integer of every row of a slot-index matrix."""
    if slots.shape[0] == 0:
        return []
    one = np.uint64(1)
    low = np.zeros(slots.shape[0], dtype=np.uint64)
    high = np.zeros(slots.shape[0], dtype=np.uint64)
    for col in slots.T:
        in_low = col < 64
        low[in_low] |= one << col[in_low].astype(np.uint64)
        high[~in_low] |= one << (col[~in_low] - 64).astype(np.uint64)
    if not high.any():
        return low.tolist()
    return [(h << 64) | lo for lo, h in zip(low.tolist(), high.tolist())]


def embedding_masks(g: Graph, n: int, budget: int = DEFAULT_EMBEDDING_BUDGET) -> list[int]:
    return slot_rows_to_ints(embedding_slots(g, n, budget))


def enumerate_embeddings(g: Graph, n: int) -> list[EdgeSet]:
    """One EdgeSet per distinct copy of g in K_n, sorted by bitmap."""
    if g.n > n:
        raise GraphError(f"pattern has {g.n} vertices but K_{n} has only {n}")
    return [EdgeSet(n, m) for m in embedding_masks(g, n)]
