"""Edge-replacement reconfiguration of copies of a pattern inside K_n.

Copies are identified with their edge bitmaps.  Two copies are adjacent when
one is obtained from the other by dropping one edge and adding one edge of
K_n.  Whether every copy reaches every other can only be checked one n at a
time; nothing here claims the property for all large n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .canon import canonical_form
from .colorings import Coloring
from .graph import (
    DEFAULT_EMBEDDING_BUDGET,
    EdgeSet,
    Graph,
    GraphError,
    ResourceError,
    count_embeddings,
    embedding_masks,
    iter_bits,
    num_slots,
    to_graph6,
)


def _same_shape(bits: int, n: int, code: bytes, degrees: list[int]) -> bool:
    cand = EdgeSet(n, bits).to_graph().without_isolated()
    if sorted(d for d in cand.degrees() if d) != degrees:
        return False
    return canonical_form(cand).code == code


def edge_replacements(copy: EdgeSet, g: Graph, n: int) -> list[EdgeSet]:
    """All copies of g reachable from ``copy`` by one edge replacement."""
    h = g.without_isolated()
    code = canonical_form(h).code
    degrees = sorted(h.degrees())
    if copy.n != n:
        raise GraphError(f"copy lives in K_{copy.n}, not K_{n}")
    if not _same_shape(copy.bits, n, code, degrees):
        raise GraphError("copy is not isomorphic to the pattern")
    out = []
    absent = ((1 << num_slots(n)) - 1) & ~copy.bits
    for s1 in iter_bits(copy.bits):
        base = copy.bits & ~(1 << s1)
        for s2 in iter_bits(absent):
            cand = base | (1 << s2)
            if _same_shape(cand, n, code, degrees):
                out.append(EdgeSet(n, cand))
    out.sort(key=lambda es: es.bits)
    return out


def _neighbours(bits: int, full: int, nodes: set[int]):
    absent = full & ~bits
    for s1 in iter_bits(bits):
        base = bits & ~(1 << s1)
        for s2 in iter_bits(absent):
            cand = base | (1 << s2)
            if cand in nodes:
                yield cand, s1, s2


def _copies(g: Graph, n: int, budget: int) -> list[int]:
    h = g.without_isolated()
    if h.n != g.n:
        raise GraphError("pattern must not have isolated vertices")
    if not g.n < n:
        raise GraphError(f"need n > {g.n}, got n={n}")
    estimate = count_embeddings(g, n)
    if estimate > budget:
        raise ResourceError(f"{estimate} copies exceed the node budget {budget}", estimate)
    return embedding_masks(g, n, budget=budget)


@dataclass(frozen=True)
class Connectivity:
    n: int
    connected: bool
    num_copies: int
    num_components: int
    representatives: tuple[int, ...]
    """Least bitmap of each component, ascending."""

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "connected": self.connected,
            "num_copies": self.num_copies,
            "num_components": self.num_components,
            "representatives": [format(r, "x") for r in self.representatives[:8]],
        }


def components(g: Graph, n: int, budget: int = DEFAULT_EMBEDDING_BUDGET) -> dict[int, int]:
    """Map every copy bitmap to the least bitmap of its component."""
    copies = _copies(g, n, budget)
    nodes = set(copies)
    full = (1 << num_slots(n)) - 1
    label: dict[int, int] = {}
    for start in copies:  # ascending, so each BFS root is its component minimum
        if start in label:
            continue
        label[start] = start
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt, _, _ in _neighbours(cur, full, nodes):
                if nxt not in label:
                    label[nxt] = start
                    queue.append(nxt)
    return label


def is_amoeba_at(g: Graph, n: int, budget: int = DEFAULT_EMBEDDING_BUDGET) -> Connectivity:
    label = components(g, n, budget)
    reps = tuple(sorted(set(label.values())))
    return Connectivity(n, len(reps) == 1, len(label), len(reps), reps)


@dataclass(frozen=True)
class AmoebaVerdict:
    graph: str
    n_min: int
    n_max: int
    per_n: dict[int, Connectivity] = field(default_factory=dict)

    @property
    def connected_on_range(self) -> bool:
        return all(c.connected for c in self.per_n.values())

    @property
    def verdict(self) -> str:
        if self.connected_on_range:
            return f"amoeba on [{self.n_min},{self.n_max}]"
        bad = [n for n, c in sorted(self.per_n.items()) if not c.connected]
        return f"not connected at n={','.join(map(str, bad))}"

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "range": [self.n_min, self.n_max],
            "verdict": self.verdict,
            "connected_on_range": self.connected_on_range,
            "per_n": {str(n): c.to_dict() for n, c in sorted(self.per_n.items())},
        }


def amoeba_verdict(g: Graph, n_min: int, n_max: int, budget: int = DEFAULT_EMBEDDING_BUDGET) -> AmoebaVerdict:
    if not g.n < n_min <= n_max:
        raise GraphError(f"need {g.n} < n_min <= n_max, got [{n_min},{n_max}]")
    per_n = {n: is_amoeba_at(g, n, budget) for n in range(n_min, n_max + 1)}
    return AmoebaVerdict(to_graph6(g), n_min, n_max, per_n)


@dataclass(frozen=True)
class ToneChain:
    copies: tuple[EdgeSet, ...]
    replaced: tuple[tuple[int, int], ...]
    """(removed slot, added slot) for each step."""
    tones: tuple[tuple[int, int], ...]
    """(red, blue) edge counts of each copy."""
    connected: bool = True

    def __len__(self) -> int:
        return len(self.replaced)

    def red_tones(self) -> list[int]:
        return [r for r, _ in self.tones]


def interpolation_chain(c: Coloring, g: Graph, start: EdgeSet, end: EdgeSet,
                        budget: int = DEFAULT_EMBEDDING_BUDGET) -> ToneChain:
    """Shortest edge-replacement chain from ``start`` to ``end``.

    Returns a chain with ``connected=False`` and no steps when the two copies
    sit in different components.
    """
    n = c.n
    h = g.without_isolated()
    copies = embedding_masks(h, n, budget=budget)
    nodes = set(copies)
    for name, es in (("start", start), ("end", end)):
        if es.bits not in nodes:
            raise GraphError(f"{name} is not a copy of the pattern in K_{n}")

    def tone(bits: int) -> tuple[int, int]:
        r = (bits & c.red.bits).bit_count()
        return r, h.e - r

    full = (1 << num_slots(n)) - 1
    parent: dict[int, tuple[int, int, int] | None] = {start.bits: None}
    queue = deque([start.bits])
    while queue and end.bits not in parent:
        cur = queue.popleft()
        for nxt, s1, s2 in _neighbours(cur, full, nodes):
            if nxt not in parent:
                parent[nxt] = (cur, s1, s2)
                queue.append(nxt)
    if end.bits not in parent:
        return ToneChain((start, end), (), (tone(start.bits), tone(end.bits)), connected=False)

    seq, steps = [end.bits], []
    while parent[seq[-1]] is not None:
        prev, s1, s2 = parent[seq[-1]]
        steps.append((s1, s2))
        seq.append(prev)
    seq.reverse()
    steps.reverse()
    return ToneChain(
        tuple(EdgeSet(n, b) for b in seq),
        tuple(steps),
        tuple(tone(b) for b in seq),
    )
