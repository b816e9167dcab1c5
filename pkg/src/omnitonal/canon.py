"""Canonical labeling and automorphism group order by individualization-refinement.

The search tree is the usual one: refine an ordered partition to an equitable
one, individualize each vertex of the first non-singleton cell, recurse.  Every
discrete leaf gives a relabeling; the canonical code is the largest relabeled
edge bitmap.  Automorphisms found when two leaves give the same bitmap prune
siblings that lie in a common orbit, and the orbit sizes along the first path
multiply to |Aut(G)|.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, iter_bits, slot, to_graph6


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    code: bytes
    aut_count: int

    @property
    def graph6(self) -> str:
        return self.code.decode("ascii")


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Split cells (vertex bitmasks) until equitable.

    Each cell is split by the vector of neighbour counts into every cell;
    pieces are ordered by that vector, which keeps the result
    isomorphism-invariant.
    """
    while True:
        out = []
        changed = False
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                key = tuple((adj[v] & c).bit_count() for c in cells)
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[k] for k in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.edges = g.edge_list()
        self.generators: list[tuple[int, ...]] = []
        self.first_leaf: tuple[int, ...] | None = None
        self.first_code: int | None = None
        self.first_path: list[int] = []
        self.best_code = -1
        self.best_perm: tuple[int, ...] | None = None
        self.aut = 1

    def code_of(self, perm: tuple[int, ...]) -> int:
        bits = 0
        for u, v in self.edges:
            bits |= 1 << slot(perm[u], perm[v])
        return bits

    def orbits(self, fixed: list[int]) -> list[int]:
        """Orbit id per vertex under generators fixing ``fixed`` pointwise."""
        parent = list(range(self.g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.generators:
            if any(gamma[v] != v for v in fixed):
                continue
            for v, w in enumerate(gamma):
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.g.n)]

    def leaf(self, cells: list[int]) -> int | None:
        perm = [0] * self.g.n
        for pos, cell in enumerate(cells):
            perm[cell.bit_length() - 1] = pos
        perm = tuple(perm)
        code = self.code_of(perm)
        if self.first_leaf is None:
            self.first_leaf, self.first_code = perm, code
            self.best_code, self.best_perm = code, perm
            return None
        if code == self.first_code:
            self._add_automorphism(self.first_leaf, perm)
            return -1
        if code == self.best_code:
            self._add_automorphism(self.best_perm, perm)
        elif code > self.best_code:
            self.best_code, self.best_perm = code, perm
        return None

    def _add_automorphism(self, a: tuple[int, ...], b: tuple[int, ...]):
        # a and b relabel G onto the same graph, so b^-1 . a is an automorphism
        inv_b = [0] * len(b)
        for v, p in enumerate(b):
            inv_b[p] = v
        gamma = tuple(inv_b[a[v]] for v in range(len(a)))
        if any(gamma[v] != v for v in range(len(gamma))):
            self.generators.append(gamma)

    def run(self):
        start = _refine(self.adj, [(1 << self.g.n) - 1])
        self._search(start, [], True)

    def _search(self, cells: list[int], prefix: list[int], on_first: bool) -> int | None:
        """Returns a level to unwind to after an automorphism with the first
        leaf is found, else None."""
        if len(cells) == self.g.n:
            hit = self.leaf(cells)
            if hit is None:
                return None
            # unwind to the deepest level shared with the first path
            depth = 0
            while depth < len(prefix) and depth < len(self.first_path) and prefix[depth] == self.first_path[depth]:
                depth += 1
            return depth

        idx = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[idx]
        level = len(prefix)
        explored: list[int] = []
        for child_index, w in enumerate(iter_bits(target)):
            if explored:
                orb = self.orbits(prefix)
                if any(orb[w] == orb[x] for x in explored):
                    continue
            child_cells = cells[:idx] + [1 << w, target & ~(1 << w)] + cells[idx + 1:]
            child_cells = _refine(self.adj, child_cells)
            child_first = on_first and child_index == 0
            if child_first:
                self.first_path.append(w)
            explored.append(w)
            jump = self._search(child_cells, prefix + [w], child_first)
            if jump is not None and jump < level:
                return jump
        if on_first:
            orb = self.orbits(prefix)
            first = self.first_path[level]
            self.aut *= sum(1 for v in iter_bits(target) if orb[v] == orb[first])
        return None


@lru_cache(maxsize=65536)
def canonical_form(g: Graph) -> CanonicalForm:
    s = _Search(g)
    s.run()
    canon = g.relabel(s.best_perm)
    return CanonicalForm(g.n, to_graph6(canon).encode("ascii"), s.aut)


def canonical_graph(g: Graph) -> Graph:
    from .graph import parse_graph6

    return parse_graph6(canonical_form(g).graph6)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.e == b.e and canonical_form(a).code == canonical_form(b).code
