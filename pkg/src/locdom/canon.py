"""Canonical labeling by individualization and equitable refinement.

The canonical form of a graph is the smallest upper-triangle bit string over
all labelings that the refinement tree admits.  The set of admitted labelings
is isomorphism invariant, so two graphs share a form exactly when they are
isomorphic.  Automorphisms found at equal leaves prune the tree, and the ones
collected generate the full automorphism group, which gives vertex orbits for
free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import graph6
from .graph import Graph


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(adj: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Fragments of a split cell are ordered by their neighbor count into the
    splitter, so the result depends only on the graph and the input cells.
    """
    n_cells = len(cells)
    n = sum(len(c) for c in cells)
    queue = [_mask(c) for c in cells]
    qi = 0
    while qi < len(queue) and n_cells < n:
        w = queue[qi]
        qi += 1
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(adj[v] & w).bit_count() for v in cell]
            c0 = counts[0]
            if all(c == c0 for c in counts):
                out.append(cell)
                continue
            groups: dict = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            for c in sorted(groups):
                part = groups[c]
                out.append(part)
                queue.append(_mask(part))
            n_cells += len(groups) - 1
        cells = out
    return cells


def equitable_partition(g: Graph) -> List[List[int]]:
    return refine(g.adj, [list(range(g.n))])


@dataclass(frozen=True)
class Canon:
    perm: Tuple[int, ...]      # perm[k] is the vertex placed at position k
    form: bytes                # graph6 of the canonically relabeled graph
    orbits: Tuple[int, ...]    # orbits[v] is the least vertex in v's orbit
    generators: Tuple[Tuple[int, ...], ...]


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.first_code: Optional[int] = None
        self.first_perm: Tuple[int, ...] = ()
        self.first_path: List[int] = []
        self.best_code: Optional[int] = None
        self.best_perm: Tuple[int, ...] = ()
        self.autos: List[Tuple[int, ...]] = []

    def code(self, perm: Sequence[int]) -> int:
        adj = self.adj
        code = 0
        for j in range(1, self.n):
            row = adj[perm[j]]
            for i in range(j):
                code = (code << 1) | (row >> perm[i] & 1)
        return code

    def _auto(self, p: Sequence[int], q: Sequence[int]) -> None:
        a = [0] * self.n
        for x, y in zip(p, q):
            a[x] = y
        self.autos.append(tuple(a))

    def leaf(self, perm: Tuple[int, ...], path: List[int]) -> Optional[int]:
        code = self.code(perm)
        if self.first_code is None:
            self.first_code = self.best_code = code
            self.first_perm = self.best_perm = perm
            self.first_path = list(path)
            return None
        if code == self.first_code:
            self._auto(self.first_perm, perm)
            # the whole subtree below the divergence point mirrors the first path
            for k, (x, y) in enumerate(zip(path, self.first_path)):
                if x != y:
                    return k
            return len(path)
        if code == self.best_code:
            self._auto(self.best_perm, perm)
        elif code < self.best_code:
            self.best_code = code
            self.best_perm = perm
        return None

    def same_orbit(self, v: int, tried: List[int], path: List[int]) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.autos:
            if all(a[p] == p for p in path):
                for x in range(self.n):
                    rx, ry = find(x), find(a[x])
                    if rx != ry:
                        parent[rx] = ry
        rv = find(v)
        return any(find(t) == rv for t in tried)

    def search(self, cells: List[List[int]], path: List[int]) -> Optional[int]:
        cells = refine(self.adj, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            return self.leaf(tuple(c[0] for c in cells), path)
        depth = len(path)
        tried: List[int] = []
        for v in sorted(cell):
            if tried and self.autos and self.same_orbit(v, tried, path):
                continue
            rest = [u for u in cell if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            jump = self.search(child, path + [v])
            tried.append(v)
            if jump is not None and jump < depth:
                return jump
        return None


def _orbits(n: int, autos: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in autos:
        for x in range(n):
            rx, ry = find(x), find(a[x])
            if rx != ry:
                if rx < ry:
                    parent[ry] = rx
                else:
                    parent[rx] = ry
    return tuple(find(x) for x in range(n))


def canonize(g: Graph) -> Canon:
    s = _Search(g)
    s.search([list(range(g.n))], [])
    perm = s.best_perm
    form = graph6.encode(g.relabel(perm))
    return Canon(perm, form, _orbits(g.n, s.autos), tuple(s.autos))


def canonical_form(g: Graph) -> bytes:
    return canonize(g).form


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonize(g).perm)


def automorphism_orbits(g: Graph) -> Tuple[int, ...]:
    return canonize(g).orbits


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges() == h.num_edges() and canonical_form(g) == canonical_form(h)
