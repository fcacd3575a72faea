"""Bitmask graph representation and the basic metric machinery.

A graph on ``n <= 64`` vertices stores one integer per vertex; bit ``j`` of
row ``i`` is set when ``ij`` is an edge.  Vertex sets are plain integers used
as bit masks over ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graphs or failed preconditions."""


class _Unreachable:
    """Distance between vertices in different components."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must lie in [1, {MAX_ORDER}], got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency needs exactly one row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits beyond the vertex range")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``k`` is the old vertex ``perm[k]``."""
        pos = [0] * self.n
        for k, v in enumerate(perm):
            pos[v] = k
        rows = [0] * self.n
        for k, v in enumerate(perm):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << pos[u]
            rows[k] = row
        return Graph.trusted(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @classmethod
    def trusted(cls, n: int, adj: Tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee a well-formed adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Tuple[int, ...]:
    return tuple(iter_bits(mask))


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    if not isinstance(n, int) or not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must lie in [1, {MAX_ORDER}], got {n!r}")
    rows = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise GraphError(f"self-loop ({i}, {j})")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph.trusted(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def bfs_layers(g: Graph, source: int) -> list:
    """Masks of the vertices at distance 0, 1, 2, ... from ``source``."""
    layers = [1 << source]
    seen = 1 << source
    frontier = 1 << source
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt
        frontier = nxt


def _int_distances(g: Graph) -> list:
    """Distance rows with -1 for unreachable pairs (internal use only)."""
    rows = []
    for s in range(g.n):
        row = [-1] * g.n
        for d, layer in enumerate(bfs_layers(g, s)):
            for v in iter_bits(layer):
                row[v] = d
        rows.append(row)
    return rows


DistanceMatrix = Tuple[Tuple[object, ...], ...]


def distance_matrix(g: Graph) -> DistanceMatrix:
    return tuple(
        tuple(UNREACHABLE if d < 0 else d for d in row) for row in _int_distances(g)
    )


def diameter(g: Graph):
    """Largest distance, or ``UNREACHABLE`` for a disconnected graph."""
    best = 0
    for s in range(g.n):
        layers = bfs_layers(g, s)
        if sum(m.bit_count() for m in layers) != g.n:
            return UNREACHABLE
        best = max(best, len(layers) - 1)
    return best


def component_of(g: Graph, v: int) -> int:
    reach = 0
    for layer in bfs_layers(g, v):
        reach |= layer
    return reach


def is_connected(g: Graph) -> bool:
    return component_of(g, 0) == g.full


class Connectivity(NamedTuple):
    connected: bool
    complement_connected: bool
    doubly_connected: bool


def connectivity(g: Graph) -> Connectivity:
    here = is_connected(g)
    there = is_connected(complement(g))
    return Connectivity(here, there, here and there)


def metric_vector(g: Graph, s: int, v: int, dist: Optional[DistanceMatrix] = None) -> tuple:
    """Distances from ``v`` to the vertices of ``s`` in ascending index order."""
    if not s:
        raise GraphError("metric vector needs a nonempty reference set")
    if s >> g.n:
        raise GraphError("reference set has vertices outside the graph")
    if dist is None:
        dist = distance_matrix(g)
    return tuple(dist[v][x] for x in iter_bits(s))


def find_induced_p4(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """Lexicographically least ``(a, b, c, d)`` inducing the path a-b-c-d."""
    adj = g.adj
    n = g.n
    for a in range(n):
        for b in iter_bits(adj[a]):
            for c in iter_bits(adj[b] & ~adj[a] & ~(1 << a)):
                for d in iter_bits(adj[c] & ~adj[a] & ~adj[b] & ~(1 << a) & ~(1 << b)):
                    return (a, b, c, d)
    return None
