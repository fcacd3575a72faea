"""Constructors for the named graphs and graph families.

Vertex substitution ``substitute(g, {i: h})`` replaces vertex ``i`` of ``g`` by
a copy of ``h`` whose vertices inherit every edge of ``i``; two substituted
vertices that were adjacent become completely joined.  The P4-based families
use the path ``0-1-2-3``, so the vertex called ``i`` in the usual 1-based
path labeling is index ``i - 1`` here.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Union

from . import graph6
from .canon import canonical_form
from .graph import MAX_ORDER, Graph, GraphError, build_graph, complement


class Family(enum.Enum):
    P = "path"
    C = "cycle"
    K = "complete"
    EMPTY = "empty"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete-bipartite"
    DOUBLE_STAR = "double-star"
    STAR_ATTACH = "star-attach"
    BULL = "bull"
    HOUSE = "house"
    E = "E"
    F = "F"
    OMEGA = "omega"
    BETA_HIGH = "beta-high"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    h: Optional[int] = None


class FamilyError(GraphError):
    pass


def _need(value: Optional[int], name: str, lo: int) -> int:
    if value is None or value < lo:
        raise FamilyError(f"parameter {name} must be at least {lo}, got {value}")
    return value


def path(n: int) -> Graph:
    _need(n, "n", 1)
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n, "n", 3)
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n, "n", 1)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    _need(n, "n", 1)
    return build_graph(n, [])


def star(r: int) -> Graph:
    """K_{1,r} with the center at 0."""
    _need(r, "r", 1)
    return build_graph(r + 1, [(0, i) for i in range(1, r + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a, "r", 1)
    _need(b, "s", 1)
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def basic(spec: FamilySpec) -> Graph:
    f = spec.family
    if f is Family.P:
        return path(_need(spec.n, "n", 1))
    if f is Family.C:
        return cycle(_need(spec.n, "n", 3))
    if f is Family.K:
        return complete(_need(spec.n, "n", 1))
    if f is Family.EMPTY:
        return empty(_need(spec.n, "n", 1))
    if f is Family.STAR:
        return star(_need(spec.r, "r", 1))
    if f is Family.COMPLETE_BIPARTITE:
        return complete_bipartite(_need(spec.r, "r", 1), _need(spec.s, "s", 1))
    raise FamilyError(f"{f.value} is not a basic family")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise FamilyError(f"union has {n} vertices, more than {MAX_ORDER}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    gmask = g.full
    hmask = h.full << g.n
    rows = [row | (hmask if i < g.n else gmask) for i, row in enumerate(u.adj)]
    return Graph(u.n, tuple(rows))


def double_star(r: int, s: int) -> Graph:
    """Centers 0 and 1; leaves 2..r+1 on 0 and r+2..r+s+1 on 1."""
    _need(r, "r", 1)
    _need(s, "s", 1)
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(r)]
    edges += [(1, 2 + r + i) for i in range(s)]
    return build_graph(r + s + 2, edges)


def star_attach(r: int, s: int) -> Graph:
    """Star K_{1,r} (center 0, leaves 1..r) plus vertex r+1 on leaves 1..s."""
    if s is None or r is None or not 2 <= s <= r - 1:
        raise FamilyError(f"star_attach needs 2 <= s <= r - 1, got r={r}, s={s}")
    edges = [(0, i) for i in range(1, r + 1)]
    edges += [(r + 1, i) for i in range(1, s + 1)]
    return build_graph(r + 2, edges)


def substitute(g: Graph, assignments: Mapping[int, Graph]) -> Graph:
    for v in assignments:
        if not 0 <= v < g.n:
            raise FamilyError(f"vertex {v} out of range for a graph of order {g.n}")
    sizes = [assignments[v].n if v in assignments else 1 for v in range(g.n)]
    total = sum(sizes)
    if total > MAX_ORDER:
        raise FamilyError(f"substitution yields {total} vertices, more than {MAX_ORDER}")
    start = [0] * g.n
    acc = 0
    for v, size in enumerate(sizes):
        start[v] = acc
        acc += size
    block = [((1 << sizes[v]) - 1) << start[v] for v in range(g.n)]
    rows = [0] * total
    for v in range(g.n):
        outside = 0
        for u in range(g.n):
            if g.adj[v] >> u & 1:
                outside |= block[u]
        h = assignments.get(v)
        for k in range(sizes[v]):
            inner = h.adj[k] << start[v] if h is not None else 0
            rows[start[v] + k] = outside | inner
    return Graph(total, tuple(rows))


def bull() -> Graph:
    """Triangle 0-1-2 with pendant 3 on 0 and pendant 4 on 1."""
    return build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


def house() -> Graph:
    return complement(path(5))


_STORE_NAME = "derived_ef.g6"


def default_store() -> Path:
    return Path(str(resources.files("locdom") / "data" / _STORE_NAME))


def read_store(store: Optional[Union[str, os.PathLike]] = None) -> Dict[str, Graph]:
    """Graphs saved by ``verifier.derive_ef``, keyed ``E`` and ``F``."""
    path = Path(store) if store is not None else default_store()
    if not path.exists():
        raise FamilyError(f"E and F have not been derived yet (no store at {path})")
    out: Dict[str, Graph] = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            name, code = line.split()
            out[name] = graph6.decode(code)
    if set(out) != {"E", "F"}:
        raise FamilyError(f"store {path} must hold exactly E and F")
    return out


def write_store(e: Graph, f: Graph, store: Optional[Union[str, os.PathLike]] = None, note: str = "") -> Path:
    path = Path(store) if store is not None else default_store()
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["# graphs E and F = complement(E), derived by census search"]
    if note:
        lines.append(f"# {note}")
    lines.append(f"E {graph6.encode_str(e)}")
    lines.append(f"F {graph6.encode_str(f)}")
    path.write_text("\n".join(lines) + "\n")
    return path


def named(family: Family, store: Optional[Union[str, os.PathLike]] = None) -> Graph:
    if family is Family.BULL:
        return bull()
    if family is Family.HOUSE:
        return house()
    if family in (Family.E, Family.F):
        return read_store(store)[family.value]
    raise FamilyError(f"{family.value} is not a named graph")


def dedup(graphs: List[Graph]) -> List[Graph]:
    """Keep the first graph of each isomorphism class, preserving order."""
    seen = set()
    out = []
    for g in graphs:
        form = canonical_form(g)
        if form not in seen:
            seen.add(form)
            out.append(g)
    return out


def omega(n: int) -> List[Graph]:
    """Doubly-connected graphs reaching the largest location-number sum."""
    if n < 4:
        raise FamilyError(f"omega needs n >= 4, got {n}")
    p4 = path(4)
    members: List[Graph] = []
    if n == 4:
        members.append(p4)
    if n == 5:
        members += [cycle(5), bull()]
    for i in (0, 1):
        members.append(substitute(p4, {i: complete(n - 3)}))
        members.append(substitute(p4, {i: empty(n - 3)}))
    for r in range(1, n - 2):
        members.append(substitute(p4, {0: complete(r), 1: complete(n - r - 2)}))
        members.append(substitute(p4, {0: empty(r), 2: empty(n - r - 2)}))
    return dedup(members)


def beta_high_family(n: int) -> List[Graph]:
    """Connected graphs whose location number is n - 2 or n - 1."""
    if n < 2:
        raise FamilyError(f"beta_high_family needs n >= 2, got {n}")
    members = [complete(n)]
    for h in range(1, n):
        members.append(complete_bipartite(h, n - h))
        members.append(join(complete(h), empty(n - h)))
        if h <= n - 2:
            members.append(join(complete(h), disjoint_union(complete(1), complete(n - h - 1))))
    return dedup(members)


def double_star_family(n: int) -> List[Graph]:
    """All K2(r, s) of order n, up to isomorphism."""
    return dedup([double_star(r, n - 2 - r) for r in range(1, n - 2)])


def star_attach_family(n: int) -> List[Graph]:
    """All K^s_{1,r} of order n (r = n - 2, 2 <= s <= r - 1)."""
    r = n - 2
    return dedup([star_attach(r, s) for s in range(2, r)])


def eta_upper_family(n: int) -> List[Graph]:
    """Double stars, star-attach graphs and their complements of order n."""
    base = double_star_family(n) + star_attach_family(n)
    return dedup(base + [complement(g) for g in base])


def build(spec: FamilySpec, store: Optional[Union[str, os.PathLike]] = None) -> List[Graph]:
    """Every graph a spec names (one for single graphs, several for families)."""
    f = spec.family
    if f in (Family.P, Family.C, Family.K, Family.EMPTY, Family.STAR, Family.COMPLETE_BIPARTITE):
        return [basic(spec)]
    if f is Family.DOUBLE_STAR:
        return [double_star(_need(spec.r, "r", 1), _need(spec.s, "s", 1))]
    if f is Family.STAR_ATTACH:
        return [star_attach(spec.r, spec.s)]
    if f in (Family.BULL, Family.HOUSE, Family.E, Family.F):
        return [named(f, store)]
    if f is Family.OMEGA:
        return omega(_need(spec.n, "n", 4))
    if f is Family.BETA_HIGH:
        return beta_high_family(_need(spec.n, "n", 2))
    raise FamilyError(f"unknown family {f}")
