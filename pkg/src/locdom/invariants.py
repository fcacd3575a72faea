"""Dominating, locating, metric-locating-dominating and locating-dominating sets.

The predicates follow the definitions literally (neighborhood traces and metric
vectors).  The minimum searches use an equivalent formulation: each of the
four properties holds for ``S`` exactly when ``S`` meets every mask in a
fixed family, so a candidate is tested with a handful of ``&`` operations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Optional, Tuple

from .graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    _int_distances,
    component_of,
    distance_matrix,
    members,
)


class InvariantKind(enum.Enum):
    GAMMA = "gamma"
    BETA = "beta"
    ETA = "eta"
    LAMBDA = "lambda"


@dataclass(frozen=True)
class InvariantResult:
    kind: InvariantKind
    value: int
    witness: int

    @property
    def vertices(self) -> Tuple[int, ...]:
        return members(self.witness)


def _check_set(g: Graph, s: int) -> None:
    if s < 0 or s >> g.n:
        raise GraphError(f"vertex set {s:#x} has vertices outside 0..{g.n - 1}")


def is_dominating(g: Graph, d: int) -> bool:
    _check_set(g, d)
    return all(d >> v & 1 or g.adj[v] & d for v in range(g.n))


def is_locating(g: Graph, s: int) -> bool:
    """Distinct metric vectors for all vertices, every vertex seeing ``s``.

    A vertex whose distances to ``s`` are all ``UNREACHABLE`` disqualifies the
    set; without that rule the edgeless graph would have a locating set of
    size ``n - 1``.
    """
    _check_set(g, s)
    if not s:
        return False
    dist = distance_matrix(g)
    refs = members(s)
    seen = set()
    for v in range(g.n):
        vec = tuple(dist[v][x] for x in refs)
        if all(c is UNREACHABLE for c in vec):
            return False
        if vec in seen:
            return False
        seen.add(vec)
    return True


def is_mld(g: Graph, s: int) -> bool:
    return is_dominating(g, s) and is_locating(g, s)


def is_ld(g: Graph, d: int) -> bool:
    _check_set(g, d)
    traces = set()
    for v in range(g.n):
        if d >> v & 1:
            continue
        t = g.adj[v] & d
        if not t or t in traces:
            return False
        traces.add(t)
    return True


PREDICATES = {
    InvariantKind.GAMMA: is_dominating,
    InvariantKind.BETA: is_locating,
    InvariantKind.ETA: is_mld,
    InvariantKind.LAMBDA: is_ld,
}


def _minimal(masks: List[int]) -> List[int]:
    """Drop duplicates and supersets; hitting the rest hits them too."""
    out: List[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(k & m == k for k in out):
            out.append(m)
    return out


def hitting_family(g: Graph, kind: InvariantKind) -> List[int]:
    """Masks that a set must meet to have the property ``kind``."""
    n = g.n
    adj = g.adj
    masks: List[int] = []
    if kind in (InvariantKind.GAMMA, InvariantKind.ETA, InvariantKind.LAMBDA):
        masks.extend(adj[v] | 1 << v for v in range(n))
    if kind in (InvariantKind.BETA, InvariantKind.ETA):
        dist = _int_distances(g)
        masks.extend(component_of(g, v) for v in range(n))
        for u in range(n):
            du = dist[u]
            for v in range(u + 1, n):
                dv = dist[v]
                m = 0
                for x in range(n):
                    if du[x] != dv[x]:
                        m |= 1 << x
                masks.append(m)
    if kind is InvariantKind.LAMBDA:
        for u in range(n):
            for v in range(u + 1, n):
                masks.append((adj[u] ^ adj[v]) | 1 << u | 1 << v)
    return _minimal(masks)


def subsets_colex(n: int, k: int) -> Iterator[int]:
    """All ``k``-subsets of ``0..n-1`` as masks, in colexicographic order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    s = (1 << k) - 1
    limit = 1 << n
    while s < limit:
        yield s
        low = s & -s
        r = s + low
        s = (((r ^ s) >> 2) // low) | r


def first_of_size(g: Graph, kind: InvariantKind, k: int, family: Optional[List[int]] = None) -> Optional[int]:
    """First ``k``-subset in colex order with the property, else ``None``."""
    if family is None:
        family = hitting_family(g, kind)
    for s in subsets_colex(g.n, k):
        for m in family:
            if not s & m:
                break
        else:
            return s
    return None


def min_invariant(g: Graph, kind: InvariantKind) -> InvariantResult:
    family = hitting_family(g, kind)
    for k in range(1, g.n + 1):
        s = first_of_size(g, kind, k, family)
        if s is not None:
            return InvariantResult(kind, k, s)
    raise AssertionError("the full vertex set always qualifies")


def gamma(g: Graph) -> int:
    return min_invariant(g, InvariantKind.GAMMA).value


def beta(g: Graph) -> int:
    return min_invariant(g, InvariantKind.BETA).value


def eta(g: Graph) -> int:
    return min_invariant(g, InvariantKind.ETA).value


def lam(g: Graph) -> int:
    return min_invariant(g, InvariantKind.LAMBDA).value


def has_value(g: Graph, kind: InvariantKind, value: int) -> bool:
    """Exact check that the invariant equals ``value`` using two subset sizes.

    By upward heredity, no set of size ``value - 1`` rules out every smaller
    size, and one set of size ``value`` is a witness.
    """
    if not 1 <= value <= g.n:
        return False
    family = hitting_family(g, kind)
    if value > 1 and first_of_size(g, kind, value - 1, family) is not None:
        return False
    return first_of_size(g, kind, value, family) is not None


class ChainReport(NamedTuple):
    gamma: int
    beta: int
    eta: int
    lam: int
    holds: bool


def chain_report(g: Graph) -> ChainReport:
    gm, bt, et, lm = (min_invariant(g, k).value for k in InvariantKind)
    holds = max(gm, bt) <= et <= min(gm + bt, lm)
    return ChainReport(gm, bt, et, lm, holds)
