"""Isomorph-free generation of small graphs and census caching.

Graphs of order ``n`` are grown from the classes of order ``n - 1``: the new
vertex ``n - 1`` receives every possible neighborhood, and a child is kept only
when that vertex lies in the automorphism orbit of the vertex placed last by
the canonical labeling.  Duplicates among the children of a single parent
are removed with a local set of canonical forms.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Dict, Iterable, Iterator, List, Optional, Union

from . import graph6
from .canon import canonize, refine
from .graph import UNREACHABLE, Graph, GraphError, complement, diameter, is_connected

log = logging.getLogger(__name__)

MAX_BUILTIN_ORDER = 8


@dataclass(frozen=True)
class CensusFilter:
    connected: Optional[bool] = None
    doubly_connected: Optional[bool] = None
    min_diameter: Optional[int] = None
    max_diameter: Optional[int] = None
    min_complement_diameter: Optional[int] = None
    max_complement_diameter: Optional[int] = None
    min_order: int = 1
    max_order: int = 64

    def __post_init__(self) -> None:
        if self.min_order > self.max_order:
            raise ValueError("empty order range")
        if None not in (self.min_diameter, self.max_diameter) and self.min_diameter > self.max_diameter:
            raise ValueError("empty diameter range")
        if (
            None not in (self.min_complement_diameter, self.max_complement_diameter)
            and self.min_complement_diameter > self.max_complement_diameter
        ):
            raise ValueError("empty complement diameter range")

    def accepts(self, g: Graph) -> bool:
        if not self.min_order <= g.n <= self.max_order:
            return False
        conn = None
        if self.connected is not None or self.doubly_connected is not None:
            conn = is_connected(g)
            if self.connected is not None and conn != self.connected:
                return False
        if self.doubly_connected is not None:
            both = conn and is_connected(complement(g))
            if both != self.doubly_connected:
                return False
        if not _in_range(diameter(g), self.min_diameter, self.max_diameter):
            return False
        if self.min_complement_diameter is not None or self.max_complement_diameter is not None:
            if not _in_range(diameter(complement(g)), self.min_complement_diameter, self.max_complement_diameter):
                return False
        return True


def _in_range(d, lo: Optional[int], hi: Optional[int]) -> bool:
    if lo is None and hi is None:
        return True
    if d is UNREACHABLE:
        return False
    return (lo is None or d >= lo) and (hi is None or d <= hi)


NO_FILTER = CensusFilter()


def _children(parent: Graph) -> List[Graph]:
    """Accepted one-vertex extensions of ``parent`` in neighborhood order."""
    m = parent.n
    n = m + 1
    new = m
    kept: List[Graph] = []
    seen = set()
    for nbhd in range(1 << m):
        rows = list(parent.adj)
        for v in range(m):
            if nbhd >> v & 1:
                rows[v] |= 1 << new
        rows.append(nbhd)
        child = Graph.trusted(n, tuple(rows))
        # the canonically last vertex always sits in the last equitable cell
        cells = refine(child.adj, [list(range(n))])
        if new not in cells[-1]:
            continue
        c = canonize(child)
        if c.orbits[new] != c.orbits[c.perm[-1]]:
            continue
        if c.form in seen:
            continue
        seen.add(c.form)
        kept.append(child)
    return kept


def _children_g6(parent_line: bytes) -> List[bytes]:
    return [graph6.encode(c) for c in _children(graph6.decode(parent_line))]


def generate(n: int, jobs: int = 1) -> List[Graph]:
    """One representative per isomorphism class of order ``n``."""
    return load_or_generate(n, None, jobs)


def _extend(parents: List[Graph], jobs: int) -> List[Graph]:
    if jobs > 1 and len(parents) > 1:
        lines = [graph6.encode(p) for p in parents]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_children_g6, lines, chunksize=max(1, len(lines) // (4 * jobs))))
        return [graph6.decode(c) for chunk in chunks for c in chunk]
    out: List[Graph] = []
    for p in parents:
        out.extend(_children(p))
    return out


def _cache_path(cache_dir: Union[str, os.PathLike], n: int) -> Path:
    return Path(cache_dir) / f"graphs{n}.g6"


def load_or_generate(n: int, cache_dir: Optional[Union[str, os.PathLike]] = None, jobs: int = 1) -> List[Graph]:
    """All classes of order ``n``, read from or written to ``cache_dir``.

    Orders above the built-in ceiling are only available from a cache file.
    """
    if cache_dir is not None:
        path = _cache_path(cache_dir, n)
        if path.exists():
            with open(path, "rb") as fh:
                return [g for _, g in graph6.read_lines(fh)]
    if not 1 <= n <= MAX_BUILTIN_ORDER:
        raise GraphError(f"built-in generation supports orders 1..{MAX_BUILTIN_ORDER}, got {n}")
    if n == 1:
        graphs = [Graph.trusted(1, (0,))]
    else:
        graphs = _extend(load_or_generate(n - 1, cache_dir, jobs), jobs)
    if cache_dir is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".g6.tmp")
        with open(tmp, "wb") as fh:
            write_graph6(graphs, fh)
        tmp.replace(path)
    return graphs


def enumerate_graphs(
    n: int,
    filter: CensusFilter = NO_FILTER,
    cache_dir: Optional[Union[str, os.PathLike]] = None,
    jobs: int = 1,
) -> Iterator[Graph]:
    for g in load_or_generate(n, cache_dir, jobs):
        if filter.accepts(g):
            yield g


def import_graph6(source: Iterable[Union[bytes, str]], filter: CensusFilter = NO_FILTER, strict: bool = True) -> Iterator[Graph]:
    for _, g in graph6.read_lines(source, strict=strict):
        if filter.accepts(g):
            yield g


def write_graph6(graphs: Iterable[Graph], fh: IO[bytes]) -> int:
    count = 0
    for g in graphs:
        fh.write(graph6.encode(g) + b"\n")
        count += 1
    return count


@dataclass
class CensusRecord:
    canonical: bytes
    order: int
    graph6: str
    gamma: Optional[int] = None
    beta: Optional[int] = None
    eta: Optional[int] = None
    lam: Optional[int] = None
    diameter: Optional[int] = None
    complement_diameter: Optional[int] = None
    connected: Optional[bool] = None
    complement_connected: Optional[bool] = None
    complement_canonical: Optional[bytes] = None

    @property
    def doubly_connected(self) -> Optional[bool]:
        if self.connected is None:
            return None
        return self.connected and self.complement_connected

    @property
    def graph(self) -> Graph:
        return graph6.decode(self.graph6)

    def to_json(self) -> Dict:
        d = {
            "graph6": self.graph6,
            "canonical": self.canonical.decode("ascii"),
            "order": self.order,
            "gamma": self.gamma,
            "beta": self.beta,
            "eta": self.eta,
            "lambda": self.lam,
            "diameter": self.diameter,
            "complement_diameter": self.complement_diameter,
            "connected": self.connected,
            "complement_connected": self.complement_connected,
            "doubly_connected": self.doubly_connected,
            "complement_canonical": None if self.complement_canonical is None else self.complement_canonical.decode("ascii"),
        }
        return d

    @classmethod
    def from_json(cls, d: Dict) -> "CensusRecord":
        return cls(
            canonical=d["canonical"].encode("ascii"),
            order=d["order"],
            graph6=d["graph6"],
            gamma=d["gamma"],
            beta=d["beta"],
            eta=d["eta"],
            lam=d["lambda"],
            diameter=d["diameter"],
            complement_diameter=d["complement_diameter"],
            connected=d["connected"],
            complement_connected=d["complement_connected"],
            complement_canonical=None if d.get("complement_canonical") is None else d["complement_canonical"].encode("ascii"),
        )


def _json_distance(d) -> int:
    return -1 if d is UNREACHABLE else d


def profile(g: Graph) -> CensusRecord:
    """Census record with the full invariant profile of ``g``."""
    # imported here to keep enumeration usable without the invariant search
    from .invariants import InvariantKind, min_invariant

    h = complement(g)
    return CensusRecord(
        canonical=canonize(g).form,
        order=g.n,
        graph6=graph6.encode_str(g),
        gamma=min_invariant(g, InvariantKind.GAMMA).value,
        beta=min_invariant(g, InvariantKind.BETA).value,
        eta=min_invariant(g, InvariantKind.ETA).value,
        lam=min_invariant(g, InvariantKind.LAMBDA).value,
        diameter=_json_distance(diameter(g)),
        complement_diameter=_json_distance(diameter(h)),
        connected=is_connected(g),
        complement_connected=is_connected(h),
        complement_canonical=canonize(h).form,
    )


def _profile_g6(line: bytes) -> CensusRecord:
    return profile(graph6.decode(line))


def census_profiles(
    n: int,
    cache_dir: Optional[Union[str, os.PathLike]] = None,
    jobs: int = 1,
    graphs: Optional[List[Graph]] = None,
) -> List[CensusRecord]:
    """Profiled records for every class of order ``n`` (JSON sidecar cached)."""
    sidecar = Path(cache_dir) / f"graphs{n}.json" if cache_dir is not None else None
    if sidecar is not None and sidecar.exists():
        with open(sidecar) as fh:
            return [CensusRecord.from_json(d) for d in json.load(fh)]
    if graphs is None:
        graphs = load_or_generate(n, cache_dir, jobs)
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_profile_g6, [graph6.encode(g) for g in graphs], chunksize=64))
    else:
        records = [profile(g) for g in graphs]
    if sidecar is not None:
        sidecar.parent.mkdir(parents=True, exist_ok=True)
        tmp = sidecar.with_suffix(".json.tmp")
        with open(tmp, "w") as fh:
            json.dump([r.to_json() for r in records], fh)
        tmp.replace(sidecar)
    return records
