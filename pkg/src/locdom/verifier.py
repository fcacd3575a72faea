"""Exhaustive checks of the Nordhaus-Gaddum bounds and their extremal graphs.

Every bound is checked against a census of isomorphism classes.  Where a bound
comes with a characterization of the graphs attaining it, the set of attaining
canonical forms is compared with the canonical forms of the graphs built by
``families`` at the same order.
"""

from __future__ import annotations

import enum
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import families as fam
from . import graph6
from .canon import canonical_form
from .enumeration import (
    MAX_BUILTIN_ORDER,
    CensusRecord,
    census_profiles,
    load_or_generate,
    profile,
)
from .graph import (
    Graph,
    GraphError,
    complement,
    diameter,
    find_induced_p4,
    is_connected,
    iter_bits,
    mask_of,
)
from .invariants import InvariantKind, first_of_size, has_value, is_ld, is_locating


class PreconditionError(GraphError):
    pass


class TheoremId(enum.Enum):
    BETA1 = "beta1"
    BETA2 = "beta2"
    ETA1 = "eta1"
    ETA2 = "eta2"
    LAMBDA2 = "lambda2"
    LAMBDA3 = "lambda3"
    LAMBDA_DIFF = "lambda-diff"
    LAMBDA_COROLLARY = "lambda-corollary"
    GAMMA_NG = "gamma-ng"
    CHAIN = "chain"
    BETA_PLUS_D = "beta-plus-d"


# ---------------------------------------------------------------- census source


class Census:
    """Profiled isomorphism classes by order, from generation or graph6 input.

    Imported graphs are assumed to be one per class already.
    """

    def __init__(
        self,
        cache_dir: Optional[Union[str, os.PathLike]] = None,
        jobs: int = 1,
        imported: Optional[Iterable[Graph]] = None,
    ):
        self.cache_dir = cache_dir
        self.jobs = jobs
        self._imported: Dict[int, List[Graph]] = {}
        for g in imported or ():
            self._imported.setdefault(g.n, []).append(g)
        self._graphs: Dict[int, List[Graph]] = {}
        self._records: Dict[int, List[CensusRecord]] = {}
        self._by_form: Dict[int, Dict[bytes, CensusRecord]] = {}

    def supports(self, n: int) -> bool:
        return n in self._imported or 1 <= n <= MAX_BUILTIN_ORDER

    def graphs(self, n: int) -> List[Graph]:
        if n not in self._graphs:
            if n in self._imported:
                self._graphs[n] = self._imported[n]
            elif 1 <= n <= MAX_BUILTIN_ORDER:
                self._graphs[n] = load_or_generate(n, self.cache_dir, self.jobs)
            else:
                raise GraphError(f"no census source for order {n}")
        return self._graphs[n]

    def records(self, n: int) -> List[CensusRecord]:
        if n not in self._records:
            if n in self._imported:
                recs = census_profiles(n, None, self.jobs, graphs=self._imported[n])
            else:
                self.graphs(n)
                recs = census_profiles(n, self.cache_dir, self.jobs, graphs=self._graphs[n])
            self._records[n] = recs
            self._by_form[n] = {r.canonical: r for r in recs}
        return self._records[n]

    def complement_of(self, rec: CensusRecord) -> CensusRecord:
        self.records(rec.order)
        try:
            return self._by_form[rec.order][rec.complement_canonical]
        except KeyError:
            # incomplete imported census: profile the complement directly
            return profile(complement(rec.graph))


# ---------------------------------------------------------------- theorem table


@dataclass
class Violation:
    order: int
    graph6: str
    message: str

    def to_json(self) -> Dict:
        return {"order": self.order, "graph6": self.graph6, "message": self.message}


@dataclass
class TheoremReport:
    theorem: TheoremId
    orders: List[int]
    counts: Dict[int, int]
    violations: List[Violation]
    found: List[Tuple[str, int, str]]
    expected: List[Tuple[str, int, str]]
    match: bool
    elapsed_ms: float
    skipped_orders: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and self.match

    def to_json(self) -> Dict:
        def cls(items):
            return [{"case": c, "order": n, "graph6": g} for c, n, g in items]

        return {
            "id": self.theorem.value,
            "orders": self.orders,
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "violations": [v.to_json() for v in self.violations],
            "found": cls(self.found),
            "expected": cls(self.expected),
            "match": self.match,
            "skipped_orders": self.skipped_orders,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass(frozen=True)
class _Rule:
    min_order: int
    scope: str  # "all", "connected" or "doubly"
    value: Callable[[CensusRecord, CensusRecord], int]
    bounds: Callable[[int, CensusRecord], Tuple[Optional[int], Optional[int]]]
    lower: Optional[Callable[[int], List[Graph]]] = None
    upper: Optional[Callable[[int], List[Graph]]] = None
    label: str = ""


def _kn_pair(n: int) -> List[Graph]:
    return [fam.complete(n), fam.empty(n)]


def _only_at(order: int, build: Callable[[], List[Graph]]) -> Callable[[int], List[Graph]]:
    return lambda n: build() if n == order else []


def _small_eta(n: int) -> List[Graph]:
    named = [fam.path(5), fam.cycle(5), fam.bull(), fam.house()]
    store = fam.read_store()
    named += [store["E"], store["F"]]
    return [g for g in named if g.n == n]


def _small_lambda(n: int) -> List[Graph]:
    return [g for g in (fam.path(5), fam.cycle(5), fam.bull(), fam.house()) if g.n == n]


def _chain_gap(g: CensusRecord, _: CensusRecord) -> int:
    ok = max(g.gamma, g.beta) <= g.eta <= min(g.gamma + g.beta, g.lam)
    return 0 if ok else 1


RULES: Dict[TheoremId, _Rule] = {
    TheoremId.BETA1: _Rule(
        2, "all", lambda g, h: g.beta + h.beta, lambda n, g: (2, 2 * n - 1),
        _only_at(4, lambda: [fam.path(4)]), _kn_pair, "beta(G)+beta(co-G)",
    ),
    TheoremId.BETA2: _Rule(
        4, "doubly", lambda g, h: g.beta + h.beta, lambda n, g: (2, 2 * n - 6),
        _only_at(4, lambda: [fam.path(4)]), fam.omega, "beta(G)+beta(co-G)",
    ),
    TheoremId.ETA1: _Rule(
        2, "all", lambda g, h: g.eta + h.eta, lambda n, g: (3, 2 * n - 1),
        _only_at(2, lambda: _kn_pair(2)), _kn_pair, "eta(G)+eta(co-G)",
    ),
    TheoremId.ETA2: _Rule(
        5, "doubly", lambda g, h: g.eta + h.eta, lambda n, g: (4, 2 * n - 5),
        _small_eta, fam.eta_upper_family, "eta(G)+eta(co-G)",
    ),
    TheoremId.LAMBDA2: _Rule(
        2, "all", lambda g, h: g.lam + h.lam, lambda n, g: (3, 2 * n - 1),
        _only_at(2, lambda: _kn_pair(2)), _kn_pair, "lambda(G)+lambda(co-G)",
    ),
    TheoremId.LAMBDA3: _Rule(
        5, "doubly", lambda g, h: g.lam + h.lam, lambda n, g: (4, 2 * n - 5),
        _small_lambda, fam.eta_upper_family, "lambda(G)+lambda(co-G)",
    ),
    TheoremId.LAMBDA_DIFF: _Rule(
        2, "all", lambda g, h: g.lam - h.lam, lambda n, g: (-1, 1), label="lambda(G)-lambda(co-G)",
    ),
    TheoremId.LAMBDA_COROLLARY: _Rule(
        2, "all", lambda g, h: g.lam + h.lam, lambda n, g: (2 * g.lam - 1, 2 * g.lam + 1),
        label="lambda(G)+lambda(co-G)",
    ),
    TheoremId.GAMMA_NG: _Rule(
        2, "all", lambda g, h: g.gamma + h.gamma, lambda n, g: (None, n + 1),
        upper=_kn_pair, label="gamma(G)+gamma(co-G)",
    ),
    TheoremId.CHAIN: _Rule(
        1, "all", _chain_gap, lambda n, g: (0, 0), label="chain defect",
    ),
    TheoremId.BETA_PLUS_D: _Rule(
        1, "connected", lambda g, h: g.beta + g.diameter, lambda n, g: (None, n), label="beta(G)+diam(G)",
    ),
}


def _in_scope(rule: _Rule, rec: CensusRecord) -> bool:
    if rule.scope == "connected":
        return bool(rec.connected)
    if rule.scope == "doubly":
        return bool(rec.doubly_connected)
    return True


def _forms(graphs: Iterable[Graph]) -> List[str]:
    return sorted({canonical_form(g).decode("ascii") for g in graphs})


def verify(theorem: TheoremId, orders: Sequence[int], source: Optional[Census] = None) -> TheoremReport:
    """Check one theorem over every census class of the given orders."""
    start = time.perf_counter()
    source = source or Census()
    rule = RULES[theorem]
    checked: List[int] = []
    skipped: List[int] = []
    counts: Dict[int, int] = {}
    violations: List[Violation] = []
    found: List[Tuple[str, int, str]] = []
    expected: List[Tuple[str, int, str]] = []
    for n in orders:
        if n < rule.min_order:
            continue
        if not source.supports(n):
            skipped.append(n)
            continue
        checked.append(n)
        count = 0
        for rec in source.records(n):
            if not _in_scope(rule, rec):
                continue
            count += 1
            other = source.complement_of(rec)
            value = rule.value(rec, other)
            lo, hi = rule.bounds(n, rec)
            if (lo is not None and value < lo) or (hi is not None and value > hi):
                violations.append(Violation(n, rec.graph6, f"{rule.label} = {value} outside [{lo}, {hi}]"))
            form = rec.canonical.decode("ascii")
            if rule.lower is not None and value == lo:
                found.append(("lower", n, form))
            if rule.upper is not None and value == hi:
                found.append(("upper", n, form))
        counts[n] = count
        if rule.lower is not None:
            expected += [("lower", n, f) for f in _forms(rule.lower(n))]
        if rule.upper is not None:
            expected += [("upper", n, f) for f in _forms(rule.upper(n))]
    if not checked:
        raise GraphError(f"no supported orders for {theorem.value} among {list(orders)}")
    found.sort()
    expected.sort()
    elapsed = (time.perf_counter() - start) * 1000.0
    return TheoremReport(theorem, checked, counts, violations, found, expected, found == expected, elapsed, skipped)


# ---------------------------------------------------------------- constructions


class Target(enum.Enum):
    GRAPH = "G"
    COMPLEMENT = "complement"


def construct_locating_set_diam2(g: Graph, require_graph: bool = False) -> Tuple[Target, int]:
    """Locating set of size n - 4 for a doubly-connected graph whose diameter
    and complement diameter are both 2.

    Built from an induced P4 ``a-b-c-d`` and a common neighbor ``e`` of its
    ends.  When ``e`` misses both ``b`` and ``c`` the five vertices form an
    induced 5-cycle in both graphs, and the set may come out locating for the
    complement instead; ``require_graph`` then falls back to subset search.
    """
    n = g.n
    if n < 6:
        raise PreconditionError(f"needs order >= 6, got {n}")
    h = complement(g)
    if not (is_connected(g) and is_connected(h)):
        raise PreconditionError("graph is not doubly-connected")
    dg, dh = diameter(g), diameter(h)
    if dg != 2 or dh != 2:
        raise PreconditionError(f"needs both diameters equal to 2, got {dg} and {dh}")

    adj = g.adj
    full = g.full
    a, b, c, d = find_induced_p4(g)
    e = _least(adj[a] & adj[d])
    nb, nc = adj[e] >> b & 1, adj[e] >> c & 1
    target = Target.GRAPH
    if not nb and not nc:
        ring = (a, b, c, d, e)
        ring_mask = mask_of(ring)
        f = _least(full & ~ring_mask)
        if (adj[f] & ring_mask).bit_count() <= 2:
            cyc, host = ring, g
        else:
            # the same five vertices, in the order they form a cycle in the complement
            cyc, host = (a, c, e, b, d), h
            target = Target.COMPLEMENT
        for i in range(5):
            x, z = cyc[i], cyc[(i + 2) % 5]
            if not host.adj[f] >> x & 1 and not host.adj[f] >> z & 1:
                drop = (cyc[(i + 1) % 5], cyc[(i + 3) % 5], cyc[(i + 4) % 5], f)
                break
        else:
            raise AssertionError("a vertex with two ring neighbors misses a non-consecutive pair")
    elif nb and not nc:
        f = _least(full & ~adj[e] & ~adj[b] & ~(1 << e) & ~(1 << b))
        drop = (a, c, d, f)
    elif nc and not nb:
        f = _least(full & ~adj[e] & ~adj[c] & ~(1 << e) & ~(1 << c))
        drop = (d, b, a, f)
    else:
        f = _least(full & ~adj[b] & ~adj[c] & ~(1 << b) & ~(1 << c))
        drop = (a, d, e, f)
    s = full & ~mask_of(drop)
    host = g if target is Target.GRAPH else h
    if not is_locating(host, s) or (require_graph and target is Target.COMPLEMENT):
        s = first_of_size(g, InvariantKind.BETA, n - 4)
        if s is None:
            raise AssertionError("no locating set of size n - 4")
        target = Target.GRAPH
    return target, s


def _least(mask: int) -> int:
    if not mask:
        raise AssertionError("expected a nonempty vertex set")
    return (mask & -mask).bit_length() - 1


def transfer_ld_set(g: Graph, s: int) -> int:
    """LD-set of the complement obtained from the LD-set ``s`` of ``g``."""
    if not is_ld(g, s):
        raise PreconditionError("input is not a locating-dominating set of the graph")
    for w in iter_bits(g.full & ~s):
        if g.adj[w] & s == s:
            return s | 1 << w
    return s


# ---------------------------------------------------------------- censuses


def census_by_invariant(
    kind: InvariantKind,
    value: int,
    max_n: int,
    connected_only: bool = True,
    source: Optional[Census] = None,
    min_n: int = 2,
) -> List[CensusRecord]:
    """All nontrivial classes up to order ``max_n`` whose invariant equals ``value``."""
    source = source or Census()
    out: List[CensusRecord] = []
    for n in range(min_n, max_n + 1):
        if not source.supports(n):
            raise GraphError(f"order {n} exceeds the built-in census; supply a graph6 source")
        for g in source.graphs(n):
            if connected_only and not is_connected(g):
                continue
            if has_value(g, kind, value):
                out.append(profile(g))
    return out


class DerivationError(RuntimeError):
    pass


def derive_ef(
    max_n: int = MAX_BUILTIN_ORDER,
    source: Optional[Census] = None,
    store: Optional[Union[str, os.PathLike]] = None,
    write: bool = True,
) -> Tuple[Graph, Graph]:
    """Identify the two graphs besides P5, C5, bull and house for which both
    the graph and its complement have metric-location-domination number 2.
    """
    if max_n < 8:
        raise DerivationError("the search must reach order 8")
    source = source or Census()
    hits: Dict[bytes, Graph] = {}
    for n in range(5, max_n + 1):
        for g in source.graphs(n):
            if not is_connected(g):
                continue
            h = complement(g)
            if not is_connected(h):
                continue
            if has_value(g, InvariantKind.ETA, 2) and has_value(h, InvariantKind.ETA, 2):
                hits[canonical_form(g)] = g
    known = {canonical_form(x): name for x, name in
             ((fam.path(5), "P5"), (fam.cycle(5), "C5"), (fam.bull(), "bull"), (fam.house(), "house"))}
    missing = [name for form, name in known.items() if form not in hits]
    if missing:
        raise DerivationError(f"census lacks {missing}; found {sorted(f.decode() for f in hits)}")
    rest = sorted(form for form in hits if form not in known)
    if len(rest) != 2:
        raise DerivationError(f"expected two further classes, found {len(rest)}: {[f.decode() for f in rest]}")
    e = graph6.decode(rest[0])
    f = graph6.decode(rest[1])
    if canonical_form(complement(e)) != rest[1]:
        raise DerivationError("the two remaining classes are not complements of each other")
    if write:
        fam.write_store(e, f, store, note=f"doubly-connected, order 5..{max_n}, eta(G) = eta(co-G) = 2")
    return e, f
