import itertools
import random

import pytest
from hypothesis import given

from locdom import graph6
from locdom.canon import automorphism_orbits, canonical_form, canonize, equitable_partition, is_isomorphic
from locdom.enumeration import generate
from locdom.families import bull, complement, complete, cycle, empty, path, star
from locdom.graph import build_graph

from . import oracles
from .test_graph import graphs


def test_p4_and_complement():
    assert canonical_form(path(4)) == canonical_form(complement(path(4)))


def test_c5_and_complement():
    c5 = cycle(5)
    co = complement(c5)
    # explicit relabeling 0->0, 2->1, 4->2, 1->3, 3->4 maps the complement onto the cycle
    perm = [0, 2, 4, 1, 3]
    assert co.relabel(perm) == c5
    assert canonical_form(co) == canonical_form(c5)


def test_bull_labelings():
    b1 = bull()
    b2 = build_graph(5, [(4, 3), (3, 2), (2, 4), (4, 0), (3, 1)])
    assert canonical_form(b1) == canonical_form(b2)


def test_distinguishes_path_and_star():
    assert canonical_form(path(4)) != canonical_form(star(3))
    assert not is_isomorphic(path(4), star(3))


def test_form_is_graph6_of_an_isomorphic_graph():
    g = bull()
    c = canonize(g)
    assert g.relabel(c.perm) == graph6.decode(c.form)


def test_orbits():
    assert automorphism_orbits(path(4)) == (0, 1, 1, 0)
    assert automorphism_orbits(complete(6)) == (0,) * 6
    assert automorphism_orbits(star(4)) == (0, 1, 1, 1, 1)
    assert automorphism_orbits(bull()) == (0, 0, 2, 3, 3)


def test_symmetric_graphs_fast():
    # vertex-transitive graphs would blow up without automorphism pruning
    for g in (complete(20), empty(20), cycle(20), complement(cycle(16))):
        c = canonize(g)
        assert len(set(c.orbits)) == 1


def test_equitable_partition_is_equitable():
    g = bull()
    cells = equitable_partition(g)
    for x in cells:
        for w in cells:
            wm = sum(1 << v for v in w)
            assert len({(g.adj[v] & wm).bit_count() for v in x}) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_partition_matches_labeled_orbits(n):
    """canonical_form classes coincide with relabeling orbits on every labeled graph."""
    ids = oracles.labeled_orbit_ids(n)
    pairs = list(itertools.combinations(range(n), 2))
    form_to_id = {}
    for m, cid in enumerate(ids):
        g = build_graph(n, [p for k, p in enumerate(pairs) if m >> k & 1])
        form = canonical_form(g)
        assert form_to_id.setdefault(form, cid) == cid
    assert len(form_to_id) == len(set(ids))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_raw_scan_agrees(n):
    """Equal canonical forms exactly when the n! scan gives equal codes."""
    reps = generate(n)
    raw = [oracles.raw_code(n, oracles.edges_of(g)) for g in reps]
    assert len(set(raw)) == len(reps)
    for g, code in zip(reps, raw):
        perm = list(range(n))
        random.Random(n).shuffle(perm)
        h = g.relabel(perm)
        assert oracles.raw_code(n, oracles.edges_of(h)) == code
        assert canonical_form(h) == canonical_form(g)


def test_orbit_invariance_over_census(small_graphs):
    rng = random.Random(2024)
    for g in small_graphs:
        form = canonical_form(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == form


@given(graphs(max_n=12))
def test_property_relabel_invariance(g):
    perm = list(range(g.n))[::-1]
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=9))
def test_property_orbits_are_automorphic(g):
    c = canonize(g)
    edges = set(g.edges())
    for a in c.generators:
        assert {tuple(sorted((a[i], a[j]))) for i, j in edges} == edges
    for v in range(g.n):
        assert c.orbits[c.orbits[v]] == c.orbits[v] <= v
