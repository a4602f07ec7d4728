"""Blossom matching against the enumerate-all-matchings oracle."""

import itertools
import random

import pytest

from paircoal import Graph, GraphError, has_perfect_matching, maximum_matching, mask_of
from paircoal.families import parse_family, generate
from paircoal.matching import (
    has_saturating_matching,
    mask_has_perfect_matching,
    maximum_matching_size_bruteforce,
)


def test_examples(path, cycle):
    assert maximum_matching(path(4)).size == 2
    assert maximum_matching(cycle(5)).size == 2
    # height-2 perfect binary tree: vertices {v2, v3} cover every edge, so
    # two edges are the most any matching can hold
    t2 = generate(parse_family("T(2)"))
    assert maximum_matching_size_bruteforce(t2) == 2
    assert maximum_matching(t2).size == 2


def test_matching_structure(path):
    m = maximum_matching(path(6))
    assert m.size == 3
    covered = 0
    seen = set()
    for u, v in m.edges:
        assert path(6).has_edge(u, v)
        assert u < v
        assert u not in seen and v not in seen
        seen.update((u, v))
        covered |= mask_of([u, v])
    assert covered == m.covered


def test_exhaustive_small():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
            g = Graph.from_edges(n, edges)
            assert maximum_matching(g).size == maximum_matching_size_bruteforce(g)


def test_random_against_bruteforce():
    rng = random.Random(424242)
    for _ in range(500):
        n = rng.randint(2, 10)
        p = rng.random()
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        assert maximum_matching(g).size == maximum_matching_size_bruteforce(g)


def test_relabel_invariance_and_determinism():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(2, 9)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = Graph.from_edges(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        assert maximum_matching(g).size == maximum_matching(g.relabel(perm)).size
        assert maximum_matching(g).edges == maximum_matching(g).edges


def test_edge_addition_monotone():
    rng = random.Random(5150)
    for _ in range(150):
        n = rng.randint(3, 9)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3
        ]
        g = Graph.from_edges(n, edges)
        non_edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not g.has_edge(u, v)
        ]
        if not non_edges:
            continue
        u, v = rng.choice(non_edges)
        bigger = Graph.from_edges(n, edges + [(u, v)])
        assert maximum_matching(bigger).size >= maximum_matching(g).size


def test_has_perfect_matching(path, cycle):
    assert has_perfect_matching(path(5), mask_of([0, 1, 3, 4]))
    assert not has_perfect_matching(path(5), mask_of([0, 1, 2]))  # odd size
    assert not has_perfect_matching(cycle(4), mask_of([0, 2]))
    with pytest.raises(GraphError):
        has_perfect_matching(path(3), 0)


def test_perfect_matching_all_subsets_small():
    rng = random.Random(8)
    graphs = [
        Graph.from_edges(
            n,
            [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5],
        )
        for n in (5, 6, 7)
        for _ in range(6)
    ]

    def brute(g, s):
        verts = [v for v in range(g.n) if (s >> v) & 1]
        if len(verts) % 2:
            return False
        edges = [(u, v) for u in verts for v in verts if u < v and g.has_edge(u, v)]

        def rec(start, used):
            if used == s:
                return True
            for j in range(start, len(edges)):
                u, v = edges[j]
                bit = (1 << u) | (1 << v)
                if not used & bit:
                    if rec(j + 1, used | bit):
                        return True
            return False

        return rec(0, 0)

    for g in graphs:
        for s in range(1, 1 << g.n):
            assert mask_has_perfect_matching(g.n, g.adj, s) == brute(g, s)


def test_saturating_matching_random():
    rng = random.Random(1001)

    def brute(g, required, allowed):
        verts = [v for v in range(g.n) if (allowed >> v) & 1]
        edges = [(u, v) for u in verts for v in verts if u < v and g.has_edge(u, v)]

        def rec(start, used):
            if used & required == required:
                return True
            for j in range(start, len(edges)):
                u, v = edges[j]
                bit = (1 << u) | (1 << v)
                if not used & bit:
                    if rec(j + 1, used | bit):
                        return True
            return False

        return rec(0, 0)

    for _ in range(300):
        n = rng.randint(2, 9)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45
        ]
        g = Graph.from_edges(n, edges)
        allowed = rng.randrange(1, 1 << n)
        required = 0
        for v in range(n):
            if (allowed >> v) & 1 and rng.random() < 0.5:
                required |= 1 << v
        assert has_saturating_matching(n, g.adj, required, allowed) == brute(
            g, required, allowed
        )
