"""Graph core: constructors, predicates, girth, isomorphism."""

import itertools
import random

import pytest

from paircoal import (
    Graph,
    GraphError,
    are_isomorphic,
    canonical_form,
    canonical_key,
    classify_vertices,
    connected_components,
    edges_between,
    girth,
    induced_subgraph,
    is_connected,
    mask_of,
    structure_class,
    vertices_of,
)
from paircoal.enumeration import enumerate_graphs
from paircoal.families import FamilySpec, generate, parse_family


def test_constructor_validation():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(0, ())
    with pytest.raises(GraphError):
        Graph(65, (0,) * 65)


def test_mask_helpers():
    assert mask_of([0, 3, 5]) == 0b101001
    assert vertices_of(0b101001) == [0, 3, 5]


def test_classify_star(star):
    cls = classify_vertices(star(5))
    assert cls.full == mask_of([0])
    assert cls.leaves == mask_of([1, 2, 3, 4])
    assert cls.support == mask_of([0])
    assert cls.strong_support == mask_of([0])
    assert cls.leaf_counts == ((0, 4),)
    assert (cls.delta, cls.Delta) == (1, 4)


def test_classify_path(path):
    cls = classify_vertices(path(4))
    assert cls.leaves == mask_of([0, 3])
    assert cls.support == mask_of([1, 2])
    assert cls.strong_support == 0
    assert cls.full == 0
    assert cls.isolated == 0


def test_classify_no_pc_tree():
    g = generate(parse_family("NoPcTree"))
    cls = classify_vertices(g)
    assert cls.strong_support == mask_of([0, 1, 2, 3])
    assert dict(cls.leaf_counts) == {0: 3, 1: 2, 2: 2, 3: 4}


def test_classify_consistency_small():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            cls = classify_vertices(g)
            assert cls.strong_support & ~cls.support == 0
            for v in vertices_of(cls.full):
                assert g.degree(v) == g.n - 1
            for v in vertices_of(cls.strong_support):
                assert (g.adj[v] & cls.leaves).bit_count() >= 2


def test_girth_basics(path, cycle):
    assert girth(cycle(5)) == 5
    assert girth(cycle(3)) == 3
    assert girth(path(7)) is None
    assert girth(Graph.empty(4)) is None
    assert girth(generate(parse_family("B2(1,1)"))) == 5
    assert girth(generate(parse_family("K(2,3)"))) == 4


def _girth_by_edge_removal(g: Graph):
    # independent oracle: shortest cycle through (u,v) is 1 + dist(u,v) in G - uv
    best = None
    for u, v in g.edges():
        dist = {u: 0}
        frontier = [u]
        while frontier and v not in dist:
            nxt = []
            for x in frontier:
                for y in vertices_of(g.adj[x]):
                    if (x, y) in ((u, v), (v, u)):
                        continue
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        if v in dist:
            cand = dist[v] + 1
            if best is None or cand < best:
                best = cand
    return best


def test_girth_against_edge_removal_oracle():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            assert girth(g) == _girth_by_edge_removal(g)


def test_acyclicity_iff_edge_count():
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            acyclic = girth(g) is None
            assert acyclic == (g.edge_count <= n - len(connected_components(g)))


def test_induced_subgraph(path, cycle):
    sub, mapping = induced_subgraph(cycle(4), mask_of([1, 2]))
    assert sub.edge_count == 1 and mapping == (1, 2)
    sub, _ = induced_subgraph(path(5), mask_of([0, 2, 4]))
    assert sub.edge_count == 0 and sub.n == 3
    sub, _ = induced_subgraph(cycle(8), mask_of([0, 1, 2]))
    assert are_isomorphic(sub, path(3))
    with pytest.raises(GraphError):
        induced_subgraph(path(3), 0)


def test_edges_between(path, cycle):
    g = generate(FamilySpec("KB", (2, 3)))
    cut = edges_between(g, mask_of([0, 1]), mask_of([2, 3, 4]))
    assert cut.count == 6 and cut.is_full and not cut.is_empty
    cut = edges_between(path(4), mask_of([0]), mask_of([3]))
    assert cut.is_empty
    cut = edges_between(cycle(4), mask_of([0, 2]), mask_of([1, 3]))
    assert cut.count == 4 and cut.is_full
    with pytest.raises(GraphError):
        edges_between(path(4), mask_of([0, 1]), mask_of([1, 2]))


def test_structure_class(path, cycle, star):
    f = structure_class(generate(FamilySpec("KB", (3, 3))))
    assert f.complete_bipartite and f.triangle_free and f.complete_multipartite
    f = structure_class(cycle(4))
    assert f.unicyclic and f.complete_bipartite
    f = structure_class(generate(parse_family("S(2,2)")))
    assert f.tree and not f.star
    assert structure_class(star(6)).star
    assert structure_class(path(2)).complete_bipartite
    assert not structure_class(Graph.empty(3)).complete_multipartite
    k4 = generate(FamilySpec("K", (4,)))
    assert structure_class(k4).complete_multipartite
    assert not structure_class(k4).triangle_free


def test_structure_flags_consistent():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            f = structure_class(g)
            if f.tree:
                assert f.connected and g.edge_count == n - 1
            if f.unicyclic:
                assert f.connected and g.edge_count == n
            if f.star:
                assert f.tree
            if f.complete_bipartite:
                assert f.connected and f.triangle_free


def test_isomorphism_basics(path, cycle, star):
    assert are_isomorphic(path(3), star(3))
    assert are_isomorphic(cycle(4), generate(FamilySpec("KB", (2, 2))))
    assert not are_isomorphic(
        Graph.from_edges(4, [(0, 1), (2, 3)]), path(4)
    )
    with pytest.raises(GraphError):
        are_isomorphic(Graph.empty(17), Graph.empty(17))


def test_isomorphism_relabel_invariance():
    rng = random.Random(2024)
    for trial in range(120):
        n = rng.randint(1, 9)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4
        ]
        g = Graph.from_edges(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_key(g) == canonical_key(h)
        assert are_isomorphic(g, h)
        cf = canonical_form(g)
        assert canonical_key(cf) == canonical_key(g)
        assert cf.adj == canonical_form(h).adj


def test_isomorphism_is_equivalence_on_sample():
    rng = random.Random(7)
    sample = []
    for _ in range(12):
        n = rng.randint(2, 6)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        sample.append(Graph.from_edges(n, edges))
    for a in sample:
        assert are_isomorphic(a, a)
    for a, b in itertools.combinations(sample, 2):
        assert are_isomorphic(a, b) == are_isomorphic(b, a)
    for a, b, c in itertools.combinations(sample, 3):
        if are_isomorphic(a, b) and are_isomorphic(b, c):
            assert are_isomorphic(a, c)


def test_connected_components(path):
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    assert connected_components(g) == [mask_of([0, 1]), mask_of([2, 3]), mask_of([4])]
    assert is_connected(path(6))
    assert not is_connected(g)
