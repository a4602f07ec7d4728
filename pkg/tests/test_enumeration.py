"""Stream exhaustiveness: route agreement and closed-form counts."""

import pytest

from paircoal import GraphError, canonical_key, girth, is_connected, structure_class
from paircoal.enumeration import (
    connected_graph_count_by_formula,
    enumerate_graphs,
    enumerate_trees,
    enumerate_unicyclic,
    graph_count_by_formula,
    graphs_via_edge_masks,
    tree_count_by_formula,
    trees_via_prufer,
)


def test_closed_form_counts():
    assert [tree_count_by_formula(n) for n in range(1, 13)] == [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551
    ]
    assert [graph_count_by_formula(n) for n in range(1, 9)] == [
        1, 2, 4, 11, 34, 156, 1044, 12346
    ]
    assert [connected_graph_count_by_formula(n) for n in range(1, 9)] == [
        1, 1, 2, 6, 21, 112, 853, 11117
    ]


def test_tree_stream_counts_match_formula():
    for n in range(1, 11):
        assert len(enumerate_trees(n)) == tree_count_by_formula(n)


def test_tree_stream_matches_prufer_route():
    for n in range(1, 8):
        ours = [g.adj for g in enumerate_trees(n)]
        prufer = [g.adj for g in trees_via_prufer(n)]
        assert ours == prufer


def test_graph_stream_matches_edge_mask_route():
    for n in range(1, 7):
        assert [g.adj for g in enumerate_graphs(n)] == [
            g.adj for g in graphs_via_edge_masks(n)
        ]
        assert [g.adj for g in enumerate_graphs(n, connected=True)] == [
            g.adj for g in graphs_via_edge_masks(n, connected=True)
        ]


def test_graph_stream_counts_match_formula():
    for n in range(1, 8):
        assert len(enumerate_graphs(n)) == graph_count_by_formula(n)
        assert len(enumerate_graphs(n, connected=True)) == (
            connected_graph_count_by_formula(n)
        )


def test_streams_are_non_isomorphic_and_filtered():
    for n in range(2, 7):
        stream = enumerate_graphs(n, connected=True)
        keys = {canonical_key(g) for g in stream}
        assert len(keys) == len(stream)
        assert all(is_connected(g) for g in stream)
    tf = enumerate_graphs(6, connected=True, triangle_free=True)
    assert all(structure_class(g).triangle_free for g in tf)
    full6 = [g for g in enumerate_graphs(6, connected=True)
             if structure_class(g).triangle_free]
    assert len(tf) == len(full6)


def test_triangle_free_streams_have_large_girth():
    for g in enumerate_graphs(5, connected=True, triangle_free=True):
        gir = girth(g)
        assert gir is None or gir >= 4


def test_unicyclic_counts_and_membership():
    expected = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240}
    for n, count in expected.items():
        stream = enumerate_unicyclic(n)
        assert len(stream) == count
        assert all(structure_class(g).unicyclic for g in stream)


def test_unicyclic_cross_route():
    # independent route: filter the connected stream by edge count
    for n in range(3, 8):
        filtered = sorted(
            canonical_key(g)
            for g in enumerate_graphs(n, connected=True)
            if g.edge_count == n
        )
        direct = [canonical_key(g) for g in enumerate_unicyclic(n)]
        assert filtered == direct


def test_sparse_connected_order_nine():
    stream = enumerate_graphs(9, connected=True, max_edges=9)
    with_cycle = [g for g in stream if g.edge_count == 9]
    assert len(with_cycle) == len(enumerate_unicyclic(9))
    trees9 = [g for g in stream if g.edge_count == 8]
    assert len(trees9) == tree_count_by_formula(9)


def test_order_determinism():
    a = [g.adj for g in enumerate_graphs(5)]
    b = [g.adj for g in enumerate_graphs(5)]
    assert a == b
    keys = [canonical_key(g) for g in enumerate_graphs(5)]
    assert keys == sorted(keys)


def test_caps_raise():
    with pytest.raises(GraphError):
        enumerate_trees(13)
    with pytest.raises(GraphError):
        enumerate_graphs(9)
    with pytest.raises(GraphError):
        enumerate_unicyclic(12)
