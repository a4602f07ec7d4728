"""Coalition layer: partners, partition verdicts, solver, oracle, PCG."""

import random

import pytest

from paircoal import (
    Graph,
    GraphError,
    Partition,
    PartitionError,
    are_isomorphic,
    are_pc_partners,
    classify_vertices,
    coalition_graph,
    girth,
    is_pc_partition,
    mask_of,
    pc_number,
    pc_number_oracle,
)
from paircoal.coalition import (
    FAIL_NO_PARTNER,
    SearchBudgetExceeded,
    all_pc_partitions,
    partitions_with_block_count,
)
from paircoal.enumeration import enumerate_graphs, enumerate_trees
from paircoal.families import parse_family, generate


def test_partition_canonicalization():
    p = Partition.from_vertex_lists(5, [[4], [1, 2, 3], [0]])
    assert p.blocks == (mask_of([0]), mask_of([1, 2, 3]), mask_of([4]))
    assert p.rgs() == (0, 1, 1, 1, 2)
    assert p.vertex_lists() == [[0], [1, 2, 3], [4]]
    with pytest.raises(PartitionError):
        Partition.from_vertex_lists(3, [[0], [1]])  # missing vertex
    with pytest.raises(PartitionError):
        Partition.from_vertex_lists(3, [[0, 1], [1, 2]])  # overlap
    with pytest.raises(PartitionError):
        Partition.from_vertex_lists(3, [[0, 1, 2], []])  # empty block


def test_rgs_enumeration_counts():
    # Bell / Stirling spot checks for the oracle's partition generator
    assert len(list(partitions_with_block_count(4, 2))) == 7
    assert len(list(partitions_with_block_count(5, 3))) == 25
    assert sum(len(list(partitions_with_block_count(6, k))) for k in range(1, 7)) == 203


def test_are_pc_partners(path, cycle):
    p5 = path(5)
    assert are_pc_partners(p5, mask_of([0]), mask_of([1, 2, 3]))
    assert not are_pc_partners(p5, mask_of([0]), mask_of([4]))
    assert not are_pc_partners(cycle(4), mask_of([0, 1]), mask_of([2]))
    with pytest.raises(GraphError):
        are_pc_partners(p5, mask_of([0, 1]), mask_of([1, 2]))
    with pytest.raises(GraphError):
        are_pc_partners(p5, 0, mask_of([1]))


def test_is_pc_partition_paths(path):
    p4 = path(4)
    good = Partition.from_vertex_lists(4, [[0, 1], [2, 3]])
    chk = is_pc_partition(p4, good)
    assert chk.valid and chk.partners == ((1,), (0,))
    singles = Partition.from_vertex_lists(4, [[0], [1], [2], [3]])
    chk = is_pc_partition(p4, singles)
    assert not chk.valid
    assert chk.failures[0] == FAIL_NO_PARTNER


def test_is_pc_partition_c8_block_pairing(cycle):
    # the order-4 partition of C_8 splitting into two triples and two
    # singletons: each triple partners the singleton opposite to it
    c8 = cycle(8)
    p = Partition.from_vertex_lists(8, [[0, 1, 4], [2, 6, 7], [5], [3]])
    chk = is_pc_partition(c8, p)
    assert chk.valid
    assert chk.partners == ((3,), (2,), (1,), (0,))
    pcg = coalition_graph(c8, p)
    assert are_isomorphic(pcg, Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_coalition_graph_examples(path, cycle):
    p5 = path(5)
    p = Partition.from_vertex_lists(5, [[0], [1, 2, 3], [4]])
    assert are_isomorphic(coalition_graph(p5, p), path(3))

    c3 = cycle(3)
    singles = Partition.from_vertex_lists(3, [[0], [1], [2]])
    assert are_isomorphic(coalition_graph(c3, singles), generate(parse_family("K(3)")))

    c4 = cycle(4)
    singles4 = Partition.from_vertex_lists(4, [[0], [1], [2], [3]])
    assert are_isomorphic(coalition_graph(c4, singles4), c4)

    c8 = cycle(8)
    e_partition = Partition.from_vertex_lists(8, [[0, 1, 5], [2, 6, 7], [4], [3]])
    assert are_isomorphic(coalition_graph(c8, e_partition), path(4))

    with pytest.raises(PartitionError):
        coalition_graph(path(4), Partition.from_vertex_lists(4, [[0], [1], [2], [3]]))


def test_pc_number_examples(path, cycle, star):
    assert pc_number(path(4)).pc == 2
    assert pc_number(path(5)).pc == 3
    assert pc_number(path(6)).pc == 3
    assert pc_number(cycle(8)).pc == 4
    assert pc_number(cycle(5)).pc == 3
    assert pc_number(cycle(6)).pc == 3
    assert pc_number(star(5)).pc == 5
    assert pc_number(generate(parse_family("NoPcTree")), lemma_pruning=True).pc == 0
    assert pc_number(generate(parse_family("T(3)")), lemma_pruning=True,
                     assume_binary_ceiling=True).pc == 3


def test_pc_number_oracle_examples(path, cycle):
    assert pc_number_oracle(path(2)) == 2
    assert pc_number_oracle(cycle(4)) == 4
    assert pc_number_oracle(Graph.empty(1)) == 0
    with pytest.raises(GraphError):
        pc_number_oracle(Graph.empty(11))


def test_errors_and_caps(path):
    with pytest.raises(GraphError):
        pc_number(path(20))  # above exact_cap without lemma mode
    with pytest.raises(GraphError):
        pc_number(generate(parse_family("K(5)")), lemma_pruning=True)  # delta != 1
    with pytest.raises(GraphError):
        pc_number(path(8), lemma_pruning=True, assume_binary_ceiling=True)


def test_isolated_vertex_law():
    assert pc_number(Graph.empty(5)).pc == 0
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    assert pc_number(g).pc == 0
    assert pc_number(g).stats.mode == "isolated-vertex"


def test_full_vertex_law():
    for n in range(2, 8):
        for g in enumerate_graphs(n, connected=True):
            if classify_vertices(g).full:
                assert pc_number(g).pc == n


def test_pc_at_least_two_and_witness_valid():
    rng = random.Random(31337)
    for _ in range(200):
        n = rng.randint(1, 8)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < rng.choice((0.2, 0.5, 0.8))
        ]
        g = Graph.from_edges(n, edges)
        res = pc_number(g)
        assert res.pc == 0 or res.pc >= 2
        assert res.pc != g.n - 1 or g.n == 1
        if res.pc:
            chk = is_pc_partition(g, res.witness)
            assert chk.valid and res.witness.order == res.pc
            k = res.pc
            for i in range(k):
                row = res.pcg_adjacency[i]
                assert row[i] is False
                assert tuple(j in chk.partners[i] for j in range(k)) == row
        else:
            assert res.witness is None and res.pcg_adjacency is None


def test_relabeling_invariance():
    rng = random.Random(99991)
    for _ in range(150):
        n = rng.randint(2, 8)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45
        ]
        g = Graph.from_edges(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        assert pc_number(g).pc == pc_number(g.relabel(perm)).pc


def test_oracle_equivalence_small_connected():
    for n in range(1, 7):
        for g in enumerate_graphs(n, connected=True):
            assert pc_number(g).pc == pc_number_oracle(g)


def test_lemma_mode_agrees_on_small_trees():
    for n in range(2, 9):
        for g in enumerate_trees(n):
            plain = pc_number(g)
            guided = pc_number(g, lemma_pruning=True)
            assert plain.pc == guided.pc
            assert guided.stats.assumptions  # paranoid runs can see what was used


def test_canonical_witness_is_rgs_least():
    rng = random.Random(6)
    checked = 0
    while checked < 40:
        n = rng.randint(2, 7)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = Graph.from_edges(n, edges)
        res = pc_number(g, canonical_witness=True)
        if res.pc == 0:
            continue
        checked += 1
        best = min(
            (p.rgs() for p in all_pc_partitions(g) if p.order == res.pc),
        )
        assert res.witness.rgs() == best


def test_budget_exhaustion_reports_progress():
    g = generate(parse_family("T(4)"))
    with pytest.raises(SearchBudgetExceeded) as info:
        pc_number(g, lemma_pruning=True, assume_binary_ceiling=True, budget_s=0.05)
    exc = info.value
    assert exc.assumptions
    assert all(k in (2, 3, 4) for k in exc.refuted_orders)


def test_pc_n_implies_small_girth():
    for n in range(2, 8):
        for g in enumerate_graphs(n, connected=True):
            if pc_number(g).pc == n:
                gr = girth(g)
                assert gr is None or gr <= 4
