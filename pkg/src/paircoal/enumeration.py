"""Exhaustive streams of pairwise non-isomorphic small graphs.

Primary generation is by vertex augmentation with canonical-form dedup:
every tree arises from a smaller tree by attaching a leaf, every graph by
adding one vertex with an arbitrary neighborhood, and every connected graph
by adding a vertex with a nonempty neighborhood to a connected parent
(remove any non-cut vertex to see completeness). Streams are materialized
sorted by canonical key, so iteration order is reproducible.

Independent cross-checks live alongside: labeled sweeps (all edge masks,
all pruefer sequences) for tiny orders, and closed-form counts (cycle-index
sum for graphs, an Euler-transform inverse for connected graphs, and the
rooted/unrooted recurrence for trees).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd

from .graphs import Graph, GraphError, canonical_form, canonical_key, is_connected

TREES_ORDER_CAP = 12
GRAPHS_ORDER_CAP = 8
SPARSE_CONNECTED_ORDER_CAP = 9
UNICYCLIC_ORDER_CAP = 11
PRUFER_ORDER_CAP = 8
EDGE_SWEEP_ORDER_CAP = 6

_cache: dict[tuple, list[Graph]] = {}


def _dedup_sorted(graphs) -> list[Graph]:
    by_key: dict[tuple[int, int], Graph] = {}
    for g in graphs:
        key = canonical_key(g)
        if key not in by_key:
            by_key[key] = canonical_form(g)
    return [by_key[k] for k in sorted(by_key)]


def enumerate_trees(n: int) -> list[Graph]:
    """All non-isomorphic trees of order ``n`` (leaf augmentation)."""
    if not 1 <= n <= TREES_ORDER_CAP:
        raise GraphError(f"tree enumeration capped at order {TREES_ORDER_CAP}")
    key = ("trees", n)
    if key in _cache:
        return _cache[key]
    if n == 1:
        out = [Graph.empty(1)]
    else:
        out = []
        seen: set[tuple[int, int]] = set()
        for parent in enumerate_trees(n - 1):
            for v in range(parent.n):
                adj = list(parent.adj) + [1 << v]
                adj[v] |= 1 << (n - 1)
                child = Graph(n, tuple(adj))
                k = canonical_key(child)
                if k not in seen:
                    seen.add(k)
                    out.append(canonical_form(child))
        out.sort(key=canonical_key)
    _cache[key] = out
    return out


def enumerate_graphs(
    n: int,
    *,
    connected: bool = False,
    triangle_free: bool = False,
    max_edges: int | None = None,
) -> list[Graph]:
    """All non-isomorphic graphs of order ``n`` under the given filters."""
    cap = GRAPHS_ORDER_CAP
    if connected and max_edges is not None and max_edges <= n + 1:
        cap = SPARSE_CONNECTED_ORDER_CAP
    if not 1 <= n <= cap:
        raise GraphError(f"graph enumeration capped at order {cap} for these filters")
    key = ("graphs", n, connected, triangle_free, max_edges)
    if key in _cache:
        return _cache[key]
    if n == 1:
        out = [Graph.empty(1)]
    else:
        parents = enumerate_graphs(
            n - 1,
            connected=connected,
            triangle_free=triangle_free,
            max_edges=max_edges,
        )
        seen: set[tuple[int, int]] = set()
        out = []
        lo = 1 if connected else 0
        for parent in parents:
            budget = None
            if max_edges is not None:
                budget = max_edges - parent.edge_count
                if budget < lo:
                    continue
            for nb in range(lo, 1 << (n - 1)):
                if budget is not None and nb.bit_count() > budget:
                    continue
                if triangle_free and any(
                    parent.adj[v] & nb for v in range(n - 1) if (nb >> v) & 1
                ):
                    continue
                adj = [row | ((nb >> v & 1) << (n - 1)) for v, row in enumerate(parent.adj)]
                adj.append(nb)
                child = Graph(n, tuple(adj))
                k = canonical_key(child)
                if k not in seen:
                    seen.add(k)
                    out.append(canonical_form(child))
        out.sort(key=canonical_key)
    _cache[key] = out
    return out


def enumerate_unicyclic(n: int) -> list[Graph]:
    """All non-isomorphic connected graphs with exactly ``n`` edges and vertices.

    Every unicyclic graph is a tree plus one extra edge, so augment the tree
    stream and dedup.
    """
    if not 3 <= n <= UNICYCLIC_ORDER_CAP:
        raise GraphError(f"unicyclic enumeration supported for 3..{UNICYCLIC_ORDER_CAP}")
    key = ("unicyclic", n)
    if key in _cache:
        return _cache[key]
    seen: set[tuple[int, int]] = set()
    out = []
    for tree in enumerate_trees(n):
        for u in range(n):
            for v in range(u + 1, n):
                if tree.adj[u] & (1 << v):
                    continue
                adj = list(tree.adj)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                child = Graph(n, tuple(adj))
                k = canonical_key(child)
                if k not in seen:
                    seen.add(k)
                    out.append(canonical_form(child))
    out.sort(key=canonical_key)
    _cache[key] = out
    return out


# ---------------------------------------------------------------------------
# Independent generation routes (test oracles)
# ---------------------------------------------------------------------------


def trees_via_prufer(n: int) -> list[Graph]:
    """Tree stream from a sweep of all labeled pruefer sequences (small n)."""
    if not 1 <= n <= PRUFER_ORDER_CAP:
        raise GraphError(f"pruefer sweep capped at order {PRUFER_ORDER_CAP}")
    if n == 1:
        return [Graph.empty(1)]
    if n == 2:
        return [Graph.from_edges(2, [(0, 1)])]

    graphs = []
    seq = [0] * (n - 2)
    while True:
        degree = [1] * n
        for s in seq:
            degree[s] += 1
        edges = []
        work = list(seq)
        avail = degree[:]
        for s in work:
            leaf = min(v for v in range(n) if avail[v] == 1)
            edges.append((leaf, s))
            avail[leaf] -= 1
            avail[s] -= 1
        last = [v for v in range(n) if avail[v] == 1]
        edges.append((last[0], last[1]))
        graphs.append(Graph.from_edges(n, edges))
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            break
        seq[i] += 1
    return _dedup_sorted(graphs)


def graphs_via_edge_masks(n: int, *, connected: bool = False) -> list[Graph]:
    """Graph stream from a sweep of all labeled edge masks (tiny n)."""
    if not 1 <= n <= EDGE_SWEEP_ORDER_CAP:
        raise GraphError(f"edge-mask sweep capped at order {EDGE_SWEEP_ORDER_CAP}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    graphs = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = Graph.from_edges(n, edges)
        if connected and not is_connected(g):
            continue
        graphs.append(g)
    return _dedup_sorted(graphs)


# ---------------------------------------------------------------------------
# Closed-form counts (fully independent of the generators)
# ---------------------------------------------------------------------------


def _partitions(n: int, most: int | None = None):
    if n == 0:
        yield []
        return
    if most is None:
        most = n
    for first in range(min(n, most), 0, -1):
        for rest in _partitions(n - first, first):
            yield [first] + rest


def graph_count_by_formula(n: int) -> int:
    """Number of graphs on ``n`` unlabeled vertices via the cycle-index sum."""
    total = 0
    for part in _partitions(n):
        mult: dict[int, int] = {}
        for c in part:
            mult[c] = mult.get(c, 0) + 1
        perms = factorial(n)
        for c, m in mult.items():
            perms //= (c**m) * factorial(m)
        orbits = sum(c // 2 for c in part)
        for i in range(len(part)):
            for j in range(i + 1, len(part)):
                orbits += gcd(part[i], part[j])
        total += perms * (2**orbits)
    return total // factorial(n)


def connected_graph_count_by_formula(n: int) -> int:
    """Connected-graph count from graph counts via the inverse Euler transform."""
    g = [1] + [graph_count_by_formula(k) for k in range(1, n + 1)]
    b = [0] * (n + 1)
    c = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        b[k] = k * g[k] - sum(b[j] * g[k - j] for j in range(1, k))
        c[k] = Fraction(b[k] - sum(d * c[d] for d in range(1, k) if k % d == 0), k)
    assert c[n].denominator == 1
    return int(c[n])


def tree_count_by_formula(n: int) -> int:
    """Unlabeled tree count from the rooted-tree recurrence."""
    r = [0] * (n + 1)
    if n >= 1:
        r[1] = 1
    for m in range(2, n + 1):
        total = 0
        for k in range(1, m):
            s = sum(d * r[d] for d in range(1, k + 1) if k % d == 0)
            total += s * r[m - k]
        r[m] = total // (m - 1)
    if n == 0:
        return 0
    t = Fraction(r[n])
    t -= Fraction(sum(r[i] * r[n - i] for i in range(1, n)), 2)
    if n % 2 == 0:
        t += Fraction(r[n // 2], 2)
    assert t.denominator == 1
    return int(t)
