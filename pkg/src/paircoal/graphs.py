"""Immutable bitmask graphs and the structural predicates built on them.

Vertices are the integers ``0..n-1`` and every vertex set is a plain ``int``
bit mask, so the exact searches elsewhere in the package stay allocation-free.
The order cap of 64 keeps a vertex set inside one machine word; everything the
toolkit computes lives far below that.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_ORDER = 64
ISO_ORDER_CAP = 16


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range arguments."""


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bit mask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    """Unpack a bit mask into a sorted list of vertex indices."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the vertex indices of a bit mask in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with per-vertex neighbor bit masks.

    Invariants enforced at construction: ``1 <= n <= 64``, no self-loops,
    symmetric adjacency, and no mask bit at or above ``n``.
    """

    n: int
    adj: tuple[int, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & (1 << v):
                raise GraphError(f"self-loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"adjacency of vertex {v} uses bits >= n")
        for v, row in enumerate(self.adj):
            for u in iter_bits(row):
                if not self.adj[u] & (1 << v):
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   label: str | None = None) -> "Graph":
        """Build a graph from an edge list, symmetrizing automatically."""
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), label)

    @classmethod
    def empty(cls, n: int, label: str | None = None) -> "Graph":
        return cls(n, (0,) * n, label)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed_nb(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.adj)

    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Apply a permutation: old vertex ``v`` becomes ``perm[v]``."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            nv = p[v]
            for u in iter_bits(row):
                adj[nv] |= 1 << p[u]
        return Graph(self.n, tuple(adj), self.label)

    def with_label(self, label: str | None) -> "Graph":
        return Graph(self.n, self.adj, label)


@dataclass(frozen=True)
class VertexClasses:
    """Degree-based vertex classification; every set is a bit mask."""

    leaves: int
    support: int
    strong_support: int
    full: int
    isolated: int
    delta: int
    Delta: int
    leaf_counts: tuple[tuple[int, int], ...]  # (support vertex, leaf neighbors)


def classify_vertices(g: Graph) -> VertexClasses:
    """Classify leaves, (strong) support, full and isolated vertices."""
    leaves = 0
    for v in range(g.n):
        if g.degree(v) == 1:
            leaves |= 1 << v
    support = 0
    strong = 0
    counts = []
    for v in range(g.n):
        k = (g.adj[v] & leaves).bit_count()
        if k >= 1:
            support |= 1 << v
            counts.append((v, k))
        if k >= 2:
            strong |= 1 << v
    full = 0
    isolated = 0
    degs = [g.degree(v) for v in range(g.n)]
    for v, d in enumerate(degs):
        if d == g.n - 1 and g.n >= 2:
            full |= 1 << v
        if d == 0:
            isolated |= 1 << v
    return VertexClasses(
        leaves=leaves,
        support=support,
        strong_support=strong,
        full=full,
        isolated=isolated,
        delta=min(degs),
        Delta=max(degs),
        leaf_counts=tuple(counts),
    )


def connected_components(g: Graph) -> list[int]:
    """Component vertex masks, ordered by least contained vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen & (1 << v):
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for an acyclic graph.

    BFS from every vertex; each non-tree edge seen during the scan closes a
    cycle of length ``dist[u] + dist[w] + 1`` and the minimum over all
    sources is exact.
    """
    best: int | None = None
    for source in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[source] = 0
        queue = [source]
        while queue:
            nxt = []
            for u in queue:
                if best is not None and 2 * dist[u] >= best:
                    continue
                for w in iter_bits(g.adj[u]):
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u]:
                        cand = dist[u] + dist[w] + 1
                        if best is None or cand < best:
                            best = cand
            queue = nxt
        if best == 3:
            return 3
    return best


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by mask ``s`` plus the new-index -> old-index map."""
    if s == 0:
        raise GraphError("cannot induce on the empty set")
    if s & ~g.full_mask:
        raise GraphError("vertex set uses bits outside the graph")
    old = vertices_of(s)
    index = {v: i for i, v in enumerate(old)}
    adj = [0] * len(old)
    for i, v in enumerate(old):
        for u in iter_bits(g.adj[v] & s):
            adj[i] |= 1 << index[u]
    return Graph(len(old), tuple(adj)), tuple(old)


@dataclass(frozen=True)
class EdgeCut:
    count: int
    is_full: bool
    is_empty: bool


def edges_between(g: Graph, x: int, y: int) -> EdgeCut:
    """Edge count between two disjoint vertex masks."""
    if x & y:
        raise GraphError("vertex sets overlap")
    count = sum((g.adj[v] & y).bit_count() for v in iter_bits(x))
    return EdgeCut(
        count=count,
        is_full=count == x.bit_count() * y.bit_count(),
        is_empty=count == 0,
    )


@dataclass(frozen=True)
class StructureFlags:
    connected: bool
    tree: bool
    unicyclic: bool
    star: bool
    triangle_free: bool
    complete_bipartite: bool
    complete_multipartite: bool


def _bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-color a graph; returns the color-class masks or ``None``."""
    color = [-1] * g.n
    a = b = 0
    for source in range(g.n):
        if color[source] >= 0:
            continue
        color[source] = 0
        a |= 1 << source
        queue = [source]
        while queue:
            u = queue.pop()
            for w in iter_bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    if color[w] == 0:
                        a |= 1 << w
                    else:
                        b |= 1 << w
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return a, b


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        for v in iter_bits(g.adj[u]):
            if v > u and g.adj[u] & g.adj[v]:
                return False
    return True


def _complement_adj(g: Graph) -> tuple[int, ...]:
    full = g.full_mask
    return tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))


def structure_class(g: Graph) -> StructureFlags:
    """Connectivity/shape flags used by the characterization checks."""
    m = g.edge_count
    connected = is_connected(g)
    tree = connected and m == g.n - 1
    unicyclic = connected and m == g.n
    star = tree and g.n >= 2 and g.max_degree() == g.n - 1

    parts = _bipartition(g)
    complete_bipartite = False
    if connected and g.n >= 2 and parts is not None:
        a, b = parts
        complete_bipartite = m == a.bit_count() * b.bit_count()

    # Complete multipartite (>= 2 parts) <=> the complement is a disjoint
    # union of at least two cliques.
    comp = Graph(g.n, _complement_adj(g))
    comps = connected_components(comp)
    multipartite = len(comps) >= 2 and all(
        sum((comp.adj[v] & c).bit_count() for v in iter_bits(c)) // 2
        == c.bit_count() * (c.bit_count() - 1) // 2
        for c in comps
    )

    return StructureFlags(
        connected=connected,
        tree=tree,
        unicyclic=unicyclic,
        star=star,
        triangle_free=is_triangle_free(g),
        complete_bipartite=complete_bipartite,
        complete_multipartite=multipartite,
    )


# ---------------------------------------------------------------------------
# Canonical forms and isomorphism
# ---------------------------------------------------------------------------


def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Stabilize colors by iterated neighbor-color multiset signatures."""
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in iter_bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _encode(n: int, adj: tuple[int, ...], colors: list[int]) -> int:
    """Upper-triangle adjacency integer under the discrete coloring."""
    inv = [0] * n
    for v, c in enumerate(colors):
        inv[c] = v
    code = 0
    for i in range(n):
        ai = adj[inv[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((ai >> inv[j]) & 1)
    return code


def _canon_search(n: int, adj: tuple[int, ...], colors: list[int],
                  best: list[int | None]) -> None:
    colors = _refine(n, adj, colors)
    counts = [0] * n
    for c in colors:
        counts[c] += 1
    target = -1
    for c in range(n):
        if counts[c] > 1:
            target = c
            break
    if target < 0:
        code = _encode(n, adj, colors)
        if best[0] is None or code < best[0]:
            best[0] = code
        return
    seen_open: set[int] = set()
    seen_closed: set[int] = set()
    for v in range(n):
        if colors[v] != target:
            continue
        # Twins (identical open or closed neighborhoods) branch identically.
        if adj[v] in seen_open or (adj[v] | (1 << v)) in seen_closed:
            continue
        seen_open.add(adj[v])
        seen_closed.add(adj[v] | (1 << v))
        child = [2 * c for c in colors]
        child[v] -= 1
        _canon_search(n, adj, child, best)


@lru_cache(maxsize=200000)
def _canonical_key_cached(n: int, adj: tuple[int, ...]) -> tuple[int, int]:
    colors = [0] * n
    best: list[int | None] = [None]
    _canon_search(n, adj, colors, best)
    assert best[0] is not None
    return n, best[0]


def canonical_key(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key (order, canonical adjacency integer)."""
    return _canonical_key_cached(g.n, g.adj)


def canonical_form(g: Graph) -> Graph:
    """The canonically labeled copy of ``g``."""
    n, code = canonical_key(g)
    adj = [0] * n
    bit = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            bit -= 1
            if (code >> bit) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj), g.label)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test for graphs of order at most 16."""
    if g.n > ISO_ORDER_CAP or h.n > ISO_ORDER_CAP:
        raise GraphError(f"isomorphism test capped at order {ISO_ORDER_CAP}")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(row.bit_count() for row in g.adj) != sorted(
        row.bit_count() for row in h.adj
    ):
        return False
    return canonical_key(g) == canonical_key(h)
