"""Maximum matching in general graphs via blossom contraction.

The solver-facing entry points work on bit masks so no graph copies are made
in hot loops. A brute-force enumeration of all matchings is kept as the
independent test oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, GraphError, iter_bits


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph."""

    edges: tuple[tuple[int, int], ...]
    covered: int

    @property
    def size(self) -> int:
        return len(self.edges)


def _match_array(n: int, adj: tuple[int, ...] | list[int]) -> list[int]:
    """Maximum matching as a mate array (-1 for exposed vertices).

    Classic O(V^3) blossom algorithm: BFS alternating forests with base[]
    contraction. Vertices and edges are scanned in index order, so the
    result is deterministic.
    """
    match = [-1] * n
    for v in range(n):  # greedy seed
        if match[v] == -1:
            for u in iter_bits(adj[v]):
                if match[u] == -1:
                    match[u] = v
                    match[v] = u
                    break

    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> bool:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in iter_bits(adj[v]):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        while to != -1:
                            pv = p[to]
                            nxt = match[pv]
                            match[pv] = to
                            match[to] = pv
                            to = nxt
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return match


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching of ``g`` with a sorted edge list."""
    match = _match_array(g.n, g.adj)
    edges = []
    covered = 0
    for v in range(g.n):
        u = match[v]
        if u > v:
            edges.append((v, u))
            covered |= (1 << v) | (1 << u)
    return Matching(edges=tuple(edges), covered=covered)


def maximum_matching_size_bruteforce(g: Graph) -> int:
    """Maximum matching size by enumerating every matching (test oracle)."""
    edges = g.edges()
    best = 0

    def rec(start: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for j in range(start, len(edges)):
            u, v = edges[j]
            bit = (1 << u) | (1 << v)
            if not used & bit:
                rec(j + 1, used | bit, size + 1)

    rec(0, 0, 0)
    return best


def mask_has_perfect_matching(n: int, adj: tuple[int, ...] | list[int],
                              s: int) -> bool:
    """Whether the subgraph induced by mask ``s`` has a perfect matching."""
    size = s.bit_count()
    if size & 1:
        return False
    if size == 0:
        return True
    sub_vertices = []
    index = {}
    m = s
    while m:
        b = m & -m
        v = b.bit_length() - 1
        index[v] = len(sub_vertices)
        sub_vertices.append(v)
        m ^= b
    sub_adj = [0] * size
    for i, v in enumerate(sub_vertices):
        for u in iter_bits(adj[v] & s):
            sub_adj[i] |= 1 << index[u]
    match = _match_array(size, sub_adj)
    return all(x != -1 for x in match)


def has_perfect_matching(g: Graph, s: int) -> bool:
    """Whether ``G[s]`` contains a perfect matching (``s`` must be nonempty)."""
    if s == 0:
        raise GraphError("vertex set must be nonempty")
    if s & ~g.full_mask:
        raise GraphError("vertex set uses bits outside the graph")
    return mask_has_perfect_matching(g.n, g.adj, s)


def has_saturating_matching(n: int, adj: tuple[int, ...] | list[int],
                            required: int, allowed: int) -> bool:
    """Whether some matching inside ``allowed`` covers all of ``required``.

    Reduction to perfect matching: append helper vertices joined to every
    optional vertex and to each other, sized so the total order is even.
    """
    if required & ~allowed:
        return False
    verts = []
    index = {}
    m = allowed
    while m:
        b = m & -m
        v = b.bit_length() - 1
        index[v] = len(verts)
        verts.append(v)
        m ^= b
    size = len(verts)
    optional = [index[v] for v in iter_bits(allowed & ~required)]
    q = len(optional)
    if (size + q) & 1:
        q += 1
    total = size + q
    sub_adj = [0] * total
    for i, v in enumerate(verts):
        for u in iter_bits(adj[v] & allowed):
            sub_adj[i] |= 1 << index[u]
    helper_mask = ((1 << total) - 1) ^ ((1 << size) - 1)
    opt_mask = 0
    for i in optional:
        opt_mask |= 1 << i
    for h in range(size, total):
        sub_adj[h] = (helper_mask ^ (1 << h)) | opt_mask
    for i in optional:
        sub_adj[i] |= helper_mask
    match = _match_array(total, sub_adj)
    return all(x != -1 for x in match)
