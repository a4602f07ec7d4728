"""Dominating and paired dominating set predicates, plus exact gamma_p.

A paired dominating set is a dominating set whose induced subgraph contains
a perfect matching. A graph has one exactly when it has no isolated vertex;
the 0 sentinel mirrors the convention used for partition numbers here.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, classify_vertices, iter_bits
from .matching import mask_has_perfect_matching

PAIRED_DOMINATION_ORDER_CAP = 24


def is_dominating(g: Graph, s: int) -> bool:
    """Whether every vertex is in ``s`` or adjacent to a vertex of ``s``."""
    cov = s
    for v in iter_bits(s):
        cov |= g.adj[v]
    return cov == g.full_mask


def is_paired_dominating(g: Graph, s: int) -> bool:
    """Whether ``s`` dominates ``g`` and ``G[s]`` has a perfect matching."""
    if s == 0 or s.bit_count() & 1:
        return False
    return is_dominating(g, s) and mask_has_perfect_matching(g.n, g.adj, s)


def paired_domination_number(g: Graph) -> int:
    """Minimum size of a paired dominating set; 0 when none exists.

    Exact search by increasing even cardinality with a domination-coverage
    bound; intended as an oracle for small graphs, not a benchmark.
    """
    if g.n > PAIRED_DOMINATION_ORDER_CAP:
        raise GraphError(
            f"exact paired domination capped at order {PAIRED_DOMINATION_ORDER_CAP}"
        )
    if classify_vertices(g).isolated:
        return 0
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    full = g.full_mask
    # suffix_cov[i]: what vertices >= i can still dominate
    suffix_cov = [0] * (g.n + 1)
    for i in range(g.n - 1, -1, -1):
        suffix_cov[i] = suffix_cov[i + 1] | closed[i]
    best_step = max(c.bit_count() for c in closed)

    def extend(start: int, chosen: int, cov: int, left: int) -> bool:
        if left == 0:
            return cov == full and mask_has_perfect_matching(g.n, g.adj, chosen)
        if (full & ~(cov | suffix_cov[start])) != 0:
            return False
        if (full & ~cov).bit_count() > left * best_step:
            return False
        for v in range(start, g.n - left + 1):
            if extend(v + 1, chosen | (1 << v), cov | closed[v], left - 1):
                return True
        return False

    for k in range(2, g.n + 1, 2):
        if extend(0, 0, 0, k):
            return k
    return 0
