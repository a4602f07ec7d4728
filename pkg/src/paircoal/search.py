"""Depth-first search engines behind ``pc_number``.

Both engines walk restricted-growth assignments of vertices to blocks for
each target block count, largest first, so the first witness found sits at
the optimum and is the lexicographically least restricted-growth string
there. Pruning never assumes unproven statements: the plain engine uses
only definitional facts, and the lemma-guided engine additionally enforces
the proven support-block structure of minimum-degree-one graphs, recording
every applied assumption.
"""

from __future__ import annotations

import time

from .domination import is_paired_dominating
from .graphs import Graph, GraphError, classify_vertices, connected_components, iter_bits
from .matching import has_saturating_matching, mask_has_perfect_matching

TABLE_ORDER_CAP = 20
_BUDGET_INTERVAL = 4096

ASSUME_SUPPORT_BLOCK = "support-vertices-share-one-block"
ASSUME_STRONG_LEAF_EXCLUSION = "strong-support-leaves-avoid-support-block"
ASSUME_SUPPORT_PARTNER = "support-block-partners-every-other-block"
ASSUME_ORDER2_PARITY = "order-2-decided-by-matching-parity"
ASSUME_BINARY_CEILING = "perfect-binary-tree-order-capped-at-4"


class _OutOfBudget(Exception):
    pass


def build_pds_table(g: Graph) -> bytearray:
    """Paired-dominating flags for every vertex mask (order <= 20).

    Dominating coverage and matchability are both filled by subset dynamic
    programming over the lowest vertex of each mask.
    """
    n = g.n
    if n > TABLE_ORDER_CAP:
        raise GraphError(f"subset tables capped at order {TABLE_ORDER_CAP}")
    adj = g.adj
    size = 1 << n
    full = size - 1
    closed = [adj[v] | (1 << v) for v in range(n)]
    cov = [0] * size
    pm = bytearray(size)
    pds = bytearray(size)
    pm[0] = 1
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        c = cov[rest] | closed[v]
        cov[mask] = c
        nb = adj[v] & rest
        while nb:
            ub = nb & -nb
            if pm[rest ^ ub]:
                pm[mask] = 1
                if c == full:
                    pds[mask] = 1
                break
            nb ^= ub
    return pds


def _is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(connected_components(g))


def perfect_binary_height(g: Graph) -> int | None:
    """Height of ``g`` as a perfect binary tree, or ``None``."""
    n = g.n
    if n == 1:
        return 0
    if (n + 1) & n:  # n + 1 must be a power of two
        return None
    h = (n + 1).bit_length() - 2
    if g.edge_count != n - 1:
        return None
    roots = [v for v in range(n) if g.degree(v) == 2]
    if len(roots) != 1:
        return None
    root = roots[0]
    depth = [-1] * n
    depth[root] = 0
    frontier = [root]
    seen = 1
    while frontier:
        nxt = []
        for v in frontier:
            kids = [u for u in iter_bits(g.adj[v]) if depth[u] < 0]
            if depth[v] < h and len(kids) != 2:
                return None
            if depth[v] == h and kids:
                return None
            for u in kids:
                depth[u] = depth[v] + 1
                nxt.append(u)
                seen += 1
        frontier = nxt
    if seen != n:
        return None
    if any(d != h for v, d in enumerate(depth) if g.degree(v) == 1):
        return None
    return h


def _forest_saturating(adj: tuple[int, ...], required: int, allowed: int) -> bool:
    """Whether a matching inside forest ``G[allowed]`` can cover ``required``."""
    visited = 0
    todo = allowed
    while todo:
        rb = todo & -todo
        root = rb.bit_length() - 1
        if visited & rb:
            todo ^= rb
            continue
        order: list[int] = []
        parent = {root: -1}
        stack = [root]
        comp = 0
        while stack:
            v = stack.pop()
            comp |= 1 << v
            order.append(v)
            for u in iter_bits(adj[v] & allowed):
                if u != parent[v] and u not in parent:
                    parent[u] = v
                    stack.append(u)
        free: dict[int, bool] = {}
        matched: dict[int, bool] = {}
        for v in reversed(order):
            bad = 0
            can = False
            bad_free = False
            for u in iter_bits(adj[v] & comp):
                if u == parent[v]:
                    continue
                resolved = matched[u] or (free[u] and not (required >> u) & 1)
                if resolved:
                    if free[u]:
                        can = True
                else:
                    bad += 1
                    bad_free = free[u]
            if bad >= 2:
                return False
            if bad == 1:
                free[v] = False
                matched[v] = bad_free
                if not bad_free:
                    return False
            else:
                free[v] = True
                matched[v] = can
        if not (matched[root] or (free[root] and not (required >> root) & 1)):
            return False
        visited |= comp
        todo &= ~comp
    return True


# ---------------------------------------------------------------------------
# Plain engine: table-backed search over restricted-growth strings
# ---------------------------------------------------------------------------


def solve_plain(
    g: Graph, *, deadline: float | None
) -> tuple[int, tuple[int, ...] | None, int, tuple[str, ...]]:
    """Exact search for small graphs; returns (pc, blocks, nodes, assumptions)."""
    n = g.n
    adj = g.adj
    pds = build_pds_table(g)
    closed = [adj[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | closed[i]
    leaves_of = [0] * n
    support_of = [-1] * n
    for v in range(n):
        if adj[v].bit_count() == 1:
            x = adj[v].bit_length() - 1
            leaves_of[x] |= 1 << v
            support_of[v] = x
    # Vertex u constrains its block's partner choices once u and all of
    # N(u) are assigned; with ascending assignment that happens at this index.
    settle_lists: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        settle_lists[max(u, adj[u].bit_length() - 1)].append(u)

    block_of = [-1] * n
    blocks = [0] * n
    cov = [0] * n
    cand = [-1] * n  # partner-candidate block mask; -1 = unconstrained
    nodes = 0

    def dfs(i: int, b: int, k: int) -> tuple[int, ...] | None:
        nonlocal nodes
        nodes += 1
        if deadline is not None and nodes % _BUDGET_INTERVAL == 0:
            if time.monotonic() > deadline:
                raise _OutOfBudget
        if b + (n - i) < k:
            return None
        if i == n:
            if b != k:
                return None
            for j in range(k):
                if pds[blocks[j]]:
                    return None
            for j in range(k):
                bj = blocks[j]
                cj = cand[j]
                ok = False
                if cj == -1:
                    for j2 in range(k):
                        if j2 != j and pds[bj | blocks[j2]]:
                            ok = True
                            break
                else:
                    cc = cj
                    while cc:
                        lb = cc & -cc
                        j2 = lb.bit_length() - 1
                        if j2 < k and pds[bj | blocks[j2]]:
                            ok = True
                            break
                        cc ^= lb
                if not ok:
                    return None
            return tuple(blocks[:k])

        bit = 1 << i
        sup = support_of[i]
        allow_existing = b + (n - i - 1) >= k
        last = b if b < k else b - 1
        for j in range(last + 1):
            new_block = j == b
            if not new_block:
                if not allow_existing:
                    continue
                # Two vertices whose sole neighbor coincides can never both
                # be matched in any union containing their block.
                if sup >= 0 and blocks[j] & leaves_of[sup]:
                    continue
            prev_cov = cov[j]
            if new_block:
                blocks[j] = bit
                cov[j] = closed[i]
                cand[j] = -1
            else:
                blocks[j] |= bit
                cov[j] |= closed[i]
            block_of[i] = j
            trail: list[tuple[int, int]] = []
            ok = True
            for u in settle_lists[i]:
                ju = block_of[u]
                if adj[u] & blocks[ju]:
                    continue
                hit = 0
                au = adj[u]
                while au:
                    lb = au & -au
                    hit |= 1 << block_of[lb.bit_length() - 1]
                    au ^= lb
                old = cand[ju]
                new = hit if old == -1 else old & hit
                if new != old:
                    trail.append((ju, old))
                    cand[ju] = new
                if new == 0:
                    ok = False
                    break
                feasible = False
                cc = new
                su = suffix[i + 1]
                while cc:
                    lb = cc & -cc
                    j2 = lb.bit_length() - 1
                    if cov[ju] | cov[j2] | su == full:
                        feasible = True
                        break
                    cc ^= lb
                if not feasible:
                    ok = False
                    break
            if ok:
                result = dfs(i + 1, b + 1 if new_block else b, k)
                if result is not None:
                    return result
            for ju, old in reversed(trail):
                cand[ju] = old
            block_of[i] = -1
            if new_block:
                blocks[j] = 0
                cov[j] = 0
                cand[j] = -1
            else:
                blocks[j] ^= bit
                cov[j] = prev_cov
        return None

    refuted: list[int] = []
    try:
        for k in range(n, 1, -1):
            witness = dfs(0, 0, k)
            if witness is not None:
                return k, witness, nodes, ()
            refuted.append(k)
        return 0, None, nodes, ()
    except _OutOfBudget:
        from .coalition import SearchBudgetExceeded

        raise SearchBudgetExceeded(
            f"plain search budget exhausted after {nodes} nodes",
            refuted_orders=tuple(refuted),
            nodes=nodes,
            elapsed_s=0.0,
            assumptions=(),
        )


# ---------------------------------------------------------------------------
# Lemma-guided engine for minimum-degree-one graphs
# ---------------------------------------------------------------------------


def _submasks_sorted(pool: int) -> list[int]:
    subs = []
    s = pool
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & pool
    subs.sort(key=lambda m: (m.bit_count(), m))
    return subs


def solve_lemma(
    g: Graph,
    *,
    ceiling: bool,
    canonical_witness: bool,
    deadline: float | None,
) -> tuple[int, tuple[int, ...] | None, int, tuple[str, ...]]:
    """Support-block constrained search; exact for minimum-degree-one graphs.

    For block counts of at least three, every maximum pc-partition of a
    minimum-degree-one graph has one block containing all support vertices,
    that block avoids the leaves of strong support vertices, and every other
    block must partner it; leaves sharing a support vertex always land in
    distinct blocks. Searching each order under those constraints therefore
    cannot miss the optimum. Order 2 reduces to a perfect matching of the
    whole vertex set.
    """
    n = g.n
    adj = g.adj
    full = g.full_mask
    cls = classify_vertices(g)

    leaves_of = [0] * n
    support_of = [-1] * n
    for v in range(n):
        if adj[v].bit_count() == 1:
            x = adj[v].bit_length() - 1
            leaves_of[x] |= 1 << v
            support_of[v] = x
    strong_leaves = 0
    for x in iter_bits(cls.strong_support):
        strong_leaves |= leaves_of[x]
    max_leaf_count = max((c for _, c in cls.leaf_counts), default=0)

    assumptions = [
        ASSUME_SUPPORT_BLOCK,
        ASSUME_STRONG_LEAF_EXCLUSION,
        ASSUME_SUPPORT_PARTNER,
        ASSUME_ORDER2_PARITY,
    ]
    cap = n
    if ceiling:
        h = perfect_binary_height(g)
        if h is None or h < 3:
            raise GraphError(
                "binary ceiling applies only to perfect binary trees of height >= 3"
            )
        assumptions.append(ASSUME_BINARY_CEILING)
        cap = min(n, 4)
    assumptions_t = tuple(assumptions)

    forest = _is_forest(g)
    sat_every = 1 if forest else 8
    pds_cache: dict[int, bool] = {}

    def pds(mask: int) -> bool:
        v = pds_cache.get(mask)
        if v is None:
            v = is_paired_dominating(g, mask)
            pds_cache[mask] = v
        return v

    def saturating(required: int, allowed: int) -> bool:
        if forest:
            return _forest_saturating(adj, required, allowed)
        return has_saturating_matching(n, adj, required, allowed)

    extras_pool = full & ~cls.support & ~strong_leaves
    d_choices = [cls.support | e for e in _submasks_sorted(extras_pool)]

    nodes = 0
    best_rgs: list[tuple[tuple[int, ...], tuple[int, ...]] | None] = [None]

    def search_order(k: int) -> tuple[int, ...] | None:
        nonlocal nodes
        if max_leaf_count > k - 1:
            return None
        best_rgs[0] = None
        for d_mask in d_choices:
            rest = full & ~d_mask
            if rest.bit_count() < k - 1:
                continue
            if pds(d_mask):
                continue
            if not saturating(d_mask, full):
                continue
            rest_list = [v for v in range(n) if (rest >> v) & 1]
            m = len(rest_list)
            suffix_mask = [0] * (m + 1)
            suffix_cov = [0] * (m + 1)
            for i in range(m - 1, -1, -1):
                v = rest_list[i]
                suffix_mask[i] = suffix_mask[i + 1] | (1 << v)
                suffix_cov[i] = suffix_cov[i + 1] | adj[v] | (1 << v)
            cov_d = 0
            for v in iter_bits(d_mask):
                cov_d |= adj[v] | (1 << v)

            nblocks = [0] * (k - 1)
            ncov = [0] * (k - 1)

            def dfs(pos: int, nb: int) -> tuple[int, ...] | None:
                nonlocal nodes
                nodes += 1
                if deadline is not None and nodes % _BUDGET_INTERVAL == 0:
                    if time.monotonic() > deadline:
                        raise _OutOfBudget
                if nb + (m - pos) < k - 1:
                    return None
                if pos == m:
                    if nb != k - 1:
                        return None
                    for j in range(nb):
                        if pds(nblocks[j]):
                            return None
                    for j in range(nb):
                        if not pds(d_mask | nblocks[j]):
                            return None
                    return (d_mask, *nblocks)
                v = rest_list[pos]
                bit = 1 << v
                sup = support_of[v]
                unassigned = suffix_mask[pos + 1]
                allow_existing = nb + (m - pos - 1) >= k - 1
                last = nb if nb < k - 1 else nb - 1
                for j in range(last + 1):
                    new_block = j == nb
                    if not new_block:
                        if not allow_existing:
                            continue
                        if sup >= 0 and nblocks[j] & leaves_of[sup]:
                            continue
                    old_cov = ncov[j]
                    if new_block:
                        nblocks[j] = bit
                        ncov[j] = adj[v] | bit
                    else:
                        nblocks[j] |= bit
                        ncov[j] |= adj[v] | bit
                    nb2 = nb + 1 if new_block else nb
                    ok = True
                    # starvation: any union member with no potential partner
                    # left in its union-plus-unassigned pool is fatal
                    if adj[v] & (d_mask | nblocks[j] | unassigned) == 0:
                        ok = False
                    if ok:
                        for c in range(nb2):
                            pool = d_mask | nblocks[c] | unassigned
                            if cov_d | ncov[c] | suffix_cov[pos + 1] != full:
                                ok = False
                                break
                            touched = adj[v] & (d_mask | nblocks[c])
                            for u in iter_bits(touched):
                                if adj[u] & pool == 0:
                                    ok = False
                                    break
                            if not ok:
                                break
                    if ok and (pos % sat_every == 0 or pos == m - 1):
                        for c in range(nb2):
                            members = d_mask | nblocks[c]
                            if not saturating(members, members | unassigned):
                                ok = False
                                break
                    if ok:
                        result = dfs(pos + 1, nb2)
                        if result is not None and not canonical_witness:
                            # restore state before unwinding
                            if new_block:
                                nblocks[j] = 0
                                ncov[j] = 0
                            else:
                                nblocks[j] ^= bit
                                ncov[j] = old_cov
                            return result
                        if result is not None:
                            rgs_key = _rgs_of(n, result)
                            if best_rgs[0] is None or rgs_key < best_rgs[0][0]:
                                best_rgs[0] = (rgs_key, result)
                    if new_block:
                        nblocks[j] = 0
                        ncov[j] = 0
                    else:
                        nblocks[j] ^= bit
                        ncov[j] = old_cov
                return None

            found = dfs(0, 0)
            if found is not None and not canonical_witness:
                return found
        if canonical_witness and best_rgs[0] is not None:
            return best_rgs[0][1]
        return None

    refuted: list[int] = []
    try:
        for k in range(cap, 2, -1):
            witness = search_order(k)
            if witness is not None:
                return k, witness, nodes, assumptions_t
            refuted.append(k)
        if n % 2 == 0 and mask_has_perfect_matching(n, adj, full):
            # Splitting off the last vertex leaves an odd (hence non paired-
            # dominating) block, so this is always the least valid 2-split.
            last = 1 << (n - 1)
            return 2, (full ^ last, last), nodes, assumptions_t
        refuted.append(2)
        return 0, None, nodes, assumptions_t
    except _OutOfBudget:
        from .coalition import SearchBudgetExceeded

        raise SearchBudgetExceeded(
            f"lemma-guided search budget exhausted after {nodes} nodes",
            refuted_orders=tuple(refuted),
            nodes=nodes,
            elapsed_s=0.0,
            assumptions=assumptions_t,
        )


def _rgs_of(n: int, blocks: tuple[int, ...]) -> tuple[int, ...]:
    ordered = sorted(blocks, key=lambda b: b & -b)
    out = [0] * n
    for i, b in enumerate(ordered):
        for v in iter_bits(b):
            out[v] = i
    return tuple(out)
