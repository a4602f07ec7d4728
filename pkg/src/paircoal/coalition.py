"""Paired coalition partitions: partner test, verifier, oracle and solver.

Two disjoint vertex sets are pc-partners when neither is a paired dominating
set but their union is one. A pc-partition is a vertex partition in which
every block is a non paired-dominating set with at least one partner block;
``pc_number`` computes the maximum number of blocks over all pc-partitions
(0 when none exists).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .domination import is_paired_dominating
from .graphs import Graph, GraphError, classify_vertices, vertices_of

ORACLE_ORDER_CAP = 10

FAIL_PAIRED_DOMINATING = "paired-dominating-set"
FAIL_NO_PARTNER = "no-partner"


class PartitionError(ValueError):
    """Raised for malformed vertex partitions."""


@dataclass(frozen=True)
class Partition:
    """Vertex partition as block masks in restricted-growth order.

    Restricted-growth order means blocks are sorted by least contained
    vertex, so vertex 0 lies in block 0 and the per-vertex block-index
    string is a canonical encoding of the partition.
    """

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        union = 0
        for b in self.blocks:
            if b == 0:
                raise PartitionError("blocks must be nonempty")
            if b & ~full:
                raise PartitionError("block uses bits outside the graph")
            if b & union:
                raise PartitionError("blocks overlap")
            union |= b
        if union != full:
            raise PartitionError("blocks do not cover the vertex set")
        mins = [(b & -b) for b in self.blocks]
        if mins != sorted(mins):
            raise PartitionError("blocks not in restricted-growth order")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[int]) -> "Partition":
        """Build from block masks in any order."""
        return cls(n, tuple(sorted(blocks, key=lambda b: b & -b)))

    @classmethod
    def from_vertex_lists(cls, n: int, lists: Iterable[Iterable[int]]) -> "Partition":
        masks = []
        for vs in lists:
            m = 0
            for v in vs:
                if not 0 <= v < n:
                    raise PartitionError(f"vertex {v} out of range for order {n}")
                if m & (1 << v):
                    raise PartitionError(f"vertex {v} repeated within a block")
                m |= 1 << v
            masks.append(m)
        return cls.from_blocks(n, masks)

    @property
    def order(self) -> int:
        return len(self.blocks)

    def rgs(self) -> tuple[int, ...]:
        """Per-vertex block indices (the restricted-growth string)."""
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in vertices_of(b):
                out[v] = i
        return tuple(out)

    def vertex_lists(self) -> list[list[int]]:
        return [vertices_of(b) for b in self.blocks]


def are_pc_partners(g: Graph, a: int, b: int) -> bool:
    """Whether disjoint nonempty sets ``a`` and ``b`` form a paired coalition."""
    if a == 0 or b == 0:
        raise GraphError("pc-partner sets must be nonempty")
    if a & b:
        raise GraphError("pc-partner sets must be disjoint")
    if (a | b) & ~g.full_mask:
        raise GraphError("vertex set uses bits outside the graph")
    if is_paired_dominating(g, a) or is_paired_dominating(g, b):
        return False
    return is_paired_dominating(g, a | b)


@dataclass(frozen=True)
class PartitionCheck:
    """Verdict of ``is_pc_partition`` with per-block diagnostics."""

    valid: bool
    partners: tuple[tuple[int, ...], ...]
    failures: tuple[str | None, ...]


def is_pc_partition(g: Graph, p: Partition) -> PartitionCheck:
    """Check the pc-partition conditions block by block."""
    if p.n != g.n:
        raise PartitionError("partition order does not match the graph")
    k = p.order
    pds = [is_paired_dominating(g, b) for b in p.blocks]
    partners: list[tuple[int, ...]] = []
    failures: list[str | None] = []
    valid = True
    for i in range(k):
        if pds[i]:
            partners.append(())
            failures.append(FAIL_PAIRED_DOMINATING)
            valid = False
            continue
        mine = tuple(
            j
            for j in range(k)
            if j != i and not pds[j] and is_paired_dominating(g, p.blocks[i] | p.blocks[j])
        )
        partners.append(mine)
        if mine:
            failures.append(None)
        else:
            failures.append(FAIL_NO_PARTNER)
            valid = False
    return PartitionCheck(valid=valid, partners=tuple(partners), failures=tuple(failures))


def coalition_graph(g: Graph, p: Partition) -> Graph:
    """Graph on the blocks of a valid pc-partition; edges join pc-partners."""
    check = is_pc_partition(g, p)
    if not check.valid:
        bad = [i for i, f in enumerate(check.failures) if f is not None]
        raise PartitionError(f"not a pc-partition (failing blocks: {bad})")
    edges = [(i, j) for i, mine in enumerate(check.partners) for j in mine if i < j]
    return Graph.from_edges(p.order, edges)


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

_PARTITION_CACHE: dict[tuple[int, int], list[tuple[int, ...]]] = {}
_PARTITION_CACHE_MAX_N = 8


def partitions_with_block_count(n: int, k: int) -> Iterable[tuple[int, ...]]:
    """All set partitions of ``0..n-1`` with exactly ``k`` blocks.

    Blocks are emitted as masks in restricted-growth order; generation
    itself walks restricted-growth strings depth first.
    """
    if (n, k) in _PARTITION_CACHE:
        return _PARTITION_CACHE[(n, k)]

    out: list[tuple[int, ...]] = []
    blocks = [0] * k

    def rec(i: int, used: int) -> None:
        if i == n:
            if used == k:
                out.append(tuple(blocks))
            return
        if used + (n - i) < k:
            return
        bit = 1 << i
        for j in range(used):
            blocks[j] |= bit
            rec(i + 1, used)
            blocks[j] ^= bit
        if used < k:
            blocks[used] = bit
            rec(i + 1, used + 1)
            blocks[used] = 0

    rec(0, 0)
    if n <= _PARTITION_CACHE_MAX_N:
        _PARTITION_CACHE[(n, k)] = out
    return out


def pc_number_oracle(g: Graph) -> int:
    """Maximum pc-partition order by flat enumeration of all partitions.

    Independent of the branch-and-bound solver: it walks every partition
    (largest block counts first) and applies the definitional checks through
    the public paired-domination predicate.
    """
    n = g.n
    if n > ORACLE_ORDER_CAP:
        raise GraphError(f"oracle capped at order {ORACLE_ORDER_CAP}")
    cache: list[bool | None] = [None] * (1 << n)

    def pds(mask: int) -> bool:
        v = cache[mask]
        if v is None:
            v = is_paired_dominating(g, mask)
            cache[mask] = v
        return v

    for k in range(n, 1, -1):
        for blocks in partitions_with_block_count(n, k):
            ok = True
            for b in blocks:
                if pds(b):
                    ok = False
                    break
            if not ok:
                continue
            for i in range(k):
                bi = blocks[i]
                found = False
                for j in range(k):
                    if j != i and pds(bi | blocks[j]):
                        found = True
                        break
                if not found:
                    ok = False
                    break
            if ok:
                return k
    return 0


def all_pc_partitions(g: Graph) -> list[Partition]:
    """Every pc-partition of a small graph (oracle enumeration path)."""
    n = g.n
    if n > ORACLE_ORDER_CAP:
        raise GraphError(f"oracle capped at order {ORACLE_ORDER_CAP}")
    cache: list[bool | None] = [None] * (1 << n)

    def pds(mask: int) -> bool:
        v = cache[mask]
        if v is None:
            v = is_paired_dominating(g, mask)
            cache[mask] = v
        return v

    found = []
    for k in range(2, n + 1):
        for blocks in partitions_with_block_count(n, k):
            if any(pds(b) for b in blocks):
                continue
            if all(
                any(j != i and pds(blocks[i] | blocks[j]) for j in range(k))
                for i in range(k)
            ):
                found.append(Partition(n, blocks))
    return found


# ---------------------------------------------------------------------------
# Exact solver facade
# ---------------------------------------------------------------------------


@dataclass
class SearchStats:
    nodes: int
    elapsed_s: float
    mode: str
    assumptions: tuple[str, ...]


@dataclass
class PcResult:
    pc: int
    witness: Partition | None
    pcg_adjacency: tuple[tuple[bool, ...], ...] | None
    stats: SearchStats


class SearchBudgetExceeded(RuntimeError):
    """Search ran out of budget; carries whatever was settled so far."""

    def __init__(self, message: str, *, refuted_orders: tuple[int, ...],
                 nodes: int, elapsed_s: float, assumptions: tuple[str, ...]):
        super().__init__(message)
        self.refuted_orders = refuted_orders
        self.nodes = nodes
        self.elapsed_s = elapsed_s
        self.assumptions = assumptions


def pc_number(
    g: Graph,
    *,
    exact_cap: int = 14,
    lemma_pruning: bool = False,
    assume_binary_ceiling: bool = False,
    canonical_witness: bool = False,
    budget_s: float | None = None,
) -> PcResult:
    """Exact maximum pc-partition order with witness and search stats.

    Plain mode (the default) guarantees exactness for ``n <= exact_cap`` via
    table-backed depth-first search over restricted-growth strings. For
    larger graphs with minimum degree 1, ``lemma_pruning`` switches to a
    search constrained by the proven support-block structure; the applied
    assumptions are recorded in ``stats``. ``assume_binary_ceiling``
    additionally caps the searched order at 4 and is accepted only for
    perfect binary trees of height at least 3.
    """
    from . import search

    start = time.monotonic()
    deadline = None if budget_s is None else start + budget_s

    cls = classify_vertices(g)
    if cls.isolated:
        stats = SearchStats(nodes=0, elapsed_s=time.monotonic() - start,
                            mode="isolated-vertex", assumptions=())
        return PcResult(pc=0, witness=None, pcg_adjacency=None, stats=stats)

    if lemma_pruning:
        if cls.delta != 1:
            raise GraphError("lemma-guided search requires minimum degree 1")
        pc, blocks, nodes, assumptions = search.solve_lemma(
            g,
            ceiling=assume_binary_ceiling,
            canonical_witness=canonical_witness,
            deadline=deadline,
        )
        mode = "lemma-guided"
    else:
        if assume_binary_ceiling:
            raise GraphError("assume_binary_ceiling requires lemma_pruning")
        if g.n > exact_cap:
            raise GraphError(
                f"order {g.n} above exact_cap={exact_cap}; "
                "raise exact_cap or use lemma_pruning"
            )
        pc, blocks, nodes, assumptions = search.solve_plain(g, deadline=deadline)
        mode = "exact-table"

    witness = None
    pcg = None
    if pc > 0:
        assert blocks is not None
        witness = Partition.from_blocks(g.n, blocks)
        check = is_pc_partition(g, witness)
        if not check.valid or witness.order != pc:
            raise AssertionError("solver produced an invalid witness")
        k = witness.order
        pcg = tuple(
            tuple(j in check.partners[i] for j in range(k)) for i in range(k)
        )
    stats = SearchStats(nodes=nodes, elapsed_s=time.monotonic() - start,
                        mode=mode, assumptions=assumptions)
    return PcResult(pc=pc, witness=witness, pcg_adjacency=pcg, stats=stats)
