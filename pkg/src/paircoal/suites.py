"""Named executable checks, one per characterization the toolkit covers.

Each suite sweeps an exhaustive instance family, compares computed
pc-numbers (or coalition-graph shapes) against the claimed statement, and
returns a ``SuiteReport`` whose ``failures`` list is empty exactly when the
statement held on every instance. Instances are logged by canonical graph6
string so failures are reproducible.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable

from .coalition import all_pc_partitions, pc_number
from .domination import is_paired_dominating
from .families import UNICYCLIC_PC_N2_KINDS, FamilySpec, generate, recognize
from .gformats import canonical_graph6
from .graphs import (
    Graph,
    GraphError,
    canonical_key,
    classify_vertices,
    girth,
    iter_bits,
    structure_class,
)
from .enumeration import enumerate_graphs, enumerate_trees, enumerate_unicyclic

THREADS_ENV = "PAIRCOAL_THREADS"


def worker_count(explicit: int | None = None) -> int:
    if explicit is not None:
        return max(1, explicit)
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _pc_task(args):
    n, adj, kwargs = args
    return pc_number(Graph(n, adj), **dict(kwargs)).pc


def _pc_and_oracle_task(args):
    n, adj = args
    g = Graph(n, adj)
    from .coalition import pc_number_oracle

    return pc_number(g).pc, pc_number_oracle(g)


def _fan_out(task, items, workers):
    w = worker_count(workers)
    if w <= 1 or len(items) < 8:
        return [task(it) for it in items]
    with Pool(w) as pool:
        return pool.map(task, items, chunksize=max(1, len(items) // (8 * w)))


def pc_many(graphs: list[Graph], workers: int | None = None, **kwargs) -> list[int]:
    """pc-number per graph, fanned out over a worker pool, input order kept."""
    items = [(g.n, g.adj, tuple(kwargs.items())) for g in graphs]
    return _fan_out(_pc_task, items, workers)


def pc_and_oracle_many(
    graphs: list[Graph], workers: int | None = None
) -> list[tuple[int, int]]:
    """(solver, oracle) value pairs per graph, order preserved."""
    return _fan_out(_pc_and_oracle_task, [(g.n, g.adj) for g in graphs], workers)


@dataclass
class SuiteFailure:
    instance: str
    expected: str
    got: str


@dataclass
class SuiteReport:
    suite_id: str
    statement: str
    instances: int
    instance_log: list[str]
    failures: list[SuiteFailure]
    elapsed_s: float
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite_id,
            "statement": self.statement,
            "instances": self.instances,
            "passed": self.passed,
            "failures": [vars(f) for f in self.failures],
            "instance_log": self.instance_log,
            "elapsed_s": round(self.elapsed_s, 3),
            "extra": self.extra,
        }

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return (
            f"[{status}] {self.suite_id}: {self.statement} "
            f"-- {self.instances} instances in {self.elapsed_s:.1f}s"
        )


class _Run:
    def __init__(self, suite_id: str, statement: str):
        self.suite_id = suite_id
        self.statement = statement
        self.start = time.monotonic()
        self.log: list[str] = []
        self.failures: list[SuiteFailure] = []
        self.extra: dict = {}

    def instance(self, g: Graph) -> str:
        s = canonical_graph6(g)
        self.log.append(s)
        return s

    def check(self, name: str, expected, got) -> None:
        if expected != got:
            self.failures.append(SuiteFailure(name, repr(expected), repr(got)))

    def require(self, name: str, condition: bool, expected: str, got: str) -> None:
        if not condition:
            self.failures.append(SuiteFailure(name, expected, got))

    def report(self) -> SuiteReport:
        return SuiteReport(
            suite_id=self.suite_id,
            statement=self.statement,
            instances=len(self.log),
            instance_log=self.log,
            failures=self.failures,
            elapsed_s=time.monotonic() - self.start,
            extra=self.extra,
        )


def _pc_path_expected(n: int) -> int:
    return 2 if n in (2, 4) else 3


def _pc_cycle_expected(n: int) -> int:
    return 4 if n % 4 == 0 else 3


def _star_shape(k: int, pcg: Graph) -> bool:
    degs = sorted(pcg.degree(v) for v in range(pcg.n))
    if k == 2:
        return degs == [1, 1]
    return degs == [1] * (k - 1) + [k - 1]


def _partitions_with_partner_sets(g: Graph):
    """(partition, partner tuple per block) for every pc-partition of ``g``."""
    cache: list[bool | None] = [None] * (1 << g.n)

    def pds(mask: int) -> bool:
        v = cache[mask]
        if v is None:
            v = is_paired_dominating(g, mask)
            cache[mask] = v
        return v

    for p in all_pc_partitions(g):
        k = p.order
        partners = tuple(
            tuple(j for j in range(k) if j != i and pds(p.blocks[i] | p.blocks[j]))
            for i in range(k)
        )
        yield p, partners


def _maximum_partitions_with_partner_sets(g: Graph):
    """Same, restricted to partitions of the maximum order.

    The path/cycle coalition-graph characterizations concern maximum
    pc-partitions: smaller valid partitions exist (a vertex against the odd
    remainder of an even cycle, say) and realize plain K_2.
    """
    pairs = list(_partitions_with_partner_sets(g))
    if not pairs:
        return
    best = max(p.order for p, _ in pairs)
    for p, partners in pairs:
        if p.order == best:
            yield p, partners


# ---------------------------------------------------------------------------
# Suite bodies
# ---------------------------------------------------------------------------


def _suite_paths(params: dict) -> SuiteReport:
    run = _Run("paths", "pc(P_n) = 2 for n in {2,4} and 3 for every other n >= 3")
    for n in range(2, params.get("max_order", 12) + 1):
        g = generate(FamilySpec("P", (n,)))
        name = run.instance(g)
        run.check(f"{name} (P_{n})", _pc_path_expected(n), pc_number(g).pc)
    return run.report()


def _suite_cycles(params: dict) -> SuiteReport:
    run = _Run("cycles", "pc(C_n) = 4 when 4 divides n, else 3")
    for n in range(3, params.get("max_order", 12) + 1):
        g = generate(FamilySpec("C", (n,)))
        name = run.instance(g)
        run.check(f"{name} (C_{n})", _pc_cycle_expected(n), pc_number(g).pc)
    return run.report()


def _suite_pcp_graphs(params: dict) -> SuiteReport:
    run = _Run(
        "pcp-graphs",
        "coalition graphs of maximum pc-partitions of paths are exactly "
        "P_2 and P_3",
    )
    allowed = {
        canonical_key(generate(FamilySpec("P", (2,)))): "P_2",
        canonical_key(generate(FamilySpec("P", (3,)))): "P_3",
    }
    realized: set[str] = set()
    for n in range(2, params.get("max_order", 8) + 1):
        g = generate(FamilySpec("P", (n,)))
        name = run.instance(g)
        for p, partners in _maximum_partitions_with_partner_sets(g):
            edges = [(i, j) for i, mine in enumerate(partners) for j in mine if i < j]
            pcg = Graph.from_edges(p.order, edges)
            key = canonical_key(pcg)
            run.require(
                f"{name} partition {p.vertex_lists()}",
                key in allowed,
                "coalition graph in {P_2, P_3}",
                f"order {pcg.n}, edges {pcg.edges()}",
            )
            if key in allowed:
                realized.add(allowed[key])
    run.check("realized shapes", {"P_2", "P_3"}, realized)
    run.extra["realized"] = sorted(realized)
    return run.report()


def _suite_pcc_graphs(params: dict) -> SuiteReport:
    run = _Run(
        "pcc-graphs",
        "coalition graphs of maximum pc-partitions of cycles are exactly "
        "P_3, K_3, K_2+K_2, P_4 and C_4",
    )
    shapes = {
        canonical_key(generate(FamilySpec("P", (3,)))): "P_3",
        canonical_key(generate(FamilySpec("K", (3,)))): "K_3",
        canonical_key(Graph.from_edges(4, [(0, 1), (2, 3)])): "K_2+K_2",
        canonical_key(generate(FamilySpec("P", (4,)))): "P_4",
        canonical_key(generate(FamilySpec("C", (4,)))): "C_4",
    }
    realized: set[str] = set()
    for n in range(3, params.get("max_order", 8) + 1):
        g = generate(FamilySpec("C", (n,)))
        name = run.instance(g)
        for p, partners in _maximum_partitions_with_partner_sets(g):
            edges = [(i, j) for i, mine in enumerate(partners) for j in mine if i < j]
            pcg = Graph.from_edges(p.order, edges)
            key = canonical_key(pcg)
            run.require(
                f"{name} partition {p.vertex_lists()}",
                key in shapes,
                "coalition graph among the five cycle shapes",
                f"order {pcg.n}, edges {pcg.edges()}",
            )
            if key in shapes:
                realized.add(shapes[key])
    run.check("realized shapes", set(shapes.values()), realized)
    run.extra["realized"] = sorted(realized)
    return run.report()


def _suite_pct_star(params: dict) -> SuiteReport:
    run = _Run(
        "pct-star",
        "every pc-partition of a tree has a star coalition graph whose center "
        "block holds all support vertices once there are three or more blocks",
    )
    for n in range(2, params.get("max_order", 9) + 1):
        for g in enumerate_trees(n):
            name = run.instance(g)
            support = classify_vertices(g).support
            for p, partners in _partitions_with_partner_sets(g):
                k = p.order
                edges = [(i, j) for i, mine in enumerate(partners) for j in mine if i < j]
                pcg = Graph.from_edges(k, edges)
                run.require(
                    f"{name} partition {p.vertex_lists()}",
                    _star_shape(k, pcg),
                    f"star K_1,{k - 1}",
                    f"edges {pcg.edges()}",
                )
                if k >= 3:
                    holders = [i for i, b in enumerate(p.blocks) if b & support == support]
                    run.require(
                        f"{name} partition {p.vertex_lists()} support block",
                        len(holders) == 1,
                        "exactly one block containing all support vertices",
                        f"{len(holders)} blocks do",
                    )
                    if len(holders) == 1 and _star_shape(k, pcg):
                        center = max(range(k), key=pcg.degree)
                        run.check(
                            f"{name} partition {p.vertex_lists()} center",
                            holders[0],
                            center,
                        )
    return run.report()


def _suite_tree_full(params: dict) -> SuiteReport:
    run = _Run("tree-full", "a tree of order >= 2 has pc = n exactly when it is a star")
    graphs: list[Graph] = []
    for n in range(2, params.get("max_order", 9) + 1):
        graphs.extend(enumerate_trees(n))
    values = pc_many(graphs, params.get("workers"))
    for g, pc in zip(graphs, values):
        name = run.instance(g)
        run.check(f"{name}", structure_class(g).star, pc == g.n)
    return run.report()


def _suite_no_n_minus_1(params: dict) -> SuiteReport:
    # Order 1 is skipped: pc(K_1) = 0 equals n - 1 only because no partition
    # into zero blocks exists at all.
    run = _Run("no-n-minus-1", "no graph of order >= 2 has pc = n - 1")
    graphs: list[Graph] = []
    for n in range(2, params.get("max_order", 7) + 1):
        graphs.extend(enumerate_graphs(n, connected=True))
    values = pc_many(graphs, params.get("workers"))
    for g, pc in zip(graphs, values):
        name = run.instance(g)
        run.require(name, pc != g.n - 1, "pc != n-1", f"pc = {pc} with n = {g.n}")
    return run.report()


def _suite_tree_n_2(params: dict) -> SuiteReport:
    run = _Run(
        "tree-n-2",
        "a tree of order >= 5 has pc = n - 2 exactly when it is S_1,p or a "
        "double star with its center edge subdivided",
    )
    graphs: list[Graph] = []
    for n in range(5, params.get("max_order", 10) + 1):
        graphs.extend(enumerate_trees(n))
    values = pc_many(graphs, params.get("workers"))
    for g, pc in zip(graphs, values):
        name = run.instance(g)
        fs = recognize(g, ("S", "SD"))
        in_family = fs is not None and (fs.kind == "SD" or fs.params[0] == 1)
        run.check(f"{name}", in_family, pc == g.n - 2)
    return run.report()


def _suite_tree_bound(params: dict) -> SuiteReport:
    run = _Run(
        "tree-bound",
        "a tree with a strong support vertex never has pc = 2, and when a "
        "pc-partition exists, pc >= (max leaves on one support) + 1",
    )
    graphs = []
    for n in range(3, params.get("max_order", 9) + 1):
        for g in enumerate_trees(n):
            if classify_vertices(g).strong_support:
                graphs.append(g)
    values = pc_many(graphs, params.get("workers"))
    for g, pc in zip(graphs, values):
        name = run.instance(g)
        run.require(name + " (no 2-split)", pc != 2, "pc != 2", f"pc = {pc}")
        if pc > 0:
            bound = max(c for _, c in classify_vertices(g).leaf_counts) + 1
            run.require(
                name, pc >= bound, f"pc >= {bound}", f"pc = {pc}"
            )
    return run.report()


def _suite_corona_none(params: dict) -> SuiteReport:
    run = _Run(
        "corona-none",
        "joining >= 2 leaves to every vertex of a tree with a perfect "
        "matching yields a tree with no pc-partition",
    )
    from .matching import mask_has_perfect_matching

    max_count = params.get("max_count", 3)
    bases = []
    for n in (2, 4):
        if n > params.get("max_base", 4):
            continue
        for t in enumerate_trees(n):
            if mask_has_perfect_matching(t.n, t.adj, t.full_mask):
                bases.append(t)
    for base in bases:
        counts_iter = _count_tuples(base.n, 2, max_count)
        for counts in counts_iter:
            edges = list(base.edges())
            nxt = base.n
            for v, c in enumerate(counts):
                for _ in range(c):
                    edges.append((v, nxt))
                    nxt += 1
            g = Graph.from_edges(nxt, edges)
            name = run.instance(g)
            pc = pc_number(g, lemma_pruning=True).pc
            run.check(f"{name} counts={counts}", 0, pc)
    return run.report()


def _count_tuples(k: int, lo: int, hi: int):
    if k == 0:
        yield ()
        return
    for first in range(lo, hi + 1):
        for rest in _count_tuples(k - 1, lo, hi):
            yield (first,) + rest


def _suite_min_deg_one_full(params: dict) -> SuiteReport:
    run = _Run(
        "min-deg-one-full",
        "a graph with minimum degree 1 has pc = n exactly when the support "
        "of some leaf is a full vertex",
    )
    graphs = []
    for n in range(2, params.get("max_order", 7) + 1):
        for g in enumerate_graphs(n):
            if g.min_degree() == 1:
                graphs.append(g)
    values = pc_many(graphs, params.get("workers"))
    for g, pc in zip(graphs, values):
        name = run.instance(g)
        cls = classify_vertices(g)
        full_support = any(
            cls.full & g.adj[leaf] for leaf in iter_bits(cls.leaves)
        )
        run.check(name, full_support, pc == g.n)
    return run.report()


def _suite_pc_n_girth(params: dict) -> SuiteReport:
    run = _Run("pc-n-girth", "pc = n forces any cycle to have length at most 4")
    graphs: list[Graph] = []
    for n in range(1, params.get("max_order", 7) + 1):
        graphs.extend(enumerate_graphs(n, connected=True))
    values = pc_many(graphs, params.get("workers"))
    for g, pc in zip(graphs, values):
        name = run.instance(g)
        if pc == g.n:
            gr = girth(g)
            run.require(
                name, gr is None or gr <= 4, "girth <= 4 (or acyclic)", f"girth {gr}"
            )
    return run.report()


def _suite_triangle_free_n(params: dict) -> SuiteReport:
    run = _Run(
        "triangle-free-n",
        "a connected triangle-free graph of order >= 2 has pc = n exactly "
        "when it is complete bipartite",
    )
    graphs = []
    for n in range(2, params.get("max_order", 7) + 1):
        graphs.extend(enumerate_graphs(n, connected=True, triangle_free=True))
    values = pc_many(graphs, params.get("workers"))
    for g, pc in zip(graphs, values):
        name = run.instance(g)
        run.check(name, structure_class(g).complete_bipartite, pc == g.n)
    return run.report()


def _suite_girth4_full(params: dict) -> SuiteReport:
    run = _Run(
        "girth4-full",
        "a graph of girth 4 has pc = n exactly when it is complete bipartite",
    )
    graphs = []
    for n in range(4, params.get("max_order", 7) + 1):
        for g in enumerate_graphs(n):
            if girth(g) == 4:
                graphs.append(g)
    values = pc_many(graphs, params.get("workers"))
    for g, pc in zip(graphs, values):
        name = run.instance(g)
        run.check(name, structure_class(g).complete_bipartite, pc == g.n)
    return run.report()


def _suite_multipartite(params: dict) -> SuiteReport:
    run = _Run("multipartite", "complete multipartite graphs have pc = n")
    from .enumeration import _partitions

    for n in range(2, params.get("max_order", 7) + 1):
        for parts in _partitions(n):
            if len(parts) < 2:
                continue
            g = generate(FamilySpec("KM", tuple(parts)) if len(parts) > 2
                         else FamilySpec("KB", tuple(parts)))
            name = run.instance(g)
            run.check(f"{name} parts={tuple(parts)}", g.n, pc_number(g).pc)
    return run.report()


def _suite_unicyclic_n_2(params: dict) -> SuiteReport:
    run = _Run(
        "unicyclic-n-2",
        "a unicyclic graph has pc = n - 2 exactly when it lies in the "
        "girth-3/4/5 leaf-fan catalogue; girth >= 6 forces pc < n - 2",
    )
    graphs: list[Graph] = []
    for n in range(3, params.get("max_order", 9) + 1):
        graphs.extend(enumerate_unicyclic(n))
    values = pc_many(graphs, params.get("workers"))
    minimal_fans: list[str] = []
    for g, pc in zip(graphs, values):
        name = run.instance(g)
        fs = recognize(g, UNICYCLIC_PC_N2_KINDS)
        run.check(name, fs is not None, pc == g.n - 2)
        if fs is not None and fs.params and min(fs.params) == 1:
            minimal_fans.append(f"{name} = {fs}")
        gr = girth(g)
        if gr is not None and gr >= 6:
            run.require(
                name + " (girth>=6)", pc < g.n - 2, "pc < n-2", f"pc = {pc}"
            )
    run.extra["single-leaf-fan instances"] = minimal_fans
    return run.report()


def _suite_binary_trees(params: dict) -> SuiteReport:
    run = _Run(
        "binary-trees",
        "perfect binary trees: pc(T(1)) = 3, pc(T(2)) = 5, pc(T(3)) = 3 and "
        "pc(T(4)) = 0 (heights >= 3 searched under the proven order-4 ceiling)",
    )
    expected = {1: 3, 2: 5, 3: 3, 4: 0}
    assumptions: dict[str, tuple[str, ...]] = {}
    budget = params.get("budget_s")
    for h in range(1, params.get("max_height", 4) + 1):
        g = generate(FamilySpec("T", (h,)))
        name = run.instance(g)
        if h <= 2:
            res = pc_number(g)
        else:
            res = pc_number(
                g, lemma_pruning=True, assume_binary_ceiling=True, budget_s=budget
            )
        assumptions[f"T({h})"] = res.stats.assumptions
        run.check(f"{name} (T({h}))", expected[h], res.pc)
    run.extra["assumptions"] = {k: list(v) for k, v in assumptions.items()}
    return run.report()


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[[dict], SuiteReport]] = {
    "paths": _suite_paths,
    "cycles": _suite_cycles,
    "pcp-graphs": _suite_pcp_graphs,
    "pcc-graphs": _suite_pcc_graphs,
    "pct-star": _suite_pct_star,
    "tree-full": _suite_tree_full,
    "no-n-minus-1": _suite_no_n_minus_1,
    "tree-n-2": _suite_tree_n_2,
    "tree-bound": _suite_tree_bound,
    "corona-none": _suite_corona_none,
    "min-deg-one-full": _suite_min_deg_one_full,
    "pc-n-girth": _suite_pc_n_girth,
    "triangle-free-n": _suite_triangle_free_n,
    "girth4-full": _suite_girth4_full,
    "multipartite": _suite_multipartite,
    "unicyclic-n-2": _suite_unicyclic_n_2,
    "binary-trees": _suite_binary_trees,
}

# Every statement the harness is responsible for, mapped to the suites that
# exercise it. The registry test asserts full coverage in both directions.
STATEMENTS: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    ("full-vertex-pc-n",
     "a full vertex forces pc = n (order >= 2)",
     ("min-deg-one-full", "multipartite")),
    ("multipartite-pc-n",
     "complete multipartite graphs have pc = n",
     ("multipartite",)),
    ("leaf-support-full-iff",
     "minimum degree 1: pc = n iff a leaf's support vertex is full",
     ("min-deg-one-full",)),
    ("partners-cover-supports",
     "min degree 1: every pc-partner union contains all support vertices",
     ("pct-star",)),
    ("support-block-unique",
     "min degree 1, >= 3 blocks: one block holds all support vertices",
     ("pct-star", "binary-trees")),
    ("support-block-in-every-pair",
     "min degree 1, >= 3 blocks: every partner pair uses the support block",
     ("pct-star", "binary-trees")),
    ("delta1-star-pcg",
     "min degree 1: every coalition graph is a star",
     ("pct-star",)),
    ("path-pc-formula",
     "pc of paths is 2 for orders 2 and 4, else 3",
     ("paths",)),
    ("path-pcg-max-degree",
     "coalition graphs of paths have maximum degree <= 2",
     ("pcp-graphs",)),
    ("pcp-characterization",
     "graphs realizable as path coalition graphs are P_2 and P_3",
     ("pcp-graphs",)),
    ("cycle-pc-formula",
     "pc of cycles is 4 when 4 divides n, else 3",
     ("cycles",)),
    ("cycle-pcg-max-degree",
     "coalition graphs of cycles have maximum degree <= 2",
     ("pcc-graphs",)),
    ("pcc-characterization",
     "graphs realizable as cycle coalition graphs are P_3, K_3, K_2+K_2, P_4, C_4",
     ("pcc-graphs",)),
    ("strong-support-no-2-split",
     "a tree with a strong support vertex has no 2-block pc-partition",
     ("tree-bound",)),
    ("strong-leaves-avoid-support-block",
     "the support block avoids all leaves of strong support vertices",
     ("binary-trees", "tree-bound")),
    ("tree-leaf-lower-bound",
     "trees with a pc-partition: pc >= max leaves on one support + 1",
     ("tree-bound",)),
    ("double-leaf-corona-unsolvable",
     ">= 2 leaves on every vertex of a perfectly matched tree kills all partitions",
     ("corona-none",)),
    ("pct-characterization",
     "coalition graphs of trees are exactly the stars",
     ("pct-star",)),
    ("tree-pc-n-iff-star",
     "trees: pc = n iff star",
     ("tree-full",)),
    ("pc-never-n-minus-1",
     "no graph attains pc = n - 1",
     ("no-n-minus-1",)),
    ("tree-pc-n-2-characterization",
     "trees with pc = n - 2 are S_1,p or subdivided double stars",
     ("tree-n-2",)),
    ("binary-tree-values",
     "pc of perfect binary trees of heights 1..4 is 3, 5, 3, 0",
     ("binary-trees",)),
    ("binary-tree-ceiling",
     "perfect binary trees of height >= 3 have pc <= 4",
     ("binary-trees",)),
    ("pc-n-girth-bound",
     "pc = n forces girth at most 4",
     ("pc-n-girth",)),
    ("girth4-pc-n-iff-complete-bipartite",
     "girth 4: pc = n iff complete bipartite",
     ("girth4-full",)),
    ("triangle-free-pc-n-iff-complete-bipartite",
     "triangle-free: pc = n iff complete bipartite",
     ("triangle-free-n",)),
    ("matching-three-independent-obstruction",
     "a 4-set with three pairwise non-adjacent members has no perfect matching",
     ("unicyclic-n-2",)),
    ("matching-isolated-obstruction",
     "a 4-set with an isolated member has no perfect matching",
     ("unicyclic-n-2",)),
    ("girth6-pc-below-n-2",
     "girth >= 6 forces pc < n - 2",
     ("unicyclic-n-2",)),
    ("girth5-pc-n-2-characterization",
     "girth 5 with pc = n - 2: the 5-cycle with at most two leaf fans",
     ("unicyclic-n-2",)),
    ("girth4-unicyclic-pc-n-2-characterization",
     "unicyclic girth 4 with pc = n - 2: 4-cycle fans on opposite vertices",
     ("unicyclic-n-2",)),
    ("girth3-unicyclic-pc-n-2-characterization",
     "unicyclic girth 3 with pc = n - 2: the seven triangle families",
     ("unicyclic-n-2",)),
    ("unicyclic-pc-n-2-characterization",
     "unicyclic pc = n - 2 holds exactly on the twelve-family catalogue",
     ("unicyclic-n-2",)),
)


def run_suite(suite_id: str, params: dict | None = None) -> SuiteReport:
    """Run one named suite; unknown ids raise ``GraphError``."""
    if suite_id not in SUITES:
        raise GraphError(f"unknown suite {suite_id!r}; known: {sorted(SUITES)}")
    return SUITES[suite_id](params or {})


def run_all_suites(params: dict | None = None) -> list[SuiteReport]:
    return [run_suite(sid, params) for sid in SUITES]
