"""Constructors and recognizers for every named graph family in the toolkit.

Each generator fixes a vertex layout so the illustrated partitions below
line up with the construction:

* ``P(n)``/``C(n)``: vertices along the path/cycle in order.
* ``K(n)``, ``K(a,b)``, ``K(p1,...,pk)``: complete, complete bipartite
  (parts ``0..a-1`` and ``a..a+b-1``), complete multipartite.
* ``Star(n)``: center 0.
* ``S(p,q)`` double star: adjacent centers 0 and 1, then the ``p`` leaves of
  0 and the ``q`` leaves of 1.
* ``SD(p,q)`` subdivided double star: support centers 0 and 2 joined through
  the subdivision vertex 1, then leaves as for ``S``.
* ``T(h)`` perfect binary tree: heap order, children of ``i`` are ``2i+1``
  and ``2i+2``.
* ``B`` the 5-cycle ``0-1-2-3-4``; ``B1(a)`` adds a leaf fan at 0;
  ``B2(a,b)`` adds fans at 0 and 2, the two cycle-neighbors of 1.
* ``D1(a)`` the 4-cycle ``0-1-2-3`` with a fan at 2; ``D2(a,b)`` fans at the
  non-adjacent pair 0 and 2.
* ``E1(a,b)``..``E7(a,b)``: the triangle ``0,1,2`` with leaf fans and
  pendant paths attached as in the unicyclic girth-3 catalogue (layouts in
  the generator docstrings).
* ``NoPcTree``: the 15-vertex tree with no pc-partition (a 4-vertex tree
  with a perfect matching, every vertex joined to at least two new leaves).
* ``AttachLeaves(<base>;c1,...,cn)``: joins ``ci >= 2`` fresh leaves to
  vertex ``i`` of the base graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coalition import Partition
from .graphs import (
    Graph,
    GraphError,
    canonical_key,
    connected_components,
    structure_class,
)

RECOGNIZE_ORDER_CAP = 32

LEAF_FAN_KINDS = {
    "B1": 1, "B2": 2, "D1": 1, "D2": 2,
    "E1": 2, "E2": 3, "E3": 1, "E4": 2, "E5": 1, "E6": 1, "E7": 2,
}

# Recognition order: specific shapes before the bipartite/multipartite
# catch-alls, so a star reports as Star rather than K(1,q).
KNOWN_KINDS = (
    "P", "C", "K", "Star", "T", "S", "SD",
    "B", "B1", "B2", "D1", "D2",
    "E1", "E2", "E3", "E4", "E5", "E6", "E7",
    "NoPcTree", "KB", "KM", "AttachLeaves",
)

UNICYCLIC_PC_N2_KINDS = ("B", "B1", "B2", "D1", "D2",
                         "E1", "E2", "E3", "E4", "E5", "E6", "E7")


class FamilyError(ValueError):
    """Raised for unknown kinds or out-of-range family parameters."""


@dataclass(frozen=True)
class FamilySpec:
    """A named generator with integer parameters (plus a base for attachments)."""

    kind: str
    params: tuple[int, ...] = ()
    base: "FamilySpec | None" = None

    def __str__(self) -> str:
        return format_family(self)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


def _fan(edges: list[tuple[int, int]], at: int, count: int, nxt: int) -> int:
    for _ in range(count):
        edges.append((at, nxt))
        nxt += 1
    return nxt


def generate(fs: FamilySpec) -> Graph:
    """Build the graph a family spec describes; labels carry the text form."""
    kind, p = fs.kind, fs.params
    label = format_family(fs)
    if kind == "P":
        _require(len(p) == 1 and p[0] >= 1, "P(n) needs n >= 1")
        n = p[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], label)
    if kind == "C":
        _require(len(p) == 1 and p[0] >= 3, "C(n) needs n >= 3")
        n = p[0]
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], label)
    if kind == "K":
        _require(len(p) == 1 and p[0] >= 1, "K(n) needs n >= 1")
        n = p[0]
        return Graph.from_edges(
            n, [(u, v) for u in range(n) for v in range(u + 1, n)], label
        )
    if kind == "KB":
        _require(len(p) == 2 and min(p) >= 1, "K(a,b) needs a,b >= 1")
        a, b = p
        return Graph.from_edges(
            a + b, [(u, a + v) for u in range(a) for v in range(b)], label
        )
    if kind == "KM":
        _require(len(p) >= 2 and min(p) >= 1, "complete multipartite needs >= 2 parts")
        bounds = [0]
        for size in p:
            bounds.append(bounds[-1] + size)
        n = bounds[-1]
        part_of = [0] * n
        for i in range(len(p)):
            for v in range(bounds[i], bounds[i + 1]):
                part_of[v] = i
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if part_of[u] != part_of[v]
        ]
        return Graph.from_edges(n, edges, label)
    if kind == "Star":
        _require(len(p) == 1 and p[0] >= 2, "Star(n) needs n >= 2")
        n = p[0]
        return Graph.from_edges(n, [(0, v) for v in range(1, n)], label)
    if kind == "S":
        _require(len(p) == 2 and min(p) >= 1, "S(p,q) needs p,q >= 1")
        a, b = p
        edges = [(0, 1)]
        nxt = _fan(edges, 0, a, 2)
        _fan(edges, 1, b, nxt)
        return Graph.from_edges(a + b + 2, edges, label)
    if kind == "SD":
        _require(len(p) == 2 and min(p) >= 1, "SD(p,q) needs p,q >= 1")
        a, b = p
        edges = [(0, 1), (1, 2)]
        nxt = _fan(edges, 0, a, 3)
        _fan(edges, 2, b, nxt)
        return Graph.from_edges(a + b + 3, edges, label)
    if kind == "T":
        _require(len(p) == 1 and p[0] >= 1, "T(h) needs h >= 1")
        n = 2 ** (p[0] + 1) - 1
        edges = [(i, 2 * i + 1) for i in range((n - 1) // 2)]
        edges += [(i, 2 * i + 2) for i in range((n - 1) // 2)]
        return Graph.from_edges(n, edges, label)
    if kind == "B":
        _require(len(p) == 0, "B takes no parameters")
        return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)], label)
    if kind in ("B1", "B2"):
        _require(len(p) == LEAF_FAN_KINDS[kind] and min(p) >= 1,
                 f"{kind} needs leaf counts >= 1")
        edges = [(i, (i + 1) % 5) for i in range(5)]
        nxt = _fan(edges, 0, p[0], 5)
        if kind == "B2":
            _fan(edges, 2, p[1], nxt)
        return Graph.from_edges(5 + sum(p), edges, label)
    if kind in ("D1", "D2"):
        _require(len(p) == LEAF_FAN_KINDS[kind] and min(p) >= 1,
                 f"{kind} needs leaf counts >= 1")
        edges = [(i, (i + 1) % 4) for i in range(4)]
        nxt = _fan(edges, 2, p[0], 4) if kind == "D1" else _fan(edges, 0, p[0], 4)
        if kind == "D2":
            _fan(edges, 2, p[1], nxt)
        return Graph.from_edges(4 + sum(p), edges, label)
    if kind in ("E1", "E2", "E3", "E4", "E5", "E6", "E7"):
        _require(len(p) == LEAF_FAN_KINDS[kind] and min(p) >= 1,
                 f"{kind} needs leaf counts >= 1")
        edges = [(0, 1), (1, 2), (0, 2)]
        if kind == "E1":  # fans at triangle vertices 0 and 1
            nxt = _fan(edges, 0, p[0], 3)
            _fan(edges, 1, p[1], nxt)
        elif kind == "E2":  # fans at all three triangle vertices
            nxt = _fan(edges, 0, p[0], 3)
            nxt = _fan(edges, 1, p[1], nxt)
            _fan(edges, 2, p[2], nxt)
        elif kind == "E3":  # pendant 3 at vertex 1, fan at 3
            edges.append((1, 3))
            _fan(edges, 3, p[0], 4)
        elif kind == "E4":  # E3 plus a fan at the bare triangle vertex 0
            edges.append((1, 3))
            nxt = _fan(edges, 3, p[0], 4)
            _fan(edges, 0, p[1], nxt)
        elif kind == "E5":  # pendant path 1-3-4, fan at the far end 4
            edges += [(1, 3), (3, 4)]
            _fan(edges, 4, p[0], 5)
        elif kind == "E6":  # pendant path 1-3-4, fan at the carrier 1
            edges += [(1, 3), (3, 4)]
            _fan(edges, 1, p[0], 5)
        else:  # E7: pendant path 1-3-4, fans at 1 and 4
            edges += [(1, 3), (3, 4)]
            nxt = _fan(edges, 1, p[0], 5)
            _fan(edges, 4, p[1], nxt)
        base_order = {"E1": 3, "E2": 3, "E3": 4, "E4": 4, "E5": 5, "E6": 5, "E7": 5}
        return Graph.from_edges(base_order[kind] + sum(p), edges, label)
    if kind == "NoPcTree":
        _require(len(p) == 0, "NoPcTree takes no parameters")
        base = FamilySpec("AttachLeaves", (3, 2, 2, 4),
                          base=FamilySpec("_NoPcBase"))
        return generate(base).with_label(label)
    if kind == "_NoPcBase":
        # 4-vertex tree 1-0-2-3 (it has a perfect matching)
        return Graph.from_edges(4, [(0, 1), (0, 2), (2, 3)])
    if kind == "AttachLeaves":
        _require(fs.base is not None, "AttachLeaves needs a base family")
        base_graph = generate(fs.base)
        _require(len(p) == base_graph.n, "one leaf count per base vertex")
        _require(min(p) >= 2, "AttachLeaves counts must all be >= 2")
        edges = list(base_graph.edges())
        nxt = base_graph.n
        for v, c in enumerate(p):
            nxt = _fan(edges, v, c, nxt)
        return Graph.from_edges(base_graph.n + sum(p), edges, label)
    raise FamilyError(f"unknown family kind {kind!r}")


def family_order(fs: FamilySpec) -> int:
    """Order of ``generate(fs)`` without building it."""
    kind, p = fs.kind, fs.params
    if kind in ("P", "C", "K", "Star"):
        return p[0]
    if kind in ("KB", "KM"):
        return sum(p)
    if kind == "S":
        return sum(p) + 2
    if kind == "SD":
        return sum(p) + 3
    if kind == "T":
        return 2 ** (p[0] + 1) - 1
    if kind == "B":
        return 5
    if kind in ("B1", "B2"):
        return 5 + sum(p)
    if kind in ("D1", "D2"):
        return 4 + sum(p)
    if kind in ("E1", "E2"):
        return 3 + sum(p)
    if kind in ("E3", "E4"):
        return 4 + sum(p)
    if kind in ("E5", "E6", "E7"):
        return 5 + sum(p)
    if kind == "NoPcTree":
        return 15
    if kind == "_NoPcBase":
        return 4
    if kind == "AttachLeaves":
        assert fs.base is not None
        return family_order(fs.base) + sum(p)
    raise FamilyError(f"unknown family kind {kind!r}")


def illustrated_partition(fs: FamilySpec) -> Partition | None:
    """The known maximum pc-partition a family carries, when one is on file.

    For the unicyclic catalogue this is the three-vertex block plus
    singletons; paths, cycles, stars, double-star variants and odd-height
    perfect binary trees carry their standard witnesses.
    """
    kind, p = fs.kind, fs.params
    g = generate(fs)
    n = g.n

    def three_block(core: Sequence[int]) -> Partition:
        rest = [[v] for v in range(n) if v not in core]
        return Partition.from_vertex_lists(n, [list(core)] + rest)

    if kind in ("B", "B1", "B2", "D1", "D2", "E1", "E2"):
        return three_block([0, 1, 2])
    if kind in ("E3", "E4"):
        return three_block([0, 1, 3])
    if kind in ("E5", "E6", "E7"):
        return three_block([1, 3, 4])
    if kind == "SD":
        return three_block([0, 1, 2])
    if kind == "S" and min(p) == 1:
        leaf = 2 if p[0] == 1 else 2 + p[0]
        return three_block([0, 1, leaf])
    if kind in ("K", "Star", "KB", "KM"):
        return Partition.from_vertex_lists(n, [[v] for v in range(n)])
    if kind == "P":
        if n == 1:
            return None
        if n == 2:
            return Partition.from_vertex_lists(2, [[0], [1]])
        if n == 4:
            return Partition.from_vertex_lists(4, [[0, 1], [2, 3]])
        if n % 2 == 1:
            return Partition.from_vertex_lists(
                n, [[0], list(range(1, n - 1)), [n - 1]]
            )
        if n == 6:
            return Partition.from_vertex_lists(6, [[0, 5], [1, 4], [2, 3]])
        return Partition.from_vertex_lists(
            n, [[0, 1] + list(range(6, n)), [2, 3], [4, 5]]
        )
    if kind == "C":
        if n % 4 == 0:
            return Partition.from_vertex_lists(
                n, [list(range(r, n, 4)) for r in range(4)]
            )
        if n % 2 == 1:
            return Partition.from_vertex_lists(n, [[0], [1], list(range(2, n))])
        # For n = 2 mod 4 the (n-2)-vertex run would itself be a paired
        # dominating set, so split off two non-dominating doubletons instead.
        if n == 6:
            return Partition.from_vertex_lists(6, [[0, 1], [2, 3], [4, 5]])
        return Partition.from_vertex_lists(
            n, [[0, 1] + list(range(6, n)), [2, 3], [4, 5]]
        )
    if kind == "T" and p[0] % 2 == 1:
        # Even depths in one block; odd-depth vertices split so each parent
        # sends one child each way. Each even-depth vertex then matches its
        # chosen child in either union, while the block itself is edgeless.
        depth = [(v + 1).bit_length() - 1 for v in range(n)]
        even = [v for v in range(n) if depth[v] % 2 == 0]
        b2, b3 = [], []
        for v in range(n):
            if depth[v] % 2 == 1:
                (b2 if v % 2 == 1 else b3).append(v)
        return Partition.from_vertex_lists(n, [even, b2, b3])
    return None


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------


def format_family(fs: FamilySpec) -> str:
    kind, p = fs.kind, fs.params
    if kind in ("KB", "KM"):
        return "K(" + ",".join(map(str, p)) + ")"
    if kind == "AttachLeaves":
        assert fs.base is not None
        return f"AttachLeaves({format_family(fs.base)};" + ",".join(map(str, p)) + ")"
    if kind == "_NoPcBase":
        return "_NoPcBase"
    if not p:
        return kind
    return kind + "(" + ",".join(map(str, p)) + ")"


def parse_family(text: str) -> FamilySpec:
    """Parse the canonical text form, e.g. ``E7(2,3)``, ``T(3)``, ``P(6)``."""
    text = text.strip()
    if "(" not in text:
        name, args = text, ""
    else:
        if not text.endswith(")"):
            raise FamilyError(f"unbalanced parentheses in {text!r}")
        name, args = text.split("(", 1)
        args = args[:-1]
    name = name.strip()
    if name == "AttachLeaves":
        if ";" not in args:
            raise FamilyError("AttachLeaves needs '<base>;c1,c2,...'")
        base_text, counts_text = args.rsplit(";", 1)
        counts = _parse_ints(counts_text)
        fs = FamilySpec("AttachLeaves", counts, base=parse_family(base_text))
        generate(fs)  # validate parameters eagerly
        return fs
    params = _parse_ints(args) if args else ()
    if name == "K" and len(params) == 2:
        name = "KB"
    elif name == "K" and len(params) > 2:
        name = "KM"
    if name not in KNOWN_KINDS:
        raise FamilyError(f"unknown family kind {name!r}")
    fs = FamilySpec(name, params)
    generate(fs)  # validate parameters eagerly
    return fs


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise FamilyError(f"bad integer parameters in {text!r}") from exc


# ---------------------------------------------------------------------------
# Recognition
# ---------------------------------------------------------------------------


def _param_candidates(kind: str, n: int):
    if kind == "P" and n >= 1:
        yield (n,)
    elif kind == "C" and n >= 3:
        yield (n,)
    elif kind == "K" and n >= 1:
        yield (n,)
    elif kind == "Star" and n >= 2:
        yield (n,)
    elif kind == "KB":
        for a in range(1, n // 2 + 1):
            yield (a, n - a)
    elif kind == "S":
        for a in range(1, (n - 2) // 2 + 1):
            yield (a, n - 2 - a)
    elif kind == "SD":
        for a in range(1, (n - 3) // 2 + 1):
            yield (a, n - 3 - a)
    elif kind == "T":
        if n >= 3 and (n + 1) & n == 0:
            yield ((n + 1).bit_length() - 2,)
    elif kind == "B":
        if n == 5:
            yield ()
    elif kind == "B1":
        if n >= 6:
            yield (n - 5,)
    elif kind == "B2":
        for a in range(1, (n - 5) // 2 + 1):
            yield (a, n - 5 - a)
    elif kind == "D1":
        if n >= 5:
            yield (n - 4,)
    elif kind == "D2":
        for a in range(1, (n - 4) // 2 + 1):
            yield (a, n - 4 - a)
    elif kind == "E1":
        for a in range(1, (n - 3) // 2 + 1):
            yield (a, n - 3 - a)
    elif kind == "E2":
        for a in range(1, n - 2):
            for b in range(a, n - 2):
                c = n - 3 - a - b
                if c >= b:
                    yield (a, b, c)
    elif kind == "E3":
        if n >= 5:
            yield (n - 4,)
    elif kind == "E4":
        for a in range(1, n - 4):
            yield (a, n - 4 - a)
    elif kind in ("E5", "E6"):
        if n >= 6:
            yield (n - 5,)
    elif kind == "E7":
        for a in range(1, n - 5):
            yield (a, n - 5 - a)
    elif kind == "NoPcTree":
        if n == 15:
            yield ()


def recognize(g: Graph, kinds: Iterable[str] = KNOWN_KINDS) -> FamilySpec | None:
    """Find a family spec generating a graph isomorphic to ``g``.

    Complete over the listed kinds for orders up to 32; parameters are
    normalized (sorted) wherever the family is symmetric in them.
    """
    if g.n > RECOGNIZE_ORDER_CAP:
        raise GraphError(f"recognition capped at order {RECOGNIZE_ORDER_CAP}")
    n = g.n
    m = g.edge_count
    flags = None
    target = None
    for kind in kinds:
        if kind == "KM":
            # Structural shortcut: the complement components are the parts.
            if flags is None:
                flags = structure_class(g)
            if flags.complete_multipartite:
                comp = Graph(n, tuple((g.full_mask & ~g.adj[v]) & ~(1 << v)
                                      for v in range(n)))
                parts = tuple(sorted(c.bit_count() for c in connected_components(comp)))
                if len(parts) == 2:
                    return FamilySpec("KB", parts)
                return FamilySpec("KM", parts)
            continue
        for params in _param_candidates(kind, n):
            fs = FamilySpec(kind, params)
            h = generate(fs)
            if h.edge_count != m:
                continue
            if target is None:
                target = canonical_key(g)
            if canonical_key(h) == target:
                return fs
    return None
