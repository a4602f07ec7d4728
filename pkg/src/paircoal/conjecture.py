"""Budgeted exploration of pc-numbers of perfect binary trees.

Exact values are reported only when a search completes; otherwise the row
carries a verified lower bound (a checked witness) and whatever upper bound
the finished refutations support, with every assumption listed. Nothing is
ever asserted on faith.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coalition import SearchBudgetExceeded, is_pc_partition, pc_number
from .families import FamilySpec, generate, illustrated_partition
from .graphs import MAX_ORDER

CONJECTURE_HEIGHT_CAP = 6


@dataclass
class ConjectureRow:
    height: int
    order: int
    exact: int | None
    lower: int | None
    upper: int | None
    assumptions: tuple[str, ...]
    elapsed_s: float
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "height": self.height,
            "order": self.order,
            "exact": self.exact,
            "lower_bound": self.lower,
            "upper_bound": self.upper,
            "assumptions": list(self.assumptions),
            "elapsed_s": round(self.elapsed_s, 3),
            "note": self.note,
        }

    def summary(self) -> str:
        if self.exact is not None:
            value = f"pc = {self.exact}"
        else:
            lo = "?" if self.lower is None else str(self.lower)
            hi = "?" if self.upper is None else str(self.upper)
            value = f"pc in [{lo}, {hi}] (exact open)"
        note = f" -- {self.note}" if self.note else ""
        return f"h={self.height} (order {self.order}): {value}{note}"


def explore_conjecture(h_max: int, budget_s: float = 60.0) -> list[ConjectureRow]:
    """One row per height 1..h_max, within a per-height search budget."""
    if not 1 <= h_max <= CONJECTURE_HEIGHT_CAP:
        raise ValueError(f"height must be within 1..{CONJECTURE_HEIGHT_CAP}")
    rows = []
    for h in range(1, h_max + 1):
        start = time.monotonic()
        n = 2 ** (h + 1) - 1
        if n > MAX_ORDER:
            rows.append(
                ConjectureRow(
                    height=h, order=n, exact=None, lower=None, upper=None,
                    assumptions=(), elapsed_s=time.monotonic() - start,
                    note=f"order {n} exceeds the {MAX_ORDER}-vertex cap",
                )
            )
            continue
        fs = FamilySpec("T", (h,))
        g = generate(fs)
        lower = None
        witness = illustrated_partition(fs)
        if witness is not None and is_pc_partition(g, witness).valid:
            lower = witness.order
        try:
            if h <= 2:
                res = pc_number(g, budget_s=budget_s)
            else:
                res = pc_number(
                    g, lemma_pruning=True, assume_binary_ceiling=True,
                    budget_s=budget_s,
                )
            rows.append(
                ConjectureRow(
                    height=h, order=n, exact=res.pc, lower=res.pc, upper=res.pc,
                    assumptions=res.stats.assumptions,
                    elapsed_s=time.monotonic() - start,
                )
            )
        except SearchBudgetExceeded as exc:
            from .search import ASSUME_BINARY_CEILING

            upper = None
            note_bits = ["budget exhausted"]
            if exc.refuted_orders:
                upper = min(exc.refuted_orders) - 1
                note_bits.append(
                    f"orders {sorted(exc.refuted_orders)} refuted"
                )
            elif ASSUME_BINARY_CEILING in exc.assumptions:
                upper = 4  # the ceiling itself, when it was the active cap
            if lower is not None:
                note_bits.append("lower bound from a verified witness")
            rows.append(
                ConjectureRow(
                    height=h, order=n, exact=None, lower=lower, upper=upper,
                    assumptions=exc.assumptions,
                    elapsed_s=time.monotonic() - start,
                    note="; ".join(note_bits),
                )
            )
    return rows
