"""Exhaustive search for left-continuous t-norms on a finite lattice.

The backtracking search assigns the cells of a symmetric table, with the
top row pinned to the identity and the bottom row to the constant bottom
(both are forced for any t-norm). Cell domains are the order ideal below
the meet of the coordinates; partial assignments are pruned by
monotonicity, by binary left-continuity and by associativity on decided
triples. Every emitted table is re-verified by the full axiom checker, so
the pruning logic can never produce a false positive; completeness follows
because every pruning condition is necessary.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import TooLarge
from .lattice import Lattice, heights
from .ops import BinaryOp, check_operator


@dataclass(frozen=True)
class SearchResult:
    found: tuple[BinaryOp, ...]
    exhausted: bool
    stats: dict

    @property
    def count(self) -> int:
        return self.stats.get("solutions", len(self.found))


def _fixed_table(lattice: Lattice) -> list[list[int | None]]:
    n, top, bot = lattice.n, lattice.top, lattice.bottom
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    for y in range(n):
        table[top][y] = table[y][top] = y
        table[bot][y] = table[y][bot] = bot
    return table


def search_lc_tnorms(lattice: Lattice, max_results: int | None = None) -> SearchResult:
    """Complete backtracking search; max_results=0 counts without keeping tables."""
    n = lattice.n
    top, bot = lattice.top, lattice.bottom
    leq = lattice.leq
    join = lattice.join_table
    meet = lattice.meet_table
    rank = heights(lattice)

    table = _fixed_table(lattice)
    mid = [x for x in range(n) if x not in (top, bot)]
    cells = [(x, y) for i, x in enumerate(mid) for y in mid[i:]]
    # high cells first: their values propagate down through monotonicity
    cells.sort(key=lambda c: (-rank[join[c[0]][c[1]]], join[c[0]][c[1]], c[0], c[1]))
    domains = [
        [v for v in range(n) if leq[v][meet[x][y]]] for x, y in cells
    ]

    stats = {
        "nodes": 0,
        "pruned_monotone": 0,
        "pruned_associativity": 0,
        "pruned_left_continuity": 0,
        "solutions": 0,
    }
    keep = max_results is None or max_results > 0
    found: list[tuple[tuple[int, ...], ...]] = []
    truncated = False

    def monotone_ok(x: int, y: int, v: int) -> bool:
        # against every decided cell, in both orientations of the new cell
        for p in range(n):
            rowp = table[p]
            for q in range(n):
                w = rowp[q]
                if w is None:
                    continue
                for (a, b) in ((x, y), (y, x)):
                    if leq[p][a] and leq[q][b] and not leq[w][v]:
                        return False
                    if leq[a][p] and leq[b][q] and not leq[v][w]:
                        return False
        return True

    def associativity_ok() -> bool:
        for x in range(n):
            for y in range(n):
                xy = table[x][y]
                for z in range(n):
                    yz = table[y][z]
                    if xy is None or yz is None:
                        continue
                    lhs = table[xy][z]
                    rhs = table[x][yz]
                    if lhs is not None and rhs is not None and lhs != rhs:
                        return False
        return True

    def left_continuity_ok() -> bool:
        for a in range(n):
            rowa = table[a]
            for x in range(n):
                ax = rowa[x]
                if ax is None:
                    continue
                for y in range(x, n):
                    ay = rowa[y]
                    axy = rowa[join[x][y]]
                    if ay is None or axy is None:
                        continue
                    if axy != join[ax][ay]:
                        return False
        return True

    def assign(i: int) -> None:
        nonlocal truncated
        if truncated:
            return
        if i == len(cells):
            op = BinaryOp(lattice, tuple(tuple(row) for row in table))  # type: ignore[arg-type]
            if check_operator(lattice, op).is_left_continuous_tnorm:
                stats["solutions"] += 1
                if keep:
                    found.append(op.table)
                    if max_results is not None and len(found) >= max_results:
                        truncated = True
            return
        x, y = cells[i]
        for v in domains[i]:
            stats["nodes"] += 1
            if not monotone_ok(x, y, v):
                stats["pruned_monotone"] += 1
                continue
            table[x][y] = table[y][x] = v
            if not associativity_ok():
                stats["pruned_associativity"] += 1
            elif not left_continuity_ok():
                stats["pruned_left_continuity"] += 1
            else:
                assign(i + 1)
            table[x][y] = table[y][x] = None
            if truncated:
                return

    assign(0)
    found.sort()
    return SearchResult(
        found=tuple(BinaryOp(lattice, t) for t in found),
        exhausted=not truncated,
        stats=stats,
    )


def brute_force_lc_tnorms(lattice: Lattice, size_limit: int = 4) -> SearchResult:
    """Independent oracle: filter all symmetric tables with the neutral row.

    No pruning beyond the fixed top row is shared with the backtracking
    search, so agreement between the two is meaningful evidence.
    """
    n = lattice.n
    if n > size_limit:
        raise TooLarge(f"brute force is limited to {size_limit} elements, got {n}")
    top = lattice.top
    rest = [x for x in range(n) if x != top]
    cells = [(x, y) for i, x in enumerate(rest) for y in rest[i:]]
    found = []
    scanned = 0
    for combo in product(range(n), repeat=len(cells)):
        scanned += 1
        table: list[list[int]] = [[0] * n for _ in range(n)]
        for y in range(n):
            table[top][y] = table[y][top] = y
        for (x, y), v in zip(cells, combo):
            table[x][y] = table[y][x] = v
        op = BinaryOp(lattice, tuple(tuple(r) for r in table))
        if check_operator(lattice, op).is_left_continuous_tnorm:
            found.append(op.table)
    found.sort()
    return SearchResult(
        found=tuple(BinaryOp(lattice, t) for t in found),
        exhausted=True,
        stats={"tables_scanned": scanned, "solutions": len(found)},
    )
