"""Finite bounded lattices with precomputed order, join and meet tables.

Elements are dense indices 0..n-1 with a label table; every relation is a
dense table, so all queries after construction are O(1) lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DuplicateEntry,
    EmptySet,
    InvalidIntervals,
    NoBounds,
    NotALattice,
    NotAPoset,
    NotComparable,
    UnknownElement,
    ValidationError,
)


@dataclass(frozen=True)
class Check:
    """Verdict of a single property test, with the first failing tuple if any."""

    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self, lattice: "Lattice | None" = None) -> dict:
        witness = self.witness
        if witness is not None and lattice is not None:
            witness = [lattice.names[i] for i in witness]
        elif witness is not None:
            witness = list(witness)
        return {"holds": self.holds, "witness": witness}


@dataclass(frozen=True)
class Lattice:
    names: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]
    covers: tuple[tuple[int, int], ...]
    bottom: int
    top: int

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise UnknownElement(f"unknown element {label!r}", token=label) from None

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def comparable(self, x: int, y: int) -> bool:
        return self.leq[x][y] or self.leq[y][x]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def down_set(self, x: int) -> tuple[int, ...]:
        return tuple(y for y in range(self.n) if self.leq[y][x])

    def up_set(self, x: int) -> tuple[int, ...]:
        return tuple(y for y in range(self.n) if self.leq[x][y])

    def lower_covers(self, x: int) -> tuple[int, ...]:
        return tuple(lo for lo, hi in self.covers if hi == x)

    def interval(self, a: int, b: int) -> tuple[int, ...]:
        """Indices of [a, b] in ascending index order."""
        return tuple(x for x in range(self.n) if self.leq[a][x] and self.leq[x][b])

    def __repr__(self) -> str:  # pragma: no cover
        return f"Lattice({list(self.names)!r}, covers={len(self.covers)})"


def _transitive_closure(n: int, edges: Iterable[tuple[int, int]]) -> list[list[bool]]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for lo, hi in edges:
        leq[lo][hi] = True
    for k in range(n):
        row_k = leq[k]
        for i in range(n):
            if leq[i][k]:
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def _transitive_reduction(n: int, leq: Sequence[Sequence[bool]]) -> list[tuple[int, int]]:
    covers = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            if not any(k not in (i, j) and leq[i][k] and leq[k][j] for k in range(n)):
                covers.append((i, j))
    return covers


def lattice_from_order(names: Sequence[str], leq: Sequence[Sequence[bool]]) -> Lattice:
    """Build a lattice from a full order matrix (debug path; covers are derived)."""
    names = tuple(names)
    if len(set(names)) != len(names):
        raise DuplicateEntry("element labels are not distinct")
    if not names:
        raise ValidationError("a lattice needs at least one element")
    n = len(names)

    for i in range(n):
        if not leq[i][i]:
            raise NotAPoset("order is not reflexive")
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise NotAPoset(f"cycle through {names[i]} and {names[j]}")
            for k in range(n):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    raise NotAPoset("order is not transitive")

    bottoms = [i for i in range(n) if all(leq[i][j] for j in range(n))]
    tops = [i for i in range(n) if all(leq[j][i] for j in range(n))]
    if not bottoms or not tops:
        raise NoBounds("order has no global minimum or maximum")
    bottom, top = bottoms[0], tops[0]

    join_rows, meet_rows = [], []
    for i in range(n):
        jrow, mrow = [], []
        for j in range(n):
            ups = [k for k in range(n) if leq[i][k] and leq[j][k]]
            least = [u for u in ups if all(leq[u][v] for v in ups)]
            if not least:
                raise NotALattice(
                    f"{names[i]} and {names[j]} have no least upper bound",
                    witness=(i, j),
                )
            jrow.append(least[0])
            downs = [k for k in range(n) if leq[k][i] and leq[k][j]]
            greatest = [u for u in downs if all(leq[v][u] for v in downs)]
            if not greatest:
                raise NotALattice(
                    f"{names[i]} and {names[j]} have no greatest lower bound",
                    witness=(i, j),
                )
            mrow.append(greatest[0])
        join_rows.append(tuple(jrow))
        meet_rows.append(tuple(mrow))

    return Lattice(
        names=names,
        leq=tuple(tuple(row) for row in leq),
        join_table=tuple(join_rows),
        meet_table=tuple(meet_rows),
        covers=tuple(_transitive_reduction(n, leq)),
        bottom=bottom,
        top=top,
    )


def build_lattice(names: Sequence[str], covers: Iterable[tuple[str, str]]) -> Lattice:
    """Build and validate a lattice from labels and cover pairs (lower, upper)."""
    names = tuple(names)
    if len(set(names)) != len(names):
        raise DuplicateEntry("element labels are not distinct")
    if not names:
        raise ValidationError("a lattice needs at least one element")
    index = {label: i for i, label in enumerate(names)}
    edges = []
    for lo, hi in covers:
        if lo not in index:
            raise UnknownElement(f"unknown element {lo!r} in covers", token=lo)
        if hi not in index:
            raise UnknownElement(f"unknown element {hi!r} in covers", token=hi)
        if lo == hi:
            raise NotAPoset(f"self-loop on {lo!r}")
        edges.append((index[lo], index[hi]))
    leq = _transitive_closure(len(names), edges)
    return lattice_from_order(names, leq)


def bound_of(lattice: Lattice, elements: Iterable[int], kind: str = "join") -> int:
    """Iterated binary join or meet of a nonempty element set."""
    if kind not in ("join", "meet"):
        raise ValueError(f"kind must be 'join' or 'meet', got {kind!r}")
    table = lattice.join_table if kind == "join" else lattice.meet_table
    acc = None
    for x in elements:
        acc = x if acc is None else table[acc][x]
    if acc is None:
        raise EmptySet(f"{kind} of the empty set")
    return acc


def is_distributive(lattice: Lattice) -> Check:
    """Binary distributivity a ^ (b v c) == (a ^ b) v (a ^ c), witness on failure."""
    n = lattice.n
    meet, join = lattice.meet_table, lattice.join_table
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    return Check(False, (a, b, c))
    return Check(True)


def join_irreducibles(lattice: Lattice) -> tuple[int, ...]:
    """Elements z such that z == x v y forces z in {x, y}."""
    out = []
    for z in range(lattice.n):
        if all(
            z in (x, y)
            for x in range(lattice.n)
            for y in range(lattice.n)
            if lattice.join_table[x][y] == z
        ):
            out.append(z)
    return tuple(out)


def is_completely_join_irreducible(lattice: Lattice, x: int) -> bool:
    """True iff x differs from the join of all strictly smaller elements.

    The join over the empty set is the bottom element, so the bottom itself
    is never completely join-irreducible.
    """
    below = [y for y in range(lattice.n) if lattice.lt(y, x)]
    acc = lattice.bottom
    for y in below:
        acc = lattice.join_table[acc][y]
    return acc != x


def completely_join_irreducibles(lattice: Lattice) -> tuple[int, ...]:
    return tuple(
        x for x in range(lattice.n) if is_completely_join_irreducible(lattice, x)
    )


def central_elements(lattice: Lattice) -> tuple[int, ...]:
    """Elements comparable with every element; candidates for chain points."""
    return tuple(
        c
        for c in range(lattice.n)
        if all(lattice.comparable(c, x) for x in range(lattice.n))
    )


def heights(lattice: Lattice) -> tuple[int, ...]:
    """Length of the longest chain from the bottom up to each element."""
    n = lattice.n
    order = sorted(range(n), key=lambda x: sum(lattice.leq[y][x] for y in range(n)))
    h = [0] * n
    for x in order:
        lower = [y for y in range(n) if lattice.lt(y, x)]
        if lower:
            h[x] = 1 + max(h[y] for y in lower)
    return tuple(h)


def interval_sublattice(
    lattice: Lattice, a: int, b: int
) -> tuple[Lattice, tuple[int, ...]]:
    """Sublattice on [a, b] plus the embedding (sub index -> host index)."""
    if not lattice.le(a, b):
        raise NotComparable(
            f"{lattice.names[a]} is not below {lattice.names[b]}"
        )
    embed = lattice.interval(a, b)
    names = tuple(lattice.names[i] for i in embed)
    leq = [[lattice.leq[x][y] for y in embed] for x in embed]
    return lattice_from_order(names, leq), embed


@dataclass(frozen=True)
class ChainSpec:
    """A chain c_1 < ... < c_k running from the bottom to the top of a lattice."""

    lattice: Lattice
    elements: tuple[int, ...]

    def intervals(self) -> tuple[tuple[int, int], ...]:
        e = self.elements
        return tuple((e[i], e[i + 1]) for i in range(len(e) - 1))


def chain_spec(lattice: Lattice, elements: Sequence[int | str]) -> ChainSpec:
    """Validate chain points: strictly increasing, first bottom and last top."""
    idx = tuple(
        lattice.index(e) if isinstance(e, str) else int(e) for e in elements
    )
    if not idx:
        raise ValidationError("chain is empty")
    if idx[0] != lattice.bottom:
        raise ValidationError("chain must start at the bottom element")
    if idx[-1] != lattice.top:
        raise ValidationError("chain must end at the top element")
    for lo, hi in zip(idx, idx[1:]):
        if not lattice.lt(lo, hi):
            raise ValidationError(
                f"chain is not strictly increasing at "
                f"{lattice.names[lo]}, {lattice.names[hi]}"
            )
    return ChainSpec(lattice, idx)


def check_linear_sum(lattice: Lattice, chain: ChainSpec) -> Check:
    """Every element must be comparable with every chain point; witness (x, c)."""
    for x in range(lattice.n):
        for c in chain.elements:
            if not lattice.comparable(x, c):
                return Check(False, (x, c))
    return Check(True)


@dataclass(frozen=True)
class IntervalFamily:
    """An ordered family of closed intervals [a_i, b_i] of one lattice."""

    lattice: Lattice
    pairs: tuple[tuple[int, int], ...]
    has_lower_gap: bool
    has_upper_gap: bool


def interval_family(
    lattice: Lattice, pairs: Sequence[tuple[int | str, int | str]]
) -> IntervalFamily:
    """Validate interval endpoints, nonemptiness, ordering and disjointness."""
    resolved = []
    for a, b in pairs:
        ai = lattice.index(a) if isinstance(a, str) else int(a)
        bi = lattice.index(b) if isinstance(b, str) else int(b)
        resolved.append((ai, bi))
    if not resolved:
        raise InvalidIntervals("interval family is empty")
    fam = IntervalFamily(
        lattice,
        tuple(resolved),
        has_lower_gap=resolved[0][0] != lattice.bottom,
        has_upper_gap=resolved[-1][1] != lattice.top,
    )
    report = check_semi_linear_sum(lattice, fam)
    for label, check in (("i1", report.i1), ("i2", report.i2), ("i3", report.i3)):
        if not check.holds:
            raise InvalidIntervals(
                f"interval family violates ({label}); witness "
                f"{tuple(lattice.names[w] if w < lattice.n else w for w in check.witness)}"
            )
    return fam


@dataclass(frozen=True)
class SemiLinearReport:
    """Per-condition verdicts for the four semi-linear sum requirements."""

    i1: Check  # every half-open block (a_i, b_i] is nonempty
    i2: Check  # b_i <= a_j whenever i < j
    i3: Check  # open intervals are pairwise disjoint
    i4: Check  # every element is comparable with every endpoint

    @property
    def holds(self) -> bool:
        return self.i1.holds and self.i2.holds and self.i3.holds and self.i4.holds

    def to_json(self, lattice: Lattice | None = None) -> dict:
        return {
            "i1": self.i1.to_json(None),
            "i2": self.i2.to_json(None),
            "i3": self.i3.to_json(None),
            "i4": self.i4.to_json(None),
            "holds": self.holds,
        }


def check_semi_linear_sum(
    lattice: Lattice, family: IntervalFamily | Sequence[tuple[int, int]]
) -> SemiLinearReport:
    """Evaluate the four semi-linear sum conditions with witnesses.

    Witnesses use interval positions for i1-i3 and (element, position) for i4.
    """
    pairs = family.pairs if isinstance(family, IntervalFamily) else tuple(family)

    i1 = Check(True)
    for k, (a, b) in enumerate(pairs):
        if not lattice.lt(a, b):
            i1 = Check(False, (k,))
            break

    i2 = Check(True)
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if not lattice.le(pairs[i][1], pairs[j][0]):
                i2 = Check(False, (i, j))
                break
        if not i2.holds:
            break

    i3 = Check(True)
    for i in range(len(pairs)):
        for j in range(len(pairs)):
            if i == j or not i3.holds:
                continue
            ai, bi = pairs[i]
            aj, bj = pairs[j]
            for x in range(lattice.n):
                if (
                    lattice.lt(ai, x)
                    and lattice.lt(x, bi)
                    and lattice.lt(aj, x)
                    and lattice.lt(x, bj)
                ):
                    i3 = Check(False, (i, j, x))
                    break

    i4 = Check(True)
    for x in range(lattice.n):
        for k, (a, b) in enumerate(pairs):
            if not (lattice.comparable(x, a) and lattice.comparable(x, b)):
                i4 = Check(False, (x, k))
                break
        if not i4.holds:
            break

    return SemiLinearReport(i1, i2, i3, i4)
