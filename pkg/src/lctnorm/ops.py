"""Binary operators on a lattice and the axiom checks that classify them.

Left-continuity is decided at the binary-join level, T(a, x v y) ==
T(a, x) v T(a, y); on a finite lattice this is equivalent to distributing
over arbitrary nonempty joins, by induction on the join's size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import NotComparable, ValidationError
from .lattice import Check, Lattice


@dataclass(frozen=True)
class BinaryOp:
    lattice: Lattice
    table: tuple[tuple[int, ...], ...]

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def __repr__(self) -> str:  # pragma: no cover
        return f"BinaryOp(on {self.lattice.n} elements)"


def op_from_function(lattice: Lattice, fn: Callable[[int, int], int]) -> BinaryOp:
    n = lattice.n
    return BinaryOp(lattice, tuple(tuple(fn(x, y) for y in range(n)) for x in range(n)))


def op_from_table(lattice: Lattice, rows: Sequence[Sequence[int]]) -> BinaryOp:
    n = lattice.n
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValidationError(f"operator table must be {n}x{n}")
    for row in rows:
        for v in row:
            if not 0 <= v < n:
                raise ValidationError(f"operator value {v} out of range")
    return BinaryOp(lattice, tuple(tuple(row) for row in rows))


def meet_op(lattice: Lattice) -> BinaryOp:
    """The strongest candidate: T(x, y) = x ^ y."""
    return BinaryOp(lattice, lattice.meet_table)


def drastic_op(lattice: Lattice) -> BinaryOp:
    """The weakest t-norm: the meet when the top is involved, bottom elsewhere."""
    top, bot = lattice.top, lattice.bottom
    return op_from_function(
        lattice, lambda x, y: lattice.meet_table[x][y] if top in (x, y) else bot
    )


def constant_op(lattice: Lattice, value: int) -> BinaryOp:
    return op_from_function(lattice, lambda x, y: value)


@dataclass(frozen=True)
class AxiomReport:
    """All axiom verdicts for one operator; every failure carries a witness.

    Witnesses are the lexicographically first failing tuple in element index
    order, so diagnostics are reproducible.
    """

    neutral_top: Check
    monotone: Check
    commutative: Check
    associative: Check
    bounded_by_meet: Check
    annihilating: Check
    strong: Check
    left_continuous: Check

    @property
    def is_tnorm(self) -> bool:
        return (
            self.neutral_top.holds
            and self.monotone.holds
            and self.commutative.holds
            and self.associative.holds
        )

    @property
    def is_tsubnorm(self) -> bool:
        return (
            self.monotone.holds
            and self.commutative.holds
            and self.associative.holds
            and self.bounded_by_meet.holds
        )

    @property
    def is_strong_tsubnorm(self) -> bool:
        return self.is_tsubnorm and self.strong.holds

    @property
    def is_left_continuous_tnorm(self) -> bool:
        return self.is_tnorm and self.left_continuous.holds

    @property
    def is_left_continuous_tsubnorm(self) -> bool:
        return self.is_tsubnorm and self.left_continuous.holds

    def to_json(self, lattice: Lattice | None = None) -> dict:
        return {
            "axioms": {
                "neutral_top": self.neutral_top.to_json(lattice),
                "monotone": self.monotone.to_json(lattice),
                "commutative": self.commutative.to_json(lattice),
                "associative": self.associative.to_json(lattice),
                "bounded_by_meet": self.bounded_by_meet.to_json(lattice),
                "annihilating": self.annihilating.to_json(lattice),
                "strong": self.strong.to_json(lattice),
                "left_continuous": self.left_continuous.to_json(lattice),
            },
            "flags": {
                "is_tnorm": self.is_tnorm,
                "is_tsubnorm": self.is_tsubnorm,
                "is_strong_tsubnorm": self.is_strong_tsubnorm,
                "is_left_continuous_tnorm": self.is_left_continuous_tnorm,
                "is_left_continuous_tsubnorm": self.is_left_continuous_tsubnorm,
            },
        }


def check_operator(lattice: Lattice, op: BinaryOp) -> AxiomReport:
    """Compute every axiom verdict; checking continues past the first failure."""
    n = lattice.n
    t = op.table
    leq = lattice.leq
    join = lattice.join_table
    meet = lattice.meet_table
    top, bot = lattice.top, lattice.bottom

    neutral = Check(True)
    for a in range(n):
        if t[top][a] != a:
            neutral = Check(False, (top, a))
            break
        if t[a][top] != a:
            neutral = Check(False, (a, top))
            break

    monotone = Check(True)
    for a in range(n):
        if not monotone.holds:
            break
        for b in range(n):
            if not monotone.holds:
                break
            for c in range(n):
                if leq[b][c] and not leq[t[a][b]][t[a][c]]:
                    monotone = Check(False, (a, b, c))
                    break

    commutative = Check(True)
    for x in range(n):
        if not commutative.holds:
            break
        for y in range(x + 1, n):
            if t[x][y] != t[y][x]:
                commutative = Check(False, (x, y))
                break

    associative = Check(True)
    for x in range(n):
        if not associative.holds:
            break
        for y in range(n):
            if not associative.holds:
                break
            for z in range(n):
                if t[t[x][y]][z] != t[x][t[y][z]]:
                    associative = Check(False, (x, y, z))
                    break

    bounded = Check(True)
    for x in range(n):
        if not bounded.holds:
            break
        for y in range(n):
            if not leq[t[x][y]][meet[x][y]]:
                bounded = Check(False, (x, y))
                break

    annihilating = Check(True)
    for y in range(n):
        if t[bot][y] != bot:
            annihilating = Check(False, (bot, y))
            break

    strong = Check(t[top][top] == top)

    left_continuous = Check(True)
    for a in range(n):
        if not left_continuous.holds:
            break
        for x in range(n):
            if not left_continuous.holds:
                break
            for y in range(x, n):
                if t[a][join[x][y]] != join[t[a][x]][t[a][y]]:
                    left_continuous = Check(False, (a, x, y))
                    break

    return AxiomReport(
        neutral_top=neutral,
        monotone=monotone,
        commutative=commutative,
        associative=associative,
        bounded_by_meet=bounded,
        annihilating=annihilating,
        strong=strong,
        left_continuous=left_continuous,
    )


def idempotents(lattice: Lattice, op: BinaryOp) -> tuple[int, ...]:
    """Elements x with T(x, x) == x."""
    return tuple(x for x in range(lattice.n) if op.table[x][x] == x)


def closed_on_halfopen(lattice: Lattice, op: BinaryOp, a: int, b: int) -> Check:
    """True iff T maps (a, b] x (a, b] into (a, b]; witness is the escaping cell."""
    if not lattice.lt(a, b):
        raise NotComparable(
            f"{lattice.names[a]} is not strictly below {lattice.names[b]}"
        )
    block = [x for x in range(lattice.n) if lattice.lt(a, x) and lattice.le(x, b)]
    inside = set(block)
    for x in block:
        for y in block:
            if op.table[x][y] not in inside:
                return Check(False, (x, y))
    return Check(True)
