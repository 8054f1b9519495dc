"""Operator constructions: map-induced operators and blockwise ordinal sums.

Two families of builders live here. Map-induced operators take meets inside
the image of a self-map, which is the single most error-prone detail of the
whole construction: the induced meet of two image elements can be strictly
below their host meet. Ordinal sums assemble an operator from summands on
half-open interval blocks, with the meet everywhere else.

Classification helpers report two predicates for an assembled sum. The
`stated` predicate is the classical claim: the sum is a left-continuous
t-norm iff every non-top summand is a left-continuous t-subnorm and the top
summand is a left-continuous t-norm. That claim is falsifiable: when a
summand attains its interval bottom on the half-open block, associativity
couples that value to the summand below, which must then be neutral at the
shared endpoint. The `predicted` predicate adds those endpoint-neutrality
conditions and matches the checker exactly on every decomposition (the test
suite verifies both behaviours exhaustively at small sizes).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    IndexOutOfRange,
    InvalidDecomposition,
    InvalidIntervals,
    MissingGapMap,
    MissingTopOp,
    NotFMapping,
    NotOrdinalSumShape,
    NotWeakFMapping,
    ValidationError,
)
from .lattice import (
    Check,
    ChainSpec,
    IntervalFamily,
    Lattice,
    chain_spec,
    check_linear_sum,
    check_semi_linear_sum,
    interval_family,
    interval_sublattice,
)
from .maps import (
    UnaryMap,
    _image_lattice_of_subset,
    check_fmapping,
    check_weak_fmapping,
    image_lattice,
)
from .ops import AxiomReport, BinaryOp, check_operator


# ---------------------------------------------------------------------------
# map-induced operators


def subnorm_from_weak_fmap(lattice: Lattice, f: UnaryMap) -> BinaryOp:
    """T(x, y) = f(x) ^ f(y) with the meet taken inside the image of f."""
    report = check_weak_fmapping(lattice, f)
    if not report.is_weak_fmapping:
        raise NotWeakFMapping("map fails the weak f-mapping conditions", report)
    image = image_lattice(lattice, f)
    n = lattice.n
    rows = [
        tuple(image.meet(f.table[x], f.table[y]) for y in range(n)) for x in range(n)
    ]
    return BinaryOp(lattice, tuple(rows))


def tnorm_from_fmap(lattice: Lattice, f: UnaryMap) -> BinaryOp:
    """T(x, y) = x ^ y when the top is involved, else the image meet of f-values.

    The builder only requires an f-mapping. Whether the result is left
    continuous is a separate question, decided by check_operator; it holds
    when the top element is completely join-irreducible.
    """
    report = check_fmapping(lattice, f)
    if not report.is_fmapping:
        raise NotFMapping("map fails the f-mapping conditions", report)
    image = image_lattice(lattice, f)
    n, top = lattice.n, lattice.top
    meet = lattice.meet_table

    def cell(x: int, y: int) -> int:
        if top in (x, y):
            return meet[x][y]
        return image.meet(f.table[x], f.table[y])

    return BinaryOp(lattice, tuple(tuple(cell(x, y) for y in range(n)) for x in range(n)))


# ---------------------------------------------------------------------------
# interval blocks and chain decompositions


@dataclass(frozen=True)
class IntervalBlock:
    """A closed interval [lo, hi] with its sublattice and index translation."""

    lo: int
    hi: int
    sub: Lattice
    embed: tuple[int, ...]  # sub index -> host index

    def pos(self, host_index: int) -> int:
        return self.embed.index(host_index)

    @property
    def block(self) -> tuple[int, ...]:
        """Host indices of the half-open block (lo, hi]."""
        return tuple(x for x in self.embed if x != self.lo)


def _interval_block(lattice: Lattice, lo: int, hi: int) -> IntervalBlock:
    sub, embed = interval_sublattice(lattice, lo, hi)
    return IntervalBlock(lo=lo, hi=hi, sub=sub, embed=embed)


def _require_on_interval(op: BinaryOp, block: IntervalBlock, what: str) -> None:
    if op.lattice.names != block.sub.names or op.lattice.leq != block.sub.leq:
        raise InvalidDecomposition(
            f"{what} is not declared on the interval "
            f"[{block.sub.names[0] if block.sub.names else '?'}..] carrier"
        )


def _require_annihilating(op: BinaryOp, block: IntervalBlock, what: str) -> None:
    # both the bottom row and bottom column, so extraction reproduces summands
    bot = block.sub.bottom
    for y in range(block.sub.n):
        if op.table[bot][y] != bot or op.table[y][bot] != bot:
            raise InvalidDecomposition(
                f"{what} is not annihilating at its interval bottom"
            )


@dataclass(frozen=True)
class ChainDecomposition:
    """Chain points plus one summand operator per closed interval."""

    lattice: Lattice
    chain: ChainSpec
    blocks: tuple[IntervalBlock, ...]
    summands: tuple[BinaryOp, ...]


def chain_decomposition(
    lattice: Lattice,
    chain: ChainSpec | list | tuple,
    summands: list[BinaryOp] | tuple[BinaryOp, ...],
) -> ChainDecomposition:
    """Validate chain, carrier match and annihilation of every summand."""
    if not isinstance(chain, ChainSpec):
        chain = chain_spec(lattice, chain)
    linear = check_linear_sum(lattice, chain)
    if not linear.holds:
        x, c = linear.witness
        raise InvalidDecomposition(
            f"not a linear sum: {lattice.names[x]} is incomparable with "
            f"chain point {lattice.names[c]}"
        )
    intervals = chain.intervals()
    if len(summands) != len(intervals):
        raise InvalidDecomposition(
            f"expected {len(intervals)} summands, got {len(summands)}"
        )
    blocks = tuple(_interval_block(lattice, lo, hi) for lo, hi in intervals)
    for k, (blk, op) in enumerate(zip(blocks, summands)):
        _require_on_interval(op, blk, f"summand {k + 1}")
        _require_annihilating(op, blk, f"summand {k + 1}")
    return ChainDecomposition(lattice, chain, blocks, tuple(summands))


def ordinal_sum_chain(lattice: Lattice, decomposition: ChainDecomposition) -> BinaryOp:
    """Blockwise table: summand values on (c_i, c_{i+1}]^2, the meet elsewhere."""
    n = lattice.n
    rows = [list(lattice.meet_table[x]) for x in range(n)]
    stamped = [[False] * n for _ in range(n)]
    for blk, op in zip(decomposition.blocks, decomposition.summands):
        for x in blk.block:
            px = blk.pos(x)
            for y in blk.block:
                if stamped[x][y]:
                    raise InvalidDecomposition(
                        f"cell ({lattice.names[x]}, {lattice.names[y]}) "
                        f"is claimed by two blocks"
                    )
                stamped[x][y] = True
                rows[x][y] = blk.embed[op.table[px][blk.pos(y)]]
    return BinaryOp(lattice, tuple(tuple(r) for r in rows))


def extract_summands(
    lattice: Lattice, op: BinaryOp, chain: ChainSpec | list | tuple
) -> tuple[BinaryOp, ...]:
    """Recover one annihilating summand per interval from a blockwise operator.

    Requires the operator to have ordinal-sum shape for the chain: the meet
    on every cell outside the diagonal blocks, and block values inside their
    interval. Classification of the input is the caller's business.
    """
    if not isinstance(chain, ChainSpec):
        chain = chain_spec(lattice, chain)
    linear = check_linear_sum(lattice, chain)
    if not linear.holds:
        x, c = linear.witness
        raise InvalidDecomposition(
            f"not a linear sum: {lattice.names[x]} is incomparable with "
            f"chain point {lattice.names[c]}"
        )
    blocks = tuple(_interval_block(lattice, lo, hi) for lo, hi in chain.intervals())
    block_of = {}
    for k, blk in enumerate(blocks):
        for x in blk.block:
            block_of[x] = k

    n = lattice.n
    for x in range(n):
        for y in range(n):
            kx, ky = block_of.get(x), block_of.get(y)
            if kx is not None and kx == ky:
                if op.table[x][y] not in set(blocks[kx].embed):
                    raise NotOrdinalSumShape(
                        f"block value at ({lattice.names[x]}, {lattice.names[y]}) "
                        f"leaves its interval",
                        witness=(x, y),
                    )
            elif op.table[x][y] != lattice.meet_table[x][y]:
                raise NotOrdinalSumShape(
                    f"cross-block cell ({lattice.names[x]}, {lattice.names[y]}) "
                    f"is not the meet",
                    witness=(x, y),
                )

    out = []
    for blk in blocks:
        m = blk.sub.n
        bot = blk.sub.bottom
        rows = [[bot] * m for _ in range(m)]
        for i, x in enumerate(blk.embed):
            for j, y in enumerate(blk.embed):
                if x != blk.lo and y != blk.lo:
                    rows[i][j] = blk.pos(op.table[x][y])
        out.append(BinaryOp(blk.sub, tuple(tuple(r) for r in rows)))
    return tuple(out)


# ---------------------------------------------------------------------------
# classification of assembled sums


@dataclass(frozen=True)
class SummandVerdict:
    interval: tuple[int, int]
    kind: str  # "inner" or "top"
    report: AxiomReport

    @property
    def holds(self) -> bool:
        if self.kind == "top":
            return self.report.is_left_continuous_tnorm
        return self.report.is_left_continuous_tsubnorm


@dataclass(frozen=True)
class ChainSumConditions:
    """Stated vs exact classification conditions for one chain decomposition."""

    summands: tuple[SummandVerdict, ...]
    endpoint_neutrality: tuple[Check, ...]  # one per interior chain point
    stated: bool
    predicted: bool


def chain_sum_conditions(decomposition: ChainDecomposition) -> ChainSumConditions:
    blocks = decomposition.blocks
    summands = decomposition.summands
    verdicts = []
    for k, (blk, op) in enumerate(zip(blocks, summands)):
        kind = "top" if k == len(blocks) - 1 else "inner"
        verdicts.append(
            SummandVerdict(
                interval=(blk.lo, blk.hi), kind=kind, report=check_operator(blk.sub, op)
            )
        )
    stated = all(v.holds for v in verdicts)

    neutrality = []
    for k in range(1, len(blocks)):
        upper_blk, upper_op = blocks[k], summands[k]
        lower_blk, lower_op = blocks[k - 1], summands[k - 1]
        shared = upper_blk.lo
        attains = any(
            upper_blk.embed[upper_op.table[upper_blk.pos(x)][upper_blk.pos(y)]] == shared
            for x in upper_blk.block
            for y in upper_blk.block
        )
        check = Check(True)
        if attains:
            ptop = lower_blk.pos(shared)
            for z in lower_blk.block:
                pz = lower_blk.pos(z)
                if lower_op.table[ptop][pz] != pz or lower_op.table[pz][ptop] != pz:
                    check = Check(False, (shared, z))
                    break
        neutrality.append(check)

    return ChainSumConditions(
        summands=tuple(verdicts),
        endpoint_neutrality=tuple(neutrality),
        stated=stated,
        predicted=stated and all(c.holds for c in neutrality),
    )


# ---------------------------------------------------------------------------
# semi-linear decompositions


@dataclass(frozen=True)
class SemiLinearDecomposition:
    """Interval family with summands, optional top operator and gap maps.

    gap f0 covers [0, a_1] when the family starts above the bottom; gaps[i]
    covers [b_i, a_{i+1}] and is None exactly when that gap is degenerate.
    """

    lattice: Lattice
    intervals: IntervalFamily
    summands: tuple[BinaryOp, ...]
    top_op: BinaryOp | None
    f0: UnaryMap | None
    gaps: tuple[UnaryMap | None, ...]
    refined: ChainDecomposition


def _gap_block_op(block: IntervalBlock, f: UnaryMap) -> BinaryOp:
    """Operator on a gap interval: image meets of f-values on the open block,
    the meet on cells touching the interval bottom."""
    sub = block.sub
    subset = tuple(sorted(set(f.table)))
    image = _image_lattice_of_subset(sub, subset)
    m = sub.n
    bot = sub.bottom
    rows = []
    for x in range(m):
        row = []
        for y in range(m):
            if x == bot or y == bot:
                row.append(sub.meet_table[x][y])
            else:
                row.append(image.meet(f.table[x], f.table[y]))
        rows.append(tuple(row))
    return BinaryOp(sub, tuple(rows))


def _require_map_on_interval(f: UnaryMap, block: IntervalBlock, what: str) -> None:
    if f.lattice.names != block.sub.names or f.lattice.leq != block.sub.leq:
        raise InvalidDecomposition(f"{what} is not declared on its gap interval")


def semilinear_decomposition(
    lattice: Lattice,
    intervals: IntervalFamily | list | tuple,
    summands: list[BinaryOp] | tuple[BinaryOp, ...],
    top_op: BinaryOp | None = None,
    f0: UnaryMap | None = None,
    gaps: list[UnaryMap | None] | tuple[UnaryMap | None, ...] | None = None,
) -> SemiLinearDecomposition:
    """Validate the family and assemble the refined chain of effective blocks.

    Structural requirements are enforced: the semi-linear conditions, summand
    carriers and annihilation, presence of the top operator and of one map per
    nondegenerate gap, and existence of all image meets used by the formula.
    Whether a gap map is a weak f-mapping is reported by check_weak_fmapping
    but deliberately not enforced, so defective inputs can still be evaluated
    and diagnosed.
    """
    if not isinstance(intervals, IntervalFamily):
        intervals = interval_family(lattice, intervals)
    report = check_semi_linear_sum(lattice, intervals)
    if not report.holds:
        raise InvalidDecomposition("interval family is not a semi-linear sum")
    pairs = intervals.pairs
    if len(summands) != len(pairs):
        raise InvalidDecomposition(
            f"expected {len(pairs)} summands, got {len(summands)}"
        )

    gaps = tuple(gaps) if gaps is not None else (None,) * (len(pairs) - 1)
    if len(gaps) != len(pairs) - 1:
        raise InvalidDecomposition(
            f"expected {len(pairs) - 1} gap entries, got {len(gaps)}"
        )

    chain_points: list[int] = [lattice.bottom]
    refined_ops: list[BinaryOp] = []

    def extend(point: int, op: BinaryOp) -> None:
        chain_points.append(point)
        refined_ops.append(op)

    a1 = pairs[0][0]
    if a1 != lattice.bottom:
        if f0 is None:
            raise MissingGapMap("family starts above the bottom but f0 is missing")
        blk = _interval_block(lattice, lattice.bottom, a1)
        _require_map_on_interval(f0, blk, "f0")
        extend(a1, _gap_block_op(blk, f0))
    elif f0 is not None:
        raise InvalidDecomposition("f0 supplied but the family starts at the bottom")

    for k, (a, b) in enumerate(pairs):
        blk = _interval_block(lattice, a, b)
        _require_on_interval(summands[k], blk, f"summand {k + 1}")
        _require_annihilating(summands[k], blk, f"summand {k + 1}")
        extend(b, summands[k])
        if k + 1 < len(pairs):
            nxt = pairs[k + 1][0]
            if b == nxt:
                if gaps[k] is not None:
                    raise InvalidDecomposition(
                        f"gap {k + 1} is degenerate but a map was supplied"
                    )
            else:
                if gaps[k] is None:
                    raise MissingGapMap(f"gap {k + 1} needs a map on its interval")
                gblk = _interval_block(lattice, b, nxt)
                _require_map_on_interval(gaps[k], gblk, f"gap map {k + 1}")
                extend(nxt, _gap_block_op(gblk, gaps[k]))

    bn = pairs[-1][1]
    if bn != lattice.top:
        if top_op is None:
            raise MissingTopOp("family ends below the top but top_op is missing")
        blk = _interval_block(lattice, bn, lattice.top)
        _require_on_interval(top_op, blk, "top operator")
        _require_annihilating(top_op, blk, "top operator")
        extend(lattice.top, top_op)
    elif top_op is not None:
        raise InvalidDecomposition("top_op supplied but the family reaches the top")

    refined = chain_decomposition(
        lattice, chain_spec(lattice, chain_points), refined_ops
    )
    return SemiLinearDecomposition(
        lattice=lattice,
        intervals=intervals,
        summands=tuple(summands),
        top_op=top_op,
        f0=f0,
        gaps=gaps,
        refined=refined,
    )


def ordinal_sum_semilinear(
    lattice: Lattice, decomposition: SemiLinearDecomposition
) -> BinaryOp:
    """Five-branch blockwise table realized through the refined chain sum."""
    return ordinal_sum_chain(lattice, decomposition.refined)


@dataclass(frozen=True)
class SemiLinearConditions:
    """Stated conditions for a semi-linear sum plus the exact prediction."""

    summands: tuple[SummandVerdict, ...]  # the declared interval summands
    top_report: AxiomReport | None
    refined: ChainSumConditions
    stated: bool

    @property
    def predicted(self) -> bool:
        return self.refined.predicted


def semilinear_conditions(
    decomposition: SemiLinearDecomposition,
) -> SemiLinearConditions:
    pairs = decomposition.intervals.pairs
    lattice = decomposition.lattice
    verdicts = []
    for k, (a, b) in enumerate(pairs):
        blk = _interval_block(lattice, a, b)
        top_summand = b == lattice.top
        verdicts.append(
            SummandVerdict(
                interval=(a, b),
                kind="top" if top_summand else "inner",
                report=check_operator(blk.sub, decomposition.summands[k]),
            )
        )
    top_report = None
    if decomposition.top_op is not None:
        blk = _interval_block(lattice, pairs[-1][1], lattice.top)
        top_report = check_operator(blk.sub, decomposition.top_op)
    stated = all(v.holds for v in verdicts) and (
        top_report is None or top_report.is_left_continuous_tnorm
    )
    return SemiLinearConditions(
        summands=tuple(verdicts),
        top_report=top_report,
        refined=chain_sum_conditions(decomposition.refined),
        stated=stated,
    )


# ---------------------------------------------------------------------------
# restriction criteria


@dataclass(frozen=True)
class RestrictionReport:
    """Does the assembled operator restrict to the declared summand on [a_i, b_i]?

    criterion_kind names the side condition the equality is equivalent to:
    the preceding gap map preserving the interval's bottom endpoint
    ("preceding_gap_map" -> that map is an f-mapping on its gap), or the
    preceding summand being a left-continuous strong t-subnorm
    ("preceding_summand_strong"), or "none" when the interval starts at the
    lattice bottom.
    """

    index: int
    equals: Check
    criterion_kind: str
    criterion_holds: bool | None

    @property
    def consistent(self) -> bool:
        if self.criterion_kind == "none":
            return self.equals.holds
        return self.equals.holds == self.criterion_holds


def check_restriction(
    lattice: Lattice,
    decomposition: SemiLinearDecomposition,
    op: BinaryOp,
    index: int,
) -> RestrictionReport:
    """Compare op|[a_i, b_i] with summand i and evaluate the matching criterion."""
    pairs = decomposition.intervals.pairs
    if not 1 <= index <= len(pairs):
        raise IndexOutOfRange(f"interval index {index} out of 1..{len(pairs)}")
    a, b = pairs[index - 1]
    blk = _interval_block(lattice, a, b)
    summand = decomposition.summands[index - 1]
    equals = Check(True)
    for x in blk.embed:
        for y in blk.embed:
            if op.table[x][y] != blk.embed[summand.table[blk.pos(x)][blk.pos(y)]]:
                equals = Check(False, (x, y))
                break
        if not equals.holds:
            break

    if index == 1:
        if a == lattice.bottom:
            return RestrictionReport(index, equals, "none", None)
        gblk = _interval_block(lattice, lattice.bottom, a)
        report = check_fmapping(gblk.sub, decomposition.f0)
        return RestrictionReport(index, equals, "preceding_gap_map", report.is_fmapping)

    prev_b = pairs[index - 2][1]
    if prev_b == a:
        prev_blk = _interval_block(lattice, *pairs[index - 2])
        report = check_operator(prev_blk.sub, decomposition.summands[index - 2])
        holds = report.is_tsubnorm and report.strong.holds and report.left_continuous.holds
        return RestrictionReport(index, equals, "preceding_summand_strong", holds)

    gblk = _interval_block(lattice, prev_b, a)
    report = check_fmapping(gblk.sub, decomposition.gaps[index - 2])
    return RestrictionReport(index, equals, "preceding_gap_map", report.is_fmapping)


# ---------------------------------------------------------------------------
# further constructions


def corollary41_construct(
    lattice: Lattice,
    chain: ChainSpec | list | tuple,
    gap_maps: list[UnaryMap] | tuple[UnaryMap, ...],
    top_op: BinaryOp,
) -> BinaryOp:
    """Image-meet blocks on every interval but the last, a supplied top block.

    Each gap map must be a weak f-mapping on its closed interval and the top
    operator must be annihilating on the last interval.
    """
    if not isinstance(chain, ChainSpec):
        chain = chain_spec(lattice, chain)
    intervals = chain.intervals()
    if len(intervals) < 1:
        raise InvalidDecomposition("chain has no intervals")
    if len(gap_maps) != len(intervals) - 1:
        raise InvalidDecomposition(
            f"expected {len(intervals) - 1} maps, got {len(gap_maps)}"
        )
    blocks = [_interval_block(lattice, lo, hi) for lo, hi in intervals]
    ops = []
    for k, f in enumerate(gap_maps):
        _require_map_on_interval(f, blocks[k], f"map {k + 1}")
        report = check_weak_fmapping(blocks[k].sub, f)
        if not report.is_weak_fmapping:
            raise InvalidDecomposition(
                f"map {k + 1} is not a weak f-mapping on its interval"
            )
        ops.append(_gap_block_op(blocks[k], f))
    _require_on_interval(top_op, blocks[-1], "top operator")
    _require_annihilating(top_op, blocks[-1], "top operator")
    ops.append(top_op)
    return ordinal_sum_chain(lattice, chain_decomposition(lattice, chain, ops))


def saminger_sum(
    lattice: Lattice,
    intervals: IntervalFamily | list | tuple,
    ops: list[BinaryOp] | tuple[BinaryOp, ...],
) -> BinaryOp:
    """Closed-block sum: summand values on [a_i, b_i]^2, the meet elsewhere.

    Every summand must be a t-norm on its closed interval. The result carries
    no axiom guarantee at all; run check_operator on it.
    """
    if not isinstance(intervals, IntervalFamily):
        intervals = interval_family(lattice, intervals)
    pairs = intervals.pairs
    if len(ops) != len(pairs):
        raise InvalidIntervals(f"expected {len(pairs)} operators, got {len(ops)}")
    blocks = [_interval_block(lattice, a, b) for a, b in pairs]
    for k, (blk, op) in enumerate(zip(blocks, ops)):
        _require_on_interval(op, blk, f"operator {k + 1}")
        report = check_operator(blk.sub, op)
        if not report.is_tnorm:
            raise InvalidIntervals(
                f"operator {k + 1} is not a t-norm on its closed interval"
            )
    n = lattice.n
    rows = [list(lattice.meet_table[x]) for x in range(n)]
    owner: list[list[int | None]] = [[None] * n for _ in range(n)]
    for k, (blk, op) in enumerate(zip(blocks, ops)):
        for x in blk.embed:
            for y in blk.embed:
                value = blk.embed[op.table[blk.pos(x)][blk.pos(y)]]
                if owner[x][y] is not None and rows[x][y] != value:
                    raise InvalidIntervals(
                        f"operators {owner[x][y] + 1} and {k + 1} disagree at "
                        f"({lattice.names[x]}, {lattice.names[y]})"
                    )
                owner[x][y] = k
                rows[x][y] = value
    return BinaryOp(lattice, tuple(tuple(r) for r in rows))
