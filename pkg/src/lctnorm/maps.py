"""Self-maps of a lattice: verification, image lattices and enumeration.

The maps of interest are contractive idempotent join-preserving self-maps
whose image carries a distributive lattice structure under the induced
order ("weak f-mappings"); adding top-preservation gives "f-mappings".
Meets inside the image may differ from host meets, which is exactly what
the induced operator constructions rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    NotALatticeInducedPoset,
    NotIdempotent,
    NotInImage,
    TopNotCJI,
    ValidationError,
)
from .lattice import (
    Check,
    Lattice,
    heights,
    is_completely_join_irreducible,
)


@dataclass(frozen=True)
class UnaryMap:
    lattice: Lattice
    table: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __repr__(self) -> str:  # pragma: no cover
        pairs = ", ".join(
            f"{self.lattice.names[x]}->{self.lattice.names[v]}"
            for x, v in enumerate(self.table)
        )
        return f"UnaryMap({pairs})"


def unary_map(
    lattice: Lattice, mapping: Mapping[str, str] | Sequence[int]
) -> UnaryMap:
    """Build a total self-map from a label dict or an index sequence."""
    if isinstance(mapping, Mapping):
        if set(mapping) != set(lattice.names):
            missing = set(lattice.names) - set(mapping)
            extra = set(mapping) - set(lattice.names)
            raise ValidationError(
                f"map is not total: missing {sorted(missing)}, extra {sorted(extra)}"
            )
        table = tuple(lattice.index(mapping[name]) for name in lattice.names)
    else:
        table = tuple(int(v) for v in mapping)
        if len(table) != lattice.n or any(not 0 <= v < lattice.n for v in table):
            raise ValidationError("map table must list one element index per element")
    return UnaryMap(lattice, table)


def identity_map(lattice: Lattice) -> UnaryMap:
    return UnaryMap(lattice, tuple(range(lattice.n)))


def constant_map(lattice: Lattice, value: int) -> UnaryMap:
    return UnaryMap(lattice, (value,) * lattice.n)


def fixed_points(lattice: Lattice, f: UnaryMap) -> tuple[int, ...]:
    return tuple(x for x in range(lattice.n) if f.table[x] == x)


def _subset_bounds(lattice: Lattice, subset: Sequence[int]):
    """Pairwise lubs/glbs taken inside the subset, or the first pair missing one.

    Returns (ok, witness, join_rows, meet_rows); tables are indexed by subset
    position and valid only when ok is True.
    """
    m = len(subset)
    le = lattice.le
    join_rows = [[0] * m for _ in range(m)]
    meet_rows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            u, v = subset[i], subset[j]
            ups = [k for k in range(m) if le(u, subset[k]) and le(v, subset[k])]
            least = [k for k in ups if all(le(subset[k], subset[l]) for l in ups)]
            if not least:
                return False, (u, v), None, None
            join_rows[i][j] = least[0]
            downs = [k for k in range(m) if le(subset[k], u) and le(subset[k], v)]
            greatest = [k for k in downs if all(le(subset[l], subset[k]) for l in downs)]
            if not greatest:
                return False, (u, v), None, None
            meet_rows[i][j] = greatest[0]
    return True, None, join_rows, meet_rows


def _subset_distributive(subset, join_rows, meet_rows) -> Check:
    m = len(subset)
    for a in range(m):
        for b in range(m):
            for c in range(m):
                if meet_rows[a][join_rows[b][c]] != join_rows[meet_rows[a][b]][meet_rows[a][c]]:
                    return Check(False, (subset[a], subset[b], subset[c]))
    return Check(True)


@dataclass(frozen=True)
class FMapReport:
    """Per-condition verdicts for one candidate map."""

    top_preserved: Check      # f(1) == 1
    contractive: Check        # f(x) <= x
    idempotent: Check         # f(f(x)) == f(x)
    join_preserving: Check    # f(x v y) == f(x) v f(y), all pairs
    image_is_lattice: Check   # induced poset on Im(f) has all pairwise bounds
    image_distributive: Check # and its induced operations are distributive
    order_preserving: Check   # x <= y implies f(x) <= f(y)

    @property
    def is_weak_fmapping(self) -> bool:
        return (
            self.contractive.holds
            and self.idempotent.holds
            and self.join_preserving.holds
            and self.image_is_lattice.holds
            and self.image_distributive.holds
        )

    @property
    def is_fmapping(self) -> bool:
        return self.is_weak_fmapping and self.top_preserved.holds

    @property
    def is_order_preserving(self) -> bool:
        return self.order_preserving.holds

    def to_json(self, lattice: Lattice | None = None) -> dict:
        return {
            "conditions": {
                "top_preserved": self.top_preserved.to_json(lattice),
                "contractive": self.contractive.to_json(lattice),
                "idempotent": self.idempotent.to_json(lattice),
                "join_preserving": self.join_preserving.to_json(lattice),
                "image_is_lattice": self.image_is_lattice.to_json(lattice),
                "image_distributive": self.image_distributive.to_json(lattice),
            },
            "flags": {
                "is_weak_fmapping": self.is_weak_fmapping,
                "is_fmapping": self.is_fmapping,
                "is_order_preserving": self.is_order_preserving,
            },
        }


def check_weak_fmapping(lattice: Lattice, f: UnaryMap) -> FMapReport:
    """Evaluate all map conditions; failures are report entries, never errors."""
    n = lattice.n
    t = f.table
    le = lattice.le
    join = lattice.join_table

    top_preserved = Check(t[lattice.top] == lattice.top, None if t[lattice.top] == lattice.top else (lattice.top,))

    contractive = Check(True)
    for x in range(n):
        if not le(t[x], x):
            contractive = Check(False, (x,))
            break

    idempotent = Check(True)
    for x in range(n):
        if t[t[x]] != t[x]:
            idempotent = Check(False, (x,))
            break

    join_preserving = Check(True)
    for x in range(n):
        if not join_preserving.holds:
            break
        for y in range(x, n):
            if t[join[x][y]] != join[t[x]][t[y]]:
                join_preserving = Check(False, (x, y))
                break

    order_preserving = Check(True)
    for x in range(n):
        if not order_preserving.holds:
            break
        for y in range(n):
            if le(x, y) and not le(t[x], t[y]):
                order_preserving = Check(False, (x, y))
                break

    subset = sorted(set(t))
    ok, witness, join_rows, meet_rows = _subset_bounds(lattice, subset)
    if ok:
        image_is_lattice = Check(True)
        image_distributive = _subset_distributive(subset, join_rows, meet_rows)
    else:
        image_is_lattice = Check(False, witness)
        image_distributive = Check(False, witness)

    return FMapReport(
        top_preserved=top_preserved,
        contractive=contractive,
        idempotent=idempotent,
        join_preserving=join_preserving,
        image_is_lattice=image_is_lattice,
        image_distributive=image_distributive,
        order_preserving=order_preserving,
    )


def check_fmapping(lattice: Lattice, f: UnaryMap) -> FMapReport:
    """Same report as the weak check; callers read the is_fmapping flag."""
    return check_weak_fmapping(lattice, f)


@dataclass(frozen=True)
class ImageLattice:
    """The image set with its induced bounds; meets may differ from the host's."""

    host: Lattice
    subset: tuple[int, ...]
    join_table: tuple[tuple[int, ...], ...]  # position-indexed
    meet_table: tuple[tuple[int, ...], ...]
    is_lattice: bool
    is_distributive: bool
    is_sublattice_of_host: bool

    def position(self, x: int) -> int:
        try:
            return self.subset.index(x)
        except ValueError:
            raise NotInImage(
                f"{self.host.names[x]} is not in the image"
            ) from None

    def meet(self, u: int, v: int) -> int:
        return self.subset[self.meet_table[self.position(u)][self.position(v)]]

    def join(self, u: int, v: int) -> int:
        return self.subset[self.join_table[self.position(u)][self.position(v)]]


def image_lattice(lattice: Lattice, f: UnaryMap) -> ImageLattice:
    """Materialize Im(f) with induced tables; requires an idempotent map."""
    for x in range(lattice.n):
        if f.table[f.table[x]] != f.table[x]:
            raise NotIdempotent(
                f"map is not idempotent at {lattice.names[x]}", witness=(x,)
            )
    subset = tuple(sorted(set(f.table)))
    return _image_lattice_of_subset(lattice, subset)


def _image_lattice_of_subset(lattice: Lattice, subset: tuple[int, ...]) -> ImageLattice:
    ok, witness, join_rows, meet_rows = _subset_bounds(lattice, subset)
    if not ok:
        u, v = witness
        raise NotALatticeInducedPoset(
            f"image pair ({lattice.names[u]}, {lattice.names[v]}) "
            f"has no bound inside the image",
            witness=witness,
        )
    inside = set(subset)
    sub_ok = all(
        lattice.meet_table[u][v] in inside and lattice.join_table[u][v] in inside
        for u in subset
        for v in subset
    )
    return ImageLattice(
        host=lattice,
        subset=subset,
        join_table=tuple(tuple(r) for r in join_rows),
        meet_table=tuple(tuple(r) for r in meet_rows),
        is_lattice=True,
        is_distributive=_subset_distributive(subset, join_rows, meet_rows).holds,
        is_sublattice_of_host=sub_ok,
    )


def image_meet(image: ImageLattice, u: int, v: int) -> int:
    """Greatest element of the image below both u and v in the host order."""
    return image.meet(u, v)


def canonical_fmapping(lattice: Lattice) -> UnaryMap:
    """The two-valued map keeping only the top; valid when the top is c.j.i."""
    if not is_completely_join_irreducible(lattice, lattice.top):
        witness = None
        for x in range(lattice.n):
            for y in range(x + 1, lattice.n):
                if (
                    x != lattice.top
                    and y != lattice.top
                    and lattice.join_table[x][y] == lattice.top
                ):
                    witness = (x, y)
                    break
            if witness:
                break
        raise TopNotCJI(
            "top element is a join of strictly smaller elements", witness=witness
        )
    table = tuple(
        lattice.top if x == lattice.top else lattice.bottom
        for x in range(lattice.n)
    )
    return UnaryMap(lattice, table)


@dataclass(frozen=True)
class MapEnumeration:
    found: tuple[UnaryMap, ...]
    exhausted: bool
    count: int


def enumerate_weak_fmappings(
    lattice: Lattice,
    require_top: bool = False,
    max_results: int | None = None,
) -> MapEnumeration:
    """Enumerate all weak f-mappings (f-mappings when require_top is set).

    A join-preserving map is fixed by its values on the elements with exactly
    one lower cover: every other element is the join of its lower covers, so
    its value is forced. The search assigns those free values in a linear
    extension with contractivity, monotonicity and partial idempotence
    pruning, then confirms every candidate with the full condition check.
    Results are sorted lexicographically by table; max_results=0 counts only.
    """
    n = lattice.n
    rank = heights(lattice)
    order = sorted(range(n), key=lambda x: (rank[x], x))
    cover_lists = {x: lattice.lower_covers(x) for x in range(n)}
    table: list[int | None] = [None] * n
    found: list[tuple[int, ...]] = []

    def consistent(x: int, v: int) -> bool:
        if v != x and table[v] != v:
            return False  # idempotence needs image points fixed
        for y in range(n):
            if table[y] is None or y == x:
                continue
            if lattice.le(y, x) and not lattice.le(table[y], v):
                return False
            if lattice.le(x, y) and not lattice.le(v, table[y]):
                return False
        return True

    def assign(i: int) -> None:
        if i == len(order):
            candidate = UnaryMap(lattice, tuple(table))  # type: ignore[arg-type]
            report = check_weak_fmapping(lattice, candidate)
            if report.is_weak_fmapping and (
                not require_top or report.top_preserved.holds
            ):
                found.append(candidate.table)
            return
        x = order[i]
        covers = cover_lists[x]
        if len(covers) == 0:
            # the bottom element; contractivity forces the bottom value
            table[x] = lattice.bottom
            assign(i + 1)
            table[x] = None
        elif len(covers) == 1:
            domain = lattice.down_set(x)
            if require_top and x == lattice.top:
                domain = (lattice.top,)
            for v in domain:
                if consistent(x, v):
                    table[x] = v
                    assign(i + 1)
                    table[x] = None
        else:
            v = lattice.bottom
            for c in covers:
                v = lattice.join_table[v][table[c]]  # type: ignore[index]
            if (not require_top or x != lattice.top or v == lattice.top) and consistent(x, v):
                table[x] = v
                assign(i + 1)
                table[x] = None

    assign(0)
    found.sort()
    exhausted = True
    count = len(found)
    if max_results is not None:
        if max_results == 0:
            found = []
        elif len(found) > max_results:
            found = found[:max_results]
            exhausted = False
    return MapEnumeration(
        found=tuple(UnaryMap(lattice, t) for t in found),
        exhausted=exhausted,
        count=count,
    )
