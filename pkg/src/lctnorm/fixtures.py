"""Bundled inputs and a one-command reproduction harness.

Each fixture id names a self-contained input bundle plus expected outcomes.
Expected tables are compared byte for byte against the bundled canonical
serialization. Where a bundled reference table is known to disagree with
the defining formula (tab7), the fixture pins the computed value as ground
truth and demonstrates why the reference value cannot stand.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import construct as cn
from .errors import TopNotCJI, UnknownFixture
from .formats import parse_lattice, parse_map, parse_op, serialize_op
from .lattice import (
    Lattice,
    check_linear_sum,
    check_semi_linear_sum,
    chain_spec,
    completely_join_irreducibles,
    interval_family,
    interval_sublattice,
    is_completely_join_irreducible,
    is_distributive,
)
from .maps import (
    canonical_fmapping,
    check_fmapping,
    check_weak_fmapping,
    constant_map,
    enumerate_weak_fmappings,
    fixed_points,
    image_lattice,
)
from .ops import check_operator, idempotents, meet_op
from .search import brute_force_lc_tnorms, search_lc_tnorms

LATTICE_CATALOG = (
    "fig1",
    "fig2",
    "fig3",
    "m3",
    "n5",
    "chain2",
    "chain3",
    "chain4",
    "b22",
)

FIXTURE_IDS = (
    "fig1",
    "fig2",
    "fig3",
    "m3",
    "chain2",
    "chain3",
    "ex1.1",
    "tab1",
    "ex3.1",
    "ex3.2",
    "ex4.1",
    "ex4.2",
    "prop3.1",
    "rem3.1-2",
    "rem3.1-5",
)


def _data(name: str) -> str:
    return resources.files(__package__).joinpath(f"data/{name}").read_text()


def bundled_lattice(name: str) -> Lattice:
    if name not in LATTICE_CATALOG:
        raise UnknownFixture(f"no bundled lattice named {name!r}")
    return parse_lattice(_data(f"{name}.lat"))


@dataclass(frozen=True)
class FixtureCheck:
    label: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class FixtureReport:
    fixture: str
    checks: tuple[FixtureCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "fixture": self.fixture,
            "passed": self.passed,
            "checks": [
                {"label": c.label, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


class _Recorder:
    def __init__(self) -> None:
        self.checks: list[FixtureCheck] = []

    def expect(self, label: str, passed: bool, detail: str = "") -> None:
        self.checks.append(FixtureCheck(label, bool(passed), detail))

    def equal(self, label: str, got, want) -> None:
        self.expect(label, got == want, f"got {got!r}, want {want!r}")


def _names(lattice: Lattice, idx) -> tuple[str, ...]:
    return tuple(lattice.names[i] for i in idx)


def _fixture_fig1(r: _Recorder) -> None:
    lat = bundled_lattice("fig1")
    r.equal("element count", lat.n, 7)
    r.equal("cover count", len(lat.covers), 8)
    c, d, e = lat.index("c"), lat.index("d"), lat.index("e")
    r.equal("join of c and e", lat.names[lat.join(c, e)], "1")
    r.equal("meet of c and d", lat.names[lat.meet(c, d)], "b")
    r.equal("distributive", is_distributive(lat).holds, False)
    r.equal(
        "completely join-irreducible set",
        _names(lat, completely_join_irreducibles(lat)),
        ("a", "b", "c", "e"),
    )
    r.equal("top is c.j.i.", is_completely_join_irreducible(lat, lat.top), False)
    linear = check_linear_sum(lat, chain_spec(lat, ["0", "a", "b", "1"]))
    r.equal("chain (0,a,b,1) linear-sum verdict", linear.holds, False)
    r.equal("linear-sum witness", _names(lat, linear.witness), ("e", "a"))
    try:
        canonical_fmapping(lat)
        r.expect("two-valued map rejected", False, "unexpectedly accepted")
    except TopNotCJI as exc:
        j = lat.join(*exc.witness)
        r.expect(
            "two-valued map rejected with joining pair",
            j == lat.top,
            f"witness {_names(lat, exc.witness)}",
        )


def _fixture_fig2(r: _Recorder) -> None:
    lat = bundled_lattice("fig2")
    r.equal("element count", lat.n, 6)
    c, d = lat.index("c"), lat.index("d")
    r.equal("join of c and d", lat.names[lat.join(c, d)], "1")
    r.equal("meet of c and d", lat.names[lat.meet(c, d)], "b")
    r.equal("distributive", is_distributive(lat).holds, True)
    r.equal(
        "completely join-irreducible set",
        _names(lat, completely_join_irreducibles(lat)),
        ("a", "b", "c", "d"),
    )
    linear = check_linear_sum(lat, chain_spec(lat, ["0", "b", "1"]))
    r.equal("chain (0,b,1) linear-sum verdict", linear.holds, True)
    try:
        canonical_fmapping(lat)
        r.expect("two-valued map rejected", False, "unexpectedly accepted")
    except TopNotCJI as exc:
        r.equal("rejection witness", _names(lat, exc.witness), ("c", "d"))


def _fixture_fig3(r: _Recorder) -> None:
    lat = bundled_lattice("fig3")
    r.equal("element count", lat.n, 10)
    r.equal("cover count", len(lat.covers), 12)
    e, f = lat.index("e"), lat.index("f")
    r.equal("meet of e and f", lat.names[lat.meet(e, f)], "g")
    r.equal("distributive", is_distributive(lat).holds, False)
    sub, embed = interval_sublattice(lat, lat.index("b"), lat.index("g"))
    r.equal("interval [b,g] carrier", _names(lat, embed), ("b", "c", "d", "h", "g"))
    r.equal(
        "completely join-irreducible set",
        _names(lat, completely_join_irreducibles(lat)),
        ("a", "b", "c", "d", "h", "e", "f"),
    )
    fam1 = interval_family(lat, [("b", "g")])
    r.equal("{[b,g]} semi-linear", check_semi_linear_sum(lat, fam1).holds, True)
    fam2 = interval_family(lat, [("0", "a"), ("g", "1")])
    r.equal("{[0,a],[g,1]} semi-linear", check_semi_linear_sum(lat, fam2).holds, True)


def _fixture_m3(r: _Recorder) -> None:
    lat = bundled_lattice("m3")
    r.equal("element count", lat.n, 5)
    dist = is_distributive(lat)
    r.equal("distributive", dist.holds, False)
    r.expect(
        "distributivity witness is an atom triple",
        dist.witness is not None and lat.top not in dist.witness
        and lat.bottom not in dist.witness,
        f"witness {_names(lat, dist.witness)}",
    )
    result = search_lc_tnorms(lat)
    r.equal("left-continuous t-norm census", len(result.found), 0)
    r.equal("census exhausted", result.exhausted, True)


def _fixture_chain(r: _Recorder, name: str, census: int) -> None:
    lat = bundled_lattice(name)
    r.equal("distributive", is_distributive(lat).holds, True)
    r.equal(
        "completely join-irreducibles are the non-bottom elements",
        _names(lat, completely_join_irreducibles(lat)),
        lat.names[1:],
    )
    searched = search_lc_tnorms(lat)
    brute = brute_force_lc_tnorms(lat)
    r.equal("search census", len(searched.found), census)
    r.equal(
        "search equals brute force",
        [op.table for op in searched.found],
        [op.table for op in brute.found],
    )


def _fixture_ex11(r: _Recorder) -> None:
    lat = bundled_lattice("fig1")
    for lo, hi in (("0", "a"), ("a", "b"), ("b", "1")):
        sub, _ = interval_sublattice(lat, lat.index(lo), lat.index(hi))
        report = check_operator(sub, meet_op(sub))
        r.equal(
            f"meet operator on [{lo},{hi}] is a left-continuous t-norm",
            report.is_left_continuous_tnorm,
            True,
        )
    result = search_lc_tnorms(lat)
    r.equal("search finds nothing", len(result.found), 0)
    r.equal("search is exhaustive", result.exhausted, True)


def _fixture_tab1(r: _Recorder) -> None:
    lat = bundled_lattice("fig2")
    f = parse_map(_data("tab1.map"), lat)
    report = check_fmapping(lat, f)
    r.equal("map satisfies all five conditions", report.is_fmapping, True)
    r.equal("fixed points", _names(lat, fixed_points(lat, f)), ("0", "c", "d", "1"))


def _fixture_rem315(r: _Recorder) -> None:
    lat = bundled_lattice("fig2")
    f = parse_map(_data("tab1.map"), lat)
    image = image_lattice(lat, f)
    r.equal("image set", _names(lat, image.subset), ("0", "c", "d", "1"))
    r.equal("image is a sublattice of the host", image.is_sublattice_of_host, False)
    c, d = lat.index("c"), lat.index("d")
    r.equal("host meet of c and d", lat.names[lat.meet(c, d)], "b")
    r.equal("image meet of c and d", lat.names[image.meet(c, d)], "0")
    r.equal("image is distributive", image.is_distributive, True)


def _fixture_ex31(r: _Recorder) -> None:
    lat = bundled_lattice("fig2")
    f = parse_map(_data("tab2.map"), lat)
    report = check_weak_fmapping(lat, f)
    r.equal("map is a weak f-mapping", report.is_weak_fmapping, True)
    r.equal("map preserves the top", report.top_preserved.holds, False)
    op = cn.subnorm_from_weak_fmap(lat, f)
    r.equal("induced table, byte for byte", serialize_op(op), _data("tab3.op"))
    axioms = check_operator(lat, op)
    r.equal(
        "induced operator is a left-continuous t-subnorm",
        axioms.is_left_continuous_tsubnorm,
        True,
    )
    r.equal("induced operator is a t-norm", axioms.is_tnorm, False)
    r.equal("induced operator is strong", axioms.strong.holds, False)


def _fixture_ex32(r: _Recorder) -> None:
    lat = bundled_lattice("fig1")
    f = parse_map(_data("tab4.map"), lat)
    r.equal("map satisfies all five conditions", check_fmapping(lat, f).is_fmapping, True)
    r.equal("top is c.j.i.", is_completely_join_irreducible(lat, lat.top), False)
    op = cn.tnorm_from_fmap(lat, f)
    b, c, e = lat.index("b"), lat.index("c"), lat.index("e")
    r.equal("value at (b, 1)", lat.names[op(b, lat.top)], "b")
    r.equal("value at (b, c)", lat.names[op(b, c)], "0")
    r.equal("value at (b, e)", lat.names[op(b, e)], "0")
    axioms = check_operator(lat, op)
    r.equal("operator is a t-norm", axioms.is_tnorm, True)
    r.equal("operator is left-continuous", axioms.left_continuous.holds, False)
    witness = axioms.left_continuous.witness
    r.expect(
        "left-continuity witness joins to the top",
        witness is not None and lat.join(witness[1], witness[2]) == lat.top,
        f"witness {_names(lat, witness)}",
    )


def _ex41_parts(lat: Lattice):
    family = interval_family(lat, [("b", "g")])
    sub_bg, _ = interval_sublattice(lat, lat.index("b"), lat.index("g"))
    t1 = parse_op(_data("tab5.op"), sub_bg)
    sub_0b, _ = interval_sublattice(lat, lat.bottom, lat.index("b"))
    f0 = parse_map(_data("tab6.map"), sub_0b)
    sub_g1, _ = interval_sublattice(lat, lat.index("g"), lat.top)
    return cn.semilinear_decomposition(
        lat, family, [t1], top_op=meet_op(sub_g1), f0=f0
    )


def _fixture_ex41(r: _Recorder) -> None:
    lat = bundled_lattice("fig3")
    decomposition = _ex41_parts(lat)
    sub_0b, _ = interval_sublattice(lat, lat.bottom, lat.index("b"))
    gap_report = check_weak_fmapping(sub_0b, decomposition.f0)
    r.equal("gap map fails idempotence", gap_report.idempotent.holds, False)
    r.equal(
        "gap map idempotence witness",
        _names(sub_0b, gap_report.idempotent.witness),
        ("b",),
    )

    computed = cn.ordinal_sum_semilinear(lat, decomposition)
    printed = parse_op(_data("tab7_printed.op"), lat)
    mismatches = [
        (x, y)
        for x in range(lat.n)
        for y in range(lat.n)
        if computed.table[x][y] != printed.table[x][y]
    ]
    a, b = lat.index("a"), lat.index("b")
    r.equal("cells differing from the reference table", mismatches, [(a, b), (b, a)])
    r.equal("matching cell count", lat.n * lat.n - len(mismatches), 98)
    r.equal("computed value at (a, b)", lat.names[computed(a, b)], "0")
    r.equal("reference value at (a, b)", lat.names[printed(a, b)], "a")

    printed_axioms = check_operator(lat, printed)
    r.equal("reference table is associative", printed_axioms.associative.holds, False)
    r.equal(
        "reference associativity witness",
        _names(lat, printed_axioms.associative.witness),
        ("a", "b", "b"),
    )

    axioms = check_operator(lat, computed)
    r.equal("computed table is left-continuous", axioms.left_continuous.holds, True)
    r.equal("computed table is commutative", axioms.commutative.holds, True)
    r.equal("computed table is monotone", axioms.monotone.holds, True)
    r.equal("computed table has the top as neutral", axioms.neutral_top.holds, True)
    r.equal("computed table is associative", axioms.associative.holds, False)
    r.equal(
        "computed associativity witness",
        _names(lat, axioms.associative.witness),
        ("a", "c", "c"),
    )

    restriction = cn.check_restriction(lat, decomposition, computed, 1)
    r.equal("restriction to [b,g] equals its summand", restriction.equals.holds, False)
    r.equal(
        "restriction witness",
        _names(lat, restriction.equals.witness),
        ("b", "b"),
    )
    r.equal("restriction criterion kind", restriction.criterion_kind, "preceding_gap_map")
    r.equal("gap map is an f-mapping", restriction.criterion_holds, False)
    r.equal("restriction criterion consistent", restriction.consistent, True)


def _ex42_parts(lat: Lattice):
    family = interval_family(lat, [("0", "a"), ("g", "1")])
    sub_0a, _ = interval_sublattice(lat, lat.bottom, lat.index("a"))
    sub_g1, _ = interval_sublattice(lat, lat.index("g"), lat.top)
    sub_ag, _ = interval_sublattice(lat, lat.index("a"), lat.index("g"))
    f1 = parse_map(_data("tab8.map"), sub_ag)
    return cn.semilinear_decomposition(
        lat, family, [meet_op(sub_0a), meet_op(sub_g1)], gaps=[f1]
    )


def _fixture_ex42(r: _Recorder) -> None:
    lat = bundled_lattice("fig3")
    decomposition = _ex42_parts(lat)
    sub_ag, _ = interval_sublattice(lat, lat.index("a"), lat.index("g"))
    r.equal(
        "gap map is a weak f-mapping",
        check_weak_fmapping(sub_ag, decomposition.gaps[0]).is_weak_fmapping,
        True,
    )
    computed = cn.ordinal_sum_semilinear(lat, decomposition)
    r.equal("assembled table, byte for byte", serialize_op(computed), _data("tab9.op"))

    axioms = check_operator(lat, computed)
    r.equal("table is left-continuous", axioms.left_continuous.holds, True)
    r.equal("table is commutative", axioms.commutative.holds, True)
    r.equal("table is monotone", axioms.monotone.holds, True)
    r.equal("table has the top as neutral", axioms.neutral_top.holds, True)
    r.equal("table is associative", axioms.associative.holds, False)
    r.equal(
        "associativity witness",
        _names(lat, axioms.associative.witness),
        ("c", "e", "f"),
    )

    first = cn.check_restriction(lat, decomposition, computed, 1)
    r.equal("restriction to [0,a] equals its summand", first.equals.holds, True)
    r.equal("first interval has no preceding block", first.criterion_kind, "none")
    second = cn.check_restriction(lat, decomposition, computed, 2)
    r.equal("restriction to [g,1] equals its summand", second.equals.holds, False)
    r.equal(
        "restriction witness",
        _names(lat, second.equals.witness),
        ("g", "g"),
    )
    r.equal("gap map is an f-mapping", second.criterion_holds, False)
    r.equal("restriction criterion consistent", second.consistent, True)


def _fixture_prop31(r: _Recorder) -> None:
    for name in ("chain2", "chain3", "chain4", "b22", "fig2"):
        lat = bundled_lattice(name)
        enumeration = enumerate_weak_fmappings(lat, require_top=True)
        r.expect(
            f"{name}: enumeration is exhaustive and nonempty",
            enumeration.exhausted and enumeration.count > 0,
            f"count {enumeration.count}",
        )
        bad = []
        for f in enumeration.found:
            op = cn.tnorm_from_fmap(lat, f)
            if set(idempotents(lat, op)) != set(f.table):
                bad.append(f.table)
        r.equal(f"{name}: idempotent set equals the map image, every map", bad, [])
    lat = bundled_lattice("fig1")
    f = parse_map(_data("tab4.map"), lat)
    op = cn.tnorm_from_fmap(lat, f)
    r.equal(
        "fig1 bundled map: idempotent set equals the map image",
        set(idempotents(lat, op)),
        set(f.table),
    )


def _fixture_rem312(r: _Recorder) -> None:
    lat = bundled_lattice("m3")
    strict = enumerate_weak_fmappings(lat, require_top=True)
    r.equal("top-preserving enumeration is empty", strict.count, 0)
    r.equal("enumeration is exhaustive", strict.exhausted, True)
    weak = enumerate_weak_fmappings(lat)
    r.expect(
        "constant-bottom map is enumerated",
        constant_map(lat, lat.bottom).table in [f.table for f in weak.found],
        f"{weak.count} weak maps",
    )


def run_fixture(fixture_id: str) -> FixtureReport:
    """Execute one bundled fixture and compare against its expected outcomes."""
    recorder = _Recorder()
    runner = {
        "fig1": _fixture_fig1,
        "fig2": _fixture_fig2,
        "fig3": _fixture_fig3,
        "m3": _fixture_m3,
        "chain2": lambda r: _fixture_chain(r, "chain2", census=1),
        "chain3": lambda r: _fixture_chain(r, "chain3", census=2),
        "ex1.1": _fixture_ex11,
        "tab1": _fixture_tab1,
        "ex3.1": _fixture_ex31,
        "ex3.2": _fixture_ex32,
        "ex4.1": _fixture_ex41,
        "ex4.2": _fixture_ex42,
        "prop3.1": _fixture_prop31,
        "rem3.1-2": _fixture_rem312,
        "rem3.1-5": _fixture_rem315,
    }.get(fixture_id)
    if runner is None:
        raise UnknownFixture(f"unknown fixture {fixture_id!r}")
    runner(recorder)
    return FixtureReport(fixture_id, tuple(recorder.checks))
