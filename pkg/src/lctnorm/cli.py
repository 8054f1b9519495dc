"""Command-line interface.

Exit codes: 0 success or verdict true, 1 verdict false (witness printed),
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import construct as cn
from .errors import LctnError, NotALattice
from .formats import (
    export_dot,
    parse_lattice,
    parse_map,
    parse_op,
    serialize_op,
)
from .lattice import (
    Lattice,
    central_elements,
    chain_spec,
    completely_join_irreducibles,
    interval_family,
    interval_sublattice,
    is_distributive,
    join_irreducibles,
)
from .maps import check_weak_fmapping, enumerate_weak_fmappings
from .ops import BinaryOp, check_operator, drastic_op, meet_op
from .search import brute_force_lc_tnorms, search_lc_tnorms
from .fixtures import FIXTURE_IDS, run_fixture


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_lattice(path: str) -> Lattice:
    return parse_lattice(_read(path))


def _witness_str(lattice: Lattice, witness) -> str:
    if witness is None:
        return ""
    return "(" + ", ".join(lattice.names[i] for i in witness) + ")"


def _emit(payload: dict, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_validate(args) -> int:
    try:
        lattice = _load_lattice(args.lattice)
    except NotALattice as exc:
        print(f"invalid: {exc}")
        return 1
    except LctnError as exc:
        kind = type(exc).__name__
        if kind in ("NotAPoset", "NoBounds"):
            print(f"invalid: {exc}")
            return 1
        raise
    payload = {
        "valid": True,
        "elements": list(lattice.names),
        "covers": [[lattice.names[a], lattice.names[b]] for a, b in lattice.covers],
        "bottom": lattice.names[lattice.bottom],
        "top": lattice.names[lattice.top],
    }
    _emit(
        payload,
        args.json,
        [
            f"valid lattice with {lattice.n} elements",
            f"bottom {lattice.names[lattice.bottom]}, top {lattice.names[lattice.top]}",
        ],
    )
    return 0


def _cmd_analyze(args) -> int:
    lattice = _load_lattice(args.lattice)
    dist = is_distributive(lattice)
    cji = completely_join_irreducibles(lattice)
    ji = join_irreducibles(lattice)
    payload = {
        "elements": list(lattice.names),
        "distributive": dist.to_json(lattice),
        "completely_join_irreducible": [lattice.names[x] for x in cji],
        "join_irreducible": [lattice.names[x] for x in ji],
        "central": [lattice.names[x] for x in central_elements(lattice)],
    }
    lines = [
        f"elements: {' '.join(lattice.names)}",
        f"distributive: {dist.holds}"
        + (f" (witness {_witness_str(lattice, dist.witness)})" if not dist.holds else ""),
        f"completely join-irreducible: {' '.join(lattice.names[x] for x in cji)}",
        f"join-irreducible: {' '.join(lattice.names[x] for x in ji)}",
        f"comparable with everything: "
        f"{' '.join(lattice.names[x] for x in central_elements(lattice))}",
    ]
    _emit(payload, args.json, lines)
    return 0


def _cmd_check_map(args) -> int:
    lattice = _load_lattice(args.lattice)
    f = parse_map(_read(args.map), lattice)
    report = check_weak_fmapping(lattice, f)
    verdict = report.is_weak_fmapping if args.weak else report.is_fmapping
    lines = []
    for label, check in (
        ("top preserved", report.top_preserved),
        ("contractive", report.contractive),
        ("idempotent", report.idempotent),
        ("join preserving", report.join_preserving),
        ("image is a lattice", report.image_is_lattice),
        ("image distributive", report.image_distributive),
    ):
        suffix = "" if check.holds else f"  witness {_witness_str(lattice, check.witness)}"
        lines.append(f"{label}: {check.holds}{suffix}")
    lines.append(f"weak f-mapping: {report.is_weak_fmapping}")
    lines.append(f"f-mapping: {report.is_fmapping}")
    _emit(report.to_json(lattice), args.json, lines)
    return 0 if verdict else 1


def _cmd_check_op(args) -> int:
    lattice = _load_lattice(args.lattice)
    op = parse_op(_read(args.op), lattice)
    report = check_operator(lattice, op)
    flags = report.to_json(lattice)["flags"]
    verdict = {
        "tnorm": report.is_tnorm,
        "tsubnorm": report.is_tsubnorm,
        "lc-tnorm": report.is_left_continuous_tnorm,
        "lc-tsubnorm": report.is_left_continuous_tsubnorm,
    }[args.expect]
    lines = []
    for label, check in (
        ("neutral_top", report.neutral_top),
        ("monotone", report.monotone),
        ("commutative", report.commutative),
        ("associative", report.associative),
        ("bounded_by_meet", report.bounded_by_meet),
        ("annihilating", report.annihilating),
        ("strong", report.strong),
        ("left_continuous", report.left_continuous),
    ):
        suffix = "" if check.holds else f"  witness {_witness_str(lattice, check.witness)}"
        lines.append(f"{label}: {check.holds}{suffix}")
    lines.extend(f"{k}: {v}" for k, v in flags.items())
    _emit(report.to_json(lattice), args.json, lines)
    return 0 if verdict else 1


def _summand_on(lattice: Lattice, lo: int, hi: int, spec: str) -> BinaryOp:
    sub, _ = interval_sublattice(lattice, lo, hi)
    if spec == "TM":
        return meet_op(sub)
    if spec == "TD":
        return drastic_op(sub)
    return parse_op(_read(spec), sub)


def _parse_chain_arg(lattice: Lattice, text: str):
    return chain_spec(lattice, [tok for tok in text.split(",") if tok])


def _parse_intervals_arg(lattice: Lattice, text: str):
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        lo, _, hi = chunk.partition(":")
        pairs.append((lo, hi))
    return interval_family(lattice, pairs)


def _construct_output(args, lattice: Lattice, op: BinaryOp, want: str) -> int:
    report = check_operator(lattice, op)
    verdict = (
        report.is_left_continuous_tsubnorm
        if want == "lc-tsubnorm"
        else report.is_left_continuous_tnorm
    )
    if args.json:
        print(
            json.dumps(
                {
                    "table": [
                        [lattice.names[v] for v in row] for row in op.table
                    ],
                    "report": report.to_json(lattice),
                },
                indent=2,
            )
        )
    else:
        sys.stdout.write(serialize_op(op))
        for label, check in (
            ("left_continuous", report.left_continuous),
            ("associative", report.associative),
            ("is_tnorm", None),
        ):
            if check is not None and not check.holds:
                print(
                    f"# {label}: False  witness {_witness_str(lattice, check.witness)}",
                    file=sys.stderr,
                )
        print(f"# classified as {want}: {verdict}", file=sys.stderr)
    return 0 if verdict else 1


def _cmd_construct(args) -> int:
    lattice = _load_lattice(args.lattice)
    mode = args.mode
    if mode == "thm31":
        f = parse_map(_read(args.map), lattice)
        return _construct_output(
            args, lattice, cn.subnorm_from_weak_fmap(lattice, f), "lc-tsubnorm"
        )
    if mode == "thm32":
        f = parse_map(_read(args.map), lattice)
        return _construct_output(
            args, lattice, cn.tnorm_from_fmap(lattice, f), "lc-tnorm"
        )
    if mode == "thm41":
        chain = _parse_chain_arg(lattice, args.chain)
        summands = [
            _summand_on(lattice, lo, hi, spec)
            for (lo, hi), spec in zip(chain.intervals(), args.summand)
        ]
        if len(args.summand) != len(chain.intervals()):
            raise LctnError(
                f"expected {len(chain.intervals())} summands, got {len(args.summand)}"
            )
        decomposition = cn.chain_decomposition(lattice, chain, summands)
        return _construct_output(
            args, lattice, cn.ordinal_sum_chain(lattice, decomposition), "lc-tnorm"
        )
    if mode == "thm42":
        family = _parse_intervals_arg(lattice, args.intervals)
        pairs = family.pairs
        if len(args.summand) != len(pairs):
            raise LctnError(f"expected {len(pairs)} summands, got {len(args.summand)}")
        summands = [
            _summand_on(lattice, lo, hi, spec)
            for (lo, hi), spec in zip(pairs, args.summand)
        ]
        top_op = None
        if pairs[-1][1] != lattice.top:
            if not args.top_op:
                raise LctnError("--top-op is required when the family ends below the top")
            top_op = _summand_on(lattice, pairs[-1][1], lattice.top, args.top_op)
        f0 = None
        if pairs[0][0] != lattice.bottom:
            if not args.f0:
                raise LctnError("--f0 is required when the family starts above the bottom")
            sub, _ = interval_sublattice(lattice, lattice.bottom, pairs[0][0])
            f0 = parse_map(_read(args.f0), sub)
        gaps: list = []
        supplied = list(args.gap_map)
        for k in range(len(pairs) - 1):
            if pairs[k][1] == pairs[k + 1][0]:
                gaps.append(None)
            else:
                if not supplied:
                    raise LctnError(f"missing --gap-map for gap {k + 1}")
                sub, _ = interval_sublattice(lattice, pairs[k][1], pairs[k + 1][0])
                gaps.append(parse_map(_read(supplied.pop(0)), sub))
        if supplied:
            raise LctnError("more --gap-map files than nondegenerate gaps")
        decomposition = cn.semilinear_decomposition(
            lattice, family, summands, top_op=top_op, f0=f0, gaps=gaps
        )
        return _construct_output(
            args, lattice, cn.ordinal_sum_semilinear(lattice, decomposition), "lc-tnorm"
        )
    if mode == "cor41":
        chain = _parse_chain_arg(lattice, args.chain)
        intervals = chain.intervals()
        if len(args.gap_map) != len(intervals) - 1:
            raise LctnError(
                f"expected {len(intervals) - 1} --gap-map files, got {len(args.gap_map)}"
            )
        maps = []
        for (lo, hi), path in zip(intervals[:-1], args.gap_map):
            sub, _ = interval_sublattice(lattice, lo, hi)
            maps.append(parse_map(_read(path), sub))
        if not args.top_op:
            raise LctnError("--top-op is required")
        top_op = _summand_on(lattice, *intervals[-1], args.top_op)
        return _construct_output(
            args,
            lattice,
            cn.corollary41_construct(lattice, chain, maps, top_op),
            "lc-tnorm",
        )
    if mode == "saminger":
        family = _parse_intervals_arg(lattice, args.intervals)
        if len(args.summand) != len(family.pairs):
            raise LctnError(
                f"expected {len(family.pairs)} summands, got {len(args.summand)}"
            )
        ops = [
            _summand_on(lattice, lo, hi, spec)
            for (lo, hi), spec in zip(family.pairs, args.summand)
        ]
        return _construct_output(
            args, lattice, cn.saminger_sum(lattice, family, ops), "lc-tnorm"
        )
    raise LctnError(f"unknown construction {mode!r}")


def _cmd_extract(args) -> int:
    lattice = _load_lattice(args.lattice)
    op = parse_op(_read(args.op), lattice)
    chain = _parse_chain_arg(lattice, args.chain)
    summands = cn.extract_summands(lattice, op, chain)
    if args.json:
        print(
            json.dumps(
                {
                    "summands": [
                        {
                            "interval": [lattice.names[lo], lattice.names[hi]],
                            "table": [
                                [s.lattice.names[v] for v in row] for row in s.table
                            ],
                        }
                        for (lo, hi), s in zip(chain.intervals(), summands)
                    ]
                },
                indent=2,
            )
        )
    else:
        for (lo, hi), summand in zip(chain.intervals(), summands):
            print(f"# interval [{lattice.names[lo]}, {lattice.names[hi]}]")
            sys.stdout.write(serialize_op(summand))
    return 0


def _cmd_search(args) -> int:
    lattice = _load_lattice(args.lattice)
    if args.brute:
        result = brute_force_lc_tnorms(lattice)
    else:
        result = search_lc_tnorms(lattice, max_results=args.max)
    payload = {
        "found": [
            [[lattice.names[v] for v in row] for row in op.table]
            for op in result.found
        ],
        "count": result.count,
        "exhausted": result.exhausted,
        "stats": result.stats,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for op in result.found:
            sys.stdout.write(serialize_op(op))
            print()
        print(f"# found {result.count}, exhausted {result.exhausted}")
    return 0 if result.count > 0 else 1


def _cmd_enum_fmaps(args) -> int:
    lattice = _load_lattice(args.lattice)
    result = enumerate_weak_fmappings(
        lattice, require_top=not args.weak, max_results=args.max
    )
    payload = {
        "found": [[lattice.names[v] for v in f.table] for f in result.found],
        "count": result.count,
        "exhausted": result.exhausted,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for f in result.found:
            print(" ".join(f"{lattice.names[x]}->{lattice.names[f.table[x]]}" for x in range(lattice.n)))
        print(f"# found {result.count}, exhausted {result.exhausted}")
    return 0 if result.count > 0 else 1


def _cmd_export_dot(args) -> int:
    sys.stdout.write(export_dot(_load_lattice(args.lattice)))
    return 0


def _cmd_reproduce(args) -> int:
    ids = FIXTURE_IDS if args.fixture == "all" else (args.fixture,)
    reports = [run_fixture(fid) for fid in ids]
    if args.json:
        print(json.dumps([rep.to_json() for rep in reports], indent=2))
    else:
        for rep in reports:
            for check in rep.checks:
                status = "PASS" if check.passed else "FAIL"
                detail = "" if check.passed else f"  [{check.detail}]"
                print(f"{status}  {rep.fixture}: {check.label}{detail}")
            print(f"{'PASS' if rep.passed else 'FAIL'}  {rep.fixture}")
    return 0 if all(rep.passed for rep in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lctnorm",
        description="Build, check and search left-continuous t-norms on finite lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("validate", _cmd_validate, help="parse and validate a lattice file")
    p.add_argument("lattice")

    p = add("analyze", _cmd_analyze, help="distributivity and irreducible elements")
    p.add_argument("lattice")

    p = add("check-map", _cmd_check_map, help="verify the self-map conditions")
    p.add_argument("lattice")
    p.add_argument("map")
    p.add_argument("--weak", action="store_true", help="verdict ignores top preservation")

    p = add("check-op", _cmd_check_op, help="verify operator axioms")
    p.add_argument("lattice")
    p.add_argument("op")
    p.add_argument(
        "--expect",
        choices=("tnorm", "tsubnorm", "lc-tnorm", "lc-tsubnorm"),
        default="tnorm",
        help="classification deciding the exit code",
    )

    p = add("construct", _cmd_construct, help="run one of the bundled constructions")
    p.add_argument(
        "mode", choices=("thm31", "thm32", "thm41", "thm42", "cor41", "saminger")
    )
    p.add_argument("lattice")
    p.add_argument("map", nargs="?", help="self-map file (thm31, thm32)")
    p.add_argument("--chain", help="comma-separated chain points (thm41, cor41)")
    p.add_argument("--intervals", help="comma-separated a:b pairs (thm42, saminger)")
    p.add_argument(
        "--summand",
        action="append",
        default=[],
        help="operator file or TM/TD, one per interval",
    )
    p.add_argument("--top-op", help="operator file or TM/TD for the block below the top")
    p.add_argument("--f0", help="map file for the block above the bottom (thm42)")
    p.add_argument(
        "--gap-map",
        action="append",
        default=[],
        help="map file per nondegenerate gap (thm42) or per non-top interval (cor41)",
    )

    p = add("extract", _cmd_extract, help="split a blockwise operator into summands")
    p.add_argument("lattice")
    p.add_argument("op")
    p.add_argument("--chain", required=True)

    p = add("search", _cmd_search, help="census of left-continuous t-norms")
    p.add_argument("lattice")
    p.add_argument("--max", type=int, default=None, help="stop after N results (0: count only)")
    p.add_argument("--brute", action="store_true", help="use the brute-force oracle")

    p = add("enum-fmaps", _cmd_enum_fmaps, help="enumerate f-mappings")
    p.add_argument("lattice")
    p.add_argument("--weak", action="store_true", help="do not require top preservation")
    p.add_argument("--max", type=int, default=None, help="keep at most N maps (0: count only)")

    p = add("export-dot", _cmd_export_dot, help="DOT digraph of the cover relation")
    p.add_argument("lattice")

    p = add("reproduce", _cmd_reproduce, help="run a bundled fixture ('all' runs every one)")
    p.add_argument("fixture", help=f"one of: all, {', '.join(FIXTURE_IDS)}")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LctnError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
