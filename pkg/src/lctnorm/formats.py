"""Text formats for lattices, maps and operator tables, plus DOT export.

All three formats are line oriented with '#' comments and whitespace
separated tokens. Serialization is canonical, so parse(serialize(x))
reproduces x and serialized tables can be compared byte for byte.
"""

from __future__ import annotations

from .errors import DuplicateEntry, ParseError, UnknownElement, ValidationError
from .lattice import Lattice, build_lattice
from .maps import UnaryMap
from .ops import BinaryOp, op_from_table


def _logical_lines(text: str):
    """Yield (line_number, tokens) for nonblank, noncomment lines."""
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line.split()


def parse_lattice(text: str) -> Lattice:
    """Grammar: 'elements <tok>+', 'covers', one 'x y' pair per line, 'end'."""
    lines = list(_logical_lines(text))
    if not lines:
        raise ParseError("empty lattice file")
    pos = 0
    lineno, tokens = lines[pos]
    if tokens[0] != "elements" or len(tokens) < 2:
        raise ParseError("expected 'elements <tok>+'", lineno)
    names = tokens[1:]
    pos += 1
    if pos >= len(lines) or lines[pos][1] != ["covers"]:
        raise ParseError("expected 'covers'", lines[pos][0] if pos < len(lines) else lineno)
    pos += 1
    covers = []
    saw_end = False
    while pos < len(lines):
        lineno, tokens = lines[pos]
        pos += 1
        if tokens == ["end"]:
            saw_end = True
            break
        if len(tokens) != 2:
            raise ParseError("expected a cover pair 'x y'", lineno)
        covers.append((tokens[0], tokens[1]))
    if not saw_end:
        raise ParseError("missing 'end'")
    if pos != len(lines):
        raise ParseError("trailing content after 'end'", lines[pos][0])
    return build_lattice(names, covers)


def serialize_lattice(lattice: Lattice) -> str:
    out = ["elements " + " ".join(lattice.names), "covers"]
    for lo, hi in sorted(lattice.covers):
        out.append(f"{lattice.names[lo]} {lattice.names[hi]}")
    out.append("end")
    return "\n".join(out) + "\n"


def parse_map(text: str, lattice: Lattice) -> UnaryMap:
    """One 'x -> y' line per element; totality enforced."""
    table: list[int | None] = [None] * lattice.n
    for lineno, tokens in _logical_lines(text):
        if len(tokens) != 3 or tokens[1] != "->":
            raise ParseError("expected 'x -> y'", lineno)
        src, dst = tokens[0], tokens[2]
        x = _resolve(lattice, src, lineno)
        y = _resolve(lattice, dst, lineno)
        if table[x] is not None:
            raise DuplicateEntry(f"line {lineno}: duplicate entry for {src!r}")
        table[x] = y
    missing = [lattice.names[x] for x in range(lattice.n) if table[x] is None]
    if missing:
        raise ValidationError(f"map is not total: missing {missing}")
    return UnaryMap(lattice, tuple(table))  # type: ignore[arg-type]


def serialize_map(f: UnaryMap) -> str:
    names = f.lattice.names
    return "\n".join(f"{names[x]} -> {names[f.table[x]]}" for x in range(f.lattice.n)) + "\n"


def parse_op(text: str, lattice: Lattice) -> BinaryOp:
    """Header 'op <n>' then n rows of n tokens; row and column order is the
    element order of the referenced lattice, row = first argument."""
    lines = list(_logical_lines(text))
    if not lines:
        raise ParseError("empty operator file")
    lineno, tokens = lines[0]
    if len(tokens) != 2 or tokens[0] != "op":
        raise ParseError("expected header 'op <n>'", lineno)
    try:
        size = int(tokens[1])
    except ValueError:
        raise ParseError("expected header 'op <n>'", lineno) from None
    if size != lattice.n:
        raise ValidationError(
            f"operator is {size}x{size} but the lattice has {lattice.n} elements"
        )
    if len(lines) != 1 + size:
        raise ParseError(f"expected {size} rows, got {len(lines) - 1}")
    rows = []
    for lineno, tokens in lines[1:]:
        if len(tokens) != size:
            raise ParseError(f"expected {size} tokens in row", lineno)
        rows.append([_resolve(lattice, tok, lineno) for tok in tokens])
    return op_from_table(lattice, rows)


def serialize_op(op: BinaryOp) -> str:
    names = op.lattice.names
    out = [f"op {op.lattice.n}"]
    for row in op.table:
        out.append(" ".join(names[v] for v in row))
    return "\n".join(out) + "\n"


def _resolve(lattice: Lattice, token: str, lineno: int) -> int:
    try:
        return lattice.names.index(token)
    except ValueError:
        raise UnknownElement(
            f"line {lineno}: unknown element {token!r}", token=token
        ) from None


def parse_artifact(kind: str, text: str, lattice: Lattice | None = None):
    """Dispatch by kind: 'lattice', 'map' or 'op' (the last two need a lattice)."""
    if kind == "lattice":
        return parse_lattice(text)
    if kind == "map":
        if lattice is None:
            raise ValidationError("parsing a map needs the lattice it refers to")
        return parse_map(text, lattice)
    if kind == "op":
        if lattice is None:
            raise ValidationError("parsing an operator needs the lattice it refers to")
        return parse_op(text, lattice)
    raise ValueError(f"unknown artifact kind {kind!r}")


def export_dot(lattice: Lattice) -> str:
    """DOT digraph of the cover relation, edges lower -> upper, sorted output."""
    def q(name: str) -> str:
        return '"' + name.replace('"', '\\"') + '"'

    out = ["digraph lattice {", "  rankdir=BT;"]
    for name in lattice.names:
        out.append(f"  {q(name)};")
    for lo, hi in sorted(lattice.covers):
        out.append(f"  {q(lattice.names[lo])} -> {q(lattice.names[hi])};")
    out.append("}")
    return "\n".join(out) + "\n"
