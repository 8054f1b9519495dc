"""Exception types shared across the package."""

from __future__ import annotations


class LctnError(Exception):
    """Base class for every error raised by this package."""


class NotAPoset(LctnError):
    """The cover input contains a cycle."""


class NotALattice(LctnError):
    """Some pair of elements lacks a unique least upper or greatest lower bound."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NoBounds(LctnError):
    """The order has no global minimum or no global maximum."""


class EmptySet(LctnError):
    """A join or meet of the empty set was requested."""


class NotComparable(LctnError):
    """Two elements that must be comparable are not."""


class NotIdempotent(LctnError):
    """The map is not idempotent, so its image is not its fixed-point set."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotALatticeInducedPoset(LctnError):
    """The induced poset on the image set is missing a bound for some pair."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInImage(LctnError):
    """An element outside the image set was passed to an image operation."""


class TopNotCJI(LctnError):
    """The top element is a join of strictly smaller elements."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotWeakFMapping(LctnError):
    """The map fails the weak f-mapping conditions; the report is attached."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotFMapping(LctnError):
    """The map fails the f-mapping conditions; the report is attached."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class InvalidDecomposition(LctnError):
    """A chain or interval decomposition violates a structural requirement."""


class MissingTopOp(InvalidDecomposition):
    """The decomposition leaves a gap below the top but supplies no operator for it."""


class MissingGapMap(InvalidDecomposition):
    """A nondegenerate gap interval has no map attached."""


class InvalidIntervals(LctnError):
    """An interval family violates its ordering or disjointness requirements."""


class NotOrdinalSumShape(LctnError):
    """The operator does not take the meet value on some cross-block cell."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class IndexOutOfRange(LctnError):
    """An interval index is outside the decomposition."""


class TooLarge(LctnError):
    """The instance exceeds the size bound of a brute-force routine."""


class ParseError(LctnError):
    """Malformed input text; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class UnknownElement(LctnError):
    """A token does not name an element of the lattice."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


class DuplicateEntry(LctnError):
    """The same element was defined twice."""


class ValidationError(LctnError):
    """An otherwise well-formed input fails a semantic requirement."""


class UnknownFixture(LctnError):
    """No bundled fixture has the requested id."""
