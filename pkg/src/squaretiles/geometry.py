"""Exact geometry of square tilings of the unit square.

Everything is computed in fractions.Fraction; no floats enter any
geometric predicate. A Tile is an axis-aligned square given by its
lower-left corner and side; a Tiling is an immutable bag of tiles whose
order carries no meaning (equality is multiset equality).

Whether a candidate really tiles the unit square is decided
algebraically: every tile inside the square, interiors pairwise
disjoint, and squared sides summing to exactly 1. Together these three
are equivalent to full coverage, so no sweep-line case analysis is
needed and there is no tolerance parameter anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import InvalidTilingError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Tile:
    """Axis-aligned square: lower-left corner (x, y), side s."""

    x: Fraction
    y: Fraction
    s: Fraction

    @property
    def x2(self) -> Fraction:
        return self.x + self.s

    @property
    def y2(self) -> Fraction:
        return self.y + self.s

    def sort_key(self):
        return (self.y, self.x, self.s)


def tile(x, y, s) -> Tile:
    """Build a Tile, coercing ints / strings / fractions to exact rationals."""
    return Tile(Fraction(x), Fraction(y), Fraction(s))


class Tiling:
    """Immutable collection of tiles, a candidate tiling of the unit square.

    Construction performs no validation; use validate() to decide whether
    the invariants hold. Tile order never matters: two tilings are equal
    exactly when they contain the same tiles.
    """

    __slots__ = ("tiles",)

    def __init__(self, tiles: Iterable[Tile]):
        self.tiles: tuple[Tile, ...] = tuple(tiles)

    @property
    def n(self) -> int:
        return len(self.tiles)

    def sorted_tiles(self) -> list[Tile]:
        """Tiles ordered by (y, x), the serialization order."""
        return sorted(self.tiles, key=Tile.sort_key)

    def __iter__(self) -> Iterator[Tile]:
        return iter(self.tiles)

    def __len__(self) -> int:
        return len(self.tiles)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.sorted_tiles() == other.sorted_tiles()

    def __hash__(self) -> int:
        return hash(tuple(self.sorted_tiles()))

    def __repr__(self) -> str:
        return f"Tiling(n={self.n})"


@dataclass(frozen=True)
class Violation:
    """One failed tiling invariant; `tiles` holds the offending indices."""

    code: str  # "empty" | "side" | "bounds" | "overlap" | "area"
    tiles: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate(t: Tiling) -> ValidationReport:
    """Check all tiling invariants. Violations are data, not exceptions."""
    out: list[Violation] = []
    tiles = t.tiles
    if not tiles:
        out.append(Violation("empty", (), "tiling has no tiles"))
    positive: list[tuple[int, Fraction, Fraction, Fraction, Fraction]] = []
    for i, a in enumerate(tiles):
        if a.s <= 0:
            out.append(Violation("side", (i,), f"tile {i}: side {a.s} is not positive"))
        else:
            positive.append((i, a.x, a.x + a.s, a.y, a.y + a.s))
        if a.x < 0 or a.x2 > 1 or a.y < 0 or a.y2 > 1:
            out.append(Violation("bounds", (i,), f"tile {i}: not inside the unit square"))
    # Sweep tiles in x order; only pairs whose x-ranges meet can overlap.
    positive.sort(key=lambda rec: rec[1])
    for p in range(len(positive)):
        i, _, ax2, ay, ay2 = positive[p]
        for qn in range(p + 1, len(positive)):
            j, bx, _, by, by2 = positive[qn]
            if bx >= ax2:
                break
            if by < ay2 and ay < by2:
                lo, hi = (i, j) if i < j else (j, i)
                out.append(Violation("overlap", (lo, hi), f"tiles {lo},{hi} overlap"))
    area = sum((a.s * a.s for a in tiles), ZERO)
    if area != 1:
        out.append(Violation("area", (), f"area sum {area} != 1"))
    return ValidationReport(not out, tuple(out))


def ensure_valid(t: Tiling) -> None:
    """Raise InvalidTilingError unless t passes validate()."""
    report = validate(t)
    if not report.ok:
        raise InvalidTilingError(report)


def total_length(t: Tiling) -> Fraction:
    """Exact sum of all side lengths of a valid tiling."""
    ensure_valid(t)
    return sum((a.s for a in t.tiles), ZERO)
