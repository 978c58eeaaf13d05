"""The eight symmetries of the unit square acting on tilings.

Elements are identified by tag. Each is stored as an affine map
(signed permutation matrix plus offset), so composition and inverses
are computed rather than hard-coded, and the group laws are testable.

canonical_form() picks, among the eight images of a tiling, the one
whose serialization is lexicographically least; two tilings are related
by a symmetry of the square exactly when their canonical forms are
equal, which is what deduplication of search output relies on.
"""

from __future__ import annotations

from .errors import BadParameterError
from .geometry import Tile, Tiling, ensure_valid
from .textformat import serialize

# tag -> (a, b, c, d, e, f) meaning  x' = a x + b y + e,  y' = c x + d y + f
_AFFINE = {
    "identity": (1, 0, 0, 1, 0, 0),
    "rot90": (0, -1, 1, 0, 1, 0),  # counterclockwise quarter turn
    "rot180": (-1, 0, 0, -1, 1, 1),
    "rot270": (0, 1, -1, 0, 0, 1),
    "flipH": (-1, 0, 0, 1, 1, 0),  # mirror across the vertical midline
    "flipV": (1, 0, 0, -1, 0, 1),  # mirror across the horizontal midline
    "flipMainDiag": (0, 1, 1, 0, 0, 0),  # mirror across y = x
    "flipAntiDiag": (0, -1, -1, 0, 1, 1),  # mirror across y = 1 - x
}

ELEMENTS: tuple[str, ...] = tuple(_AFFINE)

_BY_AFFINE = {v: k for k, v in _AFFINE.items()}


def _require(g: str) -> tuple:
    try:
        return _AFFINE[g]
    except KeyError:
        raise BadParameterError(f"unknown symmetry element {g!r}") from None


def compose(g: str, h: str) -> str:
    """Element equal to applying h first, then g."""
    a1, b1, c1, d1, e1, f1 = _require(g)
    a2, b2, c2, d2, e2, f2 = _require(h)
    combined = (
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
        a1 * e2 + b1 * f2 + e1,
        c1 * e2 + d1 * f2 + f1,
    )
    return _BY_AFFINE[combined]


def inverse(g: str) -> str:
    """The element undoing g."""
    _require(g)
    for h in ELEMENTS:
        if compose(g, h) == "identity":
            return h
    raise AssertionError("group is closed; unreachable")


def transform_tile(tl: Tile, g: str) -> Tile:
    a, b, c, d, e, f = _require(g)
    x1 = a * tl.x + b * tl.y + e
    y1 = c * tl.x + d * tl.y + f
    x2 = a * tl.x2 + b * tl.y2 + e
    y2 = c * tl.x2 + d * tl.y2 + f
    return Tile(min(x1, x2), min(y1, y2), tl.s)


def apply_symmetry(t: Tiling, g: str) -> Tiling:
    """Image of a valid tiling under one symmetry of the unit square."""
    _require(g)
    ensure_valid(t)
    return Tiling(transform_tile(tl, g) for tl in t.tiles)


def orbit(t: Tiling) -> list[Tiling]:
    """All eight images of a valid tiling, in fixed element order."""
    ensure_valid(t)
    return [Tiling(transform_tile(tl, g) for tl in t.tiles) for g in ELEMENTS]


def canonical_form(t: Tiling) -> Tiling:
    """Orbit representative: image with the lexicographically least serialization.

    Idempotent, and constant on each orbit, so it can be used as a
    dictionary key when deduplicating tilings up to symmetry.
    """
    images = orbit(t)
    best = min(images, key=serialize)
    return Tiling(best.sorted_tiles())
