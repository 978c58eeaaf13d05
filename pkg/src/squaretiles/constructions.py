"""Tilings of minimum total side length, and the rewrites between them.

For n = 2k tiles (k >= 2) the least achievable total side length is
3 - 2/k; for n = 2k + 3 it is 3 - 1/k. No tiling exists at all for
n in {2, 3, 5}, and n = 1 is excluded as trivial. min_total_length()
evaluates the closed form; the build_* functions produce tilings that
attain it.

Conventions are fixed so the builders are deterministic: the big tile
sits at the lower-right corner, the small tiles run up the left edge
and across the top; the odd builders either subdivide the top-right
small tile into four, or start from three half-tiles and recurse into
the top-right quadrant.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadParameterError, PreconditionUnmetError, UnsupportedCountError
from .geometry import ONE, Tile, Tiling, ensure_valid

EXCLUDED_COUNTS = (1, 2, 3, 5)


def min_total_length(n: int) -> Fraction:
    """Least possible total side length over all tilings with n tiles."""
    if n < 4 or n == 5:
        raise UnsupportedCountError(
            f"no minimum is defined for n={n}: counts 2, 3 and 5 admit no tiling,"
            " and n=1 is excluded as trivial"
        )
    if n % 2 == 0:
        return 3 - Fraction(2, n // 2)
    return 3 - Fraction(1, (n - 3) // 2)


def build_even(k: int) -> Tiling:
    """Minimal tiling with 2k tiles: one (k-1)/k tile and 2k-1 tiles of 1/k.

    Total side length is exactly 3 - 2/k. The last tile in the returned
    tiling is the top-right small one (the subdivision target).
    """
    if k < 2:
        raise BadParameterError(f"k must be at least 2, got {k}")
    small = Fraction(1, k)
    big = 1 - small
    tiles = [Tile(small, Fraction(0), big)]
    tiles.extend(Tile(Fraction(0), i * small, small) for i in range(k - 1))
    tiles.extend(Tile(j * small, big, small) for j in range(k))
    return Tiling(tiles)


def subdivide_tile(t: Tiling, index: int) -> Tiling:
    """Replace tile `index` by four half-size tiles in its quadrants.

    The result is again valid; it has three more tiles, and its total
    side length grows by exactly the side of the subdivided tile.
    """
    ensure_valid(t)
    if not 0 <= index < t.n:
        raise BadParameterError(f"tile index {index} out of range for n={t.n}")
    old = t.tiles[index]
    half = old.s / 2
    quarters = [
        Tile(old.x, old.y, half),
        Tile(old.x + half, old.y, half),
        Tile(old.x, old.y + half, half),
        Tile(old.x + half, old.y + half, half),
    ]
    tiles = list(t.tiles)
    tiles[index : index + 1] = quarters
    return Tiling(tiles)


def build_odd_subdivide(k: int) -> Tiling:
    """Minimal tiling with 2k+3 tiles: build_even(k) with the top-right
    small tile split into four. Total side length is exactly 3 - 1/k."""
    even = build_even(k)
    return subdivide_tile(even, even.n - 1)


def build_odd_quadrant(k: int) -> Tiling:
    """The other minimal odd construction: three half-tiles plus a scaled
    copy of build_even(k) in the top-right quadrant. Also totals 3 - 1/k."""
    if k < 2:
        raise BadParameterError(f"k must be at least 2, got {k}")
    half = Fraction(1, 2)
    tiles = [
        Tile(Fraction(0), Fraction(0), half),
        Tile(half, Fraction(0), half),
        Tile(Fraction(0), half, half),
    ]
    for tl in build_even(k).tiles:
        tiles.append(Tile(half + tl.x / 2, half + tl.y / 2, tl.s / 2))
    return Tiling(tiles)


def exchange_to_corner(t: Tiling, b_index: int) -> Tiling:
    """Slide a top-edge tile right into the corner at (1, 1).

    The strip between the tile's right edge, x = 1, and the top of the
    square must be exactly tiled by tiles lying entirely inside it;
    those are translated left to fill the vacated space. Tile count and
    total side length are unchanged. A tile already in the corner is
    returned untouched (empty strip).
    """
    ensure_valid(t)
    if not 0 <= b_index < t.n:
        raise BadParameterError(f"tile index {b_index} out of range for n={t.n}")
    b = t.tiles[b_index]
    if b.y2 != 1:
        raise PreconditionUnmetError(
            f"tile {b_index} does not touch the top edge (y + s = {b.y2})"
        )
    if b.x2 == 1:
        return t
    inside = set()
    for j, tl in enumerate(t.tiles):
        if j == b_index:
            continue
        # open overlap with the strip (b.x2, 1) x (b.y, 1)
        if tl.x < 1 and tl.x2 > b.x2 and tl.y < 1 and tl.y2 > b.y:
            if tl.x >= b.x2 and tl.y >= b.y:
                inside.add(j)
            else:
                raise PreconditionUnmetError(
                    f"tile {j} crosses the strip boundary; the strip right of"
                    f" tile {b_index} is not self-contained"
                )
    moved = []
    for j, tl in enumerate(t.tiles):
        if j == b_index:
            moved.append(Tile(ONE - b.s, b.y, b.s))
        elif j in inside:
            moved.append(Tile(tl.x - b.s, tl.y, tl.s))
        else:
            moved.append(tl)
    result = Tiling(moved)
    ensure_valid(result)
    return result


def min_length_table(k_max: int) -> list[tuple[int, str, Fraction]]:
    """Rows (n, parity, minimum total length) for every valid n <= 2*k_max + 3."""
    if k_max < 2:
        raise BadParameterError(f"k_max must be at least 2, got {k_max}")
    rows = []
    for n in range(4, 2 * k_max + 4):
        if n == 5:
            continue
        parity = "even" if n % 2 == 0 else "odd"
        rows.append((n, parity, min_total_length(n)))
    return rows
