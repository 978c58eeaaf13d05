"""Structural properties of tilings, runnable over whole corpora.

Each check turns one step of the minimum-length analysis into an exact
predicate. run_suite() applies every check, with its applicability
filter, to a corpus of tilings and returns one report per check; a
violation on a valid corpus means a bug (or a counterexample to the
closed form, which would be news), so the suite treats any violation as
a failure.

Applicability matters: several properties hold only for tilings whose
total length is exactly the minimum for their tile count. "Minimal" is
always decided by exact comparison against the closed form, never by a
corpus-local minimum, since a bounded-resolution corpus may simply be
missing the true minimizers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .constructions import (
    build_even,
    build_odd_quadrant,
    build_odd_subdivide,
    exchange_to_corner,
    min_total_length,
)
from .enumeration import iter_grid_tilings
from .errors import (
    BadParameterError,
    PreconditionUnmetError,
    UnsupportedCountError,
)
from .geometry import Tiling, ensure_valid, total_length
from .profiles import vertical_profile
from .symmetry import ELEMENTS, apply_symmetry


def is_minimal(t: Tiling) -> bool:
    """True iff the tiling's total length equals the closed-form minimum.

    Counts with no defined minimum (1, 2, 3, 5) are never minimal.
    """
    try:
        return total_length(t) == min_total_length(t.n)
    except UnsupportedCountError:
        return False


def has_complementary_pair(t: Tiling) -> bool:
    """Two distinct tiles whose sides sum to exactly 1.

    Every minimal tiling must contain such a pair: without one, at least
    three tiles cross every vertical line, forcing total length >= 3.
    """
    ensure_valid(t)
    sides = [tl.s for tl in t.tiles]
    counts: dict[Fraction, int] = {}
    for s in sides:
        counts[s] = counts.get(s, 0) + 1
    for s in counts:
        other = 1 - s
        if other == s:
            if counts[s] >= 2:
                return True
        elif counts.get(other):
            return True
    return False


def area_bound(k: int, a: Fraction) -> Fraction:
    """Largest total area 2k tiles can reach when the biggest has side a.

    The other 2k - 1 tiles each fit beside a square of side a, so their
    sides are at most 1 - a; the bound is (2k-1)(1-a)^2 + a^2, expanded
    here as 2k a^2 - (4k-2) a + (2k-1). It equals 1 at a = (k-1)/k and
    drops below 1 for (k-1)/k < a < 1, which is why no tiling with 2k
    tiles can have a tile longer than (k-1)/k.
    """
    if k < 2:
        raise BadParameterError(f"k must be at least 2, got {k}")
    a = Fraction(a)
    if not 0 < a < 1:
        raise BadParameterError(f"a must lie strictly between 0 and 1, got {a}")
    return 2 * k * a * a - (4 * k - 2) * a + (2 * k - 1)


def check_largest_tile_bound(t: Tiling) -> bool:
    """Largest side at most (k-1)/k, where n = 2k or n = 2k + 3.

    Applies to every tiling with an even count, but only to minimal
    tilings with an odd count; an odd non-minimal input is rejected.
    """
    ensure_valid(t)
    n = t.n
    if n % 2 == 0:
        if n < 4:
            raise PreconditionUnmetError(f"parity-unsupported: no tiling has n={n}")
        k = n // 2
    else:
        if n < 7 or not is_minimal(t):
            raise PreconditionUnmetError(
                "parity-unsupported: the odd-count bound covers only minimal"
                f" tilings with n >= 7, got n={n}"
            )
        k = (n - 3) // 2
    bound = Fraction(k - 1, k)
    return max(tl.s for tl in t.tiles) <= bound


def large_corner_gap(t: Tiling):
    """(k, b, corner) when the tiling has a qualifying large corner tile.

    Qualifying means: the unique largest tile touches two sides of the
    unit square and its side is 1 - b with 1/(k+1) < b < 1/k strictly,
    for some integer k >= 2. Returns None otherwise; boundary values
    b = 1/k do not qualify.
    """
    ensure_valid(t)
    biggest = max(tl.s for tl in t.tiles)
    largest = [tl for tl in t.tiles if tl.s == biggest]
    if len(largest) != 1:
        return None
    a = largest[0]
    on_x = a.x == 0 or a.x2 == 1
    on_y = a.y == 0 or a.y2 == 1
    if not (on_x and on_y):
        return None
    b = 1 - a.s
    if not 0 < b < Fraction(1, 2):
        return None
    k = int(1 / b)
    if b == Fraction(1, k):
        return None  # open-interval hypothesis fails on the boundary
    return k, b, a


def _orient_corner_lower_right(t: Tiling, corner_tile) -> Tiling:
    """Image of t with the given corner tile moved to the (1, 0) corner."""
    at_right = corner_tile.x2 == 1
    at_bottom = corner_tile.y == 0
    if at_right and at_bottom:
        g = "identity"
    elif not at_right and at_bottom:
        g = "flipH"
    elif at_right and not at_bottom:
        g = "flipV"
    else:
        g = "rot180"
    return apply_symmetry(t, g)


def check_large_corner_bound(t: Tiling) -> bool:
    """Total length at least 3 - b for a qualifying large corner tile.

    Also re-derives the bound's integral decomposition on the oriented
    tiling: at least k + 1 tiles cross every vertical line left of the
    corner tile, and with m top-edge tiles of side exactly b sitting
    over it, the total length is at least 3 + (k - 2 - m) b.
    """
    gap = large_corner_gap(t)
    if gap is None:
        raise PreconditionUnmetError(
            "no unique largest corner tile with side strictly inside"
            " ((k-1)/k, k/(k+1)) for any k >= 2"
        )
    k, b, corner_tile = gap
    sigma = total_length(t)
    if sigma < 3 - b:
        return False
    oriented = _orient_corner_lower_right(t, corner_tile)
    profile = vertical_profile(oriented)
    for lo, hi, value in profile.intervals():
        if hi <= b and value < k + 1:
            return False
    # Tiles of side exactly b on the top edge whose x-range reaches past b.
    m = sum(1 for tl in oriented.tiles if tl.s == b and tl.y2 == 1 and tl.x2 > b)
    return sigma >= 3 + (k - 2 - m) * b


def _corner_configuration(t: Tiling) -> bool:
    """A largest tile occupies some corner, flanked at both adjacent
    corners of the unit square by tiles of the complementary side."""
    biggest = max(tl.s for tl in t.tiles)
    small = 1 - biggest
    at_corner = {}
    for tl in t.tiles:
        xs = [v for v, hit in ((0, tl.x == 0), (1, tl.x2 == 1)) if hit]
        ys = [v for v, hit in ((0, tl.y == 0), (1, tl.y2 == 1)) if hit]
        for cx in xs:
            for cy in ys:
                at_corner[(cx, cy)] = tl
    adjacent = {
        (0, 0): ((1, 0), (0, 1)),
        (1, 0): ((0, 0), (1, 1)),
        (0, 1): ((0, 0), (1, 1)),
        (1, 1): ((1, 0), (0, 1)),
    }
    for corner, tl in at_corner.items():
        if tl.s != biggest:
            continue
        c1, c2 = adjacent[corner]
        t1 = at_corner.get(c1)
        t2 = at_corner.get(c2)
        if t1 is not None and t2 is not None and t1.s == small and t2.s == small:
            return True
    return False


def _two_tile_edge(t: Tiling) -> bool:
    """Some side of the unit square is covered by exactly two tiles."""
    edges = (
        lambda tl: tl.y == 0,
        lambda tl: tl.y2 == 1,
        lambda tl: tl.x == 0,
        lambda tl: tl.x2 == 1,
    )
    return any(sum(1 for tl in t.tiles if on_edge(tl)) == 2 for on_edge in edges)


def check_opposite_corner(t: Tiling, allow_exchange: bool = True) -> bool:
    """Corner configuration of a minimal tiling: a largest tile in a
    corner with complementary tiles at both adjacent corners.

    The configuration is invariant under the square's symmetries, so it
    is evaluated once per orbit. Vacuously true when no side of the
    square carries exactly two tiles. Some minimal tilings only reach
    the configuration after sliding a tile into a corner (a move that
    changes nothing measurable); allow_exchange extends the search over
    all single slides in all eight orientations.
    """
    ensure_valid(t)
    if not is_minimal(t):
        raise PreconditionUnmetError(
            f"non-minimal: total length {total_length(t)} is not the minimum for n={t.n}"
        )
    if _corner_configuration(t):
        return True
    if allow_exchange:
        for g in ELEMENTS:
            image = apply_symmetry(t, g)
            for index, tl in enumerate(image.tiles):
                if tl.y2 != 1 or tl.x2 == 1:
                    continue
                try:
                    slid = exchange_to_corner(image, index)
                except PreconditionUnmetError:
                    continue
                if _corner_configuration(slid):
                    return True
    return not _two_tile_edge(t)


@dataclass(frozen=True)
class CheckViolation:
    tiling: Tiling
    details: str


@dataclass
class CheckReport:
    """Outcome of one check over one corpus."""

    check: str
    corpus: str
    checked: int = 0
    violations: list[CheckViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _sigma_fm(t: Tiling) -> str:
    sigma = total_length(t)
    try:
        fm = min_total_length(t.n)
    except UnsupportedCountError:
        fm = None
    return f"n={t.n} sigma={sigma} minimum={fm}"


def run_suite(corpus: Iterable[Tiling], corpus_label: str) -> list[CheckReport]:
    """Run every check over the corpus; reports come back in fixed order.

    A violation anywhere means the suite fails: each predicate is
    expected to hold on every tiling its filter admits.
    """
    pair = CheckReport("complementary-pair", corpus_label)
    even_bound = CheckReport("largest-tile-even", corpus_label)
    odd_bound = CheckReport("largest-tile-odd-minimal", corpus_label)
    corner_gap = CheckReport("corner-gap-lower-bound", corpus_label)
    opposite = CheckReport("opposite-corner", corpus_label)
    for t in corpus:
        minimal = is_minimal(t)
        if minimal:
            pair.checked += 1
            if not has_complementary_pair(t):
                pair.violations.append(
                    CheckViolation(t, f"no two sides sum to 1 ({_sigma_fm(t)})")
                )
            opposite.checked += 1
            if not check_opposite_corner(t):
                opposite.violations.append(
                    CheckViolation(t, f"corner configuration unreachable ({_sigma_fm(t)})")
                )
        if t.n % 2 == 0 and t.n >= 4:
            even_bound.checked += 1
            if not check_largest_tile_bound(t):
                even_bound.violations.append(
                    CheckViolation(
                        t,
                        f"largest side {max(tl.s for tl in t.tiles)} exceeds"
                        f" {Fraction(t.n // 2 - 1, t.n // 2)} (n={t.n})",
                    )
                )
        elif t.n % 2 == 1 and t.n >= 7 and minimal:
            odd_bound.checked += 1
            if not check_largest_tile_bound(t):
                k = (t.n - 3) // 2
                odd_bound.violations.append(
                    CheckViolation(
                        t,
                        f"largest side {max(tl.s for tl in t.tiles)} exceeds"
                        f" {Fraction(k - 1, k)} ({_sigma_fm(t)})",
                    )
                )
        if large_corner_gap(t) is not None:
            corner_gap.checked += 1
            if not check_large_corner_bound(t):
                k, b, _ = large_corner_gap(t)
                corner_gap.violations.append(
                    CheckViolation(
                        t,
                        f"sigma {total_length(t)} under the bound 3 - {b} (k={k})",
                    )
                )
    return [pair, even_bound, odd_bound, corner_gap, opposite]


def construction_corpus(k_max: int) -> list[Tiling]:
    """All three construction families for k = 2..k_max."""
    if k_max < 2:
        raise BadParameterError(f"k_max must be at least 2, got {k_max}")
    corpus = []
    for k in range(2, k_max + 1):
        corpus.append(build_even(k))
        corpus.append(build_odd_subdivide(k))
        corpus.append(build_odd_quadrant(k))
    return corpus


def enumerated_corpus(
    q_max: int,
    n_max: int | None = None,
    node_budget: int | None = None,
) -> Iterable[Tiling]:
    """Every grid tiling at resolutions 1..q_max, optionally capped by tile count."""
    for q in range(1, q_max + 1):
        for gt in iter_grid_tilings(q, node_budget):
            if n_max is None or gt.n <= n_max:
                yield gt.to_tiling()
