from fractions import Fraction

import pytest

from squaretiles import (
    BadParameterError,
    PreconditionUnmetError,
    Tiling,
    UnsupportedCountError,
    apply_symmetry,
    build_even,
    build_odd_quadrant,
    build_odd_subdivide,
    canonical_form,
    check_profile_identity,
    exchange_to_corner,
    min_length_table,
    min_total_length,
    subdivide_tile,
    tile,
    total_length,
    validate,
)


def test_minimum_values():
    assert min_total_length(4) == 2
    assert min_total_length(6) == Fraction(7, 3)
    assert min_total_length(7) == Fraction(5, 2)
    assert min_total_length(8) == Fraction(5, 2)
    assert min_total_length(11) == Fraction(11, 4)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 5, -4])
def test_minimum_rejects_unsupported_counts(n):
    with pytest.raises(UnsupportedCountError):
        min_total_length(n)


def test_build_even_2_is_the_quadrant_tiling(quadrant):
    assert build_even(2) == quadrant
    assert total_length(build_even(2)) == 2


def test_build_even_matches_closed_form():
    for k in range(2, 21):
        t = build_even(k)
        assert t.n == 2 * k
        assert validate(t).ok
        assert total_length(t) == 3 - Fraction(2, k)


def test_build_even_layout():
    t = build_even(4)
    big = max(t.tiles, key=lambda tl: tl.s)
    assert (big.x, big.y, big.s) == (Fraction(1, 4), Fraction(0), Fraction(3, 4))
    assert sum(1 for tl in t.tiles if tl.x == 0) == 4  # left edge column
    assert sum(1 for tl in t.tiles if tl.y2 == 1) == 4  # top row


def test_build_odd_subdivide_matches_closed_form():
    for k in range(2, 21):
        t = build_odd_subdivide(k)
        assert t.n == 2 * k + 3
        assert validate(t).ok
        assert total_length(t) == 3 - Fraction(1, k)


def test_build_odd_quadrant_matches_closed_form():
    for k in range(2, 21):
        t = build_odd_quadrant(k)
        assert t.n == 2 * k + 3
        assert validate(t).ok
        assert total_length(t) == 3 - Fraction(1, k)


def test_odd_variants_agree_on_sigma():
    for k in range(2, 21):
        assert total_length(build_odd_subdivide(k)) == total_length(build_odd_quadrant(k))


def test_subdividing_even_adds_one_small_side():
    # splitting a 1/k tile into quarters adds exactly 1/k of length
    for k in range(2, 21):
        delta = total_length(build_odd_subdivide(k)) - total_length(build_even(k))
        assert delta == Fraction(1, k)


def test_odd_variants_coincide_only_for_k2():
    # for k=2 both constructions give the same 7-tiling, tile for tile
    assert build_odd_subdivide(2) == build_odd_quadrant(2)
    assert canonical_form(build_odd_subdivide(2)) == canonical_form(build_odd_quadrant(2))
    # from k=3 on they are genuinely different shapes
    for k in range(3, 8):
        assert canonical_form(build_odd_subdivide(k)) != canonical_form(build_odd_quadrant(k))


def test_builders_reject_small_k():
    for builder in (build_even, build_odd_subdivide, build_odd_quadrant):
        with pytest.raises(BadParameterError):
            builder(1)


def test_builders_satisfy_profile_identity():
    for k in range(2, 8):
        assert check_profile_identity(build_even(k))
        assert check_profile_identity(build_odd_subdivide(k))
        assert check_profile_identity(build_odd_quadrant(k))


def test_complementary_pair_in_build_even():
    for k in range(2, 21):
        sides = [tl.s for tl in build_even(k).tiles]
        assert max(sides) == Fraction(k - 1, k)  # boundary of the size bound
        assert max(sides) + min(sides) == 1


def test_subdivide_unit_tile_gives_quadrant(quadrant):
    t = Tiling([tile(0, 0, 1)])
    assert subdivide_tile(t, 0) == quadrant
    assert total_length(subdivide_tile(t, 0)) == 2


def test_subdivide_top_right_of_even_4_gives_odd_11():
    t = build_even(4)
    index = max(range(t.n), key=lambda i: (t.tiles[i].y, t.tiles[i].x))
    assert subdivide_tile(t, index) == build_odd_subdivide(4)


def test_subdivide_changes_sigma_by_side(corpus_q4):
    import random

    rng = random.Random(7)
    for _ in range(100):
        t = rng.choice(corpus_q4)
        i = rng.randrange(t.n)
        result = subdivide_tile(t, i)
        assert validate(result).ok
        assert result.n == t.n + 3
        assert total_length(result) - total_length(t) == t.tiles[i].s


def test_subdivide_rejects_bad_index(quadrant):
    with pytest.raises(BadParameterError):
        subdivide_tile(quadrant, 4)


def test_exchange_on_even_top_row_is_identity_as_set():
    # all top-row tiles are interchangeable, so the slide permutes equals
    t = build_even(4)
    index = next(
        i
        for i, tl in enumerate(t.tiles)
        if tl.y2 == 1 and tl.x == Fraction(1, 4)
    )
    result = exchange_to_corner(t, index)
    assert result == t
    assert canonical_form(result) == canonical_form(t)


def test_exchange_produces_flipped_quadrant_construction():
    # sliding the top-left half tile of the 7-tiling moves the small
    # quadrant from the top-right to the top-left: exactly the mirror image
    t = build_odd_quadrant(2)
    index = next(
        i for i, tl in enumerate(t.tiles) if tl.y2 == 1 and tl.x == 0
    )
    result = exchange_to_corner(t, index)
    assert result != t
    assert result == apply_symmetry(t, "flipH")
    assert total_length(result) == total_length(t)
    assert result.n == t.n


def test_exchange_with_corner_tile_is_noop():
    t = build_even(3)
    index = next(i for i, tl in enumerate(t.tiles) if tl.y2 == 1 and tl.x2 == 1)
    assert exchange_to_corner(t, index) is t


def test_exchange_requires_top_edge():
    t = build_even(3)
    index = next(i for i, tl in enumerate(t.tiles) if tl.y2 != 1)
    with pytest.raises(PreconditionUnmetError):
        exchange_to_corner(t, index)


def test_exchange_rejects_crossed_strip():
    # 3x3 grid with the 2x2 block at the top: the block crosses the strip
    # right of the small top-left tile
    third = Fraction(1, 3)
    t = Tiling(
        [
            tile(0, 0, third),
            tile(third, 0, third),
            tile("2/3", 0, third),
            tile(0, third, third),
            tile(third, third, "2/3"),
            tile(0, "2/3", third),
        ]
    )
    assert validate(t).ok
    index = next(
        i for i, tl in enumerate(t.tiles) if tl.y2 == 1 and tl.s == third
    )
    with pytest.raises(PreconditionUnmetError):
        exchange_to_corner(t, index)


def test_exchange_preserves_sigma_on_corpus(corpus_q4):
    applied = 0
    for t in corpus_q4:
        for i, tl in enumerate(t.tiles):
            if tl.y2 != 1 or tl.x2 == 1:
                continue
            try:
                result = exchange_to_corner(t, i)
            except PreconditionUnmetError:
                continue
            applied += 1
            assert validate(result).ok
            assert total_length(result) == total_length(t)
            assert result.n == t.n
    assert applied > 0


def test_min_length_table_shape_and_monotonicity():
    rows = min_length_table(10)
    values = {n: v for n, _, v in rows}
    assert values[4] == 2
    assert values[11] == Fraction(11, 4)
    assert all(n != 5 for n, _, _ in rows)
    assert max(n for n, _, _ in rows) == 23
    evens = [v for n, p, v in rows if p == "even"]
    odds = [v for n, p, v in rows if p == "odd"]
    assert evens == sorted(evens)
    assert odds == sorted(odds)
    assert all(v < 3 for v in evens + odds)


def test_min_length_table_rejects_small_k():
    with pytest.raises(BadParameterError):
        min_length_table(1)
