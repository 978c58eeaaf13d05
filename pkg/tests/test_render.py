import re
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from squaretiles import (
    BadParameterError,
    RenderSpec,
    Tiling,
    apply_symmetry,
    build_even,
    decimal_string,
    render_svg,
    tile,
    transform_tile,
)


def _rects(svg: str):
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    return [
        (r.get("x"), r.get("y"), r.get("width"), r.get("height"))
        for r in root.iter(f"{ns}rect")
    ]


def test_decimal_string_fixed_precision():
    assert decimal_string(Fraction(1, 3)) == "0.333333"
    assert decimal_string(Fraction(5, 2)) == "2.500000"
    assert decimal_string(Fraction(0)) == "0.000000"
    assert decimal_string(Fraction(-1, 8)) == "-0.125000"


def test_decimal_string_rounds_half_to_even():
    million = 10**6
    assert decimal_string(Fraction(3, 2 * million)) == "0.000002"  # 1.5 -> 2
    assert decimal_string(Fraction(5, 2 * million)) == "0.000002"  # 2.5 -> 2
    assert decimal_string(Fraction(7, 2 * million)) == "0.000004"  # 3.5 -> 4


def test_single_tile_renders_full_canvas():
    svg = render_svg(Tiling([tile(0, 0, 1)]))
    rects = _rects(svg)
    assert len(rects) == 2  # the tile plus the border
    assert rects[0] == ("0.000000", "0.000000", "1000.000000", "1000.000000")


def test_build_even_4_renders_eight_tiles_plus_border():
    svg = render_svg(build_even(4))
    assert len(_rects(svg)) == 9
    assert svg.startswith("<svg ")


def test_y_axis_is_flipped():
    # a tile at the origin must land at the bottom-left of the canvas
    svg = render_svg(Tiling([tile(0, 0, "1/2"), tile("1/2", 0, "1/2"),
                             tile(0, "1/2", "1/2"), tile("1/2", "1/2", "1/2")]))
    rects = _rects(svg)[:-1]
    # serialization order: (0,0) first; its pixel y is the upper half start
    assert rects[0][0] == "0.000000"
    assert rects[0][1] == "500.000000"


def test_fill_toggle():
    t = build_even(2)
    assert 'fill="none"' in render_svg(t, RenderSpec(fill=False))
    assert 'fill="none"' not in render_svg(t, RenderSpec(fill=True)).replace(
        'fill="none" stroke', "", 1
    )  # only the border rect is unfilled


def test_orbit_renders_are_exact_pixel_transforms():
    from squaretiles import ELEMENTS

    t = build_even(3)
    spec = RenderSpec(canvas=700)
    base_tiles = list(t.tiles)
    for g in ELEMENTS:
        rendered = _rects(render_svg(apply_symmetry(t, g), spec))[:-1]
        expected = set()
        for tl in base_tiles:
            m = transform_tile(tl, g)
            expected.add(
                (
                    decimal_string(m.x * spec.canvas),
                    decimal_string((1 - m.y2) * spec.canvas),
                    decimal_string(m.s * spec.canvas),
                    decimal_string(m.s * spec.canvas),
                )
            )
        assert set(rendered) == expected


def test_canvas_must_be_positive():
    with pytest.raises(BadParameterError):
        RenderSpec(canvas=0)


def test_no_scientific_notation_or_float_repr():
    svg = render_svg(build_even(7), RenderSpec(canvas=999))
    for value in re.findall(r' x="([^"]+)"', svg):
        assert re.fullmatch(r"-?\d+\.\d{6}|0", value), value
