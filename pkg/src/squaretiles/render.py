"""SVG figures for tilings. Write-only; there is no SVG parser.

This is the one place (together with the human-facing table) where
decimals appear. Pixel coordinates are produced from exact rationals at
a fixed 6 decimal places with round-half-to-even, computed in integer
arithmetic, so rendering is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParameterError
from .geometry import Tiling, ensure_valid

_PLACES = 6
_SCALE = 10**_PLACES

FILL_COLOR = "#dbe7f5"
STROKE_COLOR = "#1a1a1a"


@dataclass(frozen=True)
class RenderSpec:
    """Canvas settings. The canvas is square; the y-axis is flipped so the
    tiling's (0, 0) corner lands at the bottom-left of the image."""

    canvas: int = 1000
    stroke_width: float = 2.0
    fill: bool = True

    def __post_init__(self):
        if self.canvas < 1:
            raise BadParameterError(f"canvas must be positive, got {self.canvas}")


def decimal_string(value: Fraction, places: int = _PLACES) -> str:
    """Fixed-point decimal for an exact rational, round half to even."""
    scale = 10**places
    scaled = round(Fraction(value) * scale)  # round() on Fraction is half-even
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // scale}.{scaled % scale:0{places}d}"


def render_svg(t: Tiling, spec: RenderSpec = RenderSpec()) -> str:
    """One SVG rect per tile plus the unit-square border."""
    ensure_valid(t)
    size = spec.canvas

    def px(v: Fraction) -> str:
        return decimal_string(v * size)

    fill = FILL_COLOR if spec.fill else "none"
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}"'
        f' viewBox="0 0 {size} {size}">',
    ]
    for tl in t.sorted_tiles():
        lines.append(
            f'  <rect x="{px(tl.x)}" y="{px(1 - tl.y2)}"'
            f' width="{px(tl.s)}" height="{px(tl.s)}"'
            f' fill="{fill}" stroke="{STROKE_COLOR}" stroke-width="{spec.stroke_width}"/>'
        )
    lines.append(
        f'  <rect x="0" y="0" width="{size}" height="{size}"'
        f' fill="none" stroke="{STROKE_COLOR}" stroke-width="{spec.stroke_width}"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
