"""Reader and writer for the plain-text tiling interchange format.

Format ("tiling v1"):

    tiling v1 n=<count>
    <x> <y> <s>
    ...one line per tile...

Each field is either ``<int>`` or ``<int>/<posint>`` in lowest terms,
space-separated, lower-left corner convention, unit square implied.
Writers emit tiles sorted by (y, x). Parsers are strict: unreduced
fractions, non-positive sides, and count mismatches are all rejected,
so a document has exactly one accepted spelling.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import TilingParseError
from .geometry import Tile, Tiling

_HEADER_RE = re.compile(r"^tiling v1 n=(0|[1-9][0-9]*)$")
_FIELD_RE = re.compile(r"^(-?[0-9]+)(?:/([0-9]+))?$")


def format_rational(value: Fraction) -> str:
    """Render as ``p/q`` in lowest terms, or a bare integer."""
    return str(value)


def parse_rational(text: str, line: int | None = None) -> Fraction:
    """Parse a strict rational field; reject anything not in lowest terms."""
    m = _FIELD_RE.match(text)
    if m is None:
        raise TilingParseError(f"bad rational {text!r}", line)
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den == 0:
        raise TilingParseError(f"zero denominator in {text!r}", line)
    if den == 1 or gcd(abs(num), den) != 1:
        raise TilingParseError(f"{text!r} is not in lowest terms", line)
    return Fraction(num, den)


def serialize(t: Tiling) -> str:
    """Tiling v1 text for a tiling, tiles sorted by (y, x)."""
    lines = [f"tiling v1 n={t.n}"]
    for tl in t.sorted_tiles():
        lines.append(f"{tl.x} {tl.y} {tl.s}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> Tiling:
    """Parse tiling v1 text; raises TilingParseError with a line number."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # single trailing newline is fine
    if not lines:
        raise TilingParseError("empty document", 1)
    m = _HEADER_RE.match(lines[0])
    if m is None:
        raise TilingParseError(f"bad header {lines[0]!r}", 1)
    n = int(m.group(1))
    if len(lines) - 1 != n:
        raise TilingParseError(
            f"header says n={n} but document has {len(lines) - 1} tile lines",
            len(lines),
        )
    tiles = []
    for idx, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 3 or "" in parts:
            raise TilingParseError(f"expected '<x> <y> <s>', got {line!r}", idx)
        x = parse_rational(parts[0], idx)
        y = parse_rational(parts[1], idx)
        s = parse_rational(parts[2], idx)
        if s <= 0:
            raise TilingParseError(f"side {parts[2]} is not positive", idx)
        tiles.append(Tile(x, y, s))
    return Tiling(tiles)
