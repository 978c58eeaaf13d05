"""Step profiles: how many tiles cross each vertical line.

For a valid tiling, the count of tiles meeting the vertical line x = c
is constant between consecutive tile edges. The profile stores those
open-interval counts; the value exactly at a breakpoint is deliberately
left undefined (a line through a shared edge is ambiguous, and the
ambiguity cannot affect the integral).

The exact integral of the profile always equals the tiling's total side
length. That identity doubles as a cross-check between two independent
ways of measuring a tiling, so check_profile_identity() returning False
on a valid tiling means a bug, not a property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedProfileError
from .geometry import ONE, ZERO, Tiling, ensure_valid, total_length


@dataclass(frozen=True)
class StepProfile:
    """Piecewise-constant counts on (0,1): values[i] holds on the open
    interval (breakpoints[i], breakpoints[i+1])."""

    breakpoints: tuple[Fraction, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        bp = self.breakpoints
        if len(bp) < 2 or bp[0] != 0 or bp[-1] != 1:
            raise MalformedProfileError("breakpoints must run from 0 to 1")
        if any(a >= b for a, b in zip(bp, bp[1:])):
            raise MalformedProfileError("breakpoints must be strictly increasing")
        if len(self.values) != len(bp) - 1:
            raise MalformedProfileError(
                f"{len(self.values)} values for {len(bp)} breakpoints"
            )
        if any(v < 1 for v in self.values):
            raise MalformedProfileError("every interval count must be at least 1")

    def intervals(self):
        """Yield (a, b, value) triples, one per open interval."""
        for i, v in enumerate(self.values):
            yield self.breakpoints[i], self.breakpoints[i + 1], v


def vertical_profile(t: Tiling) -> StepProfile:
    """Count, per open interval between tile edges, the tiles crossing it.

    Breakpoints are exactly the distinct x-coordinates of vertical tile
    edges (0 and 1 included). A tile whose edge lies at the boundary of
    an interval does not cross it.
    """
    ensure_valid(t)
    xs = {ZERO, ONE}
    for tl in t.tiles:
        xs.add(tl.x)
        xs.add(tl.x2)
    bp = tuple(sorted(xs))
    values = []
    for a, b in zip(bp, bp[1:]):
        values.append(sum(1 for tl in t.tiles if tl.x <= a and tl.x2 >= b))
    return StepProfile(bp, tuple(values))


def integrate(p: StepProfile) -> Fraction:
    """Exact integral of the step profile over [0, 1]."""
    return sum((v * (b - a) for a, b, v in p.intervals()), ZERO)


def check_profile_identity(t: Tiling) -> bool:
    """True iff the profile integral equals the total side length, exactly."""
    return integrate(vertical_profile(t)) == total_length(t)
