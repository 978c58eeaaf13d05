from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the naive oracle module

from squaretiles import build_even, iter_grid_tilings


@pytest.fixture(scope="session")
def quadrant():
    """The unique 4-tiling: four half-side tiles."""
    return build_even(2)


@pytest.fixture(scope="session")
def corpus_q4():
    """Every grid tiling at resolutions 1..4, as unit-square tilings (49)."""
    out = []
    for q in range(1, 5):
        out.extend(gt.to_tiling() for gt in iter_grid_tilings(q))
    return out


@pytest.fixture(scope="session")
def corpus_q5():
    """Every grid tiling at resolutions 1..5 (521)."""
    out = []
    for q in range(1, 6):
        out.extend(gt.to_tiling() for gt in iter_grid_tilings(q))
    return out


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    lines = []
    for status, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance" in rep.nodeid and rep.when == "call":
                lines.append((rep.nodeid.split("::")[-1], label))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, label in sorted(lines):
            terminalreporter.write_line(f"{label}  {name}")
