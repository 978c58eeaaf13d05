"""Exhaustive enumeration of square tilings of a q x q integer grid.

The search substrate for everything "brute force" in this package.
Placements are generated by canonical backtracking: the next square
always goes at the first uncovered cell in row-major order (lowest row,
then leftmost column), branching over every size that fits. Each
partition of the grid is therefore produced exactly once, in a fixed
order, with no symmetry pruning during generation; symmetry handling is
entirely post hoc via canonical forms.

Dividing all coordinates by q maps a grid tiling onto a tiling of the
unit square, so sweeping q = 1..q_max enumerates every tiling whose
coordinates have least common denominator at most q_max. Results beyond
that resolution are out of reach by construction: the searches here are
complete only at their stated resolution, which callers must treat as a
caveat, not a proof of nonexistence.

A node budget caps the number of attempted placements; exceeding it
raises ResourceLimitError rather than silently truncating output. The
sweep helpers can distribute independent subtrees across worker
processes; merging is associative and order-fixed, so results are
byte-identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .errors import BadParameterError, ResourceLimitError
from .geometry import Tile, Tiling
from .symmetry import canonical_form
from .textformat import serialize

DEFAULT_NODE_BUDGET = 10**9

# Subtrees handed to workers are rooted at placement prefixes of this
# depth; finer than splitting on the first square alone, which balances
# poorly. The partition of the search space is the same for any worker
# count, so results cannot depend on scheduling.
_TASK_DEPTH = 3


@dataclass(frozen=True)
class GridTiling:
    """A partition of the q x q grid into integer squares.

    cells holds (col, row, size) triples in canonical placement order.
    """

    q: int
    cells: tuple[tuple[int, int, int], ...]

    @property
    def n(self) -> int:
        return len(self.cells)

    def total_size(self) -> int:
        return sum(size for _, _, size in self.cells)

    def is_primitive(self) -> bool:
        """True unless the whole tiling is an integer upscale of a smaller grid."""
        g = 0
        for c, r, s in self.cells:
            g = gcd(gcd(g, c), gcd(r, s))
            if g == 1:
                return True
        return g == 1

    def to_tiling(self) -> Tiling:
        q = self.q
        return Tiling(
            Tile(Fraction(c, q), Fraction(r, q), Fraction(s, q)) for c, r, s in self.cells
        )


def iter_grid_tilings(q: int, node_budget: int | None = None) -> Iterator[GridTiling]:
    """Yield every square partition of the q x q grid exactly once.

    Deterministic: first uncovered cell in row-major order, sizes tried
    in increasing order. node_budget caps attempted placements.
    """
    if q < 1:
        raise BadParameterError(f"q must be at least 1, got {q}")
    budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
    heights = [0] * q
    cells: list[tuple[int, int, int]] = []
    nodes = 0

    def rec() -> Iterator[GridTiling]:
        nonlocal nodes
        row = min(heights)
        if row == q:
            yield GridTiling(q, tuple(cells))
            return
        col = heights.index(row)
        run = 0
        while col + run < q and heights[col + run] == row:
            run += 1
        limit = min(run, q - row)
        for size in range(1, limit + 1):
            nodes += 1
            if nodes > budget:
                raise ResourceLimitError(
                    f"node budget {budget} exceeded enumerating q={q}"
                )
            heights[col : col + size] = [row + size] * size
            cells.append((col, row, size))
            yield from rec()
            cells.pop()
            heights[col : col + size] = [row] * size

    return rec()


def _leaf_stats(q, cells, tracked, primitive_only):
    """Stats dict for a prefix that is already a complete tiling."""
    n = len(cells)
    total = sum(s for _, _, s in cells)
    stats = {"nodes": 0, "counts": {n: 1}, "min_sum": {n: total}, "wit": {}}
    if tracked is None or n in tracked:
        g = 0
        for c, r, s in cells:
            g = gcd(gcd(g, c), gcd(r, s))
        if not primitive_only or g == 1:
            stats["wit"][n] = (total, [cells])
    return stats


def _subtree_stats(q, start_heights, start_cells, node_budget, tracked, primitive_only):
    """Aggregate one subtree: per-n raw counts and minimum size sums, plus
    witness placements for the tracked tile counts."""
    heights = list(start_heights)
    cells = list(start_cells)
    start_g = 0
    for c, r, s in cells:
        start_g = gcd(gcd(start_g, c), gcd(r, s))
    counts: dict[int, int] = {}
    min_sum: dict[int, int] = {}
    wit_best: dict[int, int] = {}
    wit_cells: dict[int, list] = {}
    nodes = 0
    n0 = len(cells)
    total0 = sum(s for _, _, s in cells)

    def rec(n, total, g):
        nonlocal nodes
        row = min(heights)
        if row == q:
            counts[n] = counts.get(n, 0) + 1
            prev = min_sum.get(n)
            if prev is None or total < prev:
                min_sum[n] = total
            if (tracked is None or n in tracked) and (not primitive_only or g == 1):
                best = wit_best.get(n)
                if best is None or total < best:
                    wit_best[n] = total
                    wit_cells[n] = [tuple(cells)]
                elif total == best:
                    wit_cells[n].append(tuple(cells))
            return
        col = heights.index(row)
        run = 0
        while col + run < q and heights[col + run] == row:
            run += 1
        limit = run if run < q - row else q - row
        for size in range(1, limit + 1):
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimitError(
                    f"node budget {node_budget} exceeded enumerating q={q}"
                )
            heights[col : col + size] = [row + size] * size
            cells.append((col, row, size))
            rec(
                n + 1,
                total + size,
                g if g == 1 else gcd(gcd(g, col), gcd(row, size)),
            )
            cells.pop()
            heights[col : col + size] = [row] * size

    rec(n0, total0, start_g)
    wit = {n: (wit_best[n], wit_cells[n]) for n in wit_best}
    return {"nodes": nodes, "counts": counts, "min_sum": min_sum, "wit": wit}


def _prefixes(q, depth, node_budget):
    """Canonical-order placement prefixes partitioning the search tree.

    Returns (tasks, nodes_used): each task is (cells, heights, complete).
    Prefixes that already finish the grid are marked complete and are
    processed as single leaves.
    """
    tasks = []
    heights = [0] * q
    cells: list[tuple[int, int, int]] = []
    nodes = 0

    def rec(d):
        nonlocal nodes
        row = min(heights)
        if row == q:
            tasks.append((tuple(cells), tuple(heights), True))
            return
        if d == depth:
            tasks.append((tuple(cells), tuple(heights), False))
            return
        col = heights.index(row)
        run = 0
        while col + run < q and heights[col + run] == row:
            run += 1
        limit = min(run, q - row)
        for size in range(1, limit + 1):
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimitError(
                    f"node budget {node_budget} exceeded enumerating q={q}"
                )
            heights[col : col + size] = [row + size] * size
            cells.append((col, row, size))
            rec(d + 1)
            cells.pop()
            heights[col : col + size] = [row] * size

    rec(0)
    return tasks, nodes


def _run_task(args):
    q, cells, heights, node_budget, tracked, primitive_only, complete = args
    if complete:
        return _leaf_stats(q, cells, tracked, primitive_only)
    return _subtree_stats(q, heights, cells, node_budget, tracked, primitive_only)


def _merge(into, stats):
    into["nodes"] += stats["nodes"]
    for n, c in stats["counts"].items():
        into["counts"][n] = into["counts"].get(n, 0) + c
    for n, m in stats["min_sum"].items():
        prev = into["min_sum"].get(n)
        if prev is None or m < prev:
            into["min_sum"][n] = m
    for n, (best, cell_lists) in stats["wit"].items():
        prev = into["wit"].get(n)
        if prev is None or best < prev[0]:
            into["wit"][n] = (best, list(cell_lists))
        elif best == prev[0]:
            prev[1].extend(cell_lists)


def _aggregate(q, tracked=frozenset(), primitive_only=False, node_budget=None, workers=1):
    """Single-resolution aggregation, optionally fanned out over processes.

    The node budget is global: prefix generation and every subtree count
    against the same limit, and each subtree is additionally capped at
    the full budget so a runaway branch aborts early. Totals are summed
    after the fact, so success or failure does not depend on scheduling.
    """
    if q < 1:
        raise BadParameterError(f"q must be at least 1, got {q}")
    if workers < 1:
        raise BadParameterError(f"workers must be at least 1, got {workers}")
    budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
    if tracked is not None:
        tracked = frozenset(tracked)
    tasks, prefix_nodes = _prefixes(q, _TASK_DEPTH, budget)
    merged = {"nodes": prefix_nodes, "counts": {}, "min_sum": {}, "wit": {}}
    payloads = [
        (q, cells, heights, budget, tracked, primitive_only, complete)
        for cells, heights, complete in tasks
    ]
    if workers == 1:
        for payload in payloads:
            _merge(merged, _run_task(payload))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for stats in pool.map(_run_task, payloads):
                _merge(merged, stats)
    if merged["nodes"] > budget:
        raise ResourceLimitError(
            f"node budget {budget} exceeded enumerating q={q}"
            f" ({merged['nodes']} placements attempted)"
        )
    return merged


def count_by_n(q: int, node_budget: int | None = None, workers: int = 1) -> dict[int, int]:
    """Raw tiling counts of the q x q grid, keyed by tile count."""
    merged = _aggregate(q, node_budget=node_budget, workers=workers)
    return dict(sorted(merged["counts"].items()))


def _canonical_witnesses(q, cell_lists) -> tuple[Tiling, ...]:
    """Deduplicate witness placements up to symmetry; sorted, deterministic."""
    by_key: dict[str, Tiling] = {}
    for cells in cell_lists:
        canon = canonical_form(GridTiling(q, cells).to_tiling())
        by_key[serialize(canon)] = canon
    return tuple(by_key[k] for k in sorted(by_key))


@dataclass(frozen=True)
class CountStats:
    """Per-tile-count summary at one resolution."""

    count_raw: int
    count_canonical: int | None
    min_sigma: Fraction
    witnesses: tuple[Tiling, ...]


@dataclass(frozen=True)
class EnumerationReport:
    q: int
    per_n: dict[int, CountStats]
    nodes: int


def survey_grid(
    q: int,
    *,
    witness_ns: Iterable[int] | None = None,
    canonical: bool = False,
    node_budget: int | None = None,
    workers: int = 1,
) -> EnumerationReport:
    """Full per-n statistics at one resolution.

    witness_ns selects the tile counts whose minimum-length witnesses
    are materialized (None = all of them; fine for small q). canonical
    additionally counts tilings up to symmetry, which re-enumerates and
    canonicalizes everything, so reserve it for small q.
    """
    tracked = None if witness_ns is None else frozenset(witness_ns)
    merged = _aggregate(
        q, tracked=tracked, node_budget=node_budget, workers=workers
    )
    canon_counts: dict[int, int] = {}
    if canonical:
        seen: dict[int, set[str]] = {}
        for gt in iter_grid_tilings(q, node_budget):
            key = serialize(canonical_form(gt.to_tiling()))
            seen.setdefault(gt.n, set()).add(key)
        canon_counts = {n: len(keys) for n, keys in seen.items()}
    per_n = {}
    for n in sorted(merged["counts"]):
        wit = merged["wit"].get(n)
        per_n[n] = CountStats(
            count_raw=merged["counts"][n],
            count_canonical=canon_counts.get(n) if canonical else None,
            min_sigma=Fraction(merged["min_sum"][n], q),
            witnesses=_canonical_witnesses(q, wit[1]) if wit else (),
        )
    return EnumerationReport(q=q, per_n=per_n, nodes=merged["nodes"])


@dataclass(frozen=True)
class SweepResult:
    """Merged statistics for all resolutions q = 1..q_max.

    minima: tracked tile count -> (least total length, canonical
    witnesses), taken over tilings primitive at their resolution so the
    same geometry is never counted twice. raw_min: least total length
    per tile count over every enumerated tiling, primitive or not.
    counts: per-resolution raw counts.
    """

    q_max: int
    counts: dict[int, dict[int, int]]
    minima: dict[int, tuple[Fraction, tuple[Tiling, ...]]]
    raw_min: dict[int, Fraction]
    nodes: int


def sweep_grids(
    q_max: int,
    track_ns: Iterable[int] = (),
    *,
    node_budget: int | None = None,
    workers: int = 1,
) -> SweepResult:
    """Aggregate every resolution up to q_max in one deterministic pass."""
    if q_max < 1:
        raise BadParameterError(f"q_max must be at least 1, got {q_max}")
    tracked = frozenset(track_ns)
    counts: dict[int, dict[int, int]] = {}
    raw_min: dict[int, Fraction] = {}
    best: dict[int, tuple[Fraction, list]] = {}
    nodes = 0
    for q in range(1, q_max + 1):
        merged = _aggregate(
            q,
            tracked=tracked,
            primitive_only=True,
            node_budget=node_budget,
            workers=workers,
        )
        nodes += merged["nodes"]
        counts[q] = dict(sorted(merged["counts"].items()))
        for n, m in merged["min_sum"].items():
            sigma = Fraction(m, q)
            if n not in raw_min or sigma < raw_min[n]:
                raw_min[n] = sigma
        for n, (m, cell_lists) in merged["wit"].items():
            sigma = Fraction(m, q)
            if n not in best or sigma < best[n][0]:
                best[n] = (sigma, [(q, cells) for cells in cell_lists])
            elif sigma == best[n][0]:
                best[n][1].extend((q, cells) for cells in cell_lists)
    minima = {}
    for n, (sigma, items) in sorted(best.items()):
        by_key: dict[str, Tiling] = {}
        for q, cells in items:
            canon = canonical_form(GridTiling(q, cells).to_tiling())
            by_key[serialize(canon)] = canon
        minima[n] = (sigma, tuple(by_key[k] for k in sorted(by_key)))
    return SweepResult(
        q_max=q_max, counts=counts, minima=minima, raw_min=raw_min, nodes=nodes
    )


def min_length_oracle(
    n: int,
    q_max: int,
    *,
    node_budget: int | None = None,
    workers: int = 1,
) -> tuple[Fraction, tuple[Tiling, ...]] | None:
    """Least total length over all enumerated n-tile tilings with
    coordinates resolvable on grids up to q_max, with every witness
    attaining it (deduplicated up to symmetry).

    Returns None when no resolution q <= q_max admits an n-tile tiling;
    that is evidence at bounded resolution, not a nonexistence proof.
    """
    if n < 1:
        raise BadParameterError(f"n must be at least 1, got {n}")
    result = sweep_grids(q_max, {n}, node_budget=node_budget, workers=workers)
    return result.minima.get(n)
