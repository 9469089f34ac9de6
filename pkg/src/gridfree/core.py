"""Domain types and the exhaustive-enumeration oracle.

A *selection* is a set of unit squares on an m x n grid with no two squares
sharing an edge, i.e. an independent set of the grid graph.  Everything else
in the package is cross-checked against the backtracking enumerator here,
which is deliberately kept dumb: it walks cells one by one and never shares
code with the production column-sweep in :mod:`gridfree.transfer`.

Counts are plain Python ints (arbitrary precision); rationals elsewhere use
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_ORACLE_MAX_CELLS = 36
ORACLE_MAX_CELLS_ENV = "GRIDFREE_ORACLE_MAX_CELLS"


class OracleSizeError(ValueError):
    """Raised when a grid is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class GridDims:
    """Grid dimensions: ``rows`` >= 1, ``cols`` >= 0 (a zero-width grid is legal)."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1:
            raise ValueError(f"rows must be >= 1, got {self.rows}")
        if self.cols < 0:
            raise ValueError(f"cols must be >= 0, got {self.cols}")

    @property
    def cells(self) -> int:
        return self.rows * self.cols


@dataclass(frozen=True)
class Selection:
    """A set of (row, col) cells on a grid.  Coordinates are 0-based."""

    dims: GridDims
    cells: frozenset

    @property
    def size(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class RowTable:
    """Counts of adjacency-free k-selections on an m x n grid, k = 0..k_max.

    ``counts`` is trimmed at the last nonzero entry, so ``len(counts) - 1`` is
    the largest k with a nonzero count.  Indexing out of range returns 0,
    which keeps identity sweeps free of bounds bookkeeping.
    """

    m: int
    n: int
    counts: tuple

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.counts):
            return self.counts[k]
        return 0

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    @property
    def k_max(self) -> int:
        return len(self.counts) - 1


@dataclass
class VerificationReport:
    """Pass/fail record for a property checked over a stated parameter range.

    ``failures`` holds (params, expected, actual) triples; ``passed`` is true
    exactly when it is empty.  ``experimental`` marks checks of statements
    that are conjectural: a failure there is a finding, not a bug.
    """

    name: str
    range: str
    passed: bool
    failures: list = field(default_factory=list)
    experimental: bool = False

    @classmethod
    def from_failures(cls, name, range_, failures, experimental=False):
        return cls(
            name=name,
            range=range_,
            passed=not failures,
            failures=list(failures),
            experimental=experimental,
        )


def _resolve_max_cells(max_cells):
    if max_cells is not None:
        return max_cells
    env = os.environ.get(ORACLE_MAX_CELLS_ENV)
    if env:
        return int(env)
    return DEFAULT_ORACLE_MAX_CELLS


def _check_size(dims: GridDims, max_cells) -> None:
    limit = _resolve_max_cells(max_cells)
    if dims.cells > limit:
        raise OracleSizeError(
            f"{dims.rows}x{dims.cols} grid has {dims.cells} cells, above the "
            f"enumeration limit of {limit}; raise max_cells (or "
            f"{ORACLE_MAX_CELLS_ENV}) explicitly if you really want this"
        )


def brute_force_count(dims: GridDims, k: int, max_cells=None) -> int:
    """Number of adjacency-free k-subsets, by backtracking over cells.

    Cells are visited in column-major order; a cell may be taken only if its
    upper and left neighbours were not.  The grid must have at most
    ``max_cells`` cells (default 36, overridable via the
    ``GRIDFREE_ORACLE_MAX_CELLS`` environment variable); larger grids raise
    :class:`OracleSizeError` rather than silently truncating.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _check_size(dims, max_cells)
    m, n = dims.rows, dims.cols
    total_cells = m * n
    if k > total_cells:
        return 0
    taken = bytearray(total_cells)
    count = 0

    def walk(i, need):
        nonlocal count
        if need == 0:
            count += 1
            return
        if total_cells - i < need:
            return
        walk(i + 1, need)
        r = i % m
        if (r == 0 or not taken[i - 1]) and (i < m or not taken[i - m]):
            taken[i] = 1
            walk(i + 1, need - 1)
            taken[i] = 0

    walk(0, k)
    return count


def brute_force_row(dims: GridDims, max_cells=None) -> RowTable:
    """All counts for one grid in a single enumeration pass, trimmed.

    A single depth-first walk over all adjacency-free selections tallies them
    by size, which is much cheaper than calling :func:`brute_force_count`
    once per k.
    """
    _check_size(dims, max_cells)
    m, n = dims.rows, dims.cols
    total_cells = m * n
    counts = [0] * (total_cells + 1)
    taken = bytearray(total_cells)

    def walk(i, size):
        if i == total_cells:
            counts[size] += 1
            return
        walk(i + 1, size)
        r = i % m
        if (r == 0 or not taken[i - 1]) and (i < m or not taken[i - m]):
            taken[i] = 1
            walk(i + 1, size + 1)
            taken[i] = 0

    walk(0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return RowTable(m=m, n=n, counts=tuple(counts))


def validate_selection(sel: Selection) -> bool:
    """True iff all cells are in range and no two are orthogonally adjacent.

    Out-of-range cells make the selection invalid; they are not an error.
    """
    m, n = sel.dims.rows, sel.dims.cols
    cells = sel.cells
    for (r, c) in cells:
        if not (0 <= r < m and 0 <= c < n):
            return False
        if (r + 1, c) in cells or (r, c + 1) in cells:
            return False
    return True
