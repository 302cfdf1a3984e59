"""Rectangular semistandard tableaux under Bender-Knuth promotion.

A tableau carries its entry ceiling k explicitly. Promotion is the
composite of the Bender-Knuth involutions applied in the order BK_1 first,
then BK_2, ..., finally BK_{k-1}; with that pinned order, promotion on an
m x n rectangle has order dividing k, and for any cell set R that is
invariant under 180-degree rotation of the rectangle the entry sum over R
is |R|(k+1)/2-mesic.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..engine import Statistic
from ..guards import DEFAULT_ENUMERATION_GUARD, GuardExceeded


@dataclass(frozen=True, order=True)
class SSYT:
    """A rectangular semistandard tableau with entries in 1..ceiling."""

    ceiling: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.ceiling < 1:
            raise ValueError("entry ceiling must be at least 1")
        if not rows or not rows[0]:
            raise ValueError("tableau must be a nonempty rectangle")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("tableau rows must all have the same length")
        for row in rows:
            if any(v < 1 or v > self.ceiling for v in row):
                raise ValueError("entries must lie in 1..ceiling")
            if any(row[c] > row[c + 1] for c in range(width - 1)):
                raise ValueError("rows must weakly increase")
        for r in range(len(rows) - 1):
            if any(rows[r][c] >= rows[r + 1][c] for c in range(width)):
                raise ValueError("columns must strictly increase")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def entry(self, r: int, c: int) -> int:
        """1-indexed entry access."""
        nrows, ncols = self.shape
        if not (1 <= r <= nrows and 1 <= c <= ncols):
            raise ValueError(f"cell ({r}, {c}) outside the {nrows} x {ncols} rectangle")
        return self.rows[r - 1][c - 1]


def bender_knuth(tableau: SSYT, i: int) -> SSYT:
    """The involution swapping the multiplicities of i and i+1.

    An i is locked when i+1 sits directly below it, an i+1 when i sits
    directly above it; in each row the free i's (say r of them) and free
    i+1's (s of them) are rewritten as s i's followed by r i+1's.
    """
    if not 1 <= i <= tableau.ceiling - 1:
        raise ValueError(f"involution index {i} outside 1..{tableau.ceiling - 1}")
    grid = [list(row) for row in tableau.rows]
    nrows = len(grid)
    for r, row in enumerate(grid):
        free = []
        for c, value in enumerate(row):
            if value == i:
                if r + 1 < nrows and grid[r + 1][c] == i + 1:
                    continue
                free.append(c)
            elif value == i + 1:
                if r > 0 and grid[r - 1][c] == i:
                    continue
                free.append(c)
        small = sum(1 for c in free if row[c] == i)
        large = len(free) - small
        for pos, c in enumerate(free):
            row[c] = i if pos < large else i + 1
    return SSYT(tableau.ceiling, tuple(tuple(row) for row in grid))


def ssyt_promotion(tableau: SSYT) -> SSYT:
    """BK_1 applied first, then BK_2 through BK_{ceiling-1}."""
    for i in range(1, tableau.ceiling):
        tableau = bender_knuth(tableau, i)
    return tableau


def rect_tableaux(nrows: int, ncols: int, ceiling: int,
                  guard: int | None = None) -> list[SSYT]:
    """All SSYT on the nrows x ncols rectangle with entries <= ceiling.

    Row-major backtracking; the list comes back in lexicographic order.
    Empty when ceiling < nrows (columns could not strictly increase).
    """
    if nrows < 1 or ncols < 1:
        raise ValueError("rectangle dimensions must be at least 1")
    if ceiling < 1:
        raise ValueError("entry ceiling must be at least 1")
    cap = DEFAULT_ENUMERATION_GUARD if guard is None else guard
    grid = [[0] * ncols for _ in range(nrows)]
    found: list[SSYT] = []

    def fill(pos: int):
        if pos == nrows * ncols:
            if len(found) >= cap:
                raise GuardExceeded(f"tableau count exceeds the guard of {cap}")
            found.append(SSYT(ceiling, tuple(tuple(row) for row in grid)))
            return
        r, c = divmod(pos, ncols)
        low = 1
        if c > 0:
            low = max(low, grid[r][c - 1])
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        for value in range(low, ceiling + 1):
            grid[r][c] = value
            fill(pos + 1)
        grid[r][c] = 0

    fill(0)
    return found


def cell_sum_statistic(cells, name: str | None = None) -> Statistic:
    """Entry sum over a fixed set of 1-indexed (row, column) cells."""
    cells = tuple(sorted(set((int(r), int(c)) for r, c in cells)))
    if name is not None:
        label = name
    elif cells:
        label = "cells:" + ";".join(f"{r},{c}" for r, c in cells)
    else:
        label = "cells:none"

    def value(tableau: SSYT) -> int:
        return sum(tableau.entry(r, c) for r, c in cells)

    return Statistic.scalar(label, value)


def promotion_orbit_sums(tableau: SSYT, cells):
    """sigma_R along the promotion orbit of one tableau (diagnostic helper)."""
    stat = cell_sum_statistic(cells)
    sums = []
    current = tableau
    while True:
        sums.append(stat(current)[0])
        current = ssyt_promotion(current)
        if current == tableau:
            return tuple(sums)


def all_cells(nrows: int, ncols: int) -> tuple[tuple[int, int], ...]:
    return tuple((r, c) for r in range(1, nrows + 1) for c in range(1, ncols + 1))


def centrally_symmetric_cell_sets(nrows: int, ncols: int):
    """Every cell set fixed by 180-degree rotation of the rectangle."""
    orbits = []
    seen = set()
    for cell in all_cells(nrows, ncols):
        if cell in seen:
            continue
        r, c = cell
        partner = (nrows + 1 - r, ncols + 1 - c)
        orbit = frozenset({cell, partner})
        seen |= orbit
        orbits.append(orbit)
    sets = []
    for size in range(len(orbits) + 1):
        for chosen in combinations(orbits, size):
            cells = sorted(frozenset().union(*chosen)) if chosen else []
            sets.append(tuple(cells))
    return sorted(sets)
