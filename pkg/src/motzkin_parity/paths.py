"""Parity-weighted Motzkin step models and the exact path-count table.

A path takes up steps (1,1), down steps (1,-1) and level steps (1,0), never
dips below height 0, and may end anywhere.  A level step taken at height h
can be any of ``weight(h)`` distinguishable variants, where the weight
depends only on the parity of h.  Counting is done with integer weights
rather than by materializing labelled paths, which keeps memory polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import Series


@dataclass(frozen=True, slots=True)
class StepModel:
    """Number of distinguishable level-step variants at even and odd heights."""

    even_loops: int
    odd_loops: int

    def __post_init__(self) -> None:
        if self.even_loops < 0 or self.odd_loops < 0:
            raise ValueError("loop multiplicities must be nonnegative")

    def weight(self, height: int) -> int:
        return self.even_loops if height % 2 == 0 else self.odd_loops


#: Two level-step variants on odd heights, one on even heights.
MODEL_A = StepModel(1, 2)
#: Two level-step variants on even heights, one on odd heights.
MODEL_B = StepModel(2, 1)


@dataclass(frozen=True, slots=True)
class CountTable:
    """``counts[n][h]``: weighted paths of length n from height 0 to height h."""

    model: StepModel
    length: int
    counts: tuple[tuple[int, ...], ...]

    def count(self, n: int, height: int) -> int:
        if not 0 <= n <= self.length:
            raise IndexError(f"length {n} outside table range 0..{self.length}")
        if not 0 <= height <= self.length:
            return 0
        return self.counts[n][height]

    def row_sum(self, n: int) -> int:
        if not 0 <= n <= self.length:
            raise IndexError(f"length {n} outside table range 0..{self.length}")
        return sum(self.counts[n])


def dp_table(model: StepModel, length: int) -> CountTable:
    """Exact count table for all path lengths up to ``length``.

    Single pass over lengths using
    ``c(n+1,h) = c(n,h-1) + weight(h)*c(n,h) + c(n,h+1)``
    with ``c(n,-1) = 0``.  Heights are capped at ``length`` because no path
    of length n climbs above height n.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    size = length + 1
    rows = [[0] * size for _ in range(size)]
    rows[0][0] = 1
    for n in range(length):
        prev = rows[n]
        cur = rows[n + 1]
        for h in range(size):
            total = prev[h] * model.weight(h)
            if h > 0:
                total += prev[h - 1]
            if h < length:
                total += prev[h + 1]
            cur[h] = total
    return CountTable(model, length, tuple(tuple(r) for r in rows))


def level_series(model: StepModel, level: int, terms: int) -> Series:
    """Generating series of paths ending at ``level``, to ``terms`` coefficients."""
    if terms < 1:
        raise ValueError("terms must be at least 1")
    if level < 0:
        raise ValueError("level must be nonnegative")
    table = dp_table(model, terms - 1)
    return Series([Fraction(table.count(n, level)) for n in range(terms)])


def open_series_dp(model: StepModel, terms: int) -> Series:
    """Generating series of paths ending at any height (row sums of the table)."""
    if terms < 1:
        raise ValueError("terms must be at least 1")
    table = dp_table(model, terms - 1)
    return Series([Fraction(table.row_sum(n)) for n in range(terms)])
