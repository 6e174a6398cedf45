"""Exact nullspace computation via fraction-free Gaussian elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _integer_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        den = lcm(*(c.denominator for c in row)) if row else 1
        out.append([int(c * den) for c in row])
    return out


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Deterministic basis of the right nullspace of the given matrix.

    Rows are scaled to integers, then reduced to row echelon form with
    Bareiss one-step elimination (all intermediate divisions are exact).
    One basis vector is produced per free column by back substitution with
    that free variable set to 1 and the others set to 0.
    """
    m = [row for row in _integer_rows(rows) if any(row)]
    nrows = len(m)
    pivots: list[int] = []  # pivot column of echelon row i
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, nrows):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank][col]
        top = m[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            head = row[col]
            # Bareiss requires the update on every lower row (head == 0
            # included) so the division by the previous pivot stays exact.
            for j in range(col, ncols):
                row[j] = (piv * row[j] - head * top[j]) // prev
        prev = piv
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break

    free_cols = [c for c in range(ncols) if c not in set(pivots)]
    basis: list[list[Fraction]] = []
    for free in free_cols:
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            pc = pivots[i]
            acc = Fraction(0)
            for j in range(pc + 1, ncols):
                if x[j] != 0 and m[i][j] != 0:
                    acc += m[i][j] * x[j]
            x[pc] = -acc / m[i][pc]
        basis.append(x)
    return basis
