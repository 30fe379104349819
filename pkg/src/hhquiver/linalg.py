"""Exact dense linear algebra over the rationals.

Matrices are plain row-major sequences of sequences; entries are coerced to
:class:`fractions.Fraction` so that callers may pass ints.  Nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def _copy(m: Sequence[Sequence], ncols: int | None) -> tuple[Matrix, int]:
    rows = [[Fraction(x) for x in row] for row in m]
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(rows[0])
    for row in rows:
        if len(row) != ncols:
            raise ValueError(f"ragged matrix: expected {ncols} columns, got {len(row)}")
    return rows, ncols


def rref_with_pivots(m: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns.

    The result has the same shape as ``m``; zero rows sit at the bottom.
    """
    a, ncols = _copy(m, ncols)
    nrows = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        if inv != 1:
            a[r] = [x * inv for x in a[r]]
        pivot_row = a[r]
        for i in range(nrows):
            f = a[i][c]
            if i != r and f != 0:
                row = a[i]
                for j in range(c, ncols):
                    if pivot_row[j] != 0:
                        row[j] -= f * pivot_row[j]
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    return rref_with_pivots(m, ncols)[0]


def rank(m: Sequence[Sequence], ncols: int | None = None) -> int:
    if not m:
        return 0
    return len(rref_with_pivots(m, ncols)[1])


def kernel_basis(m: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of ``{v : m v = 0}``, one vector per free column of ``rref(m)``."""
    if not m:
        if ncols is None:
            raise ValueError("ncols is required for a matrix with no rows")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref_with_pivots(m, ncols)
    ncols = len(red[0])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in m]
