"""Exact rational linear algebra over Fraction, enough for kernels and ranks.

Deterministic throughout: pivots are chosen leftmost-first, rows are reduced
to leading coefficient 1.  Inputs are sequences of equal-length vectors whose
entries are ints or Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

RationalVector = tuple[Fraction, ...]
RationalMatrix = tuple[RationalVector, ...]


def _as_rows(rows: Iterable[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    out = [[Fraction(x) for x in row] for row in rows]
    widths = {len(r) for r in out}
    if len(widths) > 1:
        raise ValueError(f"ragged matrix: row widths {sorted(widths)}")
    return out


def rref(rows: Iterable[Sequence[int | Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    m = _as_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence[int | Fraction]]) -> int:
    return len(rref(rows)[1])


def nullspace_basis(rows: Iterable[Sequence[int | Fraction]], ncols: int) -> list[RationalVector]:
    """Basis of {x : r.x = 0 for every row r}, one vector per free column.

    Each basis vector carries 1 at its free column and the back-substituted
    pivot entries elsewhere; empty input yields the standard basis.
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: list[RationalVector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[free]
        basis.append(tuple(vec))
    return basis


def span_equal(
    rows_a: Iterable[Sequence[int | Fraction]],
    rows_b: Iterable[Sequence[int | Fraction]],
) -> bool:
    """Whether two families of vectors span the same subspace."""
    ra, pa = rref(rows_a)
    rb, pb = rref(rows_b)
    return ra == rb and pa == pb


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    return tuple(
        tuple(sum((x * b[k][j] for k, x in enumerate(row)), Fraction(0)) for j in range(len(b[0])))
        for row in a
    )
