"""Exact Gaussian elimination over cyclotomic fields.

Matrices are lists of rows of CycNum.  Pivoting always takes the first
nonzero entry in column order (no magnitude heuristics are needed with
exact arithmetic), so every result is deterministic.
"""

from __future__ import annotations

from typing import Sequence

from lgorb.errors import ShapeError, SingularMatrixError
from lgorb.exactnum import CycNum

Vector = tuple[CycNum, ...]


def _as_rows(matrix) -> list[list[CycNum]]:
    return [list(row) for row in matrix]


def rref(matrix) -> tuple[list[list[CycNum]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = _as_rows(matrix)
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = -rows[i][c]
                rows[i] = [a.addmul(factor, b) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis_with_free(matrix, conductor: int | None = None) -> tuple[list[Vector], list[int]]:
    """Basis of the right kernel plus the free column indices.

    One vector per free column j (ascending): entry 1 at j, the negated
    reduced-row entries at the pivot positions, 0 elsewhere.  The rows of
    the basis matrix at the free indices therefore form an identity block.
    """
    rows = _as_rows(matrix)
    if not rows:
        return [], []
    ncols = len(rows[0])
    if conductor is None:
        conductor = rows[0][0].conductor
    reduced, pivots = rref(rows)
    pivot_of_col = {c: i for i, c in enumerate(pivots)}
    zero, one = CycNum.zero(conductor), CycNum.one(conductor)
    basis = []
    free = [j for j in range(ncols) if j not in pivot_of_col]
    for j in free:
        vec = [zero] * ncols
        vec[j] = one
        for c, i in pivot_of_col.items():
            if reduced[i][j]:
                vec[c] = -reduced[i][j]
        basis.append(tuple(vec))
    return basis, free


def kernel_basis(matrix, conductor: int | None = None) -> list[Vector]:
    """Basis of the right kernel, as column vectors (RREF convention)."""
    return kernel_basis_with_free(matrix, conductor)[0]


def det(matrix) -> CycNum:
    """Determinant: division-free cofactor formulas for n <= 3, exact
    elimination above that."""
    rows = _as_rows(matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ShapeError("determinant needs a square matrix")
    if n == 0:
        return CycNum.one(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    conductor = rows[0][0].conductor
    result = CycNum.one(conductor)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot_row is None:
            return CycNum.zero(conductor)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            result = -result
        pivot = rows[c][c]
        result = result * pivot
        inv = pivot.inverse()
        for i in range(c + 1, n):
            if rows[i][c]:
                factor = -(rows[i][c] * inv)
                rows[i] = [a.addmul(factor, b) for a, b in zip(rows[i], rows[c])]
    return result


def invert(matrix) -> list[list[CycNum]]:
    """Matrix inverse via Gauss-Jordan; raises SingularMatrixError."""
    rows = _as_rows(matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ShapeError("inverse needs a square matrix")
    conductor = rows[0][0].conductor
    zero, one = CycNum.zero(conductor), CycNum.one(conductor)
    aug = [rows[i] + [one if j == i else zero for j in range(n)] for i in range(n)]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in reduced]


def solve(matrix, rhs: Sequence[CycNum]) -> list[CycNum] | None:
    """One solution of A x = b, or None if inconsistent."""
    rows = _as_rows(matrix)
    if not rows:
        return None
    ncols = len(rows[0])
    conductor = rhs[0].conductor if rhs else rows[0][0].conductor
    aug = [row + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = CycNum.zero(conductor)
    x = [zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = reduced[i][ncols]
    return x


def column_space_basis(columns: Sequence[Vector]) -> list[Vector]:
    """Deterministic basis of the span: the pivot columns of (columns)."""
    if not columns:
        return []
    rows = [list(row) for row in zip(*columns)]
    _, pivots = rref(rows)
    return [columns[j] for j in pivots]


def in_span(columns: Sequence[Vector], vec: Vector) -> bool:
    """True iff vec lies in the span of the given columns."""
    if not any(vec):
        return True
    if not columns:
        return False
    matrix = [list(row) for row in zip(*columns)]
    return solve(matrix, list(vec)) is not None
