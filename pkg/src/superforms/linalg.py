"""Exact dense linear algebra over Q(i).

Everything works on plain ``list[list[GaussianRational]]`` grids and returns
exact results; there is no pivoting heuristics beyond "first nonzero", which
keeps every computation deterministic.  Sizes in this package stay small
(a few hundred rows at most), so classic Gauss-Jordan is plenty.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .scalars import GaussianRational, MINUS_ONE, ONE, ZERO

Grid = List[List[GaussianRational]]


class SingularMatrix(ValueError):
    pass


def zeros(rows: int, cols: int) -> Grid:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Grid:
    grid = zeros(n, n)
    for k in range(n):
        grid[k][k] = ONE
    return grid


def mat_mul(a: Sequence[Sequence[GaussianRational]], b: Sequence[Sequence[GaussianRational]]) -> Grid:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        arow = a[i]
        orow = out[i]
        for k in range(inner):
            aik = arow[k]
            if aik.is_zero():
                continue
            brow = b[k]
            for j in range(cols):
                bkj = brow[j]
                if not bkj.is_zero():
                    orow[j] = orow[j] + aik * bkj
    return out


def rref(matrix: Sequence[Sequence[GaussianRational]]) -> Tuple[Grid, List[int]]:
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    grid = [list(row) for row in matrix]
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if not grid[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        grid[r], grid[pivot_row] = grid[pivot_row], grid[r]
        inv = grid[r][c].inverse()
        grid[r] = [x * inv for x in grid[r]]
        for i in range(rows):
            if i != r and not grid[i][c].is_zero():
                factor = grid[i][c]
                grid[i] = [a - factor * b for a, b in zip(grid[i], grid[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return grid, pivots


def rank(matrix: Sequence[Sequence[GaussianRational]]) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence[GaussianRational]]) -> List[List[GaussianRational]]:
    """Basis of the right nullspace (free variable set to 1, pivots solved)."""
    if not matrix:
        return []
    cols = len(matrix[0])
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [ZERO] * cols
        vec[free] = ONE
        for row_idx, pivot_col in enumerate(pivots):
            vec[pivot_col] = MINUS_ONE * reduced[row_idx][free]
        basis.append(vec)
    return basis


def solve(matrix: Sequence[Sequence[GaussianRational]], rhs: Sequence[GaussianRational]) -> Optional[List[GaussianRational]]:
    """One solution of ``matrix @ x = rhs`` or ``None`` if inconsistent."""
    rows = len(matrix)
    if rows == 0:
        return [] if all(b.is_zero() for b in rhs) else None
    cols = len(matrix[0])
    augmented = [list(matrix[i]) + [rhs[i]] for i in range(rows)]
    reduced, pivots = rref(augmented)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for row_idx, pivot_col in enumerate(pivots):
        x[pivot_col] = reduced[row_idx][cols]
    return x


def in_span(vectors: Sequence[Sequence[GaussianRational]], target: Sequence[GaussianRational]) -> bool:
    if all(t.is_zero() for t in target):
        return True
    if not vectors:
        return False
    columns = [[vec[i] for vec in vectors] for i in range(len(target))]
    return solve(columns, list(target)) is not None


def spans_equal(a: Sequence[Sequence[GaussianRational]], b: Sequence[Sequence[GaussianRational]]) -> bool:
    """Exact equality of the spans of two vector lists."""
    ra = rank(list(a)) if a else 0
    rb = rank(list(b)) if b else 0
    if ra != rb:
        return False
    combined = list(a) + list(b)
    return (rank(combined) if combined else 0) == ra


def invert(matrix: Sequence[Sequence[GaussianRational]]) -> Grid:
    """Inverse of a square grid over Q(i) (Gauss-Jordan)."""
    n = len(matrix)
    augmented = [list(matrix[i]) + list(identity(n)[i]) for i in range(n)]
    reduced, pivots = rref(augmented)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in reduced]


def determinant(matrix: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    """Exact determinant over Q(i) by elimination with row-swap sign tracking."""
    n = len(matrix)
    grid = [list(row) for row in matrix]
    sign = 1
    det = ONE
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if not grid[i][c].is_zero()), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            grid[c], grid[pivot_row] = grid[pivot_row], grid[c]
            sign = -sign
        pivot = grid[c][c]
        det = det * pivot
        inv = pivot.inverse()
        for i in range(c + 1, n):
            if grid[i][c].is_zero():
                continue
            factor = grid[i][c] * inv
            grid[i] = [a - factor * b for a, b in zip(grid[i], grid[c])]
    return det if sign > 0 else MINUS_ONE * det


def leading_principal_minors(matrix: Sequence[Sequence[GaussianRational]]) -> List[GaussianRational]:
    """Determinants of the leading k-by-k blocks, k = 1..n."""
    return [
        determinant([row[: k + 1] for row in matrix[: k + 1]])
        for k in range(len(matrix))
    ]
