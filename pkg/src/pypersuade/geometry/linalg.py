"""Small exact linear-algebra helpers over the rationals."""

from collections.abc import Sequence
from fractions import Fraction

Vector = list[Fraction]


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Args:
        rows: Matrix rows; an augmented column is treated like any other.

    Returns:
        The nonzero reduced rows and the pivot column of each.
    """
    matrix = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    if not matrix:
        return [], pivots
    n_cols = len(matrix[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        matrix[rank] = [x / lead for x in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[rank], strict=True)]
        pivots.append(col)
        rank += 1
        if rank == len(matrix):
            break
    return matrix[:rank], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a matrix."""
    return len(rref(rows)[1])


def solve_unique(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector | None:
    """Solve ``rows @ x = rhs`` when the solution exists and is unique.

    Returns:
        The solution, or ``None`` when the system is inconsistent or underdetermined.
    """
    if not rows:
        return None
    n = len(rows[0])
    reduced, pivots = rref([[*row, b] for row, b in zip(rows, rhs, strict=True)])
    if n in pivots or len(pivots) < n:
        return None
    return [reduced[i][n] for i in range(n)]


def nullspace(rows: Sequence[Sequence[Fraction]], n_cols: int) -> list[Vector]:
    """A basis of ``{x : rows @ x = 0}``."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots, strict=True):
            x[p] = -row[f]
        basis.append(x)
    return basis
