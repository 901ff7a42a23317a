"""
==============================================
:mod:`linalg` -- Exact rational linear algebra
==============================================

Dense matrices are lists of rows of :class:`~fractions.Fraction`.
Nothing here ever rounds.
"""
# Standard Library
import math

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[Fraction]]
Vector = List[Fraction]


def to_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]  # type: ignore[arg-type]


def rref(rows: Sequence[Sequence[object]]) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form and pivot columns.

    >>> rref([[2, 4], [1, 3]])[1]
    [0, 1]
    """
    matrix = to_matrix(rows)
    pivots: List[int] = []
    if not matrix:
        return matrix, pivots

    width = len(matrix[0])
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][col]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            factor = matrix[i][col]
            if i != r and factor != 0:
                matrix[i] = [x - factor * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
        if r == len(matrix):
            break
    return matrix, pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    """
    >>> rank([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    3
    >>> rank([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]])
    3
    """
    return len(rref(rows)[1])


def solve(
    rows: Sequence[Sequence[object]], rhs: Sequence[object]
) -> Optional[Vector]:
    """
    One solution of ``rows @ x = rhs`` with free variables at zero,
    ``None`` when the system is inconsistent.

    >>> solve([[1, 1], [1, -1]], [2, 0])
    [Fraction(1, 1), Fraction(1, 1)]
    """
    if not rows:
        return []
    width = len(rows[0])
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == width:
        return None

    solution = [Fraction(0)] * width
    for r, col in enumerate(pivots):
        solution[col] = reduced[r][width]
    return solution


def nullspace(rows: Sequence[Sequence[object]], width: int) -> List[Vector]:
    """
    A basis of ``{x : rows @ x = 0}``, one vector per free column.

    >>> nullspace([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]], 4)
    [[Fraction(-1, 1), Fraction(1, 1), Fraction(-1, 1), Fraction(1, 1)]]
    """
    if not rows:
        return [[Fraction(int(i == j)) for i in range(width)] for j in range(width)]

    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * width
        vector[free] = Fraction(1)
        for r, col in enumerate(pivots):
            vector[col] = -reduced[r][free]
        basis.append(vector)
    return basis


def in_row_space(rows: Sequence[Sequence[object]], vector: Sequence[object]) -> bool:
    """
    >>> in_row_space([[1, 1, 0], [0, 1, 1]], [1, 0, -1])
    True
    >>> in_row_space([[1, 1, 0], [0, 1, 1]], [1, 0, 0])
    False
    """
    return rank(list(rows) + [list(vector)]) == rank(rows)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """
    Fraction-free determinant of an integer matrix.

    >>> bareiss_determinant([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    2
    """
    matrix = [list(row) for row in rows]
    size = len(matrix)
    if size == 0:
        return 1

    sign = 1
    previous = 1
    for k in range(size - 1):
        if matrix[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if matrix[i][k] != 0), None)
            if swap is None:
                return 0
            matrix[k], matrix[swap] = matrix[swap], matrix[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                # exact by Sylvester's identity
                matrix[i][j] = (
                    matrix[i][j] * matrix[k][k] - matrix[i][k] * matrix[k][j]
                ) // previous
        previous = matrix[k][k]
    return sign * matrix[size - 1][size - 1]


def integerize(vector: Sequence[Fraction]) -> List[int]:
    """
    Scale to coprime integers with the same direction.

    >>> integerize([Fraction(1, 2), Fraction(-1, 3), Fraction(0)])
    [3, -2, 0]
    """
    denominator = 1
    for x in vector:
        step = math.gcd(denominator, x.denominator)
        denominator = denominator // step * x.denominator
    scaled = [int(x * denominator) for x in vector]
    common = 0
    for x in scaled:
        common = math.gcd(common, x)
    if common > 1:
        scaled = [x // common for x in scaled]
    return scaled


def mat_vec(rows: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]) -> Vector:
    return [sum((a * x for a, x in zip(row, vector)), Fraction(0)) for row in rows]


__all__ = (
    "Matrix",
    "Vector",
    "bareiss_determinant",
    "in_row_space",
    "integerize",
    "mat_vec",
    "nullspace",
    "rank",
    "rref",
    "solve",
    "to_matrix",
)
