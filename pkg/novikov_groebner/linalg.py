"""
Exact Linear Algebra
====================

Fraction-free row reduction over ℚ and a few matrix helpers shared by the `poly`, `algebra`,
`variety` and `iso` modules.

Rows are cleared of denominators and eliminated with Bareiss' integer-preserving update, so all
intermediate values stay integers and every division is exact. Pivots are chosen
deterministically: the first row (from the top) with a nonzero entry in the current column.

The determinant and adjugate helpers work for any entries supporting `+`, `-` and `*` (in
particular `poly.Polynomial`), using cofactor expansion, which is adequate for the small
dimensions handled here.
"""  # noqa: E501

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from fractions import Fraction
from typing import Any, TypeVar

T = TypeVar("T")

Matrix = list[list[Fraction]]


class SingularMatrixError(Exception):
    pass


def _integer_rows(rows: Sequence[Sequence[Fraction | int]]) -> list[list[int]]:
    result: list[list[int]] = []

    for row in rows:
        values = [Fraction(v) for v in row]
        scale = math.lcm(1, *(v.denominator for v in values))
        result.append([int(v * scale) for v in values])

    return result


def echelon(rows: Sequence[Sequence[Fraction | int]]) -> tuple[list[list[int]], list[int]]:
    """
    Fraction-free row echelon form.

    Returns:
     - The integer echelon rows (zero rows dropped) and the pivot columns.
    """
    matrix = _integer_rows(rows)

    if not matrix:
        return [], []

    row_count = len(matrix)
    column_count = len(matrix[0])
    previous = 1
    r = 0
    pivots: list[int] = []

    for c in range(column_count):
        if r == row_count:
            break

        p = next((i for i in range(r, row_count) if matrix[i][c]), None)

        if p is None:
            continue

        matrix[r], matrix[p] = matrix[p], matrix[r]
        pivot = matrix[r][c]

        for i in range(r + 1, row_count):
            factor = matrix[i][c]
            row = matrix[i]

            for j in range(c + 1, column_count):
                row[j] = (pivot * row[j] - factor * matrix[r][j]) // previous

            row[c] = 0

        previous = pivot
        pivots.append(c)
        r += 1

    return matrix[: len(pivots)], pivots


def rref(rows: Sequence[Sequence[Fraction | int]]) -> tuple[Matrix, list[int]]:
    """
    Reduced row echelon form over ℚ: pivots equal 1 and are the only nonzero entry of their column.
    """
    integer_rows, pivots = echelon(rows)
    matrix = [[Fraction(v) for v in row] for row in integer_rows]

    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        lead = matrix[r][c]
        matrix[r] = [v / lead for v in matrix[r]]

        for i in range(r):
            factor = matrix[i][c]

            if factor:
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]

    return matrix, pivots


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    return len(echelon(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction | int]], column_count: int) -> Matrix:
    """
    Basis of `{v : rows · v = 0}`, one vector per free column, in column order.
    """
    if not rows:
        return [[Fraction(int(i == j)) for i in range(column_count)] for j in range(column_count)]

    matrix, pivots = rref(rows)
    free = [c for c in range(column_count) if c not in pivots]
    basis: Matrix = []

    for f in free:
        vector = [Fraction(0)] * column_count
        vector[f] = Fraction(1)

        for r, c in enumerate(pivots):
            vector[c] = -matrix[r][f]

        basis.append(vector)

    return basis


def solve(matrix: Sequence[Sequence[Fraction | int]], rhs: Sequence[Fraction | int]) -> list[Fraction]:
    """
    Unique solution of a square system.

    Raises:
     - SingularMatrixError: If the matrix is singular.
    """
    n = len(matrix)
    augmented = [[*row, b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)

    if pivots != list(range(n)):
        raise SingularMatrixError("System has no unique solution")

    return [reduced[i][n] for i in range(n)]


def inverse(matrix: Sequence[Sequence[Fraction | int]]) -> Matrix:
    n = len(matrix)
    augmented = [[*row, *(Fraction(int(i == j)) for j in range(n))] for i, row in enumerate(matrix)]
    reduced, pivots = rref(augmented)

    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("Matrix is not invertible")

    return [row[n:] for row in reduced]


def identity(n: int, one: T, zero: T) -> list[list[T]]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]], zero: Any) -> list[list[Any]]:
    inner = len(b)
    columns = len(b[0]) if b else 0
    result = []

    for row in a:
        out = []

        for j in range(columns):
            total = zero

            for k in range(inner):
                if row[k] and b[k][j]:
                    total = total + row[k] * b[k][j]

            out.append(total)

        result.append(out)

    return result


def minor(matrix: Sequence[Sequence[T]], row: int, column: int) -> list[list[T]]:
    return [
        [value for j, value in enumerate(r) if j != column]
        for i, r in enumerate(matrix)
        if i != row
    ]


def determinant(matrix: Sequence[Sequence[Any]], zero: Any) -> Any:
    """
    Cofactor expansion along the first row, skipping zero entries.
    """
    n = len(matrix)

    if n == 0:
        return zero + 1

    if n == 1:
        return matrix[0][0]

    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]

    total = zero

    for j, entry in enumerate(matrix[0]):
        if not entry:
            continue

        term = entry * determinant(minor(matrix, 0, j), zero)
        total = total + term if j % 2 == 0 else total - term

    return total


def adjugate(matrix: Sequence[Sequence[Any]], zero: Any) -> list[list[Any]]:
    """
    Transpose of the cofactor matrix, so that `matrix · adjugate = det · I`.
    """
    n = len(matrix)

    if n == 1:
        return [[zero + 1]]

    result: list[list[Any]] = [[zero] * n for _ in range(n)]

    for i in range(n):
        for j in range(n):
            cofactor = determinant(minor(matrix, i, j), zero)
            result[j][i] = cofactor if (i + j) % 2 == 0 else zero - cofactor

    return result


def map_entries(matrix: Sequence[Sequence[T]], function: Callable[[T], Any]) -> list[list[Any]]:
    return [[function(v) for v in row] for row in matrix]


def signature(form: Sequence[Sequence[Fraction | int]]) -> tuple[int, int]:
    """
    `(positive, negative)` inertia of a symmetric rational matrix, by congruence
    diagonalization.
    """
    matrix = [[Fraction(v) for v in row] for row in form]
    positive = negative = 0

    while matrix:
        n = len(matrix)
        p = next((i for i in range(n) if matrix[i][i]), None)

        if p is None:
            pair = next(
                ((i, j) for i in range(n) for j in range(i + 1, n) if matrix[i][j]), None
            )

            if pair is None:
                break

            # e_i <- e_i + e_j makes the (i, i) entry 2·m_ij
            i, j = pair
            matrix[i] = [a + b for a, b in zip(matrix[i], matrix[j])]

            for row in matrix:
                row[i] += row[j]

            p = i

        pivot = matrix[p][p]

        if pivot > 0:
            positive += 1
        else:
            negative += 1

        rest = [k for k in range(n) if k != p]
        matrix = [
            [matrix[a][b] - matrix[a][p] * matrix[p][b] / pivot for b in rest] for a in rest
        ]

    return positive, negative
