"""Exact linear algebra over the rationals: Pfaffian and determinant.

The Pfaffian is computed by skew-symmetric Gaussian elimination with pivot
search, O(n^3) exact Fraction operations; a recursive first-row expansion is
kept as a second, independently coded route for cross-checking.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InvalidMatrixError

Matrix = Sequence[Sequence[int | Fraction]]


def _check_skew(m: Matrix) -> None:
    n = len(m)
    if any(len(row) != n for row in m):
        raise InvalidMatrixError("matrix is not square")
    if n % 2 == 1:
        raise InvalidMatrixError(f"Pfaffian needs even dimension, got {n}")
    for i in range(n):
        if m[i][i] != 0:
            raise InvalidMatrixError(f"nonzero diagonal entry at ({i}, {i})")
        for j in range(i + 1, n):
            if m[i][j] != -m[j][i]:
                raise InvalidMatrixError(f"entries ({i},{j}) and ({j},{i}) are not opposite")


def _as_skew(m: Matrix) -> list[list[Fraction]]:
    _check_skew(m)
    return [[Fraction(x) for x in row] for row in m]


def pfaffian(m: Matrix) -> Fraction:
    """Pfaffian of a skew-symmetric matrix; pfaffian(m)**2 == determinant(m)."""
    a = _as_skew(m)
    n = len(a)
    sign = 1
    result = Fraction(1)
    for k in range(0, n, 2):
        pivot_row = next((i for i in range(k + 1, n) if a[k][i] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k + 1:
            a[k + 1], a[pivot_row] = a[pivot_row], a[k + 1]
            for row in a:
                row[k + 1], row[pivot_row] = row[pivot_row], row[k + 1]
            sign = -sign
        p = a[k][k + 1]
        result *= p
        for i in range(k + 2, n):
            for j in range(i + 1, n):
                delta = (a[k][i] * a[k + 1][j] - a[k][j] * a[k + 1][i]) / p
                a[i][j] -= delta
                a[j][i] += delta
    return sign * result


def pfaffian_expand_first_row(m: Matrix) -> Fraction:
    """Pfaffian by the alternating first-row expansion; independent oracle."""
    _check_skew(m)
    a = m  # recursion stays in the entries' native arithmetic

    def expand(idx: tuple[int, ...]):
        if not idx:
            return 1
        first, rest = idx[0], idx[1:]
        total = 0
        sign = 1
        for pos, j in enumerate(rest):
            if a[first][j]:
                total += sign * a[first][j] * expand(rest[:pos] + rest[pos + 1 :])
            sign = -sign
        return total

    return Fraction(expand(tuple(range(len(m)))))


def determinant(m: Matrix) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(m)
    rows = [[Fraction(x) for x in row] for row in m]
    if any(len(row) != n for row in rows):
        raise InvalidMatrixError("matrix is not square")
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for i in range(col + 1, n):
            if rows[i][col] == 0:
                continue
            factor = rows[i][col] * inv
            for j in range(col, n):
                rows[i][j] -= factor * rows[col][j]
    return det
