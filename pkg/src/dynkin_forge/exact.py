"""Exact rational linear algebra on plain nested lists.

Everything here goes through sympy's DomainMatrix over QQ, so ranks,
determinants and solutions are exact; callers only ever see Fractions.
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import exceptions

Matrix = List[List[Fraction]]


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions, "p/q" strings or QQ elements to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    return Fraction(int(value.numerator), int(value.denominator))


def to_domain_matrix(rows: Sequence[Sequence]) -> DomainMatrix:
    """Build a DomainMatrix over QQ from a rectangular nested sequence.

    Raises:
        exceptions.ShapeError: for ragged rows.
    """
    height = len(rows)
    width = len(rows[0]) if height else 0
    entries = []
    for row in rows:
        if len(row) != width:
            raise exceptions.ShapeError(
                f"Ragged matrix: expected rows of length {width}.")
        entries.append([QQ(to_fraction(x).numerator, to_fraction(x).denominator)
                        for x in row])
    return DomainMatrix(entries, (height, width), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> Matrix:
    """Convert back to nested lists of Fractions."""
    return [[to_fraction(x) for x in row] for row in matrix.to_list()]


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank; the empty matrix has rank 0."""
    if len(rows) == 0 or len(rows[0]) == 0:
        return 0
    return int(to_domain_matrix(rows).rank())


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix; the 0x0 determinant is 1.

    Raises:
        exceptions.ShapeError: for non-square input.
    """
    if len(rows) == 0:
        return Fraction(1)
    if any(len(row) != len(rows) for row in rows):
        raise exceptions.ShapeError("Determinant of a non-square matrix.")
    return to_fraction(to_domain_matrix(rows).det())


def inverse(rows: Sequence[Sequence]) -> Matrix:
    """Exact inverse.

    Raises:
        exceptions.ShapeError: for singular or non-square input.
    """
    if determinant(rows) == 0:
        raise exceptions.ShapeError("The matrix is singular.")
    return from_domain_matrix(to_domain_matrix(rows).inv())


def solve(rows: Sequence[Sequence],
          rhs: Sequence) -> Optional[List[Fraction]]:
    """One solution x of rows * x = rhs, or None when there is none.

    Free variables are set to zero.

    Args:
        rows: coefficient matrix, one row per equation.
        rhs: right hand side, one entry per equation.

    Returns:
        List[Fraction] or None.
    """
    if len(rows) != len(rhs):
        raise exceptions.ShapeError(
            f"{len(rows)} equations but {len(rhs)} right hand sides.")
    width = len(rows[0]) if rows else 0
    if len(rows) == 0:
        return [Fraction(0)] * width
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = to_domain_matrix(augmented).rref()
    reduced_rows = from_domain_matrix(reduced)
    if width in pivots:
        return None
    solution = [Fraction(0)] * width
    for row_index, column in enumerate(pivots):
        row = reduced_rows[row_index]
        solution[column] = row[width] / row[column]
    return solution


def mat_vec(rows: Sequence[Sequence], vector: Sequence) -> List[Fraction]:
    """Matrix times column vector."""
    return [sum((Fraction(a) * b for a, b in zip(row, vector)), Fraction(0))
            for row in rows]


def vec_mat(vector: Sequence, rows: Sequence[Sequence]) -> List[Fraction]:
    """Row vector times matrix."""
    width = len(rows[0]) if rows else 0
    return [sum((Fraction(vector[i]) * rows[i][j] for i in range(len(rows))),
                Fraction(0))
            for j in range(width)]


def format_rational(value) -> str:
    """Serialize a rational as "p/q", or "p" when integral."""
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
