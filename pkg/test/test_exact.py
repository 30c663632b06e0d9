"""Test the exact linear algebra helpers."""

from fractions import Fraction
import pytest
import dynkin_forge.exceptions
from dynkin_forge import exact


def test_to_fraction():
    """Ints, strings and Fractions all convert."""
    assert exact.to_fraction(3) == Fraction(3)
    assert exact.to_fraction("-2/6") == Fraction(-1, 3)
    assert exact.to_fraction(Fraction(1, 2)) == Fraction(1, 2)


def test_rank_and_determinant():
    """Exact rank and determinant."""
    assert exact.rank([[1, 2], [2, 4]]) == 1
    assert exact.rank([]) == 0
    assert exact.determinant([[2, -1], [-1, 2]]) == 3
    assert exact.determinant([]) == 1
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        exact.determinant([[1, 2]])


def test_inverse():
    """The inverse of the A2 Cartan matrix has thirds."""
    assert exact.inverse([[2, -1], [-1, 2]]) == [[Fraction(2, 3), Fraction(1, 3)],
                                                 [Fraction(1, 3), Fraction(2, 3)]]
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        exact.inverse([[1, 1], [1, 1]])


def test_solve():
    """Consistent systems are solved, inconsistent ones give None."""
    assert exact.solve([[1, 1], [1, -1]], [2, 0]) == [1, 1]
    assert exact.solve([[1, 1], [2, 2]], [1, 3]) is None
    # free variables are zero
    assert exact.solve([[1, 1]], [4]) == [4, 0]


def test_ragged():
    """Ragged rows are rejected."""
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        exact.rank([[1, 2], [3]])


def test_format_rational():
    """Integral values print without a denominator."""
    assert exact.format_rational(Fraction(4, 2)) == "2"
    assert exact.format_rational(Fraction(-1, 3)) == "-1/3"
