r"""Display names for irreducible representations of simple Lie algebras.

Names are built from rules for the classical families
(C^n, Λ^k C^n, S^m C^n, spin representations) and looked up in
rep_names.csv for the exceptional algebras.

D4 has three 8-dimensional representations permuted by triality. Which of
them is the "vector" representation is a convention, so the names for
those weights come with a warning.
"""

from typing import Sequence, Tuple
import warnings

from . import data_tables
from . import exceptions

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def superscript(number: int) -> str:
    """Unicode superscript digits, e.g. 27 -> "²⁷"."""
    return str(number).translate(_SUPERSCRIPTS)


def _defining(family: str, rank: int) -> int:
    """Dimension of the defining representation."""
    return {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank, "D": 2 * rank}[family]


def _single_support(weight: Sequence[int]) -> Tuple[int, int]:
    """(1-based node, coefficient) of a weight supported on one node, else (0, 0)."""
    support = [(k + 1, c) for k, c in enumerate(weight) if c]
    if len(support) == 1:
        return support[0]
    return 0, 0


def display_name(lie_type: str, weight: Sequence[int]) -> str:
    """Return the display name of an irreducible representation.

    Args:
        lie_type (str): canonical simple type, e.g. "A7".
        weight (Sequence[int]): highest weight in fundamental weight
            coordinates, Bourbaki order.

    Raises:
        exceptions.ShapeError: if the weight has the wrong length.

    Returns:
        name (str): For example:
            display_name("A7", (0, 0, 1, 0, 0, 0, 0)) -> "Λ³C⁸"
            display_name("A2", (2, 0)) -> "S²C³"
            display_name("E6", (1, 0, 0, 0, 0, 0)) -> "C²⁷"
    """
    family, rank = lie_type[0], int(lie_type[1:])
    weight = tuple(int(c) for c in weight)
    if len(weight) != rank:
        raise exceptions.ShapeError(
            f"A weight of {lie_type} needs {rank} coordinates, not {len(weight)}.")
    if not any(weight):
        return "C"

    key = (lie_type, ",".join(str(c) for c in weight))
    if key in data_tables.REP_NAMES:
        return data_tables.REP_NAMES[key]

    node, coefficient = _single_support(weight)
    if family in "ABCD" and node:
        dimension = superscript(_defining(family, rank))
        if lie_type == "D4" and coefficient == 1 and node in (1, 3, 4):
            warnings.warn(("The three 8-dimensional representations of D4 are"
                           " permuted by triality; the name follows Bourbaki's"
                           " numbering of the nodes."), exceptions.DynkinForgeWarning)
        if family == "A":
            if coefficient == 1:
                return f"C{dimension}" if node == 1 else f"Λ{superscript(node)}C{dimension}"
            if node == 1:
                return f"S{superscript(coefficient)}C{dimension}"
            if node == rank:
                return f"S{superscript(coefficient)}(C{dimension})*"
        elif coefficient == 1 and node == 1:
            return f"C{dimension}"
        elif family == "B" and coefficient == 1 and node == rank:
            return "S"
        elif family == "D" and coefficient == 1 and node == rank:
            return "S⁺"
        elif family == "D" and coefficient == 1 and node == rank - 1:
            return "S⁻"
    return f"V({','.join(str(c) for c in weight)})"


def tensor_name(lie_types: Sequence[str],
                weights: Sequence[Sequence[int]]) -> str:
    """Join the names of the nontrivial factors with "⊗".

    For example:
        tensor_name(["A1", "A4"], [(1,), (0, 1, 0, 0)]) -> "C²⊗Λ²C⁵"
    """
    if len(lie_types) != len(weights):
        raise exceptions.ShapeError(
            f"{len(lie_types)} factors but {len(weights)} weights.")
    factors = [display_name(lie_type, weight)
               for lie_type, weight in zip(lie_types, weights) if any(weight)]
    return "⊗".join(factors) if factors else "C"
