r"""Dynkin Forge.

Z-gradations of complex semisimple Lie algebras from a marked node of
the Dynkin diagram, the Levi data and graded pieces they produce, and
the inverse construction: adding a node to a diagram to recover the
ambient algebra. Everything is exact rational arithmetic.

Example uses:
    dynkin_forge.grade("E8", 2).order -> 3
    dynkin_forge.levi("F4", 3).diagram0.name -> "A1xA2"
    dynkin_forge.find_type("so10") -> "D5"
    dynkin_forge.identify([[2, -1], [-3, 2]]) -> (G2, (0, 1))

Submodules:
    dynkin_forge.rootsys builds Cartan matrices, root systems and Weyl orbits
    dynkin_forge.gradation sorts roots into levels by a marked node
    dynkin_forge.levirep holds Levi data and the graded pieces as representations
    dynkin_forge.augment goes from Levi data back to the ambient algebra
    dynkin_forge.chevalley realizes the algebra in a Chevalley basis
    dynkin_forge.glorbits handles pairs of 2-forms and their binary forms
    dynkin_forge.tables regenerates the reference tables
    dynkin_forge.verify runs the full invariant suite
    dynkin_forge.cli is the `dynkin-forge` command

Hidden submodules:
    dynkin_forge.data_tables loads the CSV files in the data directory
    dynkin_forge.names matches free text to Lie type names
    dynkin_forge.repnames names representations, e.g. "Λ³C⁸"
    dynkin_forge.exact wraps sympy's exact matrices
    dynkin_forge.exceptions holds exceptions and the warning class

Numbering:
    Nodes are numbered as in Bourbaki, starting from 1.
"""

from typing import Optional, Sequence, Tuple

__version__ = "1.0.0"

from . import gradation
from . import levirep
from . import names
from . import rootsys

# Bring the following elements forward in the namespace
from .gradation import Gradation, NodeChoice
from .rootsys import CartanMatrix, DynkinDiagram, RootSystem, WeightVector


def find_type(nickname: Optional[str], allow_fuzzy: bool = True) -> Optional[str]:
    """Canonical simple type for a free-text name.

    Fuzzy matches are allowed by default and logged as renames.

    For example:
        find_type("sp6") -> "C3"
    """
    return names.official(nickname, allow_fuzzy_match=allow_fuzzy)


def diagram(text: str) -> DynkinDiagram:
    """Dynkin diagram from a (product) name such as "A1xA4"."""
    return DynkinDiagram.parse(text)


def grade(text: str, node: int) -> Gradation:
    """Gradation of the diagram `text` at Bourbaki node `node`."""
    return gradation.grade(NodeChoice.parse(text, node))


def levi(text: str, node: int) -> levirep.LeviData:
    """Levi data of the diagram `text` at Bourbaki node `node`."""
    return levirep.levi(NodeChoice.parse(text, node))


def identify(entries: Sequence[Sequence[int]]) -> Tuple[DynkinDiagram, Tuple[int, ...]]:
    """Finite type of a Cartan matrix and the relabelling of its nodes."""
    return rootsys.identify_cartan_type(entries)
