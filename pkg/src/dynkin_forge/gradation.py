"""Z-gradations of a semisimple Lie algebra from one marked node.

Marking the node alpha_0 puts a root in level i when its alpha_0
coordinate is i. Level 0 together with the Cartan subalgebra is the Levi
factor g_0, the other levels are the graded pieces g_i.

Nodes are Bourbaki numbered from 1; borel_de_siebenthal also accepts 0
for the extra node -theta of the extended diagram.
"""

import dataclasses
import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Tuple

from . import exact
from . import exceptions
from . import rootsys
from .rootsys import DynkinDiagram, Root, RootSystem

_logger = logging.getLogger("dynkin-forge")


@dataclasses.dataclass(frozen=True)
class NodeChoice:
    """A diagram with one marked node.

    Attributes:
        diagram (DynkinDiagram): the ambient diagram.
        node (int): Bourbaki number of alpha_0, counted through all
            components of a product diagram.
    """

    diagram: DynkinDiagram
    node: int

    def __post_init__(self):
        """Check the node lies in the diagram.

        Raises:
            exceptions.NodeIndexError
        """
        if not 1 <= self.node <= self.diagram.rank:
            raise exceptions.NodeIndexError(self.node, self.diagram.rank)

    @classmethod
    def parse(cls, diagram: str, node: int) -> "NodeChoice":
        """Choice from a diagram name, e.g. NodeChoice.parse("E8", 2)."""
        return cls(DynkinDiagram.parse(diagram), int(node))

    @property
    def position(self) -> int:
        """0-based position of alpha_0 in root coordinates."""
        return self.node - 1

    @property
    def component(self) -> int:
        """Index of the simple component holding alpha_0."""
        return self.diagram.component_of(self.position)

    @property
    def root_system(self) -> RootSystem:
        """Root system of the ambient diagram."""
        return rootsys.build_root_system(self.diagram)

    def __str__(self) -> str:
        """E.g. "E8 node 2"."""
        return f"{self.diagram.name} node {self.node}"


@dataclasses.dataclass(frozen=True)
class Gradation:
    """Roots of a diagram sorted into levels by a marked node.

    Attributes:
        choice (NodeChoice): the diagram and marked node.
        levels (Dict[int, FrozenSet[Root]]): level -> roots, every level
            from -order to order present (level 0 may be empty).
        order (int): the largest level.
        c_coords (Tuple[Fraction, ...]): grading element in coroot
            coordinates, alpha_0(c) = 1 and alpha_j(c) = 0 otherwise.
    """

    choice: NodeChoice
    levels: Dict[int, FrozenSet[Root]]
    order: int
    c_coords: Tuple[Fraction, ...]

    @property
    def root_system(self) -> RootSystem:
        """Root system of the ambient diagram."""
        return self.choice.root_system

    def level(self, i: int) -> FrozenSet[Root]:
        """Roots of level i; empty beyond the order."""
        return self.levels.get(i, frozenset())

    def level_of(self, root: Root) -> int:
        """Level of a root, its alpha_0 coordinate."""
        return root[self.choice.position]

    def sorted_level(self, i: int) -> Tuple[Root, ...]:
        """Roots of level i sorted by height, then coordinates."""
        return tuple(sorted(self.level(i),
                            key=lambda root: (rootsys.height(root), root)))

    def to_json(self) -> dict:
        """{"levels": {"-1": [[...], ...], ...}, "order": n, "c": ["p/q", ...]}."""
        return {
            "levels": {str(i): [list(root) for root in self.sorted_level(i)]
                       for i in sorted(self.levels, reverse=True)},
            "order": self.order,
            "c": [exact.format_rational(value) for value in self.c_coords],
        }


def grade(choice: NodeChoice) -> Gradation:
    """Split the roots into levels by their alpha_0 coordinate.

    Components without alpha_0 only contribute to level 0.

    Args:
        choice (NodeChoice): diagram and marked node.

    Returns:
        Gradation
        For example:
            dims(grade(NodeChoice.parse("E8", 2)))
            -> {3: 8, 2: 28, 1: 56, 0: 64, -1: 56, -2: 28, -3: 8}
    """
    rs = choice.root_system
    position = choice.position
    order = max(root[position] for root in rs.roots)
    levels = {i: set() for i in range(-order, order + 1)}
    for root in rs.roots:
        levels[root[position]].add(root)
    unit = [Fraction(1) if k == position else Fraction(0) for k in range(rs.rank)]
    c_coords = tuple(exact.mat_vec(rootsys.inverse_cartan(rs.cartan), unit))
    _logger.debug("Graded %s: order %d", choice, order)
    return Gradation(
        choice=choice,
        levels={i: frozenset(roots) for i, roots in levels.items()},
        order=order,
        c_coords=c_coords)


def dims(gr: Gradation) -> Dict[int, int]:
    """Dimension of every graded piece, highest level first.

    g_0 counts the Cartan subalgebra as well as the level 0 roots.
    """
    rank = gr.root_system.rank
    return {i: len(gr.level(i)) + (rank if i == 0 else 0)
            for i in sorted(gr.levels, reverse=True)}


def order_of(choice: NodeChoice) -> int:
    """Coefficient of alpha_0 in the highest root of its component.

    For example:
        order_of(NodeChoice.parse("G2", 1)) -> 3
    """
    rs = choice.root_system
    return rootsys.highest_root(rs, choice.component)[choice.position]


def level_zero_subsystem(gr: Gradation, m: int) -> FrozenSet[Root]:
    """Roots whose level is a multiple of m.

    These are the roots of the fixed subalgebra of the order m
    automorphism exp(2 pi i c / m).

    Raises:
        exceptions.DivisibilityError: if m does not divide the order.
    """
    if m < 1 or gr.order % m != 0:
        raise exceptions.DivisibilityError(m, gr.order)
    return frozenset(root for i, roots in gr.levels.items() if i % m == 0
                     for root in roots)


def zm_pieces(gr: Gradation, m: int) -> Dict[int, FrozenSet[Root]]:
    """Roots collected by level modulo m, residues 0..m-1.

    Raises:
        exceptions.DomainError: for m < 2.
    """
    if m < 2:
        raise exceptions.DomainError(f"A Z_m-gradation needs m >= 2, not {m}.")
    pieces = {j: set() for j in range(m)}
    for i, roots in gr.levels.items():
        pieces[i % m].update(roots)
    return {j: frozenset(roots) for j, roots in pieces.items()}


def closed_symmetric(rs: RootSystem, subset: Iterable[Root]) -> bool:
    """Whether a set of roots is closed under negation and root sums.

    For example:
        closed_symmetric(A2, {(1, 0)}) -> False
    """
    members = {tuple(root) for root in subset}
    for root in members:
        if tuple(-c for c in root) not in members:
            return False
    for first in members:
        for second in members:
            total = tuple(a + b for a, b in zip(first, second))
            if total in rs.roots and total not in members:
                return False
    return True


def borel_de_siebenthal(diagram: DynkinDiagram, node: int) -> DynkinDiagram:
    """Semisimple type of the subalgebra from deleting a node of the extended diagram.

    Node 0 is -theta. When the mark of the deleted node is prime the
    remaining extended nodes span a maximal semisimple subalgebra of the
    same rank; when the mark is 1 the remaining simple roots give the
    semisimple part of a maximal Levi subalgebra.

    Args:
        diagram (DynkinDiagram): a simple diagram.
        node (int): 0 for -theta, otherwise a Bourbaki node number.

    Raises:
        exceptions.Unsupported: for a product diagram or a mark that is
            neither 1 nor prime (4 and 6).
        exceptions.NodeIndexError: for a node outside 0..rank.

    Returns:
        DynkinDiagram
        For example:
            borel_de_siebenthal(DynkinDiagram.parse("E8"), 1) -> D8
    """
    if not diagram.is_simple():
        raise exceptions.Unsupported(
            f"{diagram.name} is not simple; the extended diagram is per component.")
    if not 0 <= node <= diagram.rank:
        raise exceptions.NodeIndexError(node, diagram.rank)
    if node == 0:
        return diagram
    choice = NodeChoice(diagram, node)
    rs = choice.root_system
    mark = order_of(choice)
    if mark == 1:
        subset = grade(choice).level(0)
    elif mark in (2, 3, 5):
        subset = level_zero_subsystem(grade(choice), mark)
    else:
        raise exceptions.Unsupported(
            f"Node {node} of {diagram.name} has mark {mark}, neither 1 nor prime.")
    subdiagram, _ = rootsys.subsystem_diagram(rs, subset)
    return subdiagram
