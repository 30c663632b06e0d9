"""Levi data and the graded pieces as representations of g_0.

Deleting the marked node leaves the diagram of the semisimple part of
g_0. Each graded piece g_i is a representation of g_0 whose weights are
the restrictions of the roots of level i; restricting a root means reading
off its pairings with the remaining simple roots.

Labelling:
    Each Levi component gets Bourbaki numbering. Where a diagram
    automorphism leaves a choice (A_n reversed, D_n spin nodes, E6
    reversed) the labelling making the highest weight of g_-1
    lexicographically largest is used, so Λ³C⁸ is ω3 rather than ω5.

Component order:
    Alphabetical by family, then ascending rank, then descending
    connecting multiplicity, then position in the ambient diagram.
"""

import dataclasses
import functools
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import pandas as pd

from . import data_tables
from . import exceptions
from . import names
from . import rootsys
from .gradation import Gradation, NodeChoice
from .rootsys import DynkinDiagram, WeightVector

_logger = logging.getLogger("dynkin-forge")

CENTER_DIMENSION = 1
"""Dimension of the center of g_0 for a single marked node."""


@dataclasses.dataclass(frozen=True)
class LeviComponent:
    """One simple ideal of the semisimple part of g_0.

    Attributes:
        family (str): Cartan family letter.
        rank (int): number of nodes.
        nodes (Tuple[int, ...]): 0-based ambient positions of the
            component's nodes, in the component's Bourbaki order.
        nu (int): connecting multiplicity to the marked node.
    """

    family: str
    rank: int
    nodes: Tuple[int, ...]
    nu: int

    @property
    def lie_type(self) -> str:
        """Canonical name, e.g. "A4"."""
        return f"{self.family}{self.rank}"


@dataclasses.dataclass(frozen=True)
class LeviData:
    """The semisimple part of g_0 and how it sits in the ambient diagram.

    Attributes:
        choice (NodeChoice): ambient diagram and marked node.
        components (Tuple[LeviComponent, ...]): simple ideals in order.
    """

    choice: NodeChoice
    components: Tuple[LeviComponent, ...]

    @property
    def diagram0(self) -> DynkinDiagram:
        """Diagram of the semisimple part, e.g. A1xA4."""
        return DynkinDiagram(tuple((c.family, c.rank) for c in self.components))

    @property
    def center_dimension(self) -> int:
        """Always 1: one node is marked."""
        return CENTER_DIMENSION

    @property
    def ambient_nodes(self) -> Tuple[int, ...]:
        """Ambient 0-based position of each node of diagram0, in order."""
        return tuple(node for component in self.components
                     for node in component.nodes)

    def split(self, weight: WeightVector) -> List[Tuple[int, ...]]:
        """Cut a diagram0 weight into one integer tuple per component."""
        values = weight.as_ints()
        parts = []
        start = 0
        for component in self.components:
            parts.append(values[start:start + component.rank])
            start += component.rank
        return parts


@dataclasses.dataclass(frozen=True)
class PieceRep:
    """A graded piece g_i as a representation of g_0.

    Attributes:
        level (int): i.
        weights (Tuple[WeightVector, ...]): restrictions of the level i
            roots, in the order of Gradation.sorted_level.
        highest_weight (WeightVector): restriction of the highest root of
            the level.
        dim (int): number of roots of the level.
    """

    level: int
    weights: Tuple[WeightVector, ...]
    highest_weight: WeightVector
    dim: int

    def is_multiplicity_free(self) -> bool:
        """Whether all weights are distinct."""
        return len(set(self.weights)) == len(self.weights)


@dataclasses.dataclass(frozen=True)
class ConnectingMultiplicities:
    """One bond multiplicity per Levi component.

    Attributes:
        values (Tuple[int, ...]): entries in 0..3, Levi component order.
    """

    values: Tuple[int, ...]

    def __post_init__(self):
        """Check the range of every entry.

        Raises:
            exceptions.DomainError
        """
        values = tuple(int(v) for v in self.values)
        if any(not 0 <= v <= 3 for v in values):
            raise exceptions.DomainError(
                f"Connecting multiplicities must lie in 0..3, not {list(values)}.")
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, text: str) -> "ConnectingMultiplicities":
        """Read "1,2" (or "" for no components)."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as error:
            raise exceptions.DomainError(
                f"Cannot read the multiplicities '{text}'.") from error

    def has_single_multiple_bond(self) -> bool:
        """At most one entry is 2 or 3."""
        return sum(1 for v in self.values if v >= 2) <= 1

    def __len__(self) -> int:
        """Number of components."""
        return len(self.values)


def _component_labelling(entries: Sequence[Sequence[int]], position: int,
                         nodes: Tuple[int, ...]) -> Tuple[str, int, Tuple[int, ...]]:
    """Type of one Levi component and its nodes in Bourbaki order."""
    block = [[entries[i][j] for j in nodes] for i in nodes]
    diagram, permutation = rootsys.identify_cartan_type(block)
    (family, rank), = diagram.components
    candidates = []
    for automorphism in rootsys.diagram_automorphisms(diagram):
        labels = [automorphism[permutation[k]] for k in range(rank)]
        weight = [0] * rank
        ordered = [0] * rank
        for k, node in enumerate(nodes):
            weight[labels[k]] = -entries[position][node]
            ordered[labels[k]] = node
        candidates.append((tuple(weight), tuple(ordered)))
    # first maximum wins, identity automorphism first
    best = max(candidates, key=lambda candidate: candidate[0])
    return family, rank, best[1]


@functools.lru_cache(maxsize=None)
def levi(choice: NodeChoice) -> LeviData:
    """Levi components of a marked node with their labelling and multiplicities.

    Args:
        choice (NodeChoice): ambient diagram and marked node.

    Returns:
        LeviData
        For example:
            levi(NodeChoice.parse("E8", 4)).diagram0.name -> "A1xA2xA4"
    """
    rs = choice.root_system
    entries = rs.cartan.entries
    position = choice.position
    remaining = [j for j in range(rs.rank) if j != position]
    block = [[entries[i][j] for j in remaining] for i in remaining]
    found = []
    for local in rootsys.connected_components(block):
        nodes = tuple(remaining[k] for k in local)
        family, rank, ordered = _component_labelling(entries, position, nodes)
        nu = max(-entries[node][position] for node in nodes)
        found.append(LeviComponent(family, rank, ordered, nu))
    found.sort(key=lambda c: (c.family, c.rank, -c.nu, min(c.nodes)))
    _logger.debug("Levi of %s: %s", choice,
                  "x".join(component.lie_type for component in found))
    return LeviData(choice, tuple(found))


def restrict_weight(ld: LeviData, alpha: Sequence[int]) -> WeightVector:
    """Restriction of an ambient root to the Cartan subalgebra of diagram0.

    The coordinates are the pairings <alpha, alpha_j> with the remaining
    simple roots.

    For example:
        restrict_weight(levi(A2 node 1), (-1, 0)) -> WeightVector((1,))
    """
    rs = ld.choice.root_system
    if len(alpha) != rs.rank:
        raise exceptions.ShapeError(
            f"Root of length {len(alpha)} over a diagram of rank {rs.rank}.")
    return WeightVector(tuple(rootsys.pairing(rs, alpha, j)
                              for j in ld.ambient_nodes))


def piece_rep(gr: Gradation, ld: LeviData, i: int) -> PieceRep:
    """Weights and highest weight of the graded piece g_i.

    Raises:
        exceptions.DomainError: for i = 0.
        exceptions.EmptyLevel: if no root has level i.

    Returns:
        PieceRep
        For example:
            piece_rep(E8 node 2, -1).highest_weight -> ω3 of A7, dim 56
    """
    if i == 0:
        raise exceptions.DomainError("g_0 is not one of the graded pieces.")
    roots = gr.sorted_level(i)
    if not roots:
        raise exceptions.EmptyLevel(i)
    weights = tuple(restrict_weight(ld, root) for root in roots)
    # sorted by height, so the last root is the highest
    return PieceRep(level=i, weights=weights,
                    highest_weight=weights[-1], dim=len(roots))


def pieces(gr: Gradation, ld: LeviData) -> List[PieceRep]:
    """Every nonzero level as a PieceRep, from -order up to order."""
    return [piece_rep(gr, ld, i) for i in range(-gr.order, gr.order + 1)
            if i != 0 and gr.level(i)]


def _as_diagram(levi_or_diagram: Union[LeviData, DynkinDiagram]) -> DynkinDiagram:
    if isinstance(levi_or_diagram, LeviData):
        return levi_or_diagram.diagram0
    return levi_or_diagram


def weyl_dim(levi_or_diagram: Union[LeviData, DynkinDiagram],
             w: WeightVector) -> int:
    """Dimension of the irreducible representation with highest weight w.

    Uses the Weyl dimension formula: the product over positive roots of
    (w + rho, alpha) / (rho, alpha).

    Args:
        levi_or_diagram: LeviData (its diagram0 is used) or a diagram.
        w (WeightVector): dominant integral weight.

    Raises:
        exceptions.DomainError: if w is not dominant integral.
        exceptions.ShapeError: if w has the wrong length.

    Returns:
        int: For example:
            weyl_dim(DynkinDiagram.parse("B3"), WeightVector((0, 0, 1))) -> 8
    """
    diagram = _as_diagram(levi_or_diagram)
    if len(w) != diagram.rank:
        raise exceptions.ShapeError(
            f"Weight of length {len(w)} over {diagram.name or 'the empty diagram'}.")
    if not w.is_dominant():
        raise exceptions.DomainError(f"The weight ({w}) is not dominant integral.")
    if diagram.rank == 0:
        return 1
    rs = rootsys.build_root_system(diagram)
    result = Fraction(1)
    for root in rs.positive_roots:
        numerator = sum(root[k] * rs.norms[k] * (w.coeffs[k] + 1)
                        for k in range(rs.rank) if root[k])
        denominator = sum(root[k] * rs.norms[k] for k in range(rs.rank) if root[k])
        result *= Fraction(numerator) / denominator
    assert result.denominator == 1
    return int(result)


def connecting_multiplicities(choice: NodeChoice) -> ConnectingMultiplicities:
    """Bond multiplicity between the marked node and each Levi component.

    For component i this is the largest -<alpha_j, alpha_0> over its nodes.

    For example:
        connecting_multiplicities(NodeChoice.parse("F4", 3)).values -> (1, 2)
    """
    return ConnectingMultiplicities(tuple(c.nu for c in levi(choice).components))


def _rank_range(ranks: str) -> Tuple[int, int]:
    if ranks == "any":
        return 1, 10 ** 9
    low, high = ranks.split("-")
    return int(low), int(high)


def _rule_matches(rule: str, weight: Tuple[int, ...]) -> bool:
    rank = len(weight)
    support = [k for k, c in enumerate(weight) if c]
    if len(support) != 1:
        return False
    node, coefficient = support[0], weight[support[0]]
    if rule == "fundamental":
        return coefficient == 1
    if rule == "multiple_first":
        return node == 0
    if rule == "multiple_last":
        return node == rank - 1
    single = {"first": 0, "last": rank - 1, "second_last": rank - 2}
    return coefficient == 1 and node == single[rule]


def is_listed_wmf(lie_type: str, weight: Sequence[int]) -> bool:
    """Whether a simple algebra's irreducible representation is on the WMF list.

    The trivial representation always counts as listed.

    For example:
        is_listed_wmf("A1", (3,)) -> True
        is_listed_wmf("A2", (1, 1)) -> False
    """
    family, rank = names.split_type(lie_type)
    weight = tuple(int(c) for c in weight)
    if not any(weight):
        return True
    for row in data_tables.WMF_IRREPS.itertuples(index=False):
        low, high = _rank_range(row.ranks)
        if row.family == family and low <= rank <= high \
                and _rule_matches(row.weight_rule, weight):
            return True
    return False


@dataclasses.dataclass(frozen=True)
class TwistedAffineCase:
    """Dimension bookkeeping of one twisted affine decomposition.

    Attributes:
        case (int): row number in twisted_affine.csv.
        ambient (str): the ambient simple type.
        ambient_dim (int): its dimension.
        levi_dim (int): dimension of gl_k x (simple factor).
        rep_dims (Tuple[Tuple[int, int], ...]): (copies, dimension) of each
            summand.
        pvs (str): the prehomogeneous space, e.g. "GL2 x B3".
        pvs_dims (Tuple[int, int]): (dim G_0, dim V) of that space.
    """

    case: int
    ambient: str
    ambient_dim: int
    levi_dim: int
    rep_dims: Tuple[Tuple[int, int], ...]
    pvs: str
    pvs_dims: Tuple[int, int]

    @property
    def total(self) -> int:
        """dim g_0 plus the summands, counted with their copies."""
        return self.levi_dim + sum(copies * dim for copies, dim in self.rep_dims)

    @property
    def passed(self) -> bool:
        """Whether the total equals the ambient dimension."""
        return self.total == self.ambient_dim


def _summand_dim(gl_rank: int, gl_rep: str, lie_type: str, weight: str) -> int:
    diagram = DynkinDiagram.parse(lie_type, allow_fuzzy_match=False)
    simple = weyl_dim(diagram, WeightVector.parse(weight))
    return (gl_rank if gl_rep == "standard" else 1) * simple


def twisted_affine_dim_check(
    table: Optional[pd.DataFrame] = None
) -> List[TwistedAffineCase]:
    """Check dim g = dim g_0 + sum of summand dimensions for the six cases.

    Args:
        table (pd.DataFrame, optional): rows in the twisted_affine.csv
            format. Defaults to data_tables.TWISTED_AFFINE.

    Returns:
        List[TwistedAffineCase]: one entry per case, see `passed`.
        For example the first case checks 45 = 15 + 4·7 + 2·1 for D5.
    """
    if table is None:
        table = data_tables.TWISTED_AFFINE
    cases = []
    for case, rows in table.groupby("case", sort=False):
        ambient = rows.iloc[0].ambient
        family, rank = names.split_type(ambient)
        levi_dim = 0
        rep_dims = []
        pvs = ""
        pvs_dims = (0, 0)
        for row in rows.itertuples(index=False):
            gl_rank = int(row.gl_rank)
            simple_family, simple_rank = names.split_type(row.lie_type)
            group_dim = gl_rank * gl_rank + rootsys.classical_dimension(
                simple_family, simple_rank)
            if row.kind == "levi":
                levi_dim = group_dim
            elif row.kind == "rep":
                rep_dims.append((int(row.copies), _summand_dim(
                    gl_rank, row.gl_rep, row.lie_type, row.weight)))
            elif row.kind == "pvs":
                pvs = f"GL{gl_rank} x {row.lie_type}"
                pvs_dims = (group_dim, _summand_dim(
                    gl_rank, row.gl_rep, row.lie_type, row.weight))
            else:
                raise exceptions.DataLineUnreadable(
                    ",".join(str(value) for value in row),
                    f"the kind '{row.kind}' is not levi, rep or pvs")
        cases.append(TwistedAffineCase(
            case=int(case),
            ambient=ambient,
            ambient_dim=rootsys.classical_dimension(family, rank),
            levi_dim=levi_dim,
            rep_dims=tuple(rep_dims),
            pvs=pvs,
            pvs_dims=pvs_dims))
        _logger.debug("Twisted affine case %s: %d = %d", case,
                      cases[-1].ambient_dim, cases[-1].total)
    return cases
