"""From Levi data back to the ambient algebra.

Given the diagram of g_0^ss, the highest weight omega of g_-1 and the
connecting multiplicities nu, a new node alpha_0 is attached to the
diagram: row 0 of the candidate Cartan matrix holds -<omega, alpha_j>,
column 0 holds -a_i at the one node of component i where omega is
nonzero. If the candidate passes validation its finite type is the
ambient algebra and alpha_0 is the marked node.

Example:
    identify_ambient(AugmentationInput.parse("A7", "0,0,1,0,0,0,0", "1"))
    -> (E8, 2)
"""

import dataclasses
import logging
from typing import List, Sequence, Tuple

import networkx as nx

from . import exceptions
from . import levirep
from . import rootsys
from .gradation import NodeChoice
from .levirep import ConnectingMultiplicities
from .rootsys import CartanMatrix, DynkinDiagram, WeightVector

_logger = logging.getLogger("dynkin-forge")

BOND_CHOICES = ((1, 1), (1, 2), (1, 3), (2, 1), (3, 1))
"""(<omega, alpha_j>, a) pairs an attachment can carry; products above 3 are never finite."""


def parse_omega(text: str) -> WeightVector:
    """Read a per-component weight such as "1;0,1,0,0" into one WeightVector.

    For example:
        parse_omega("1;0,1,0,0") -> WeightVector((1, 0, 1, 0, 0))
    """
    parts = [part.strip() for part in text.split(";")]
    coeffs = []
    for part in parts:
        if part:
            coeffs.extend(WeightVector.parse(part).coeffs)
    return WeightVector(tuple(coeffs))


def format_omega(diagram0: DynkinDiagram, omega: WeightVector) -> str:
    """Inverse of parse_omega: components separated by ";"."""
    values = [str(c) for c in omega.coeffs]
    parts = []
    start = 0
    for _, rank in diagram0.components:
        parts.append(",".join(values[start:start + rank]))
        start += rank
    return ";".join(parts)


@dataclasses.dataclass(frozen=True)
class AugmentationInput:
    """Levi diagram, highest weight of g_-1 and connecting multiplicities.

    Attributes:
        diagram0 (DynkinDiagram): diagram of g_0^ss.
        omega (WeightVector): dominant integral weight over diagram0.
        nu (ConnectingMultiplicities): one entry per component.
    """

    diagram0: DynkinDiagram
    omega: WeightVector
    nu: ConnectingMultiplicities

    def __post_init__(self):
        """Check omega fits diagram0 and is dominant integral.

        Raises:
            exceptions.ShapeError: for a weight of the wrong length.
            exceptions.DomainError: for a weight that is not dominant.
        """
        if len(self.omega) != self.diagram0.rank:
            raise exceptions.ShapeError(
                f"omega has {len(self.omega)} coordinates but"
                f" {self.diagram0.name or 'the empty diagram'} has rank"
                f" {self.diagram0.rank}.")
        if not self.omega.is_dominant():
            raise exceptions.DomainError(
                f"omega ({self.omega}) is not dominant integral.")

    @classmethod
    def parse(cls, levi: str, omega: str, nu: str) -> "AugmentationInput":
        """Input from text, e.g. parse("A1xA4", "1;0,1,0,0", "1,1")."""
        diagram0 = DynkinDiagram(()) if not levi.strip() else DynkinDiagram.parse(levi)
        return cls(diagram0, parse_omega(omega), ConnectingMultiplicities.parse(nu))

    def to_json(self) -> dict:
        """{"levi": "A1xA4", "omega": "1;0,1,0,0", "nu": [1, 1]}."""
        return {"levi": self.diagram0.name,
                "omega": format_omega(self.diagram0, self.omega),
                "nu": list(self.nu.values)}


@dataclasses.dataclass(frozen=True)
class AugmentedMatrix:
    """Candidate Cartan matrix with alpha_0 as node 0.

    Attributes:
        entries (Tuple[Tuple[int, ...], ...]): the candidate, not yet
            validated.
        attachments (Tuple[int, ...]): 0-based diagram0 node joined to
            alpha_0 for each component, or -1 when it stays unattached.
    """

    entries: Tuple[Tuple[int, ...], ...]
    attachments: Tuple[int, ...]

    @property
    def size(self) -> int:
        """Number of nodes, alpha_0 included."""
        return len(self.entries)

    def as_cartan(self) -> CartanMatrix:
        """The candidate as a CartanMatrix (raises InvalidCartanMatrix if it is not one)."""
        return CartanMatrix(self.entries)


@dataclasses.dataclass(frozen=True)
class CheckResult:
    """Outcome of one validation check."""

    name: str
    passed: bool
    detail: str = ""


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    """All validation checks of an augmented matrix, in a fixed order."""

    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(check.passed for check in self.checks)

    @property
    def failed(self) -> List[str]:
        """Names of the failed checks."""
        return [check.name for check in self.checks if not check.passed]

    def to_json(self) -> list:
        """[{"check": ..., "passed": ..., "detail": ...}, ...]."""
        return [{"check": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks]


def build_augmented_matrix(inp: AugmentationInput) -> AugmentedMatrix:
    """Assemble the candidate Cartan matrix of an augmentation.

    Raises:
        exceptions.ShapeError: if nu does not have one entry per component.
        exceptions.CycleError: if omega is nonzero on two nodes of one
            component.
        exceptions.NuPatternError: if a_i = 0 does not match omega
            vanishing on component i.

    Returns:
        AugmentedMatrix
        For example:
            (A1, omega=(1), nu=(3)) -> ((2, -1), (-3, 2)), i.e. G2
    """
    diagram0 = inp.diagram0
    if len(inp.nu) != len(diagram0.components):
        raise exceptions.ShapeError(
            f"nu has {len(inp.nu)} entries for {len(diagram0.components)}"
            " components.")
    weight = inp.omega.as_ints()
    size = diagram0.rank + 1
    entries = [[0] * size for _ in range(size)]
    entries[0][0] = 2
    if diagram0.rank:
        base = rootsys.cartan_matrix(diagram0).entries
        for i in range(diagram0.rank):
            for j in range(diagram0.rank):
                entries[i + 1][j + 1] = base[i][j]
    attachments = []
    for index, ((family, rank), offset) in enumerate(
            zip(diagram0.components, diagram0.offsets)):
        nodes = [offset + k for k in range(rank) if weight[offset + k]]
        if len(nodes) > 1:
            raise exceptions.CycleError(f"{family}{rank}",
                                        [node - offset + 1 for node in nodes])
        multiplicity = inp.nu.values[index]
        if (multiplicity == 0) != (not nodes):
            raise exceptions.NuPatternError(f"{family}{rank}", multiplicity)
        if nodes:
            node = nodes[0]
            entries[0][node + 1] = -weight[node]
            entries[node + 1][0] = -multiplicity
            attachments.append(node)
        else:
            attachments.append(-1)
    return AugmentedMatrix(tuple(tuple(row) for row in entries), tuple(attachments))


def validate(am: AugmentedMatrix) -> ValidationReport:
    """Run every finite type check on a candidate; failures are report entries.

    Checks, in order: Cartan entries, zero pattern, acyclic diagram,
    symmetrizable, principal minors positive.
    """
    entries = am.entries
    problem = None
    for i, row in enumerate(entries):
        for j, value in enumerate(row):
            if i == j and value != 2:
                problem = f"diagonal entry {i} is {value}"
            elif i != j and value not in rootsys.ALLOWED_OFF_DIAGONAL:
                problem = f"entry ({i},{j}) is {value}"
    checks = [CheckResult("entries", problem is None, problem or "")]

    pattern = rootsys.zero_pattern_symmetric(entries)
    checks.append(CheckResult("zero pattern", pattern))

    graph = rootsys.dynkin_graph(entries).to_undirected()
    forest = nx.is_forest(graph)
    checks.append(CheckResult("acyclic", forest,
                              "" if forest else "the diagram has a cycle"))

    norms = rootsys.symmetrizer(entries) if pattern else None
    checks.append(CheckResult("symmetrizable", norms is not None))

    minors = rootsys.principal_minors_positive(entries)
    checks.append(CheckResult("principal minors", minors,
                              "" if minors else "some principal minor is not positive"))
    return ValidationReport(tuple(checks))


def identify_ambient(inp: AugmentationInput) -> Tuple[DynkinDiagram, int]:
    """Finite type of the augmented matrix and the Bourbaki number of alpha_0.

    Raises:
        exceptions.ValidationFailed: if the candidate fails validation.

    Returns:
        (DynkinDiagram, int): For example:
            (B3, omega=(0,0,1), nu=(1)) -> (F4, 4)
    """
    am = build_augmented_matrix(inp)
    report = validate(am)
    if not report.passed:
        raise exceptions.ValidationFailed(report.failed)
    diagram, permutation = rootsys.identify_cartan_type(am.entries)
    return diagram, permutation[0] + 1


def from_gradation(choice: NodeChoice) -> AugmentationInput:
    """Levi diagram, highest weight of g_-1 and nu of a marked node."""
    ld = levirep.levi(choice)
    rs = choice.root_system
    minus_alpha0 = tuple(-1 if k == choice.position else 0 for k in range(rs.rank))
    return AugmentationInput(ld.diagram0,
                             levirep.restrict_weight(ld, minus_alpha0),
                             levirep.connecting_multiplicities(choice))


@dataclasses.dataclass(frozen=True)
class Augmentation:
    """A valid augmentation with its ambient diagram and marked node."""

    input: AugmentationInput
    ambient: DynkinDiagram
    node: int

    def to_json(self) -> dict:
        """Input fields plus "ambient" and "node"."""
        result = self.input.to_json()
        result.update({"ambient": self.ambient.name, "node": self.node})
        return result


def _component_options(rank: int) -> List[Tuple[int, int, int]]:
    """(node, weight value, a) per option; node -1 means unattached."""
    options = [(-1, 0, 0)]
    for node in range(rank):
        for value, multiplicity in BOND_CHOICES:
            options.append((node, value, multiplicity))
    return options


def enumerate_augmentations(diagram0: DynkinDiagram) -> List[Augmentation]:
    """Every valid (omega, nu) for a Levi diagram with its ambient algebra.

    Each component is either left unattached or joined at one node with a
    bond from BOND_CHOICES; both orientations of multiple bonds are tried.

    For example:
        A1 -> A1xA1, A2, B2 (twice), G2 (twice)
    """
    per_component = [_component_options(rank) for _, rank in diagram0.components]
    found: List[Augmentation] = []

    def search(index: int, weight: List[int], nu: List[int], multiple: int):
        if index == len(per_component):
            inp = AugmentationInput(diagram0, WeightVector(tuple(weight)),
                                    ConnectingMultiplicities(tuple(nu)))
            am = build_augmented_matrix(inp)
            if validate(am).passed:
                diagram, permutation = rootsys.identify_cartan_type(am.entries)
                found.append(Augmentation(inp, diagram, permutation[0] + 1))
            return
        offset = diagram0.offsets[index]
        for node, value, multiplicity in per_component[index]:
            extra = 1 if value * multiplicity > 1 else 0
            if multiple + extra > 1:
                # a connected finite type diagram has at most one multiple bond
                continue
            part = [0] * diagram0.components[index][1]
            if node >= 0:
                part[node] = value
            search(index + 1, weight + part, nu + [multiplicity], multiple + extra)

    search(0, [], [], 0)
    _logger.info("Found %d augmentations of %s", len(found),
                 diagram0.name or "the empty diagram")
    return found


def round_trip(choice: NodeChoice) -> bool:
    """Whether augmenting the Levi data of a choice recovers it.

    The recovered node may differ by a diagram automorphism.
    """
    diagram, node = identify_ambient(from_gradation(choice))
    return (diagram == choice.diagram
            and node in rootsys.equivalent_nodes(choice.diagram, choice.node))


def attachment_labels(am: AugmentedMatrix) -> Sequence[int]:
    """1-based diagram0 labels of the attachment nodes, 0 when unattached."""
    return [node + 1 for node in am.attachments]
