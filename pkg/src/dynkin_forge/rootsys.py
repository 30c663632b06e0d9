r"""Cartan matrices, Dynkin diagrams, root systems and Weyl group actions.

Conventions:
    The Cartan matrix has entries A[i][j] = <alpha_i, alpha_j>
    = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j), so row i lists the values
    of alpha_i on the simple coroots.
    Roots are integer coordinate vectors over the simple roots.
    Weights are rational coordinate vectors over the fundamental weights,
    so the weight coordinates of a root beta are beta * A.
    The bilinear form is the symmetrized Cartan matrix with long roots of
    squared length 2 in every simple component.

Node numbering follows Bourbaki. Functions that take a "node" use the
1-based Bourbaki number; positions inside coordinate vectors and the
`generators` of weyl_orbit are 0-based.
"""

import collections
import dataclasses
import functools
import itertools
import json
import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx
from networkx.algorithms import isomorphism

from . import exact
from . import exceptions
from . import names

_logger = logging.getLogger("dynkin-forge")

Root = Tuple[int, ...]
Entries = Tuple[Tuple[int, ...], ...]

ALLOWED_OFF_DIAGONAL = (0, -1, -2, -3)
"""Values an off-diagonal Cartan entry may take."""


def _freeze(entries: Sequence[Sequence]) -> Entries:
    """Nested tuples of ints; non-integral entries are rejected."""
    frozen = []
    for row in entries:
        frozen_row = []
        for value in row:
            if int(value) != value:
                raise exceptions.InvalidCartanMatrix(
                    f"entry {value} is not an integer")
            frozen_row.append(int(value))
        frozen.append(tuple(frozen_row))
    return tuple(frozen)


def zero_pattern_symmetric(entries: Sequence[Sequence[int]]) -> bool:
    """Whether A[i][j] and A[j][i] are both zero or both nonzero."""
    size = len(entries)
    return all((entries[i][j] == 0) == (entries[j][i] == 0)
               for i in range(size) for j in range(size))


def cartan_problem(entries: Sequence[Sequence[int]]) -> Optional[str]:
    """Describe the first broken Cartan matrix condition, if any."""
    size = len(entries)
    if any(len(row) != size for row in entries):
        return "the matrix is not square"
    for i in range(size):
        if entries[i][i] != 2:
            return f"diagonal entry {i + 1} is {entries[i][i]}, not 2"
        for j in range(size):
            if i != j and entries[i][j] not in ALLOWED_OFF_DIAGONAL:
                return (f"entry ({i + 1},{j + 1}) is {entries[i][j]},"
                        " outside 0,-1,-2,-3")
    if not zero_pattern_symmetric(entries):
        return "the zero pattern is not symmetric"
    if symmetrizer(entries) is None:
        return "the matrix is not symmetrizable"
    return None


@dataclasses.dataclass(frozen=True)
class CartanMatrix:
    """A symmetrizable generalized Cartan matrix.

    Finiteness is not required here; principal_minors_positive decides it.

    Attributes:
        entries (Tuple[Tuple[int, ...], ...]): row-major integer entries.
    """

    entries: Entries

    def __post_init__(self):
        """Freeze the entries and check the Cartan matrix conditions."""
        frozen = _freeze(self.entries)
        object.__setattr__(self, "entries", frozen)
        problem = cartan_problem(frozen)
        if problem is not None:
            raise exceptions.InvalidCartanMatrix(problem)

    @property
    def size(self) -> int:
        """Number of nodes."""
        return len(self.entries)

    def __getitem__(self, index: int) -> Tuple[int, ...]:
        """Row access, so that matrix[i][j] reads an entry."""
        return self.entries[index]

    @classmethod
    def from_json(cls, text: str) -> "CartanMatrix":
        """Read a row-major JSON integer array, e.g. "[[2,-1],[-1,2]]"."""
        try:
            rows = json.loads(text)
        except json.JSONDecodeError as error:
            raise exceptions.InvalidCartanMatrix(
                f"unreadable JSON ({error.msg})") from error
        return cls(rows)

    def to_json(self) -> str:
        """Row-major JSON integer array."""
        return json.dumps([list(row) for row in self.entries])


@dataclasses.dataclass(frozen=True)
class DynkinDiagram:
    """A (product) Dynkin diagram given by its simple components.

    Global node numbers run through the components in order, each
    component keeping its Bourbaki numbering:
    in "A1xA4" node 1 is the A1 node and nodes 2-5 are the A4 chain.

    Attributes:
        components (Tuple[Tuple[str, int], ...]): (family, rank) pairs.
    """

    components: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        """Normalize and check every component."""
        components = tuple((str(family).upper(), int(rank))
                           for family, rank in self.components)
        for family, rank in components:
            if not names.valid_type(family, rank):
                raise exceptions.DiagramNameNotFound(f"{family}{rank}")
        object.__setattr__(self, "components", components)

    @classmethod
    def parse(cls, text: str, allow_fuzzy_match: bool = True) -> "DynkinDiagram":
        """Diagram from a name such as "E8", "A1xA4" or "so10".

        For example:
            DynkinDiagram.parse("sl2 x so10").name -> "A1xD5"
        """
        return cls(tuple(names.parse_diagram(
            text, allow_fuzzy_match=allow_fuzzy_match)))

    @property
    def rank(self) -> int:
        """Total number of nodes."""
        return sum(rank for _, rank in self.components)

    @property
    def name(self) -> str:
        """Canonical text form, e.g. "A1xA4"; empty for the empty diagram."""
        return "x".join(f"{family}{rank}" for family, rank in self.components)

    @property
    def offsets(self) -> Tuple[int, ...]:
        """0-based position of the first node of each component."""
        starts = [0]
        for _, rank in self.components:
            starts.append(starts[-1] + rank)
        return tuple(starts[:-1])

    @property
    def node_labels(self) -> Tuple[Tuple[int, int], ...]:
        """(component index, Bourbaki label) for every global node."""
        return tuple((index, label)
                     for index, (_, rank) in enumerate(self.components)
                     for label in range(1, rank + 1))

    def component_of(self, position: int) -> int:
        """Index of the component holding the 0-based node position."""
        return self.node_labels[position][0]

    def is_simple(self) -> bool:
        """Whether the diagram has exactly one component."""
        return len(self.components) == 1

    def __str__(self) -> str:
        """Same as name."""
        return self.name


@dataclasses.dataclass(frozen=True)
class WeightVector:
    """A weight in fundamental weight coordinates.

    Attributes:
        coeffs (Tuple[Fraction, ...]): coefficient of each fundamental weight.
    """

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        """Store the coefficients as Fractions."""
        object.__setattr__(self, "coeffs",
                           tuple(exact.to_fraction(c) for c in self.coeffs))

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Read "1,0,2" (or "" for the zero weight of a rank 0 algebra)."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(Fraction(part.strip()) for part in text.split(",")))
        except ValueError as error:
            raise exceptions.DomainError(
                f"Cannot read the weight '{text}'.") from error

    def is_integral(self) -> bool:
        """All coefficients are integers."""
        return all(c.denominator == 1 for c in self.coeffs)

    def is_dominant(self) -> bool:
        """Integral with no negative coefficient."""
        return self.is_integral() and all(c >= 0 for c in self.coeffs)

    def as_ints(self) -> Tuple[int, ...]:
        """Integer coefficients.

        Raises:
            exceptions.DomainError: if some coefficient is not an integer.
        """
        if not self.is_integral():
            raise exceptions.DomainError(f"The weight ({self}) is not integral.")
        return tuple(int(c) for c in self.coeffs)

    def __add__(self, other: "WeightVector") -> "WeightVector":
        """Coordinatewise sum."""
        if len(self.coeffs) != len(other.coeffs):
            raise exceptions.ShapeError("Weights over different diagrams.")
        return WeightVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        """Coordinatewise difference."""
        return self + WeightVector(tuple(-c for c in other.coeffs))

    def __len__(self) -> int:
        """Number of coordinates."""
        return len(self.coeffs)

    def __str__(self) -> str:
        """Comma separated coefficients, e.g. "0,0,1"."""
        return ",".join(exact.format_rational(c) for c in self.coeffs)


def simple_cartan_entries(family: str, rank: int) -> List[List[int]]:
    """Cartan matrix of a simple type with Bourbaki numbering.

    For example:
        simple_cartan_entries("G", 2) -> [[2, -1], [-3, 2]]
    """
    if not names.valid_type(family, rank):
        raise exceptions.DiagramNameNotFound(f"{family}{rank}")
    entries = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i: int, j: int, a_ij: int = -1, a_ji: int = -1):
        entries[i][j] = a_ij
        entries[j][i] = a_ji

    if family in "ABC":
        for i in range(rank - 1):
            bond(i, i + 1)
        if family == "B":
            # alpha_n short
            bond(rank - 2, rank - 1, -2, -1)
        if family == "C":
            # alpha_n long
            bond(rank - 2, rank - 1, -1, -2)
    elif family == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif family == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, rank - 1):
            bond(i, i + 1)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif family == "G":
        bond(0, 1, -1, -3)
    return entries


@functools.lru_cache(maxsize=None)
def cartan_matrix(diagram: DynkinDiagram) -> CartanMatrix:
    """Block diagonal Cartan matrix of a (product) diagram.

    For example:
        cartan_matrix(DynkinDiagram.parse("A2")).entries -> ((2, -1), (-1, 2))
    """
    size = diagram.rank
    entries = [[0] * size for _ in range(size)]
    for (family, rank), offset in zip(diagram.components, diagram.offsets):
        block = simple_cartan_entries(family, rank)
        for i in range(rank):
            for j in range(rank):
                entries[offset + i][offset + j] = block[i][j]
    return CartanMatrix(entries)


def dynkin_graph(entries: Sequence[Sequence[int]]) -> nx.DiGraph:
    """Directed graph with an edge i -> j labelled a=A[i][j] per nonzero entry."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(entries)))
    for i, row in enumerate(entries):
        for j, value in enumerate(row):
            if i != j and value != 0:
                graph.add_edge(i, j, a=value)
    return graph


def connected_components(entries: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Node sets of the connected components, ordered by smallest node."""
    undirected = dynkin_graph(entries).to_undirected()
    return sorted((tuple(sorted(component))
                   for component in nx.connected_components(undirected)),
                  key=lambda component: component[0])


def symmetrizer(entries: Sequence[Sequence[int]]) -> Optional[List[Fraction]]:
    """Squared root lengths making the matrix symmetric, or None.

    The lengths n_i satisfy A[i][j] n_j = A[j][i] n_i, and the longest
    root in each component has n_i = 2.

    For example:
        symmetrizer([[2, -1], [-3, 2]]) -> [Fraction(2, 3), Fraction(2, 1)]
    """
    if not zero_pattern_symmetric(entries):
        return None
    norms: List[Fraction] = [Fraction(0)] * len(entries)
    undirected = dynkin_graph(entries).to_undirected()
    for component in connected_components(entries):
        start = component[0]
        norms[start] = Fraction(1)
        for parent, child in nx.bfs_edges(undirected, start):
            norms[child] = (norms[parent] * entries[child][parent]
                            / entries[parent][child])
        for i in component:
            if norms[i] <= 0:
                return None
            for j in component:
                if entries[i][j] * norms[j] != entries[j][i] * norms[i]:
                    return None
        longest = max(norms[i] for i in component)
        for i in component:
            norms[i] = norms[i] * 2 / longest
    return norms


def gram_matrix(entries: Sequence[Sequence[int]],
                norms: Sequence[Fraction]) -> List[List[Fraction]]:
    """Symmetric form (alpha_i, alpha_j) = A[i][j] n_j / 2."""
    size = len(entries)
    return [[Fraction(entries[i][j]) * norms[j] / 2 for j in range(size)]
            for i in range(size)]


def principal_minors_positive(entries: Sequence[Sequence[int]]) -> bool:
    """Whether every principal minor of a square matrix is positive.

    Symmetrizable matrices are settled by the leading minors of the
    symmetrized form (Sylvester); anything else is checked minor by minor.

    For example:
        principal_minors_positive([[2]]) -> True
    """
    size = len(entries)
    if size == 0:
        return True
    norms = symmetrizer(entries)
    if norms is not None:
        gram = gram_matrix(entries, norms)
        return all(exact.determinant([row[:k] for row in gram[:k]]) > 0
                   for k in range(1, size + 1))
    for count in range(1, size + 1):
        for subset in itertools.combinations(range(size), count):
            minor = [[entries[i][j] for j in subset] for i in subset]
            if exact.determinant(minor) <= 0:
                return False
    return True


def _candidate_types(rank: int) -> List[Tuple[str, int]]:
    """Simple types of a given rank, each family once (C2 is B2)."""
    return [(family, rank) for family in names.FAMILIES
            if names.valid_type(family, rank)
            and not (family == "C" and rank == 2)]


def _recognize(subgraph: nx.DiGraph) -> Tuple[str, int, Dict[int, int]]:
    """Type of one connected finite type diagram and its canonical labelling.

    Among all isomorphisms the one with the lexicographically smallest
    image of the sorted input nodes is used.
    """
    nodes = sorted(subgraph.nodes)
    edge_match = isomorphism.categorical_edge_match("a", 0)
    for family, rank in _candidate_types(len(nodes)):
        canonical = dynkin_graph(simple_cartan_entries(family, rank))
        matcher = isomorphism.DiGraphMatcher(subgraph, canonical,
                                             edge_match=edge_match)
        mappings = list(matcher.isomorphisms_iter())
        if mappings:
            best = min(mappings,
                       key=lambda mapping: tuple(mapping[node] for node in nodes))
            return family, rank, best
    raise exceptions.NotFiniteType(
        [[subgraph.edges[i, j]["a"] if subgraph.has_edge(i, j) else
          (2 if i == j else 0) for j in nodes] for i in nodes])


@functools.lru_cache(maxsize=None)
def _identify(entries: Entries) -> Tuple[DynkinDiagram, Tuple[int, ...]]:
    if not principal_minors_positive(entries):
        raise exceptions.NotFiniteType(entries)
    graph = dynkin_graph(entries)
    found = []
    for component in connected_components(entries):
        family, rank, mapping = _recognize(graph.subgraph(component).copy())
        found.append((family, rank, component, mapping))
    found.sort(key=lambda item: (item[0], item[1], item[2][0]))
    permutation = [0] * len(entries)
    offset = 0
    for _, rank, component, mapping in found:
        for node in component:
            permutation[node] = offset + mapping[node]
        offset += rank
    diagram = DynkinDiagram(tuple((family, rank) for family, rank, _, _ in found))
    return diagram, tuple(permutation)


def identify_cartan_type(
    matrix: Union[CartanMatrix, Sequence[Sequence[int]]]
) -> Tuple[DynkinDiagram, Tuple[int, ...]]:
    """Recognize a finite type Cartan matrix up to relabelling of nodes.

    Components are listed by family, then rank, then smallest input node.
    The permutation sends input position i (0-based) to the canonical
    global position of the same node.

    Args:
        matrix: CartanMatrix or nested integer lists.

    Raises:
        exceptions.NotFiniteType: if some principal minor is not positive.

    Returns:
        (DynkinDiagram, Tuple[int, ...]): diagram and node permutation.
        For example:
            identify_cartan_type([[2, -1], [-3, 2]]) -> (G2, (0, 1))
    """
    entries = matrix.entries if isinstance(matrix, CartanMatrix) else _freeze(matrix)
    return _identify(entries)


@functools.lru_cache(maxsize=None)
def diagram_automorphisms(diagram: DynkinDiagram) -> Tuple[Tuple[int, ...], ...]:
    """All node permutations (0-based) preserving the Cartan matrix, sorted.

    For example:
        len(diagram_automorphisms(DynkinDiagram.parse("D4"))) -> 6
    """
    graph = dynkin_graph(cartan_matrix(diagram).entries)
    matcher = isomorphism.DiGraphMatcher(
        graph, graph, edge_match=isomorphism.categorical_edge_match("a", 0))
    size = diagram.rank
    return tuple(sorted(tuple(mapping[i] for i in range(size))
                        for mapping in matcher.isomorphisms_iter()))


def equivalent_nodes(diagram: DynkinDiagram, node: int) -> Tuple[int, ...]:
    """Bourbaki numbers of the nodes an automorphism can send `node` to.

    For example:
        equivalent_nodes(DynkinDiagram.parse("E6"), 1) -> (1, 6)
    """
    if not 1 <= node <= diagram.rank:
        raise exceptions.NodeIndexError(node, diagram.rank)
    return tuple(sorted({permutation[node - 1] + 1
                         for permutation in diagram_automorphisms(diagram)}))


@dataclasses.dataclass(frozen=True)
class RootSystem:
    """All roots of a finite type Cartan matrix.

    Attributes:
        cartan (CartanMatrix): the Cartan matrix.
        norms (Tuple[Fraction, ...]): squared lengths of the simple roots.
        gram (Tuple[Tuple[Fraction, ...], ...]): (alpha_i, alpha_j).
        positive_roots (Tuple[Root, ...]): sorted by height, then coordinates.
        roots (FrozenSet[Root]): positive and negative roots.
        components (Tuple[Tuple[int, ...], ...]): 0-based node positions of
            each simple component, ordered by smallest node.
    """

    cartan: CartanMatrix
    norms: Tuple[Fraction, ...]
    gram: Tuple[Tuple[Fraction, ...], ...]
    positive_roots: Tuple[Root, ...]
    roots: FrozenSet[Root]
    components: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        """Number of simple roots."""
        return self.cartan.size

    @property
    def dimension(self) -> int:
        """Dimension of the Lie algebra: rank plus number of roots."""
        return self.rank + len(self.roots)

    def simple_root(self, position: int) -> Root:
        """Coordinates of the simple root at a 0-based position."""
        return tuple(1 if k == position else 0 for k in range(self.rank))

    def is_root(self, coords: Root) -> bool:
        """Membership test for coordinate tuples."""
        return coords in self.roots


def _reflect_root(entries: Entries, beta: Root, i: int) -> Root:
    value = sum(beta[k] * entries[k][i] for k in range(len(beta)))
    return tuple(b - value if k == i else b for k, b in enumerate(beta))


@functools.lru_cache(maxsize=None)
def _build(matrix: CartanMatrix) -> RootSystem:
    entries = matrix.entries
    if not principal_minors_positive(entries):
        raise exceptions.NotFiniteType(entries)
    size = len(entries)
    simple = [tuple(1 if k == i else 0 for k in range(size)) for i in range(size)]
    found: Set[Root] = set(simple)
    queue = collections.deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(size):
            image = _reflect_root(entries, beta, i)
            if image not in found:
                found.add(image)
                queue.append(image)
    norms = symmetrizer(entries)
    assert norms is not None  # CartanMatrix guarantees it
    positive = tuple(sorted((root for root in found if max(root) > 0),
                            key=lambda root: (sum(root), root)))
    _logger.debug("Built a root system of rank %d with %d roots",
                  size, len(found))
    return RootSystem(
        cartan=matrix,
        norms=tuple(norms),
        gram=tuple(tuple(row) for row in gram_matrix(entries, norms)),
        positive_roots=positive,
        roots=frozenset(found),
        components=tuple(connected_components(entries)))


def build_root_system(source: Union[DynkinDiagram, CartanMatrix]) -> RootSystem:
    """All roots of a diagram or Cartan matrix, by closure under reflections.

    Results are cached per Cartan matrix.

    Raises:
        exceptions.NotFiniteType: for a matrix that is not of finite type.

    Returns:
        RootSystem
        For example:
            len(build_root_system(DynkinDiagram.parse("E8")).roots) -> 240
    """
    matrix = cartan_matrix(source) if isinstance(source, DynkinDiagram) else source
    return _build(matrix)


def height(beta: Root) -> int:
    """Sum of the coordinates."""
    return sum(beta)


def pairing(rs: RootSystem, beta: Sequence, j: int) -> Fraction:
    """<beta, alpha_j> = 2 (beta, alpha_j) / (alpha_j, alpha_j), j 0-based."""
    return sum((Fraction(beta[k]) * rs.cartan[k][j] for k in range(rs.rank)),
               Fraction(0))


def _check_length(rs: RootSystem, vector: Sequence):
    if len(vector) != rs.rank:
        raise exceptions.ShapeError(
            f"Vector of length {len(vector)} over a root system of rank {rs.rank}.")


def reflect(rs: RootSystem, v, i: int):
    """Simple reflection s_i (0-based i) of a root or a WeightVector."""
    if isinstance(v, WeightVector):
        _check_length(rs, v.coeffs)
        value = v.coeffs[i]
        return WeightVector(tuple(c - value * rs.cartan[i][k]
                                  for k, c in enumerate(v.coeffs)))
    _check_length(rs, v)
    return _reflect_root(rs.cartan.entries, tuple(v), i)


@functools.lru_cache(maxsize=None)
def inverse_cartan(matrix: CartanMatrix) -> Tuple[Tuple[Fraction, ...], ...]:
    """Exact inverse of a Cartan matrix, cached per matrix."""
    return tuple(tuple(row) for row in exact.inverse(matrix.entries))


def fundamental_weight_coords(rs: RootSystem, w: WeightVector) -> Tuple[Fraction, ...]:
    """Coordinates of a weight over the simple roots (w * A^-1).

    Raises:
        exceptions.ShapeError: for a length mismatch or singular matrix.

    For example:
        A2, omega_1 -> (2/3, 1/3)
    """
    _check_length(rs, w.coeffs)
    if rs.rank == 0:
        return ()
    return tuple(exact.vec_mat(w.coeffs, inverse_cartan(rs.cartan)))


def weight_from_root_coords(rs: RootSystem, coords: Sequence) -> WeightVector:
    """Weight coordinates of a vector given over the simple roots (coords * A)."""
    _check_length(rs, coords)
    if rs.rank == 0:
        return WeightVector(())
    return WeightVector(tuple(exact.vec_mat(coords, rs.cartan.entries)))


def _as_root_coords(rs: RootSystem, v) -> Tuple[Fraction, ...]:
    if isinstance(v, WeightVector):
        return fundamental_weight_coords(rs, v)
    _check_length(rs, v)
    return tuple(Fraction(c) for c in v)


def inner_product(rs: RootSystem, a, b) -> Fraction:
    """Symmetric form on roots and weights, e.g. (alpha_1, alpha_2) = -1 in A2.

    Raises:
        exceptions.ShapeError: if either argument has the wrong length.
    """
    left = _as_root_coords(rs, a)
    right = _as_root_coords(rs, b)
    return sum((left[i] * rs.gram[i][j] * right[j]
                for i in range(rs.rank) for j in range(rs.rank)
                if left[i] and right[j]), Fraction(0))


def weyl_orbit(rs: RootSystem, v, generators: Iterable[int]) -> Set:
    """Orbit of a root or weight under the reflections s_j, j in generators.

    Generators are 0-based positions.

    For example:
        A2, alpha_1, generators {1} -> {(1, 0), (1, 1)}
    """
    generators = sorted(set(generators))
    start = v if isinstance(v, WeightVector) else tuple(v)
    orbit = {start}
    queue = collections.deque([start])
    while queue:
        current = queue.popleft()
        for i in generators:
            image = reflect(rs, current, i)
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return orbit


def highest_root(rs: RootSystem, component: int = 0) -> Root:
    """Highest root of one simple component (index into rs.components).

    For example:
        G2 -> (3, 2)
    """
    if not 0 <= component < len(rs.components):
        raise exceptions.NodeIndexError(component + 1, len(rs.components))
    support = set(rs.components[component])
    candidates = [root for root in rs.positive_roots
                  if all(k in support for k, c in enumerate(root) if c)]
    return max(candidates, key=lambda root: (height(root), root))


def marks(rs: RootSystem, component: int = 0) -> Tuple[int, ...]:
    """Highest root coefficients of one component, Bourbaki order.

    For example:
        F4 -> (2, 3, 4, 2)
    """
    root = highest_root(rs, component)
    return tuple(root[k] for k in rs.components[component])


def extended_cartan_matrix(rs: RootSystem) -> CartanMatrix:
    """Cartan matrix of the simple roots together with minus the highest root.

    The extra node comes first, so position 0 is -theta and position i
    is alpha_i.

    Raises:
        exceptions.Unsupported: for a root system that is not simple.
    """
    if len(rs.components) != 1:
        raise exceptions.Unsupported(
            "The extended diagram is only defined for simple root systems.")
    theta = highest_root(rs)
    vectors = [tuple(-c for c in theta)] + [rs.simple_root(i) for i in range(rs.rank)]
    size = len(vectors)
    entries = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            value = (2 * inner_product(rs, vectors[i], vectors[j])
                     / inner_product(rs, vectors[j], vectors[j]))
            entries[i][j] = int(value)
    return CartanMatrix(entries)


def is_positive(beta: Root) -> bool:
    """Positive roots have all coordinates nonnegative."""
    return max(beta) > 0 and min(beta) >= 0


def subsystem_diagram(rs: RootSystem,
                      subset: Iterable[Root]) -> Tuple[DynkinDiagram, Tuple[Root, ...]]:
    """Type and simple roots of a closed symmetric set of roots.

    The simple roots are the positive elements that are not sums of two
    positive elements, listed in the canonical order of the recognized
    diagram.

    For example:
        all roots of E8 with even alpha_1 coefficient... -> D8
    """
    positives = sorted({tuple(r) for r in subset if is_positive(tuple(r))},
                       key=lambda root: (height(root), root))
    positive_set = set(positives)
    simple = [root for root in positives
              if not any(tuple(a - b for a, b in zip(root, other)) in positive_set
                         for other in positives if other != root)]
    if not simple:
        return DynkinDiagram(()), ()
    size = len(simple)
    entries = [[int(2 * inner_product(rs, simple[i], simple[j])
                    / inner_product(rs, simple[j], simple[j]))
                for j in range(size)] for i in range(size)]
    diagram, permutation = identify_cartan_type(entries)
    ordered: List[Root] = [()] * size
    for i, root in enumerate(simple):
        ordered[permutation[i]] = root
    return diagram, tuple(ordered)


def classical_dimension(family: str, rank: int) -> int:
    """Dimension of the simple Lie algebra from the classical formulas."""
    if family == "A":
        return rank * rank + 2 * rank
    if family in "BC":
        return rank * (2 * rank + 1)
    if family == "D":
        return rank * (2 * rank - 1)
    return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248,
            ("F", 4): 52, ("G", 2): 14}[(family, rank)]


def simple_types(max_rank: int = 8) -> List[str]:
    """Canonical names of all simple types up to a rank, family by family.

    C2 is left out (it is B2) and D starts at D4.
    """
    found = []
    for family in names.FAMILIES:
        for rank in range(1, max_rank + 1):
            if names.valid_type(family, rank) and not (family == "C" and rank == 2):
                found.append(f"{family}{rank}")
    return found
