r"""Exact Chevalley basis realization of a semisimple Lie algebra.

Basis:
    ("h", i) for the simple coroots h_1..h_l (0-based i), and
    ("x", root) for a root vector of every root.

Brackets:
    [h_i, x_s] = <s, alpha_i> x_s
    [x_r, x_-r] = h_r, the coroot of r written over the simple coroots
    [x_r, x_s] = N_{r,s} x_{r+s} with N_{r,s} = +-(p+1)

Signs:
    Positive roots are ordered lexicographically by coordinates. For each
    positive root xi the extraspecial pair (r, s) has r the smallest root
    with xi - r positive, and N_{r,s} = +(p+1). All other constants follow
    from the standard identities between structure constants, with
    N_{-r,-s} = -N_{r,s}.

All coefficients are Fractions; the Killing form is the trace of
ad a ad b computed from the bracket table.
"""

import collections
import dataclasses
import functools
import itertools
import logging
import random
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import augment
from . import exact
from . import exceptions
from . import levirep
from . import rootsys
from .augment import AugmentationInput, CheckResult, ValidationReport
from .gradation import Gradation
from .rootsys import Root, RootSystem, WeightVector

_logger = logging.getLogger("dynkin-forge")

BasisKey = Tuple

DEFAULT_SEED = 0
"""Seed of every random choice unless one is given."""

GENERIC_RETRIES = 16
"""Random draws tried before a level is declared to have no generic element."""

RANDOM_COEFFICIENT_BOUND = 9
"""Random level elements use nonzero integer coefficients in [-bound, bound]."""


def h_key(i: int) -> BasisKey:
    """Basis key of the simple coroot h_i (0-based)."""
    return ("h", i)


def x_key(root: Sequence[int]) -> BasisKey:
    """Basis key of the root vector x_root."""
    return ("x", tuple(root))


@dataclasses.dataclass(frozen=True)
class AlgebraElement:
    """A finite rational combination of basis vectors.

    Attributes:
        coeffs (Dict[BasisKey, Fraction]): nonzero coefficients only.
    """

    coeffs: Dict[BasisKey, Fraction]

    def __post_init__(self):
        """Store Fractions and drop zero coefficients."""
        object.__setattr__(self, "coeffs", {
            key: Fraction(value) for key, value in self.coeffs.items() if value})

    @classmethod
    def basis(cls, key: BasisKey, value=1) -> "AlgebraElement":
        """A single basis vector, optionally scaled."""
        return cls({key: value})

    @classmethod
    def zero(cls) -> "AlgebraElement":
        """The zero element."""
        return cls({})

    def is_zero(self) -> bool:
        """No nonzero coefficient."""
        return not self.coeffs

    def coefficient(self, key: BasisKey) -> Fraction:
        """Coefficient of one basis vector."""
        return self.coeffs.get(key, Fraction(0))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Sum."""
        total = dict(self.coeffs)
        for key, value in other.coeffs.items():
            total[key] = total.get(key, Fraction(0)) + value
        return AlgebraElement(total)

    def __neg__(self) -> "AlgebraElement":
        """Negative."""
        return AlgebraElement({key: -value for key, value in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Difference."""
        return self + (-other)

    def __mul__(self, scalar) -> "AlgebraElement":
        """Scalar multiple."""
        scalar = Fraction(scalar)
        return AlgebraElement({key: scalar * value for key, value in self.coeffs.items()})

    __rmul__ = __mul__

    def to_json(self, rank: int) -> dict:
        """{"cartan": ["p/q", ...], "roots": {"1,0": "p/q", ...}}."""
        roots = sorted((key[1] for key in self.coeffs if key[0] == "x"),
                       key=lambda root: (rootsys.height(root), root))
        return {
            "cartan": [exact.format_rational(self.coefficient(h_key(i)))
                       for i in range(rank)],
            "roots": {",".join(str(c) for c in root):
                      exact.format_rational(self.coefficient(x_key(root)))
                      for root in roots},
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        """Inverse of to_json; "cartan" may be left out.

        Raises:
            exceptions.ShapeError: for a malformed root label or coefficient.

        For example:
            from_json({"roots": {"1,0": "1/2"}}) -> x_(1,0) / 2
        """
        coeffs: Dict[BasisKey, Fraction] = {}
        try:
            for i, value in enumerate(data.get("cartan", [])):
                coeffs[h_key(i)] = exact.to_fraction(value)
            for label, value in data.get("roots", {}).items():
                coeffs[x_key(tuple(int(c) for c in label.split(",")))] = \
                    exact.to_fraction(value)
        except (AttributeError, TypeError, ValueError, ZeroDivisionError) as error:
            raise exceptions.ShapeError(f"Not an algebra element: {error}.") from error
        return cls(coeffs)


@dataclasses.dataclass(frozen=True, eq=False)
class StructureConstants:
    """Chevalley basis and bracket table of one root system.

    Attributes:
        rs (RootSystem): the root system.
        basis (Tuple[BasisKey, ...]): coroots first, then root vectors of
            the positive roots and their negatives.
        n_constants (Dict[Tuple[Root, Root], int]): N_{r,s} for every pair
            of roots with r + s a root.
        table (Dict[Tuple[BasisKey, BasisKey], Dict[BasisKey, Fraction]]):
            every nonzero bracket of two basis vectors.
    """

    rs: RootSystem
    basis: Tuple[BasisKey, ...]
    n_constants: Dict[Tuple[Root, Root], int]
    table: Dict[Tuple[BasisKey, BasisKey], Dict[BasisKey, Fraction]]

    @property
    def dimension(self) -> int:
        """Number of basis vectors."""
        return len(self.basis)

    def element(self, key: BasisKey, value=1) -> AlgebraElement:
        """A basis vector of this algebra.

        Raises:
            exceptions.ShapeError: if the key is not in the basis.
        """
        self.check_key(key)
        return AlgebraElement.basis(key, value)

    def check_key(self, key: BasisKey):
        """Raise ShapeError for a key outside the basis."""
        kind, label = key
        if kind == "h" and isinstance(label, int) and 0 <= label < self.rs.rank:
            return
        if kind == "x" and tuple(label) in self.rs.roots:
            return
        raise exceptions.ShapeError(f"{key} is not a basis vector of this algebra.")

    def check(self, element: AlgebraElement):
        """Raise ShapeError if the element uses keys outside the basis."""
        for key in element.coeffs:
            self.check_key(key)


def _add(r: Root, s: Root) -> Root:
    return tuple(a + b for a, b in zip(r, s))


def _neg(r: Root) -> Root:
    return tuple(-a for a in r)


def _sub(r: Root, s: Root) -> Root:
    return tuple(a - b for a, b in zip(r, s))


class _ConstantBuilder:
    """Fills N_{r,s} for positive pairs in order of the height of r + s."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.norms: Dict[Root, Fraction] = {}
        self.positive: Dict[Tuple[Root, Root], Fraction] = {}

    def norm(self, root: Root) -> Fraction:
        if root not in self.norms:
            self.norms[root] = rootsys.inner_product(self.rs, root, root)
        return self.norms[root]

    def string_p(self, r: Root, s: Root) -> int:
        """Largest p with s - p r a root."""
        p = 0
        current = _sub(s, r)
        while current in self.rs.roots:
            p += 1
            current = _sub(current, r)
        return p

    def constant(self, r: Root, s: Root) -> Fraction:
        """N_{r,s} for any two roots, from the positive pairs filled so far."""
        total = _add(r, s)
        if total not in self.rs.roots:
            return Fraction(0)
        r_positive = rootsys.is_positive(r)
        s_positive = rootsys.is_positive(s)
        if r_positive and s_positive:
            return self.positive[(r, s)]
        if not r_positive and not s_positive:
            return -self.positive[(_neg(r), _neg(s))]
        t = _neg(total)
        if rootsys.is_positive(t) == s_positive:
            return self.norm(t) / self.norm(r) * self.constant(s, t)
        return self.norm(t) / self.norm(s) * self.constant(t, r)

    def fill(self):
        positive_set = set(self.rs.positive_roots)
        lexicographic = sorted(self.rs.positive_roots)
        for xi in self.rs.positive_roots:
            if rootsys.height(xi) < 2:
                continue
            special = [(r, _sub(xi, r)) for r in lexicographic
                       if _sub(xi, r) in positive_set and r < _sub(xi, r)]
            alpha, beta = special[0]
            extraspecial = Fraction(self.string_p(alpha, beta) + 1)
            self.positive[(alpha, beta)] = extraspecial
            self.positive[(beta, alpha)] = -extraspecial
            for gamma, delta in special[1:]:
                total = Fraction(0)
                difference = _sub(delta, alpha)
                if difference in self.rs.roots:
                    total += (self.constant(delta, _neg(alpha))
                              * self.constant(gamma, _neg(beta))
                              / self.norm(difference))
                difference = _sub(gamma, alpha)
                if difference in self.rs.roots:
                    total += (self.constant(_neg(alpha), gamma)
                              * self.constant(delta, _neg(beta))
                              / self.norm(difference))
                value = self.norm(xi) / extraspecial * total
                self.positive[(gamma, delta)] = value
                self.positive[(delta, gamma)] = -value


@functools.lru_cache(maxsize=None)
def build_chevalley(rs: RootSystem) -> StructureConstants:
    """Structure constants of the Chevalley basis of a root system.

    Args:
        rs (RootSystem): finite type root system.

    Returns:
        StructureConstants
        For example:
            build_chevalley(build_root_system(A1)).dimension -> 3
    """
    builder = _ConstantBuilder(rs)
    builder.fill()
    roots = sorted(rs.roots, key=lambda root: (rootsys.height(root), root))
    n_constants: Dict[Tuple[Root, Root], int] = {}
    table: Dict[Tuple[BasisKey, BasisKey], Dict[BasisKey, Fraction]] = {}
    for r in roots:
        for i in range(rs.rank):
            value = rootsys.pairing(rs, r, i)
            if value:
                table[(h_key(i), x_key(r))] = {x_key(r): value}
                table[(x_key(r), h_key(i))] = {x_key(r): -value}
        norm = builder.norm(r)
        for s in roots:
            total = _add(r, s)
            if not any(total):
                table[(x_key(r), x_key(s))] = {
                    h_key(i): Fraction(r[i]) * rs.norms[i] / norm
                    for i in range(rs.rank) if r[i]}
            elif total in rs.roots:
                value = builder.constant(r, s)
                assert value.denominator == 1, (r, s, value)
                n_constants[(r, s)] = int(value)
                table[(x_key(r), x_key(s))] = {x_key(total): value}
    basis = tuple([h_key(i) for i in range(rs.rank)] + [x_key(r) for r in roots])
    _logger.debug("Built Chevalley basis of dimension %d", len(basis))
    return StructureConstants(rs=rs, basis=basis, n_constants=n_constants, table=table)


def bracket(sc: StructureConstants, a: AlgebraElement,
            b: AlgebraElement) -> AlgebraElement:
    """Lie bracket [a, b].

    Raises:
        exceptions.ShapeError: if either element is not in this algebra.
    """
    sc.check(a)
    sc.check(b)
    return _bracket(sc, a, b)


def _bracket(sc: StructureConstants, a: AlgebraElement,
             b: AlgebraElement) -> AlgebraElement:
    total: Dict[BasisKey, Fraction] = {}
    for first, first_value in a.coeffs.items():
        for second, second_value in b.coeffs.items():
            result = sc.table.get((first, second))
            if not result:
                continue
            scale = first_value * second_value
            for key, value in result.items():
                total[key] = total.get(key, Fraction(0)) + scale * value
    return AlgebraElement(total)


@functools.lru_cache(maxsize=None)
def killing_table(sc: StructureConstants) -> Dict[Tuple[BasisKey, BasisKey], Fraction]:
    """Every nonzero trace(ad e ad f) of two basis vectors e, f.

    The trace is a sum over pairs (g, m) with m in [f, g] and g in [e, m],
    read off the bracket table once per algebra.

    For example:
        A1: killing_table(sc)[(h, h)] -> 8
    """
    into: Dict[Tuple[BasisKey, BasisKey], List[Tuple[BasisKey, Fraction]]] = \
        collections.defaultdict(list)
    for (f, g), image in sc.table.items():
        for m, value in image.items():
            into[(g, m)].append((f, value))
    totals: Dict[Tuple[BasisKey, BasisKey], Fraction] = collections.defaultdict(Fraction)
    for (g, m), right in into.items():
        for e, outer in into.get((m, g), ()):
            for f, inner in right:
                totals[(e, f)] += outer * inner
    result = {key: value for key, value in totals.items() if value}
    _logger.debug("Killing form on %d basis vectors: %d nonzero values",
                  sc.dimension, len(result))
    return result


def _basis_killing(sc: StructureConstants, e: BasisKey, f: BasisKey) -> Fraction:
    """trace(ad e ad f) on basis vectors."""
    return killing_table(sc).get((e, f), Fraction(0))


def killing_form(sc: StructureConstants, a: AlgebraElement,
                 b: AlgebraElement) -> Fraction:
    """Killing form trace(ad a ad b), exactly.

    For example:
        A1: killing_form(h, h) -> 8
    """
    sc.check(a)
    sc.check(b)
    return sum((first_value * second_value * _basis_killing(sc, first, second)
                for first, first_value in a.coeffs.items()
                for second, second_value in b.coeffs.items()), Fraction(0))


def killing_gram(sc: StructureConstants, left: Sequence[BasisKey],
                 right: Sequence[BasisKey]) -> List[List[Fraction]]:
    """Killing form values of two lists of basis vectors."""
    return [[_basis_killing(sc, e, f) for f in right] for e in left]


def key_level(gr: Gradation, key: BasisKey) -> int:
    """Level of a basis vector: 0 for coroots, the alpha_0 coordinate otherwise."""
    if key[0] == "h":
        return 0
    return gr.level_of(key[1])


def level_keys(sc: StructureConstants, gr: Gradation, i: int) -> List[BasisKey]:
    """Basis vectors of g_i; g_0 includes the coroots."""
    keys = [x_key(root) for root in gr.sorted_level(i)]
    if i == 0:
        keys = [h_key(k) for k in range(sc.rs.rank)] + keys
    return keys


def grading_element(sc: StructureConstants, gr: Gradation) -> AlgebraElement:
    """The element c of the Cartan subalgebra acting by i on g_i.

    For example:
        A1 node 1 -> h / 2
    """
    return AlgebraElement({h_key(i): value for i, value in enumerate(gr.c_coords)})


def grading_respected(sc: StructureConstants, gr: Gradation) -> bool:
    """Whether [g_i, g_j] lies in g_{i+j} for all basis brackets and c acts by levels."""
    for (first, second), result in sc.table.items():
        expected = key_level(gr, first) + key_level(gr, second)
        if any(key_level(gr, key) != expected for key in result):
            return False
    c = grading_element(sc, gr)
    for root in sc.rs.roots:
        x = AlgebraElement.basis(x_key(root))
        if _bracket(sc, c, x) != x * gr.level_of(root):
            return False
    return True


def jacobi_failures(sc: StructureConstants,
                    triples: Iterable[Tuple[BasisKey, BasisKey, BasisKey]]) -> int:
    """Number of basis triples on which the Jacobi identity fails."""
    failures = 0
    for a, b, c in triples:
        x, y, z = (AlgebraElement.basis(key) for key in (a, b, c))
        total = (_bracket(sc, x, _bracket(sc, y, z))
                 + _bracket(sc, y, _bracket(sc, z, x))
                 + _bracket(sc, z, _bracket(sc, x, y)))
        if not total.is_zero():
            failures += 1
    return failures


def jacobi_holds(sc: StructureConstants,
                 triples: Optional[Iterable[Tuple[BasisKey, BasisKey, BasisKey]]] = None
                 ) -> bool:
    """Jacobi identity on the given basis triples, or on all of them."""
    if triples is None:
        triples = itertools.combinations(sc.basis, 3)
    return jacobi_failures(sc, triples) == 0


def antisymmetric(sc: StructureConstants) -> bool:
    """Whether [f, e] = -[e, f] for every bracket in the table."""
    for (e, f), result in sc.table.items():
        other = sc.table.get((f, e), {})
        if other != {key: -value for key, value in result.items()}:
            return False
    return True


def random_triples(sc: StructureConstants, count: int,
                   seed: int = DEFAULT_SEED) -> List[Tuple[BasisKey, BasisKey, BasisKey]]:
    """Seeded random basis triples."""
    rng = random.Random(seed)
    return [tuple(rng.choice(sc.basis) for _ in range(3)) for _ in range(count)]


def killing_orthogonal(sc: StructureConstants, gr: Gradation) -> bool:
    """Whether the Killing form vanishes on g_i x g_j whenever i + j != 0."""
    return all(key_level(gr, e) + key_level(gr, f) == 0
               for e, f in killing_table(sc))


def killing_nondegenerate(sc: StructureConstants, gr: Gradation, i: int) -> bool:
    """Whether the Killing form pairs g_i and g_-i nondegenerately."""
    left = level_keys(sc, gr, i)
    right = level_keys(sc, gr, -i)
    return exact.rank(killing_gram(sc, left, right)) == len(left)


def is_ad_nilpotent(sc: StructureConstants, v: AlgebraElement, power: int) -> bool:
    """Whether (ad v)^power kills every basis vector."""
    sc.check(v)
    for key in sc.basis:
        image = AlgebraElement.basis(key)
        for _ in range(power):
            image = _bracket(sc, v, image)
            if image.is_zero():
                break
        if not image.is_zero():
            return False
    return True


def nilpotency_power(gr: Gradation, k: int) -> int:
    """A power of ad v that must vanish for v in g_k, k != 0."""
    return -(-2 * gr.order // abs(k)) + 1


def element_level(gr: Gradation, v: AlgebraElement) -> int:
    """The common level of the support of v.

    Raises:
        exceptions.ShapeError: if the support spans several levels.
    """
    found = {key_level(gr, key) for key in v.coeffs}
    if len(found) != 1:
        raise exceptions.ShapeError(
            f"The element is not homogeneous: levels {sorted(found)}.")
    return found.pop()


def orbit_dimension(sc: StructureConstants, gr: Gradation,
                    v: AlgebraElement) -> int:
    """Rank of Z -> [Z, v] from g_0 to g_k for v in g_k.

    v is generic (its G_0 orbit is open) iff the result is dim g_k.

    Raises:
        exceptions.ShapeError: if v is not in a single level k != 0.
    """
    sc.check(v)
    if v.is_zero():
        return 0
    k = element_level(gr, v)
    if k == 0:
        raise exceptions.ShapeError("Orbit dimensions are for levels k != 0.")
    targets = level_keys(sc, gr, k)
    columns = []
    for key in level_keys(sc, gr, 0):
        image = _bracket(sc, AlgebraElement.basis(key), v)
        columns.append([image.coefficient(target) for target in targets])
    return exact.rank(columns)


def is_generic(sc: StructureConstants, gr: Gradation, v: AlgebraElement) -> bool:
    """Whether v in g_k has an open G_0 orbit."""
    if v.is_zero():
        return False
    return orbit_dimension(sc, gr, v) == len(gr.level(element_level(gr, v)))


def random_level_element(sc: StructureConstants, gr: Gradation, k: int,
                         rng: random.Random) -> AlgebraElement:
    """Element of g_k with random nonzero integer coefficients."""
    bound = RANDOM_COEFFICIENT_BOUND
    values = [c for c in range(-bound, bound + 1) if c]
    return AlgebraElement({key: rng.choice(values) for key in level_keys(sc, gr, k)})


def sample_generic(sc: StructureConstants, gr: Gradation, k: int,
                   seed: int = DEFAULT_SEED,
                   retries: int = GENERIC_RETRIES) -> Tuple[Optional[AlgebraElement], int]:
    """First generic random element of g_k and the number of draws used.

    Returns (None, retries) when no draw is generic.
    """
    rng = random.Random(seed)
    for attempt in range(1, retries + 1):
        candidate = random_level_element(sc, gr, k, rng)
        if is_generic(sc, gr, candidate):
            return candidate, attempt
    _logger.warning("No generic element of level %d of %s in %d draws",
                    k, gr.choice, retries)
    return None, retries


def is_simply_laced(rs: RootSystem) -> bool:
    """All simple roots have the same length."""
    return all(norm == 2 for norm in rs.norms)


def _check_simply_laced(sc: StructureConstants, gr: Gradation):
    if not is_simply_laced(sc.rs):
        raise exceptions.Unsupported(
            f"{gr.choice.diagram.name} is not simply laced.")


def alpha0_orbit(gr: Gradation) -> List[Root]:
    """Orbit of alpha_0 under the reflections of the other simple roots."""
    rs = gr.root_system
    position = gr.choice.position
    generators = [j for j in range(rs.rank) if j != position]
    orbit = rootsys.weyl_orbit(rs, rs.simple_root(position), generators)
    return sorted(orbit, key=lambda root: (rootsys.height(root), root))


def projected_norm(gr: Gradation) -> Fraction:
    """Squared length of the projection of alpha_0 onto the line of omega_0."""
    rs = gr.root_system
    position = gr.choice.position
    omega = WeightVector(tuple(1 if k == position else 0 for k in range(rs.rank)))
    norm = rs.norms[position]
    return norm * norm / (4 * rootsys.inner_product(rs, omega, omega))


def orbit_scale(gr: Gradation) -> Fraction:
    """s with [sum x_a, s sum x_-a] having Cartan part c, a over the alpha_0 orbit."""
    norm = gr.root_system.norms[gr.choice.position]
    return norm / (2 * len(alpha0_orbit(gr)) * projected_norm(gr))


def solve_partner(sc: StructureConstants, gr: Gradation,
                  x: AlgebraElement) -> Optional[AlgebraElement]:
    """Some Y in g_-1 with [x, Y] = c, or None."""
    c = grading_element(sc, gr)
    rows = level_keys(sc, gr, 0)
    columns = level_keys(sc, gr, -1)
    images = [_bracket(sc, x, AlgebraElement.basis(key)) for key in columns]
    matrix = [[image.coefficient(row) for image in images] for row in rows]
    solution = exact.solve(matrix, [c.coefficient(row) for row in rows])
    if solution is None:
        return None
    return AlgebraElement(dict(zip(columns, solution)))


def generic_pair(sc: StructureConstants, gr: Gradation,
                 seed: int = DEFAULT_SEED,
                 retries: int = GENERIC_RETRIES) -> Tuple[AlgebraElement, AlgebraElement]:
    """X generic in g_1 and Y in g_-1 with [X, Y] = c.

    X starts as the sum of the root vectors over the orbit of alpha_0
    and Y as orbit_scale times the sum of the opposite root vectors. If
    that bracket misses c, Y is solved for exactly; if the orbit sum is
    not generic, seeded random generic X are tried.

    Raises:
        exceptions.Unsupported: if the ambient diagram is not simply laced.
        exceptions.RegularityFailed: if no generic X has a partner Y.

    Returns:
        (AlgebraElement, AlgebraElement)
        For example:
            A1 node 1 -> (x, y / 2)
    """
    _check_simply_laced(sc, gr)
    c = grading_element(sc, gr)
    orbit = alpha0_orbit(gr)
    x = AlgebraElement({x_key(root): 1 for root in orbit})
    if is_generic(sc, gr, x):
        y = AlgebraElement({x_key(_neg(root)): 1 for root in orbit}) * orbit_scale(gr)
        if _bracket(sc, x, y) == c:
            return x, y
        y = solve_partner(sc, gr, x)
        if y is not None:
            return x, y
    rng = random.Random(seed)
    for _ in range(retries):
        x = random_level_element(sc, gr, 1, rng)
        if not is_generic(sc, gr, x):
            continue
        y = solve_partner(sc, gr, x)
        if y is not None:
            _logger.info("Generic pair of %s found from a random X", gr.choice)
            return x, y
    raise exceptions.RegularityFailed(gr.choice.diagram.name, gr.choice.node)


@dataclasses.dataclass(frozen=True)
class OrbitSumReport:
    """Pairings of the alpha_0 orbit sum with the simple roots.

    Attributes:
        orbit_size (int): number of roots in the orbit.
        sums (Tuple[Fraction, ...]): sum over the orbit of <a, alpha_k>.
        expected (Tuple[Fraction, ...]): 0 off alpha_0, and
            2 |orbit| |alpha_0'|^2 / |alpha_0|^2 at alpha_0.
        restriction_matches (bool): restricting the orbit to g_0 gives
            the Levi Weyl group orbit of the restricted alpha_0, one to one.
    """

    orbit_size: int
    sums: Tuple[Fraction, ...]
    expected: Tuple[Fraction, ...]
    restriction_matches: bool

    @property
    def passed(self) -> bool:
        """Sums as expected and restriction compatible."""
        return self.sums == self.expected and self.restriction_matches


def orbit_sums(sc: StructureConstants, gr: Gradation) -> OrbitSumReport:
    """Check the pairings of the sum over the alpha_0 orbit.

    Raises:
        exceptions.Unsupported: if the ambient diagram is not simply laced.
    """
    _check_simply_laced(sc, gr)
    rs = gr.root_system
    position = gr.choice.position
    orbit = alpha0_orbit(gr)
    sums = tuple(sum((rootsys.pairing(rs, root, k) for root in orbit), Fraction(0))
                 for k in range(rs.rank))
    peak = 2 * len(orbit) * projected_norm(gr) / rs.norms[position]
    expected = tuple(peak if k == position else Fraction(0) for k in range(rs.rank))

    ld = levirep.levi(gr.choice)
    restricted = {levirep.restrict_weight(ld, root) for root in orbit}
    start = levirep.restrict_weight(ld, rs.simple_root(position))
    if ld.diagram0.rank:
        rs0 = rootsys.build_root_system(ld.diagram0)
        levi_orbit = rootsys.weyl_orbit(rs0, start, range(rs0.rank))
    else:
        levi_orbit = {start}
    matches = restricted == levi_orbit and len(restricted) == len(orbit)
    return OrbitSumReport(len(orbit), sums, expected, matches)


def verify_embedding(inp: AugmentationInput) -> ValidationReport:
    """Check the augmented algebra against the augmentation data.

    The Chevalley realization of the augmented matrix (alpha_0 as node 0)
    must give x_-alpha0 the weight omega under the Levi coroots, satisfy
    the Serre relations between node 0 and every other node, and have
    h_0 Killing orthogonal to the Levi root vectors with the Killing form
    reproducing the Cartan entries <alpha_j, alpha_0>.

    Raises:
        exceptions.ValidationFailed: if the candidate matrix is not finite type.
    """
    am = augment.build_augmented_matrix(inp)
    report = augment.validate(am)
    if not report.passed:
        raise exceptions.ValidationFailed(report.failed)
    rs = rootsys.build_root_system(am.as_cartan())
    sc = build_chevalley(rs)
    entries = am.entries
    size = am.size
    simple = [rs.simple_root(i) for i in range(size)]
    omega = inp.omega.as_ints()

    lowest = AlgebraElement.basis(x_key(_neg(simple[0])))
    weights = tuple(_bracket(sc, AlgebraElement.basis(h_key(j)), lowest)
                    .coefficient(x_key(_neg(simple[0]))) for j in range(1, size))
    checks = [CheckResult("weight of x_-alpha0", weights == omega,
                          ",".join(exact.format_rational(w) for w in weights))]

    serre = True
    for j in range(1, size):
        for sign in (1, -1):
            pairs = ((0, j), (j, 0))
            for i, k in pairs:
                ad = AlgebraElement.basis(x_key(tuple(sign * c for c in simple[i])))
                image = AlgebraElement.basis(x_key(tuple(sign * c for c in simple[k])))
                for _ in range(1 - entries[k][i]):
                    image = _bracket(sc, ad, image)
                serre = serre and image.is_zero()
    checks.append(CheckResult("Serre relations", serre))

    h0 = AlgebraElement.basis(h_key(0))
    orthogonal = all(
        killing_form(sc, h0, AlgebraElement.basis(x_key(tuple(sign * c for c in simple[j])))) == 0
        for j in range(1, size) for sign in (1, -1))
    checks.append(CheckResult("h0 orthogonal to Levi root vectors", orthogonal))

    ratios = True
    for j in range(1, size):
        hj = AlgebraElement.basis(h_key(j))
        ratio = 2 * killing_form(sc, h0, hj) / killing_form(sc, hj, hj)
        ratios = ratios and ratio == entries[j][0]
    checks.append(CheckResult("Killing form reproduces <alpha_j, alpha_0>", ratios))
    return ValidationReport(tuple(checks))
