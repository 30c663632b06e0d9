r"""Pairs of 2-forms under GL2 x SL_n and their binary forms.

A pair (ω1, ω2) of 2-forms on C^n is the element (1,0)⊗ω1 + (0,1)⊗ω2 of
C²⊗Λ²C^n. GL2 acts by A(ω1, ω2) = (aω1 + bω2, cω1 + dω2) and SL_n by
g·ω = g ω gᵀ on the coefficient matrices.

For n = 2m the pencil gives a binary form of degree m:
    (λω1 + μω2)^m = f(λ, μ) e¹∧...∧e^{2m},  f = m! Pf(λM1 + μM2).
Its roots, as m points of the projective line, are invariant up to the
projective action of A.

For n = 2m + 1 the pairs split into U1, where both forms live on a
common 2m-dimensional subspace, and U2, the rest.

Binary forms are coefficient lists (c_0, ..., c_m) of Σ c_k λ^{m-k} μ^k.
"""

import dataclasses
import functools
import json
import logging
import math
import random
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import sympy

from . import exact
from . import exceptions

_logger = logging.getLogger("dynkin-forge")

Poly = List[Fraction]
Matrix = Tuple[Tuple[Fraction, ...], ...]

_LAMBDA, _MU = sympy.symbols("lambda mu")


def _freeze(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(exact.to_fraction(value) for value in row) for row in rows)


@dataclasses.dataclass(frozen=True)
class TwoFormPair:
    """Coefficient matrices of two 2-forms on C^n.

    Attributes:
        m1 (Matrix): antisymmetric n x n matrix of ω1.
        m2 (Matrix): antisymmetric n x n matrix of ω2.
    """

    m1: Matrix
    m2: Matrix

    def __post_init__(self):
        """Check both matrices are antisymmetric of the same size.

        Raises:
            exceptions.ShapeError: for non-square or mismatched matrices.
            exceptions.DomainError: for a matrix that is not antisymmetric.
        """
        m1, m2 = _freeze(self.m1), _freeze(self.m2)
        n = len(m1)
        if len(m2) != n or any(len(row) != n for row in m1 + m2):
            raise exceptions.ShapeError("Both forms need n x n matrices.")
        for matrix in (m1, m2):
            if any(matrix[i][j] != -matrix[j][i] for i in range(n) for j in range(n)):
                raise exceptions.DomainError("A 2-form needs an antisymmetric matrix.")
        object.__setattr__(self, "m1", m1)
        object.__setattr__(self, "m2", m2)

    @property
    def n(self) -> int:
        """Dimension of the space the forms live on."""
        return len(self.m1)

    @property
    def m(self) -> int:
        """n // 2, the degree of the binary form for even n."""
        return self.n // 2

    @classmethod
    def from_json(cls, text: str) -> "TwoFormPair":
        """Read {"m1": [[...]], "m2": [[...]]}; entries are numbers or "p/q"."""
        data = json.loads(text)
        return cls(data["m1"], data["m2"])

    def to_json(self) -> dict:
        """{"m1": [["p/q", ...], ...], "m2": ...}."""
        return {name: [[exact.format_rational(v) for v in row] for row in matrix]
                for name, matrix in (("m1", self.m1), ("m2", self.m2))}


@dataclasses.dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form Σ c_k λ^{m-k} μ^k.

    Attributes:
        coeffs (Tuple[Fraction, ...]): c_0 .. c_m.
    """

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        """Store Fractions."""
        object.__setattr__(self, "coeffs",
                           tuple(exact.to_fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        """m."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        """Whether every coefficient vanishes."""
        return not any(self.coeffs)

    def as_expr(self) -> sympy.Expr:
        """The form as a sympy expression in lambda and mu."""
        m = self.degree
        return sum((sympy.Rational(c.numerator, c.denominator)
                    * _LAMBDA ** (m - k) * _MU ** k
                    for k, c in enumerate(self.coeffs)), sympy.Integer(0))

    def __str__(self) -> str:
        """sympy's printing, e.g. "2*lambda**2 - 2*mu**2"."""
        return str(sympy.expand(self.as_expr()))


@dataclasses.dataclass(frozen=True)
class PointConfig:
    """A multiset of points of the projective line.

    Points are normalized to (t, 1), or (1, 0) for the point at infinity,
    and kept sorted.

    Attributes:
        points (Tuple[Tuple[Fraction, Fraction], ...]): (λ, μ) representatives.
    """

    points: Tuple[Tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        """Normalize and sort; a zero point raises DomainError."""
        object.__setattr__(self, "points", tuple(sorted(
            normalize_point(point) for point in self.points)))

    @property
    def m(self) -> int:
        """Number of points, with multiplicity."""
        return len(self.points)

    def to_json(self) -> list:
        """[["p/q", "p/q"], ...]."""
        return [[exact.format_rational(v) for v in point] for point in self.points]


def normalize_point(point: Sequence) -> Tuple[Fraction, Fraction]:
    """Representative (λ/μ, 1) or (1, 0).

    Raises:
        exceptions.DomainError: for (0, 0).
    """
    lam, mu = (exact.to_fraction(v) for v in point)
    if mu:
        return lam / mu, Fraction(1)
    if lam:
        return Fraction(1), Fraction(0)
    raise exceptions.DomainError("(0 : 0) is not a point of the projective line.")


def _poly_mul(first: Poly, second: Poly) -> Poly:
    result = [Fraction(0)] * (len(first) + len(second) - 1)
    for i, a in enumerate(first):
        if a:
            for j, b in enumerate(second):
                result[i + j] += a * b
    return result


def _poly_add(first: Poly, second: Poly) -> Poly:
    return [a + b for a, b in zip(first, second)]


def _pfaffian_pencil(pair: TwoFormPair) -> Poly:
    """Pf(λM1 + μM2) as coefficients, expanding along the first row."""
    entries = {(i, j): [pair.m1[i][j], pair.m2[i][j]]
               for i in range(pair.n) for j in range(pair.n)}

    @functools.lru_cache(maxsize=None)
    def pfaffian(indices: Tuple[int, ...]) -> Tuple[Fraction, ...]:
        if not indices:
            return (Fraction(1),)
        first, rest = indices[0], indices[1:]
        total = [Fraction(0)] * (len(indices) // 2 + 1)
        for position, j in enumerate(rest):
            entry = entries[(first, j)]
            if not any(entry):
                continue
            minor = pfaffian(rest[:position] + rest[position + 1:])
            term = _poly_mul(entry, list(minor))
            sign = 1 if position % 2 == 0 else -1
            total = [t + sign * value for t, value in zip(total, term)]
        return tuple(total)

    return list(pfaffian(tuple(range(pair.n))))


def phi(pair: TwoFormPair) -> BinaryForm:
    """The binary form m! Pf(λM1 + μM2) of a pair on C^{2m}.

    Raises:
        exceptions.ShapeError: for odd n.

    Returns:
        BinaryForm
        For example:
            ω1 = e¹∧e² + e³∧e⁴, ω2 = e¹∧e² - e³∧e⁴ -> 2λ² - 2μ²
    """
    if pair.n % 2:
        raise exceptions.ShapeError(f"phi needs an even dimension, not {pair.n}.")
    scale = math.factorial(pair.m)
    return BinaryForm(tuple(scale * c for c in _pfaffian_pencil(pair)))


def _wedge_sign(monomial: Tuple[int, ...], i: int, j: int) -> int:
    """Sign of sorting e_monomial ∧ e_i ∧ e_j, for i < j."""
    after_i = sum(1 for k in monomial if k > i)
    after_j = sum(1 for k in monomial if k > j)
    return -1 if (after_i + after_j) % 2 else 1


def phi_by_wedge(pair: TwoFormPair) -> BinaryForm:
    """The same binary form as phi, by expanding (λω1 + μω2)^m in the exterior algebra.

    Raises:
        exceptions.ShapeError: for odd n.
    """
    if pair.n % 2:
        raise exceptions.ShapeError(f"phi needs an even dimension, not {pair.n}.")
    two_form = {(i, j): [pair.m1[i][j], pair.m2[i][j]]
                for i in range(pair.n) for j in range(i + 1, pair.n)
                if pair.m1[i][j] or pair.m2[i][j]}
    power: Dict[Tuple[int, ...], Poly] = {(): [Fraction(1)]}
    for _ in range(pair.m):
        product: Dict[Tuple[int, ...], Poly] = {}
        for monomial, coefficient in power.items():
            for (i, j), entry in two_form.items():
                if i in monomial or j in monomial:
                    continue
                key = tuple(sorted(monomial + (i, j)))
                term = [_wedge_sign(monomial, i, j) * v
                        for v in _poly_mul(coefficient, entry)]
                product[key] = _poly_add(product[key], term) if key in product else term
        power = product
    top = power.get(tuple(range(pair.n)), [Fraction(0)] * (pair.m + 1))
    return BinaryForm(tuple(top))


def _congruence(g: Matrix, matrix: Matrix) -> List[List[Fraction]]:
    """g M gᵀ."""
    n = len(matrix)
    left = [[sum((g[i][k] * matrix[k][j] for k in range(n)), Fraction(0))
              for j in range(n)] for i in range(n)]
    return [[sum((left[i][k] * g[j][k] for k in range(n)), Fraction(0))
             for j in range(n)] for i in range(n)]


def act(pair: TwoFormPair, a: Sequence[Sequence], g: Sequence[Sequence]) -> TwoFormPair:
    """The pair moved by A in GL2 and g acting on C^n.

    Raises:
        exceptions.ShapeError: for matrices of the wrong size.
    """
    a = _freeze(a)
    g = _freeze(g)
    if len(a) != 2 or any(len(row) != 2 for row in a):
        raise exceptions.ShapeError("A must be a 2 x 2 matrix.")
    if len(g) != pair.n or any(len(row) != pair.n for row in g):
        raise exceptions.ShapeError(f"g must be a {pair.n} x {pair.n} matrix.")
    first = _congruence(g, pair.m1)
    second = _congruence(g, pair.m2)
    n = pair.n
    return TwoFormPair(
        [[a[0][0] * first[i][j] + a[0][1] * second[i][j] for j in range(n)]
         for i in range(n)],
        [[a[1][0] * first[i][j] + a[1][1] * second[i][j] for j in range(n)]
         for i in range(n)])


def substitute(form: BinaryForm, first: Sequence, second: Sequence) -> BinaryForm:
    """f(pλ + qμ, rλ + sμ) for first = (p, q) and second = (r, s)."""
    first = [exact.to_fraction(v) for v in first]
    second = [exact.to_fraction(v) for v in second]
    m = form.degree
    total = [Fraction(0)] * (m + 1)
    for k, c in enumerate(form.coeffs):
        if not c:
            continue
        term = [c]
        for _ in range(m - k):
            term = _poly_mul(term, first)
        for _ in range(k):
            term = _poly_mul(term, second)
        total = _poly_add(total, term)
    return BinaryForm(tuple(total))


def covariance_check(pair: TwoFormPair, a: Sequence[Sequence],
                     g: Sequence[Sequence]) -> bool:
    """Whether f_{A(gω1, gω2)}(λ, μ) = f_{(ω1, ω2)}(aλ + cμ, bλ + dμ).

    Raises:
        exceptions.DomainError: if det g != 1 or A is singular.
    """
    if exact.determinant(g) != 1:
        raise exceptions.DomainError("g must have determinant 1.")
    if exact.determinant(a) == 0:
        raise exceptions.DomainError("A must be invertible.")
    a = _freeze(a)
    left = phi(act(pair, a, g))
    right = substitute(phi(pair), (a[0][0], a[1][0]), (a[0][1], a[1][1]))
    return left == right


def construct_from_points(pts: PointConfig) -> TwoFormPair:
    """Block diagonal pair whose binary form vanishes exactly at the points.

    ω1 = Σ μ_i e^{2i-1}∧e^{2i} and ω2 = -Σ λ_i e^{2i-1}∧e^{2i}, so that
    phi = m! Π (μ_i λ - λ_i μ).

    Raises:
        exceptions.DomainError: for an empty configuration.
    """
    if pts.m < 1:
        raise exceptions.DomainError("At least one point is needed.")
    n = 2 * pts.m
    m1 = [[Fraction(0)] * n for _ in range(n)]
    m2 = [[Fraction(0)] * n for _ in range(n)]
    for i, (lam, mu) in enumerate(pts.points):
        m1[2 * i][2 * i + 1], m1[2 * i + 1][2 * i] = mu, -mu
        m2[2 * i][2 * i + 1], m2[2 * i + 1][2 * i] = -lam, lam
    return TwoFormPair(m1, m2)


def point_config_invariant(pair: TwoFormPair) -> PointConfig:
    """Roots of the binary form as points of the projective line.

    A linear factor pλ + qμ vanishes at the point (-q : p).

    Raises:
        exceptions.ShapeError: for odd n.
        exceptions.Degenerate: if the form is zero.
        exceptions.NotSplit: if some factor has no rational root.
    """
    form = phi(pair)
    if form.is_zero():
        raise exceptions.Degenerate()
    _, factors = sympy.factor_list(form.as_expr(), _LAMBDA, _MU)
    points = []
    for factor, multiplicity in factors:
        poly = sympy.Poly(factor, _LAMBDA, _MU)
        if poly.total_degree() == 0:
            continue
        if poly.total_degree() != 1:
            raise exceptions.NotSplit(str(factor))
        p = poly.coeff_monomial(_LAMBDA)
        q = poly.coeff_monomial(_MU)
        point = (Fraction(int(-q.p), int(q.q)), Fraction(int(p.p), int(p.q)))
        points.extend([point] * int(multiplicity))
    return PointConfig(tuple(points))


def stacked_rank(pair: TwoFormPair) -> int:
    """Dimension of the sum of the column spaces of M1 and M2."""
    return exact.rank([list(r1) + list(r2) for r1, r2 in zip(pair.m1, pair.m2)])


def classify_u1_u2(pair: TwoFormPair) -> str:
    """"U1" if both forms live on a common 2m-dimensional subspace, else "U2".

    Raises:
        exceptions.ShapeError: for even n.
    """
    if pair.n % 2 == 0:
        raise exceptions.ShapeError(f"U1/U2 needs an odd dimension, not {pair.n}.")
    return "U1" if stacked_rank(pair) <= 2 * pair.m else "U2"


def _vectorize(first: Sequence[Sequence], second: Sequence[Sequence]) -> List[Fraction]:
    n = len(first)
    return ([first[i][j] for i in range(n) for j in range(i + 1, n)]
            + [second[i][j] for i in range(n) for j in range(i + 1, n)])


def orbit_dim_gl2sl(pair: TwoFormPair) -> int:
    """Rank of the tangent map of GL2 x SL_n at the pair.

    The target C²⊗Λ²C^n has dimension n(n - 1); the orbit is open iff
    the rank reaches it.
    """
    n = pair.n
    zero = [[Fraction(0)] * n for _ in range(n)]
    images = [
        _vectorize(pair.m1, zero), _vectorize(pair.m2, zero),
        _vectorize(zero, pair.m1), _vectorize(zero, pair.m2),
    ]

    def infinitesimal(z: List[List[int]]) -> List[Fraction]:
        moved = []
        for matrix in (pair.m1, pair.m2):
            product = [[sum((z[i][k] * matrix[k][j] for k in range(n)), Fraction(0))
                        for j in range(n)] for i in range(n)]
            moved.append([[product[i][j] - product[j][i] for j in range(n)]
                          for i in range(n)])
        return _vectorize(*moved)

    for i in range(n):
        for j in range(n):
            if i == j and i == n - 1:
                continue
            z = [[0] * n for _ in range(n)]
            if i == j:
                z[i][i], z[i + 1][i + 1] = 1, -1
            else:
                z[i][j] = 1
            images.append(infinitesimal(z))
    return exact.rank(images)


def u2_witness(m: int) -> TwoFormPair:
    """The pair ω1 = Σ e_i∧f_i, ω2 = Σ e_i∧f_{i+1} on C^{2m+1}.

    The basis is e_1..e_m, f_1..f_{m+1}; the pair lies in U2 and has an
    open orbit.
    """
    if m < 1:
        raise exceptions.DomainError(f"m must be at least 1, not {m}.")
    n = 2 * m + 1
    m1 = [[0] * n for _ in range(n)]
    m2 = [[0] * n for _ in range(n)]
    for i in range(m):
        e, f_same, f_next = i, m + i, m + i + 1
        m1[e][f_same], m1[f_same][e] = 1, -1
        m2[e][f_next], m2[f_next][e] = 1, -1
    return TwoFormPair(m1, m2)


def cross_ratio(points: Sequence[Sequence]) -> Fraction:
    """[13][24] / ([14][23]) of four points, [ij] = λ_i μ_j - λ_j μ_i.

    Raises:
        exceptions.DomainError: for anything but four points, or coincident
            points making the ratio undefined.
    """
    if len(points) != 4:
        raise exceptions.DomainError("The cross-ratio needs four points.")
    pts = [normalize_point(point) for point in points]

    def bracket(i: int, j: int) -> Fraction:
        return pts[i][0] * pts[j][1] - pts[j][0] * pts[i][1]

    denominator = bracket(0, 3) * bracket(1, 2)
    if denominator == 0:
        raise exceptions.DomainError("Coincident points have no cross-ratio.")
    return bracket(0, 2) * bracket(1, 3) / denominator


def random_unimodular(n: int, rng: random.Random, steps: int = 12) -> List[List[int]]:
    """Product of random elementary matrices, so the determinant is 1."""
    g = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n < 2:
        return g
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        factor = rng.choice([-2, -1, 1, 2])
        # row_i += factor * row_j
        g[i] = [a + factor * b for a, b in zip(g[i], g[j])]
    return g


def random_invertible_2x2(rng: random.Random) -> List[List[int]]:
    """Random integer 2 x 2 matrix with nonzero determinant."""
    while True:
        a = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
        if a[0][0] * a[1][1] - a[0][1] * a[1][0]:
            return a


def random_pair(n: int, rng: random.Random, bound: int = 3) -> TwoFormPair:
    """Random integer pair of antisymmetric n x n matrices."""
    matrices = []
    for _ in range(2):
        matrix = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                value = rng.randint(-bound, bound)
                matrix[i][j], matrix[j][i] = value, -value
        matrices.append(matrix)
    return TwoFormPair(*matrices)


def has_finitely_many_orbits(m: int) -> bool:
    """Whether GL2 x SL_{2m+1} has finitely many orbits on C²⊗Λ²C^{2m+1}.

    Finite for m <= 3; for m >= 4 the cross-ratio of the point
    configurations separates infinitely many orbits.
    """
    if m < 1:
        raise exceptions.DomainError(f"m must be at least 1, not {m}.")
    return m <= 3
