"""Test pairs of 2-forms, their binary forms and point configurations."""

from fractions import Fraction
import json
import random
import pytest
import dynkin_forge.exceptions
from dynkin_forge import exact, glorbits
from dynkin_forge.glorbits import BinaryForm, PointConfig, TwoFormPair


def block_pair() -> TwoFormPair:
    """ω1 = e¹∧e² + e³∧e⁴ and ω2 = e¹∧e² - e³∧e⁴."""
    m1 = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    m2 = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    return TwoFormPair(m1, m2)


def test_phi_example():
    """(λ+μ)(λ-μ) times 2!."""
    form = glorbits.phi(block_pair())
    assert form.coeffs == (2, 0, -2)
    assert form.degree == 2
    assert str(form) == "2*lambda**2 - 2*mu**2"


def test_phi_m1():
    """On C² the binary form is the linear form itself."""
    pair = TwoFormPair([[0, 3], [-3, 0]], [[0, -5], [5, 0]])
    assert glorbits.phi(pair).coeffs == (3, -5)


def test_phi_odd_dimension():
    """phi needs an even dimension."""
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        glorbits.phi(glorbits.u2_witness(1))
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        glorbits.phi_by_wedge(glorbits.u2_witness(1))


def test_phi_agrees_with_wedge():
    """The Pfaffian and the exterior power give the same form."""
    rng = random.Random(7)
    assert glorbits.phi_by_wedge(block_pair()) == glorbits.phi(block_pair())
    for n in (2, 4, 6):
        for _ in range(10):
            pair = glorbits.random_pair(n, rng)
            assert glorbits.phi_by_wedge(pair) == glorbits.phi(pair)


def test_covariance():
    """Moving the pair substitutes into the binary form."""
    rng = random.Random(11)
    assert glorbits.covariance_check(block_pair(), [[1, 1], [0, 1]],
                                     glorbits.random_unimodular(4, rng))
    for n in (2, 4, 6):
        for _ in range(5):
            pair = glorbits.random_pair(n, rng)
            a = glorbits.random_invertible_2x2(rng)
            g = glorbits.random_unimodular(n, rng)
            assert glorbits.covariance_check(pair, a, g)


def test_covariance_needs_unimodular():
    """det g = 1 and A invertible."""
    identity = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    doubled = [row[:] for row in identity]
    doubled[0][0] = 2
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        glorbits.covariance_check(block_pair(), [[1, 0], [0, 1]], doubled)
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        glorbits.covariance_check(block_pair(), [[1, 1], [1, 1]], identity)


def test_act_shapes():
    """A is 2 x 2 and g is n x n."""
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        glorbits.act(block_pair(), [[1, 0, 0], [0, 1, 0]], [[1]])
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        glorbits.act(block_pair(), [[1, 0], [0, 1]], [[1, 0], [0, 1]])


def test_substitute():
    """f(λ + μ, μ) for f = λμ."""
    form = BinaryForm((0, 1, 0))
    assert glorbits.substitute(form, (1, 1), (0, 1)).coeffs == (0, 1, 1)


def test_pair_validation():
    """Antisymmetric square matrices of one size."""
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        TwoFormPair([[0, 1], [1, 0]], [[0, 0], [0, 0]])
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        TwoFormPair([[1, 0], [0, 0]], [[0, 0], [0, 0]])
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        TwoFormPair([[0, 1], [-1, 0]], [[0]])


def test_pair_json():
    """Entries may be written as fractions."""
    pair = TwoFormPair.from_json(
        json.dumps({"m1": [[0, 1], [-1, 0]], "m2": [[0, "1/2"], ["-1/2", 0]]}))
    assert pair.m2[0][1] == Fraction(1, 2)
    assert pair.to_json() == {"m1": [["0", "1"], ["-1", "0"]],
                              "m2": [["0", "1/2"], ["-1/2", "0"]]}
    assert (pair.n, pair.m) == (2, 1)


def test_points():
    """Points are normalized and sorted."""
    config = PointConfig(((2, 2), (3, 0), (0, 5)))
    assert config.points == ((0, 1), (1, 0), (1, 1))
    assert config.m == 3
    assert config.to_json() == [["0", "1"], ["1", "0"], ["1", "1"]]
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        glorbits.normalize_point((0, 0))


def test_construct_from_points():
    """The points 0 and ∞ give -2λμ."""
    pair = glorbits.construct_from_points(PointConfig(((0, 1), (1, 0))))
    assert glorbits.phi(pair).coeffs == (0, -2, 0)
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        glorbits.construct_from_points(PointConfig(()))


def test_points_round_trip():
    """The roots of the constructed pair are the points, with multiplicity."""
    for points in (((0, 1), (1, 0)),
                   ((0, 1), (1, 0), (1, 1), (2, 1)),
                   ((Fraction(1, 3), 1), (Fraction(1, 3), 1), (-4, 1))):
        config = PointConfig(points)
        assert glorbits.point_config_invariant(glorbits.construct_from_points(config)) == config


def test_points_move_projectively():
    """A GL2 move sends the roots through the inverse Möbius map."""
    config = PointConfig(((0, 1), (1, 0), (1, 1)))
    pair = glorbits.construct_from_points(config)
    moved = glorbits.act(pair, [[1, 0], [1, 1]], [[1 if i == j else 0 for j in range(6)]
                                                  for i in range(6)])
    assert glorbits.point_config_invariant(moved).m == 3
    assert glorbits.point_config_invariant(moved) != config


def test_degenerate_and_not_split():
    """A zero form has no points and λ² - 2μ² has no rational roots."""
    zero = [[0] * 4 for _ in range(4)]
    with pytest.raises(dynkin_forge.exceptions.Degenerate):
        glorbits.point_config_invariant(TwoFormPair(zero, zero))
    m1 = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    m2 = [[0, 0, 1, 0], [0, 0, 0, 2], [-1, 0, 0, 0], [0, -2, 0, 0]]
    pair = TwoFormPair(m1, m2)
    assert glorbits.phi(pair).coeffs == (2, 0, -4)
    with pytest.raises(dynkin_forge.exceptions.NotSplit):
        glorbits.point_config_invariant(pair)


def test_classify():
    """Rank of [M1 | M2] decides U1 against U2."""
    assert glorbits.classify_u1_u2(glorbits.u2_witness(1)) == "U2"
    assert glorbits.classify_u1_u2(glorbits.u2_witness(3)) == "U2"
    m1 = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    m2 = [[0, 2, 0], [-2, 0, 0], [0, 0, 0]]
    assert glorbits.classify_u1_u2(TwoFormPair(m1, m2)) == "U1"
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        glorbits.classify_u1_u2(block_pair())


def test_classify_invariant():
    """U1 and U2 are unions of orbits."""
    rng = random.Random(2)
    for pair in (glorbits.u2_witness(2), glorbits.random_pair(5, rng),
                 TwoFormPair([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], [[0] * 3] * 3)):
        moved = glorbits.act(pair, glorbits.random_invertible_2x2(rng),
                             glorbits.random_unimodular(pair.n, rng))
        assert glorbits.classify_u1_u2(moved) == glorbits.classify_u1_u2(pair)


def test_orbit_dimensions():
    """The zero pair is fixed and the U2 witnesses have open orbits."""
    zero = [[0] * 3 for _ in range(3)]
    assert glorbits.orbit_dim_gl2sl(TwoFormPair(zero, zero)) == 0
    assert glorbits.orbit_dim_gl2sl(glorbits.u2_witness(1)) == 6
    assert glorbits.orbit_dim_gl2sl(glorbits.u2_witness(2)) == 20
    u1 = TwoFormPair([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], zero)
    assert glorbits.orbit_dim_gl2sl(u1) < 6


@pytest.mark.slow
def test_orbit_dimension_m4():
    """C²⊗Λ²C⁹ still has an open orbit at the witness."""
    assert glorbits.orbit_dim_gl2sl(glorbits.u2_witness(4)) == 72


def test_cross_ratio():
    """{0, ∞, 1, 2} and {0, ∞, 1, 3} are not projectively equivalent."""
    first = [(0, 1), (1, 0), (1, 1), (2, 1)]
    second = [(0, 1), (1, 0), (1, 1), (3, 1)]
    assert glorbits.cross_ratio(first) == Fraction(1, 2)
    assert glorbits.cross_ratio(second) == Fraction(1, 3)
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        glorbits.cross_ratio(first[:3])
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        glorbits.cross_ratio([(0, 1), (1, 0), (1, 1), (0, 1)])


def test_cross_ratio_invariant():
    """A Möbius map keeps the cross-ratio."""
    points = [(0, 1), (1, 0), (1, 1), (2, 1)]
    moved = [(2 * lam + mu, lam + mu) for lam, mu in points]
    assert glorbits.cross_ratio(moved) == glorbits.cross_ratio(points)


def test_finitely_many_orbits():
    """Finite up to m = 3."""
    assert glorbits.has_finitely_many_orbits(3)
    assert not glorbits.has_finitely_many_orbits(4)
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        glorbits.has_finitely_many_orbits(0)


def test_random_helpers():
    """Unimodular and invertible draws."""
    rng = random.Random(0)
    assert exact.determinant(glorbits.random_unimodular(5, rng)) == 1
    assert exact.determinant(glorbits.random_invertible_2x2(rng)) != 0
