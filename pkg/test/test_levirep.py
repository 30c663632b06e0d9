"""Test Levi data, graded pieces and the Weyl dimension formula."""

import pytest
import dynkin_forge.exceptions
from dynkin_forge import gradation, levirep, rootsys
from dynkin_forge.gradation import NodeChoice
from dynkin_forge.levirep import ConnectingMultiplicities
from dynkin_forge.rootsys import DynkinDiagram, WeightVector


def levi_of(name: str, node: int) -> levirep.LeviData:
    """Levi data of a named diagram and node."""
    return levirep.levi(NodeChoice.parse(name, node))


def test_levi_types():
    """Deleting a node leaves the Levi diagram."""
    assert levi_of("E8", 4).diagram0.name == "A1xA2xA4"
    assert levi_of("E8", 2).diagram0.name == "A7"
    assert levi_of("E6", 3).diagram0.name == "A1xA4"
    assert levi_of("F4", 3).diagram0.name == "A1xA2"
    assert levi_of("A1", 1).diagram0.name == ""
    assert levi_of("E8", 4).center_dimension == 1


def test_levi_nodes_keep_bourbaki_order():
    """The first A2 of A5 node 3 is reversed so that g_-1 has weight (1,0;1,0)."""
    ld = levi_of("A5", 3)
    assert [c.nodes for c in ld.components] == [(1, 0), (3, 4)]
    assert ld.ambient_nodes == (1, 0, 3, 4)


def test_connecting_multiplicities():
    """Bond multiplicities between the marked node and each component."""
    assert levirep.connecting_multiplicities(NodeChoice.parse("F4", 3)).values == (1, 2)
    assert levirep.connecting_multiplicities(NodeChoice.parse("G2", 1)).values == (3,)
    assert levirep.connecting_multiplicities(NodeChoice.parse("B5", 5)).values == (2,)
    assert levirep.connecting_multiplicities(NodeChoice.parse("E8", 4)).values == (1, 1, 1)


def test_multiplicities_parse():
    """Reading and checking connecting multiplicities."""
    nu = ConnectingMultiplicities.parse("1,2")
    assert nu.values == (1, 2)
    assert nu.has_single_multiple_bond()
    assert not ConnectingMultiplicities((2, 3)).has_single_multiple_bond()
    assert len(ConnectingMultiplicities.parse("")) == 0
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        ConnectingMultiplicities.parse("4")
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        ConnectingMultiplicities.parse("1,x")


def test_restrict_weight():
    """The restriction of -alpha_0 to A2 node 1 is omega_1 of A1."""
    ld = levi_of("A2", 1)
    assert levirep.restrict_weight(ld, (-1, 0)) == WeightVector((1,))
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        levirep.restrict_weight(ld, (1, 0, 0))


def test_piece_rep_e8():
    """E8 node 2: Λ³C⁸, Λ⁶C⁸ and C⁸."""
    choice = NodeChoice.parse("E8", 2)
    gr = gradation.grade(choice)
    ld = levirep.levi(choice)
    first = levirep.piece_rep(gr, ld, -1)
    assert first.dim == 56
    assert first.highest_weight == WeightVector((0, 0, 1, 0, 0, 0, 0))
    assert first.is_multiplicity_free()
    assert levirep.piece_rep(gr, ld, -2).highest_weight == WeightVector((0, 0, 0, 0, 0, 1, 0))
    assert levirep.piece_rep(gr, ld, -3).highest_weight == WeightVector((1, 0, 0, 0, 0, 0, 0))
    assert [piece.level for piece in levirep.pieces(gr, ld)] == [-3, -2, -1, 1, 2, 3]


def test_piece_rep_errors():
    """Level 0 and empty levels are not graded pieces."""
    choice = NodeChoice.parse("A3", 2)
    gr = gradation.grade(choice)
    ld = levirep.levi(choice)
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        levirep.piece_rep(gr, ld, 0)
    with pytest.raises(dynkin_forge.exceptions.EmptyLevel):
        levirep.piece_rep(gr, ld, 2)


def test_split_weight():
    """The g_-1 weight of E8 node 4 split per component."""
    choice = NodeChoice.parse("E8", 4)
    ld = levirep.levi(choice)
    piece = levirep.piece_rep(gradation.grade(choice), ld, -1)
    assert ld.split(piece.highest_weight) == [(1,), (1, 0), (1, 0, 0, 0)]


def test_weyl_dim():
    """Dimensions of familiar representations."""
    assert levirep.weyl_dim(DynkinDiagram.parse("B3"), WeightVector((0, 0, 1))) == 8
    assert levirep.weyl_dim(DynkinDiagram.parse("A7"), WeightVector((0, 0, 1, 0, 0, 0, 0))) == 56
    assert levirep.weyl_dim(DynkinDiagram.parse("E6"), WeightVector((1, 0, 0, 0, 0, 0))) == 27
    assert levirep.weyl_dim(DynkinDiagram.parse("G2"), WeightVector((1, 0))) == 7
    assert levirep.weyl_dim(DynkinDiagram.parse("G2"), WeightVector((0, 1))) == 14
    assert levirep.weyl_dim(DynkinDiagram.parse("A1xA4"), WeightVector((1, 0, 1, 0, 0))) == 20
    assert levirep.weyl_dim(DynkinDiagram(()), WeightVector(())) == 1


def test_weyl_dim_adjoint():
    """The highest root is the highest weight of the adjoint representation."""
    for lie_type in ("A4", "C3", "D5", "F4", "E7"):
        diagram = DynkinDiagram.parse(lie_type)
        rs = rootsys.build_root_system(diagram)
        theta = rootsys.weight_from_root_coords(rs, rootsys.highest_root(rs))
        assert levirep.weyl_dim(diagram, theta) == rs.dimension


def test_weyl_dim_errors():
    """Non-dominant weights and length mismatches are rejected."""
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        levirep.weyl_dim(DynkinDiagram.parse("A2"), WeightVector((-1, 0)))
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        levirep.weyl_dim(DynkinDiagram.parse("A2"), WeightVector((1,)))


def test_level_one_is_irreducible():
    """The Weyl dimension of the highest weight of g_-1 is dim g_-1."""
    for lie_type in rootsys.simple_types(6) + ["E7", "E8"]:
        diagram = DynkinDiagram.parse(lie_type)
        for node in range(1, diagram.rank + 1):
            choice = NodeChoice(diagram, node)
            ld = levirep.levi(choice)
            piece = levirep.piece_rep(gradation.grade(choice), ld, -1)
            print(lie_type, node)
            assert piece.highest_weight.is_dominant()
            assert levirep.weyl_dim(ld, piece.highest_weight) == piece.dim


def test_is_listed_wmf():
    """Weight multiplicity free irreducible representations."""
    assert levirep.is_listed_wmf("A1", (3,))
    assert not levirep.is_listed_wmf("A2", (1, 1))
    assert not levirep.is_listed_wmf("A3", (0, 2, 0))
    assert levirep.is_listed_wmf("B3", (0, 0, 1))
    assert levirep.is_listed_wmf("C3", (0, 0, 1))
    assert not levirep.is_listed_wmf("C4", (0, 0, 0, 1))
    assert levirep.is_listed_wmf("D5", (0, 0, 0, 1, 0))
    assert levirep.is_listed_wmf("E6", (1, 0, 0, 0, 0, 0))
    assert levirep.is_listed_wmf("E7", (0, 0, 0, 0, 0, 0, 1))
    assert not levirep.is_listed_wmf("E8", (0, 0, 0, 0, 0, 0, 0, 1))
    assert levirep.is_listed_wmf("G2", (1, 0))
    assert not levirep.is_listed_wmf("G2", (0, 1))
    assert levirep.is_listed_wmf("F4", (0, 0, 0, 0))


def test_twisted_affine_cases():
    """All six decompositions add up."""
    cases = levirep.twisted_affine_dim_check()
    assert [case.case for case in cases] == [1, 2, 3, 4, 5, 6]
    assert all(case.passed for case in cases)
    first = cases[0]
    assert (first.ambient, first.ambient_dim, first.levi_dim) == ("D5", 45, 15)
    assert first.rep_dims == ((4, 7), (2, 1))
    assert first.pvs_dims == (15, 7)
    assert cases[3].pvs == "GL3 x B3"
