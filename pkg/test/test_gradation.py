"""Test gradations from a marked node."""

from fractions import Fraction
import pytest
import dynkin_forge.exceptions
from dynkin_forge import gradation, rootsys
from dynkin_forge.gradation import NodeChoice


def graded(name: str, node: int) -> gradation.Gradation:
    """Gradation of a named diagram."""
    return gradation.grade(NodeChoice.parse(name, node))


def test_e8_node_2():
    """E8 with node 2 marked has order 3."""
    gr = graded("E8", 2)
    assert gr.order == 3
    assert gradation.dims(gr) == {3: 8, 2: 28, 1: 56, 0: 64, -1: 56, -2: 28, -3: 8}


def test_type_a_first_node():
    """Marking the end of A_n gives C^n in level 1."""
    for rank in range(1, 7):
        gr = graded(f"A{rank}", 1)
        assert gr.order == 1
        assert gradation.dims(gr) == {1: rank, 0: rank * rank, -1: rank}


def test_d5_spinor_node():
    """D5 node 5: g_0 = gl5 and g_1 has dimension 10."""
    assert gradation.dims(graded("D5", 5)) == {1: 10, 0: 25, -1: 10}


def test_levels_partition_roots():
    """Every root sits in exactly one level and levels are symmetric."""
    for name, node in (("F4", 3), ("G2", 1), ("A1xB3", 4), ("E7", 4)):
        gr = graded(name, node)
        print(name, node)
        assert sum(len(roots) for roots in gr.levels.values()) == len(gr.root_system.roots)
        for i in range(1, gr.order + 1):
            assert len(gr.level(i)) == len(gr.level(-i)) > 0
        assert gr.level(gr.order + 1) == frozenset()


def test_order_is_mark():
    """The order equals the mark of the marked node."""
    for lie_type in rootsys.simple_types(6):
        choice = NodeChoice.parse(lie_type, 1)
        rs = choice.root_system
        assert gradation.grade(choice).order == gradation.order_of(choice)
        assert gradation.order_of(choice) == rootsys.marks(rs)[0]
    assert gradation.order_of(NodeChoice.parse("G2", 1)) == 3
    assert gradation.order_of(NodeChoice.parse("E8", 4)) == 6


def test_grading_element():
    """c takes the value 1 on alpha_0 and 0 on the other simple roots."""
    assert graded("A1", 1).c_coords == (Fraction(1, 2),)
    gr = graded("B3", 2)
    rs = gr.root_system
    for j in range(rs.rank):
        value = sum(rs.cartan[j][k] * gr.c_coords[k] for k in range(rs.rank))
        assert value == (1 if j == 1 else 0)


def test_product_components():
    """Components away from the marked node stay in level 0."""
    gr = graded("A1xA2", 2)
    assert (1, 0, 0) in gr.level(0)
    assert gradation.dims(gr) == {1: 2, 0: 7, -1: 2}


def test_node_out_of_range():
    """Node numbers are checked against the rank."""
    with pytest.raises(dynkin_forge.exceptions.NodeIndexError):
        NodeChoice.parse("E8", 9)
    with pytest.raises(dynkin_forge.exceptions.NodeIndexError):
        NodeChoice.parse("A3", 0)


def test_level_zero_subsystem():
    """Levels divisible by 3 in E8 node 2 form an A8 root system."""
    gr = graded("E8", 2)
    subset = gradation.level_zero_subsystem(gr, 3)
    assert len(subset) == 72
    assert gradation.closed_symmetric(gr.root_system, subset)
    diagram, _ = rootsys.subsystem_diagram(gr.root_system, subset)
    assert diagram.name == "A8"
    assert gradation.level_zero_subsystem(gr, 1) == gr.root_system.roots
    with pytest.raises(dynkin_forge.exceptions.DivisibilityError):
        gradation.level_zero_subsystem(gr, 2)


def test_zm_pieces():
    """Residues mod 3 of E8 node 2."""
    pieces = gradation.zm_pieces(graded("E8", 2), 3)
    assert {j: len(roots) for j, roots in pieces.items()} == {0: 72, 1: 84, 2: 84}
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        gradation.zm_pieces(graded("E8", 2), 1)


def test_closed_symmetric():
    """A single root is not symmetric; a whole level 0 is closed."""
    rs = rootsys.build_root_system(rootsys.DynkinDiagram.parse("A2"))
    assert not gradation.closed_symmetric(rs, {(1, 0)})
    assert gradation.closed_symmetric(rs, {(1, 0), (-1, 0)})
    assert not gradation.closed_symmetric(rs, {(1, 0), (-1, 0), (0, 1), (0, -1)})
    assert gradation.closed_symmetric(rs, rs.roots)


def test_borel_de_siebenthal():
    """Maximal subalgebras from the extended diagram."""
    e8 = rootsys.DynkinDiagram.parse("E8")
    assert gradation.borel_de_siebenthal(e8, 1).name == "D8"
    assert gradation.borel_de_siebenthal(e8, 2).name == "A8"
    assert gradation.borel_de_siebenthal(e8, 0) == e8
    g2 = rootsys.DynkinDiagram.parse("G2")
    assert gradation.borel_de_siebenthal(g2, 1).name == "A2"
    assert gradation.borel_de_siebenthal(g2, 2).name == "A1xA1"
    assert gradation.borel_de_siebenthal(rootsys.DynkinDiagram.parse("A3"), 1).name == "A2"
    with pytest.raises(dynkin_forge.exceptions.Unsupported):
        gradation.borel_de_siebenthal(e8, 4)
    with pytest.raises(dynkin_forge.exceptions.Unsupported):
        gradation.borel_de_siebenthal(rootsys.DynkinDiagram.parse("A1xA1"), 1)
    with pytest.raises(dynkin_forge.exceptions.NodeIndexError):
        gradation.borel_de_siebenthal(e8, 9)


def test_gradation_json():
    """Level keys are strings, highest level first."""
    data = graded("A2", 1).to_json()
    assert list(data["levels"]) == ["1", "0", "-1"]
    assert data["levels"]["1"] == [[1, 0], [1, 1]]
    assert data["order"] == 1
    assert data["c"] == ["2/3", "1/3"]
