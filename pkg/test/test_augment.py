"""Test attaching a node to a Levi diagram."""

import pytest
import dynkin_forge.exceptions
from dynkin_forge import augment, rootsys
from dynkin_forge.augment import AugmentationInput
from dynkin_forge.gradation import NodeChoice
from dynkin_forge.rootsys import DynkinDiagram, WeightVector


def test_g2_from_a1():
    """A triple bond from A1 gives G2 with the short node marked."""
    inp = AugmentationInput.parse("A1", "1", "3")
    am = augment.build_augmented_matrix(inp)
    assert am.entries == ((2, -1), (-3, 2))
    assert am.attachments == (0,)
    assert augment.identify_ambient(inp) == (DynkinDiagram.parse("G2"), 1)


def test_f4_from_b3():
    """omega_3 of B3 extends the diagram to F4 at node 4."""
    inp = AugmentationInput.parse("B3", "0,0,1", "1")
    assert augment.identify_ambient(inp) == (DynkinDiagram.parse("F4"), 4)


def test_e8_from_a7():
    """Λ³C⁸ of A7 gives E8 node 2."""
    inp = AugmentationInput.parse("A7", "0,0,1,0,0,0,0", "1")
    assert augment.identify_ambient(inp) == (DynkinDiagram.parse("E8"), 2)


def test_e6_from_a1_a4():
    """C²⊗Λ²C⁵ gives E6 at node 3, which is equivalent to node 5."""
    inp = AugmentationInput.parse("A1xA4", "1;0,1,0,0", "1,1")
    am = augment.build_augmented_matrix(inp)
    assert augment.attachment_labels(am) == [1, 3]
    diagram, node = augment.identify_ambient(inp)
    assert diagram.name == "E6"
    assert node in (3, 5)


def test_unattached_component():
    """A zero weight with multiplicity 0 leaves a separate component."""
    inp = AugmentationInput.parse("A1", "0", "0")
    am = augment.build_augmented_matrix(inp)
    assert augment.attachment_labels(am) == [0]
    assert augment.identify_ambient(inp) == (DynkinDiagram.parse("A1xA1"), 1)


def test_empty_levi():
    """The empty diagram augments to A1."""
    inp = AugmentationInput.parse("", "", "")
    assert augment.identify_ambient(inp) == (DynkinDiagram.parse("A1"), 1)


def test_cycle_error():
    """A weight supported on two nodes of one component closes a cycle."""
    with pytest.raises(dynkin_forge.exceptions.CycleError):
        augment.build_augmented_matrix(AugmentationInput.parse("A2", "1,1", "1"))


def test_nu_pattern_error():
    """nu vanishes exactly where omega does."""
    with pytest.raises(dynkin_forge.exceptions.NuPatternError):
        augment.build_augmented_matrix(AugmentationInput.parse("A1", "0", "1"))
    with pytest.raises(dynkin_forge.exceptions.NuPatternError):
        augment.build_augmented_matrix(AugmentationInput.parse("A1", "1", "0"))


def test_shape_errors():
    """nu needs one entry per component and omega one per node."""
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        augment.build_augmented_matrix(AugmentationInput.parse("A1xA1", "1;0", "1"))
    with pytest.raises(dynkin_forge.exceptions.ShapeError):
        AugmentationInput.parse("A2", "1", "1")
    with pytest.raises(dynkin_forge.exceptions.DomainError):
        AugmentationInput(DynkinDiagram.parse("A1"), WeightVector((-1,)),
                          augment.ConnectingMultiplicities((1,)))


def test_validation_failures():
    """Affine and oversized bonds fail validation."""
    affine = augment.build_augmented_matrix(AugmentationInput.parse("A1", "2", "2"))
    report = augment.validate(affine)
    assert not report.passed
    assert report.failed == ["principal minors"]
    oversized = augment.build_augmented_matrix(AugmentationInput.parse("A1", "4", "1"))
    assert "entries" in augment.validate(oversized).failed
    with pytest.raises(dynkin_forge.exceptions.ValidationFailed):
        augment.identify_ambient(AugmentationInput.parse("A1", "2", "2"))


def test_validation_report_json():
    """Five named checks in a fixed order."""
    report = augment.validate(augment.build_augmented_matrix(
        AugmentationInput.parse("A7", "0,0,1,0,0,0,0", "1")))
    assert report.passed
    assert [entry["check"] for entry in report.to_json()] == [
        "entries", "zero pattern", "acyclic", "symmetrizable", "principal minors"]


def test_omega_text():
    """Per-component weights separated by semicolons."""
    assert augment.parse_omega("1;0,1,0,0") == WeightVector((1, 0, 1, 0, 0))
    diagram0 = DynkinDiagram.parse("A1xA4")
    assert augment.format_omega(diagram0, augment.parse_omega("1;0,1,0,0")) == "1;0,1,0,0"


def test_from_gradation():
    """Levi data of F4 node 3."""
    inp = augment.from_gradation(NodeChoice.parse("F4", 3))
    assert inp.to_json() == {"levi": "A1xA2", "omega": "1;1,0", "nu": [1, 2]}


def test_enumerate_a1():
    """Six ways to attach a node to A1."""
    found = augment.enumerate_augmentations(DynkinDiagram.parse("A1"))
    ambient = sorted(augmentation.ambient.name for augmentation in found)
    assert ambient == ["A1xA1", "A2", "B2", "B2", "G2", "G2"]


def test_enumerate_empty():
    """Only A1 comes from the empty diagram."""
    found = augment.enumerate_augmentations(DynkinDiagram(()))
    assert [augmentation.to_json() for augmentation in found] == [
        {"levi": "", "omega": "", "nu": [], "ambient": "A1", "node": 1}]


def test_enumerate_finds_e8():
    """E8 node 2 is among the augmentations of A7."""
    found = augment.enumerate_augmentations(DynkinDiagram.parse("A7"))
    assert any(a.ambient.name == "E8" and a.node == 2 for a in found)
    assert all(augment.identify_ambient(a.input) == (a.ambient, a.node) for a in found)


def test_round_trip():
    """Every marked node of small simple types is recovered."""
    for lie_type in rootsys.simple_types(5) + ["E6", "E7", "E8"]:
        diagram = DynkinDiagram.parse(lie_type)
        for node in range(1, diagram.rank + 1):
            print(lie_type, node)
            assert augment.round_trip(NodeChoice(diagram, node))
