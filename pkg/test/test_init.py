"""Test the functions exposed at the top level of the module.

This isn't a full test of each method's capabilities,
just checking that the method is exposed at the top level namespace.
"""

import pytest
import dynkin_forge
import dynkin_forge.exceptions


def test_find_type():
    """Check that dynkin_forge.find_type works."""
    assert dynkin_forge.find_type("sp6") == "C3"
    assert dynkin_forge.find_type("so(10)") == "D5"


def test_find_empty():
    """Passing an empty string should raise."""
    with pytest.raises(dynkin_forge.exceptions.DiagramNameEmpty):
        dynkin_forge.find_type("")


def test_find_without_fuzzy():
    """Unknown names raise when fuzzy matching is off."""
    with pytest.raises(dynkin_forge.exceptions.DiagramNameNotFound):
        dynkin_forge.find_type("quaternions", allow_fuzzy=False)


def test_diagram():
    """Check that dynkin_forge.diagram works on products."""
    diagram = dynkin_forge.diagram("A1 x so10")
    assert isinstance(diagram, dynkin_forge.DynkinDiagram)
    assert diagram.name == "A1xD5"


def test_grade():
    """E8 node 2 has order 3."""
    gr = dynkin_forge.grade("E8", 2)
    assert isinstance(gr, dynkin_forge.Gradation)
    assert gr.order == 3


def test_levi():
    """F4 node 3 leaves A1xA2."""
    assert dynkin_forge.levi("F4", 3).diagram0.name == "A1xA2"


def test_identify():
    """The G2 Cartan matrix in both orientations."""
    diagram, permutation = dynkin_forge.identify([[2, -1], [-3, 2]])
    assert (diagram.name, permutation) == ("G2", (0, 1))
    assert dynkin_forge.identify([[2, -3], [-1, 2]])[1] == (1, 0)


def test_version():
    """The version string is exposed."""
    assert dynkin_forge.__version__ == "1.0.0"
