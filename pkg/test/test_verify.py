"""Test the invariant suite stage by stage."""

import pytest
from dynkin_forge import rootsys, verify


def by_name(checks):
    """Checks keyed by name."""
    return {check.name: check for check in checks}


def test_root_system_stage():
    """Counts, invariance and recognition up to rank 4."""
    checks = verify.check_root_systems(4, 0)
    assert [check.name for check in checks] == [
        "root counts", "Weyl invariance", "type recognition"]
    assert all(check.passed for check in checks)
    assert checks[0].count == len(rootsys.simple_types(4))


def test_gradation_stage():
    """Every node of every type up to rank 4."""
    check, = verify.check_gradations(4, 0)
    assert check.passed
    assert check.count == 1 + 2 + 3 + 4 + 2 + 3 + 4 + 3 + 4 + 4 + 4 + 2


def test_table_stage():
    """Golden rows of the types present and the twisted affine sums."""
    checks = by_name(verify.check_tables(3, 0))
    assert all(check.passed for check in checks.values())
    assert checks["table1 golden rows"].count == 9
    assert checks["twisted affine dimensions"].count == 6


def test_round_trip_stage():
    """Augmentation and embedding checks up to rank 3."""
    checks = verify.check_round_trips(3, 0)
    assert all(check.passed for check in checks)


def test_chevalley_stage():
    """Jacobi, grading and Killing checks up to rank 3."""
    checks = by_name(verify.check_chevalley(3, 0))
    assert all(check.passed for check in checks.values())
    assert checks["Jacobi identity"].count == len(rootsys.simple_types(3))
    assert checks["Killing orthogonality and nondegeneracy"].count == sum(
        int(name[1:]) for name in rootsys.simple_types(3))


@pytest.mark.slow
def test_chevalley_stage_covers_every_type():
    """Every type up to rank 6, E6 included, gets Jacobi and Killing checks."""
    checks = by_name(verify.check_chevalley(6, 0))
    assert all(check.passed for check in checks.values())
    types = rootsys.simple_types(6)
    assert "E6" in types
    assert checks["Jacobi identity"].count == len(types)
    killing = checks["Killing orthogonality and nondegeneracy"]
    assert killing.count == sum(int(name[1:]) for name in types)
    assert killing.count == checks["bracket grading"].count


def test_generic_pair_stage():
    """Irregular gradations are reported, not failed."""
    checks = by_name(verify.check_generic_pairs(3, 0))
    pairs = checks["generic pairs"]
    assert pairs.passed
    assert "A2 node 1" in pairs.detail
    assert checks["orbit sums"].passed


def test_open_orbit_stage():
    """Every level up to rank 2 has a generic element."""
    check, = verify.check_open_orbits(2, 0)
    assert check.passed


def test_report_json():
    """Reports serialize with every stage in order."""
    report = verify.SuiteReport(2, 0, (verify.SuiteCheck("a", True, 1),
                                       verify.SuiteCheck("b", False, 2, ("x",))))
    assert not report.passed
    assert report.to_json() == {
        "max_rank": 2, "seed": 0, "passed": False,
        "checks": [
            {"check": "a", "passed": True, "count": 1, "failures": [], "detail": ""},
            {"check": "b", "passed": False, "count": 2, "failures": ["x"], "detail": ""},
        ]}


@pytest.mark.slow
def test_two_form_stage():
    """Binary forms, points and orbits of pairs of 2-forms."""
    checks = verify.check_two_forms(2, 0)
    assert all(check.passed for check in checks)


@pytest.mark.slow
def test_suite_is_deterministic():
    """Two runs with one seed give identical reports."""
    first = verify.run_suite(max_rank=2, seed=4)
    assert first.passed
    assert first.to_json() == verify.run_suite(max_rank=2, seed=4).to_json()
