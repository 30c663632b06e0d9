"""Test the regenerated tables against the checked-in copies."""

import logging
import pytest
import pandas as pd
from dynkin_forge import rootsys, tables


def test_table1():
    """Exterior power gradations, level by level."""
    frame = tables.table1()
    assert len(tables.compare_with_golden("table1", frame)) == 0
    e8 = frame[frame["lie_type"] == "E8"]
    assert list(e8["dim"]) == ["56", "28", "8"]
    assert list(e8["name"]) == ["Λ³C⁸", "Λ⁶C⁸", "C⁸"]
    assert set(e8["g0"]) == {"64"}


def test_table2():
    """Levi data up to rank 5 agrees with the checked-in rows."""
    frame = tables.table2(5)
    assert len(tables.compare_with_golden("table2", frame)) == 0
    row = frame[(frame["lie_type"] == "F4") & (frame["node"] == "3")].iloc[0]
    assert (row["levi"], row["omega"], row["nu"]) == ("A1xA2", "1;1,0", "1,2")


@pytest.mark.slow
def test_table2_full():
    """Every checked-in row is regenerated."""
    assert len(tables.compare_with_golden("table2", tables.table2())) == 0


def family_parts(family, n, k):
    """Levi components of node k of a classical type of rank n, by hand.

    Each part is (family, rank, weight of level -1, nu, first ambient node).
    """
    parts = []
    if k > 1 and not (family == "D" and k >= n - 1):
        weight = 2 if (family == "C" and k == n) else 1
        nu = 2 if (family == "B" and k == n) else 1
        parts.append(("A", k - 1, (weight,) + (0,) * (k - 2), nu, 1))
    r = n - k
    if family == "A" and r:
        parts.append(("A", r, (1,) + (0,) * (r - 1), 1, k + 1))
    elif family == "B" and r == 1:
        parts.append(("A", 1, (2,), 1, n))
    elif family == "B" and r >= 2:
        parts.append(("B", r, (1,) + (0,) * (r - 1), 1, k + 1))
    elif family == "C" and r == 1:
        parts.append(("A", 1, (1,), 2, n))
    elif family == "C" and r == 2:
        parts.append(("B", 2, (0, 1), 1, k + 1))
    elif family == "C" and r >= 3:
        parts.append(("C", r, (1,) + (0,) * (r - 1), 1, k + 1))
    elif family == "D" and r == 3:
        parts.append(("A", 3, (0, 1, 0), 1, k + 1))
    elif family == "D" and r >= 4:
        parts.append(("D", r, (1,) + (0,) * (r - 1), 1, k + 1))
    elif family == "D" and r == 2:
        parts.extend([("A", 1, (1,), 1, n - 1), ("A", 1, (1,), 1, n)])
    elif family == "D":
        parts.append(("A", n - 1, (0, 1) + (0,) * (n - 3), 1, 1))
    return sorted(parts, key=lambda part: (part[0], part[1], -part[3], part[4]))


def family_rows(max_rank):
    """Expected table2 rows of the A, B, C and D types up to max_rank."""
    rows = []
    for lie_type in rootsys.simple_types(max_rank):
        family, n = lie_type[0], int(lie_type[1:])
        if family not in "ABCD":
            continue
        for k in range(1, n + 1):
            parts = family_parts(family, n, k)
            rows.append({
                "lie_type": lie_type,
                "node": str(k),
                "levi": "x".join(f"{f}{r}" for f, r, _, _, _ in parts),
                "omega": ";".join(",".join(str(c) for c in w) for _, _, w, _, _ in parts),
                "nu": ",".join(str(nu) for _, _, _, nu, _ in parts),
            })
    return pd.DataFrame(rows, columns=["lie_type", "node", "levi", "omega", "nu"])


def classical_part(frame):
    """Rows of the A, B, C and D types."""
    return frame[frame["lie_type"].str[0].isin(list("ABCD"))].reset_index(drop=True)


def test_table2_family_rules():
    """Every classical node up to rank 4 follows the family rules."""
    pd.testing.assert_frame_equal(classical_part(tables.table2(4)), family_rows(4))


@pytest.mark.slow
def test_table2_family_rules_to_rank_8():
    """The family rules hold at every rank from 2 to 8."""
    expected = family_rows(8)
    assert set(expected["lie_type"]) >= {"A8", "B8", "C8", "D8"}
    pd.testing.assert_frame_equal(classical_part(tables.table2(8)), expected)
    assert expected[(expected["lie_type"] == "C8")
                    & (expected["node"] == "7")].iloc[0]["nu"] == "2,1"


def test_table4():
    """Highest root marks."""
    frame = tables.table4()
    assert len(tables.compare_with_golden("table4", frame)) == 0
    assert frame[frame["lie_type"] == "E8"].iloc[0]["marks"] == "2,3,4,6,5,4,3,2"


def test_golden_mismatch_is_reported(caplog):
    """A changed row shows up as missing and is logged."""
    frame = tables.table4(3)
    assert len(tables.compare_with_golden("table4", frame)) == 0
    frame.loc[frame["lie_type"] == "G2", "marks"] = "2,3"
    with caplog.at_level(logging.WARNING, logger="dynkin-forge"):
        assert len(tables.compare_with_golden("table4", frame)) == 1
    assert "differ from the checked-in table" in caplog.text


def test_twisted_affine_table():
    """Six decompositions that all add up."""
    frame = tables.twisted_affine_table()
    assert len(frame) == 6
    assert set(frame["passed"]) == {"True"}
    first = frame.iloc[0]
    assert (first["ambient"], first["ambient_dim"], first["summands"]) == (
        "D5", "45", "15 + 4·7 + 2·1")
    assert first["pvs"] == "GL1 x G2"


def test_build_all_and_formatting():
    """Every table by name, as records and as text."""
    built = tables.build_all(2)
    assert list(built) == ["table1", "table2", "table4", "twisted_affine"]
    records = tables.to_records(built["table4"])
    assert records[0] == {"lie_type": "A1", "marks": "1"}
    assert "lie_type" in tables.format_text(built["table4"]).splitlines()[0]
