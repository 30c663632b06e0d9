r"""Regenerate the reference tables and compare them with the checked-in copies.

Every table is a pandas DataFrame whose columns are strings in the same
format as the golden CSV files in dynkin_forge/data/, so a golden row
matches when the regenerated table has an identical row.

Tables:
    table1: graded pieces of the gradations whose g_-1 is an exterior power.
    table2: Levi type, highest weight of g_-1 and connecting multiplicities
        for every simple type and node.
    table4: highest root marks.
    twisted_affine_table: dimension bookkeeping of the six twisted affine
        decompositions.
"""

import logging
from typing import Dict, List

import pandas as pd

from . import augment
from . import data_tables
from . import gradation
from . import levirep
from . import repnames
from . import rootsys
from .gradation import NodeChoice

_logger = logging.getLogger("dynkin-forge")

DEFAULT_MAX_RANK = 8
"""Largest rank of the classical families in the generated tables."""

TABLE1_CHOICES = (("A5", 1), ("D5", 5), ("E6", 2), ("E7", 2), ("E8", 2))
"""Marked nodes whose g_-1 is an exterior power of the defining representation."""


def _piece_name(ld: levirep.LeviData, weight: rootsys.WeightVector) -> str:
    return repnames.tensor_name([c.lie_type for c in ld.components], ld.split(weight))


def table1() -> pd.DataFrame:
    """Negative graded pieces of the gradations in TABLE1_CHOICES.

    Returns:
        pd.DataFrame: columns lie_type, node, levi, g0, level, dim, weight, name.
        For example the E8 rows have dims 56, 28 and 8 with g0 = 64.
    """
    rows = []
    for lie_type, node in TABLE1_CHOICES:
        choice = NodeChoice.parse(lie_type, node)
        gr = gradation.grade(choice)
        ld = levirep.levi(choice)
        g0 = gradation.dims(gr)[0]
        for level in range(-1, -gr.order - 1, -1):
            piece = levirep.piece_rep(gr, ld, level)
            rows.append({
                "lie_type": lie_type,
                "node": str(node),
                "levi": ld.diagram0.name,
                "g0": str(g0),
                "level": str(level),
                "dim": str(piece.dim),
                "weight": augment.format_omega(ld.diagram0, piece.highest_weight),
                "name": _piece_name(ld, piece.highest_weight),
            })
    return pd.DataFrame(rows, columns=["lie_type", "node", "levi", "g0", "level",
                                       "dim", "weight", "name"])


def table2(max_rank: int = DEFAULT_MAX_RANK) -> pd.DataFrame:
    """Levi data of every node of every simple type up to max_rank.

    Returns:
        pd.DataFrame: columns lie_type, node, levi, omega, nu.
        For example the F4 node 3 row is ("F4", "3", "A1xA2", "1;1,0", "1,2").
    """
    rows = []
    for lie_type in rootsys.simple_types(max_rank):
        diagram = rootsys.DynkinDiagram.parse(lie_type, allow_fuzzy_match=False)
        for node in range(1, diagram.rank + 1):
            inp = augment.from_gradation(NodeChoice(diagram, node))
            rows.append({
                "lie_type": lie_type,
                "node": str(node),
                "levi": inp.diagram0.name,
                "omega": augment.format_omega(inp.diagram0, inp.omega),
                "nu": ",".join(str(v) for v in inp.nu.values),
            })
    _logger.info("Table 2: %d marked nodes up to rank %d", len(rows), max_rank)
    return pd.DataFrame(rows, columns=["lie_type", "node", "levi", "omega", "nu"])


def table4(max_rank: int = DEFAULT_MAX_RANK) -> pd.DataFrame:
    """Highest root marks of every simple type up to max_rank.

    Returns:
        pd.DataFrame: columns lie_type, marks.
        For example E8 -> "2,3,4,6,5,4,3,2".
    """
    rows = []
    for lie_type in rootsys.simple_types(max_rank):
        rs = rootsys.build_root_system(
            rootsys.DynkinDiagram.parse(lie_type, allow_fuzzy_match=False))
        rows.append({"lie_type": lie_type,
                     "marks": ",".join(str(m) for m in rootsys.marks(rs))})
    return pd.DataFrame(rows, columns=["lie_type", "marks"])


def twisted_affine_table() -> pd.DataFrame:
    """The six twisted affine decompositions with their dimension sums.

    Returns:
        pd.DataFrame: columns case, ambient, ambient_dim, levi_dim,
        summands, total, pvs, pvs_group_dim, pvs_dim, passed.
        For example case 1 reads 45 = 15 + 4·7 + 2·1.
    """
    rows = []
    for case in levirep.twisted_affine_dim_check():
        summands = " + ".join([str(case.levi_dim)] + [
            f"{copies}·{dim}" if copies != 1 else str(dim)
            for copies, dim in case.rep_dims])
        rows.append({
            "case": str(case.case),
            "ambient": case.ambient,
            "ambient_dim": str(case.ambient_dim),
            "levi_dim": str(case.levi_dim),
            "summands": summands,
            "total": str(case.total),
            "pvs": case.pvs,
            "pvs_group_dim": str(case.pvs_dims[0]),
            "pvs_dim": str(case.pvs_dims[1]),
            "passed": str(case.passed),
        })
    return pd.DataFrame(rows, columns=["case", "ambient", "ambient_dim", "levi_dim",
                                       "summands", "total", "pvs", "pvs_group_dim",
                                       "pvs_dim", "passed"])


GOLDEN: Dict[str, pd.DataFrame] = {
    "table1": data_tables.GOLDEN_TABLE_1,
    "table2": data_tables.GOLDEN_TABLE_2,
    "table4": data_tables.GOLDEN_TABLE_4,
}
"""Checked-in copies of the tables, by name."""


def compare_with_golden(name: str, frame: pd.DataFrame) -> pd.DataFrame:
    """Golden rows with no identical row in a regenerated table.

    Only golden rows of the types present in the regenerated table count,
    so a table built up to a smaller rank is compared on its own types.

    Args:
        name (str): "table1", "table2" or "table4".
        frame (pd.DataFrame): the regenerated table.

    Raises:
        KeyError: for a table without a golden copy.

    Returns:
        pd.DataFrame: the missing golden rows; empty when everything matches.
    """
    golden = GOLDEN[name]
    golden = golden[golden["lie_type"].isin(set(frame["lie_type"]))]
    columns = list(golden.columns)
    merged = golden.merge(frame[columns].astype(str).drop_duplicates(),
                          on=columns, how="left", indicator=True)
    missing = merged[merged["_merge"] == "left_only"][columns]
    if len(missing):
        _logger.warning("%d rows of %s differ from the checked-in table",
                        len(missing), name)
    return missing.reset_index(drop=True)


def build_all(max_rank: int = DEFAULT_MAX_RANK) -> Dict[str, pd.DataFrame]:
    """Every table, keyed by name."""
    return {
        "table1": table1(),
        "table2": table2(max_rank),
        "table4": table4(max_rank),
        "twisted_affine": twisted_affine_table(),
    }


def to_records(frame: pd.DataFrame) -> List[dict]:
    """Rows as dictionaries, for JSON output."""
    return frame.to_dict(orient="records")


def format_text(frame: pd.DataFrame) -> str:
    """Aligned text rendering without the index."""
    return frame.to_string(index=False)
