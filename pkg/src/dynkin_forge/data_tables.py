"""Functions for importing data."""
import os
import csv
from typing import Dict, Tuple
import pandas as pd

from . import exceptions


def data_path(filename: str) -> str:
    """Get full path to a file in the data folder.

    Args:
        filename (str): The data file's name.

    Returns:
        path (str): The full path to the file.
    """
    return os.path.join(os.path.dirname(__file__), "data", filename)


def test_data_file(short_name: str) -> None:
    """Raise exception if data file unavailable.

    Args:
        short_name (str): file name.

    Raises:
        exceptions.DataFileMissingOrUnreadable

    Returns:
        None
    """
    path = data_path(short_name)
    if not os.path.isfile(path):
        raise exceptions.DataFileMissingOrUnreadable(short_name)


def read_nicknames_file(short_name: str) -> Dict[str, str]:
    """Read a nicknames csv file into a dictionary.

    The file is in the format:
        canonical,*nicknames

    Lines starting with "#" are comments.

    Args:
        short_name (str): file name.

    Returns:
        nicknames_to_canonical (Dict[str, str]):
            lower case nickname -> canonical type name, e.g. "so10" -> "D5".
    """
    nicknames_to_canonical: Dict[str, str] = {}
    path = data_path(short_name)
    test_data_file(short_name)
    with open(path, "r", encoding="utf-8-sig") as file:
        csv_reader = csv.reader(file, delimiter=",")
        for row in csv_reader:
            if not row or row[0].startswith("#"):
                continue
            canonical = row[0].strip()
            if not canonical:
                raise exceptions.DataLineUnreadable(
                    ",".join(row), "the canonical name is empty")
            nicknames_to_canonical[canonical.lower()] = canonical
            for nickname in row[1:]:
                if nickname.strip():
                    nicknames_to_canonical[nickname.strip().lower()] = canonical
    return nicknames_to_canonical


def read_csv_to_dataframe(
    short_name: str,
    separator: str = ","
) -> "pd.DataFrame":
    """Load csv into pandas dataframe.

    Every column is read as a string; weights such as "1,0;0,1" must not be
    turned into numbers.

    Args:
        short_name (str): Name of data file.
        separator (str, optional): Separator used in the file. Defaults to ",".

    Returns:
        data: dataframe
    """
    path = data_path(short_name)
    test_data_file(short_name)
    dataframe = pd.read_csv(path, sep=separator, dtype=str,
                            keep_default_na=False, comment="#")
    return dataframe


def read_rep_names(short_name: str) -> Dict[Tuple[str, str], str]:
    """Read the display names of representations.

    Args:
        short_name (str): file name.

    Returns:
        Dict[Tuple[str, str], str]: (lie type, weight) -> display name,
        e.g. ("E6", "1,0,0,0,0,0") -> "C²⁷".
    """
    frame = read_csv_to_dataframe(short_name)
    return {(row.lie_type, row.weight): row.name
            for row in frame.itertuples(index=False)}


TYPE_NICKNAMES = read_nicknames_file("type_nicknames.csv")
"""Canonical simple type names from the nicknames we have on record."""

REP_NAMES = read_rep_names("rep_names.csv")
"""Display names for representations the naming rules do not cover."""

WMF_IRREPS = read_csv_to_dataframe("wmf_irreps.csv")
"""Irreducible weight multiplicity free representations of simple algebras."""

GOLDEN_TABLE_1 = read_csv_to_dataframe("table1.csv")
"""Graded pieces of the gradations whose first piece is an exterior power."""

GOLDEN_TABLE_2 = read_csv_to_dataframe("table2.csv")
"""Levi type, highest weight of level -1 and multiplicities per marked node."""

GOLDEN_TABLE_4 = read_csv_to_dataframe("table4.csv")
"""Highest root marks in Bourbaki order."""

TWISTED_AFFINE = read_csv_to_dataframe("twisted_affine.csv")
"""Decompositions of the six twisted affine type gradings, factor by factor."""
