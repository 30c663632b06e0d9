"""Simple Lie types have canonical names, classical names, and nicknames.

This submodule links the different ways people write down a simple type.
The canonical name is the Cartan family letter followed by the rank,
with Bourbaki's conventions for which ranks are allowed:
 - canonical name: D5
 - classical name: so10
 - nickname: spin10, so(10), d_5

Low rank coincidences are resolved towards the earlier family
(so6 is A3, so5 is B2), except that sp4 stays C2 so that the node
numbering of a user's symplectic algebra is kept.

Products are written with "x" or "×" between factors, e.g. "A1xA4".
"""

import functools
import logging
import re
from typing import List, Optional, Tuple

import pandas as pd
import fuzzywuzzy.process

from . import data_tables
from . import exceptions

_logger = logging.getLogger("dynkin-forge")

FAMILIES = "ABCDEFG"
"""Cartan family letters in alphabetical order."""

_FAMILY_PATTERN = re.compile(r"^([a-g])[_\s]*\(?(\d+)\)?$")
_CLASSICAL_PATTERN = re.compile(r"^(sl|su|so|spin|sp)[_\s]*\(?(\d+)\)?$")
_PRODUCT_SEPARATOR = re.compile(r"\s*[xX×*]\s*")


def valid_type(family: str, rank: int) -> bool:
    """Whether (family, rank) names a simple type we can build.

    Args:
        family (str): Upper case family letter.
        rank (int): Number of nodes.

    Returns:
        bool: True for A1.., B2.., C2.., D4.., E6-E8, F4 and G2.
    """
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
    if family in minimum:
        return rank >= minimum[family]
    return ((family == "E" and 6 <= rank <= 8)
            or (family == "F" and rank == 4)
            or (family == "G" and rank == 2))


def _from_classical(algebra: str, dimension: int) -> Optional[str]:
    """Canonical name for sl_n, so_n, sp_n style names, if there is one."""
    if algebra in ("sl", "su") and dimension >= 2:
        return f"A{dimension - 1}"
    if algebra in ("so", "spin"):
        if dimension % 2 == 1 and dimension >= 5:
            return f"B{(dimension - 1) // 2}"
        if dimension % 2 == 0 and dimension >= 8:
            return f"D{dimension // 2}"
    if algebra == "sp" and dimension % 2 == 0 and dimension >= 4:
        return f"C{dimension // 2}"
    return None


@functools.lru_cache
def official(nickname: Optional[str],
             allow_fuzzy_match=True,
             warn_on_fuzzy_match=True,
             exception_on_null_value=False) -> Optional[str]:
    """Return the canonical name of a simple type from a given nickname.

    Names are tried against our nicknames on record, then against the
    regular patterns ("E8", "d_5", "so10", "sp(6)"), and finally the
    closest nickname is found with fuzzy matching (Levenstein distance,
    from fuzzywuzzy); set `allow_fuzzy_match=False` to turn this off.
    Renames appear as warnings in the "dynkin-forge" log.

    A name that reads as a family and rank but is not a valid type,
    such as "E9" or "D2", is never fuzzy matched.

    This function is cached, so each rename is only logged the
    first time it takes place.

    Args:
        nickname (str): free text name of a simple type.
        allow_fuzzy_match (bool, optional): Defaults to True.
        warn_on_fuzzy_match (bool, optional): Defaults to True.
        exception_on_null_value (bool, optional): raise instead of
            passing null values through as None. Defaults to False.

    Raises:
        exceptions.DiagramNameEmpty: for empty (or null) names.
        exceptions.DiagramNameNotFound: when no type matches.

    Returns:
        canonical_name (str): The canonical type name.
        For example:
            official("so10") -> "D5"
    """
    if pd.isna(nickname):
        if exception_on_null_value:
            raise exceptions.DiagramNameEmpty()
        return None

    assert nickname is not None  # for typing

    nickname = nickname.lower().strip()
    if len(nickname) == 0:
        raise exceptions.DiagramNameEmpty()

    if nickname in data_tables.TYPE_NICKNAMES:
        return data_tables.TYPE_NICKNAMES[nickname]

    family_match = _FAMILY_PATTERN.match(nickname)
    if family_match:
        family, rank = family_match.group(1).upper(), int(family_match.group(2))
        if valid_type(family, rank):
            return f"{family}{rank}"
        raise exceptions.DiagramNameNotFound(nickname)

    classical_match = _CLASSICAL_PATTERN.match(nickname)
    if classical_match:
        canonical = _from_classical(classical_match.group(1),
                                    int(classical_match.group(2)))
        if canonical is not None:
            return canonical
        raise exceptions.DiagramNameNotFound(nickname)

    if allow_fuzzy_match:
        fuzzy_matched = fuzzywuzzy.process.extractOne(
            nickname, list(data_tables.TYPE_NICKNAMES.keys()))[0]
        canonical = data_tables.TYPE_NICKNAMES[fuzzy_matched]
        if warn_on_fuzzy_match:
            _logger.warning("Renaming '%s' -> '%s'", nickname, canonical)
        return canonical

    raise exceptions.DiagramNameNotFound(nickname)


def split_type(canonical_name: str) -> Tuple[str, int]:
    """Split a canonical name into family and rank.

    For example:
        split_type("E8") -> ("E", 8)
    """
    return canonical_name[0], int(canonical_name[1:])


def parse_diagram(text: Optional[str],
                  allow_fuzzy_match: bool = True) -> List[Tuple[str, int]]:
    """Read a (product) diagram name into its simple components.

    Args:
        text (str): e.g. "A1xA4", "sl2 x so10", "E8".
        allow_fuzzy_match (bool, optional): passed on to `official`.

    Raises:
        exceptions.DiagramNameEmpty: for an empty name or empty factor.

    Returns:
        components (List[Tuple[str, int]]): (family, rank) per factor,
        in the order written.
        For example:
            parse_diagram("A1xA4") -> [("A", 1), ("A", 4)]
    """
    if text is None or len(text.strip()) == 0:
        raise exceptions.DiagramNameEmpty()
    components = []
    for factor in _PRODUCT_SEPARATOR.split(text.strip()):
        canonical = official(factor, allow_fuzzy_match=allow_fuzzy_match,
                             exception_on_null_value=True)
        assert canonical is not None  # for typing
        components.append(split_type(canonical))
    return components
