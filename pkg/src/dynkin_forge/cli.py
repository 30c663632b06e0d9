"""Command line interface: `dynkin-forge <command> ...`.

Every command prints one JSON document on standard output, or aligned
text with --pretty. Logging goes to standard error.

Exit codes:
    0: success.
    1: the input is outside the domain of the operation; a JSON object
       {"error": ..., "message": ...} is printed.
    2: usage error (bad arguments, unknown diagram, node out of range).
    3: `verify` found a failing check.
"""

import argparse
import json
import logging
import os
import random
import sys
from typing import Any, List, Optional

import pandas as pd

from . import __version__
from . import augment
from . import chevalley
from . import exceptions
from . import gradation
from . import glorbits
from . import levirep
from . import repnames
from . import tables
from . import verify
from .gradation import NodeChoice
from .rootsys import DynkinDiagram

_logger = logging.getLogger("dynkin-forge")

SEED_VARIABLE = "DYNKIN_FORGE_SEED"
"""Environment variable overriding the default seed."""

EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3

USAGE_ERRORS = (exceptions.NodeIndexError, exceptions.DiagramNameNotFound,
                exceptions.DiagramNameEmpty, exceptions.DataFileMissingOrUnreadable)
"""Library errors reported as usage errors rather than domain errors."""


class UsageError(Exception):
    """Bad command line input found after argument parsing."""


def _seed(value: Optional[int]) -> int:
    if value is not None:
        return value
    text = os.environ.get(SEED_VARIABLE)
    if text is None:
        return chevalley.DEFAULT_SEED
    try:
        return int(text)
    except ValueError as error:
        raise UsageError(f"{SEED_VARIABLE}={text!r} is not an integer.") from error


def _choice(args: argparse.Namespace) -> NodeChoice:
    return NodeChoice.parse(args.diagram, args.node)


def cmd_grade(args: argparse.Namespace) -> Any:
    """Levels of a marked node: order, dims of g_0 and the negative pieces, c."""
    gr = gradation.grade(_choice(args))
    dims = gradation.dims(gr)
    return {
        "diagram": gr.choice.diagram.name,
        "node": gr.choice.node,
        "order": gr.order,
        "dims": {str(i): d for i, d in dims.items() if i <= 0},
        "c": gr.to_json()["c"],
    }


def cmd_levi(args: argparse.Namespace) -> Any:
    """Levi components and every graded piece as a g_0 representation."""
    choice = _choice(args)
    gr = gradation.grade(choice)
    ld = levirep.levi(choice)
    types = [component.lie_type for component in ld.components]
    pieces = []
    for piece in levirep.pieces(gr, ld):
        parts = ld.split(piece.highest_weight)
        pieces.append({
            "level": piece.level,
            "dim": piece.dim,
            "weight": augment.format_omega(ld.diagram0, piece.highest_weight),
            "name": repnames.tensor_name(types, parts),
            "wmf": all(levirep.is_listed_wmf(t, w) for t, w in zip(types, parts)),
        })
    return {
        "levi": ld.diagram0.name,
        "center": ld.center_dimension,
        "components": [{"type": c.lie_type, "nodes": [n + 1 for n in c.nodes],
                        "nu": c.nu} for c in ld.components],
        "pieces": pieces,
    }


def cmd_nu(args: argparse.Namespace) -> Any:
    """Levi type and connecting multiplicities."""
    choice = _choice(args)
    return {"levi": levirep.levi(choice).diagram0.name,
            "nu": list(levirep.connecting_multiplicities(choice).values)}


def cmd_augment(args: argparse.Namespace) -> Any:
    """Ambient algebra and marked node of a (levi, omega, nu) triple."""
    inp = augment.AugmentationInput.parse(args.levi, args.omega, args.nu)
    am = augment.build_augmented_matrix(inp)
    report = augment.validate(am)
    if not report.passed:
        raise exceptions.ValidationFailed(report.failed)
    ambient, node = augment.identify_ambient(inp)
    return {
        "input": inp.to_json(),
        "matrix": [list(row) for row in am.entries],
        "attachments": augment.attachment_labels(am),
        "checks": report.to_json(),
        "ambient": ambient.name,
        "node": node,
        "embedding": chevalley.verify_embedding(inp).to_json(),
    }


def cmd_enumerate(args: argparse.Namespace) -> Any:
    """Every augmentation of a Levi diagram."""
    diagram0 = DynkinDiagram(()) if args.levi in ("", "-") else DynkinDiagram.parse(args.levi)
    return [found.to_json() for found in augment.enumerate_augmentations(diagram0)]


def cmd_generic(args: argparse.Namespace) -> Any:
    """A generic pair X in g_1, Y in g_-1 with [X, Y] = c."""
    choice = _choice(args)
    gr = gradation.grade(choice)
    sc = chevalley.build_chevalley(choice.root_system)
    x, y = chevalley.generic_pair(sc, gr, seed=args.seed)
    rank = sc.rs.rank
    return {
        "X": x.to_json(rank),
        "Y": y.to_json(rank),
        "c": chevalley.grading_element(sc, gr).to_json(rank),
        "orbit_dimension": chevalley.orbit_dimension(sc, gr, x),
        "dim_g1": len(gr.level(1)),
    }


def _read_element(path: str) -> chevalley.AlgebraElement:
    try:
        with open(path, "r", encoding="utf-8") as file:
            data = json.load(file)
    except OSError as error:
        raise UsageError(f"Cannot read {path}: {error.strerror}.") from error
    except json.JSONDecodeError as error:
        raise UsageError(f"{path} is not an element file: {error}.") from error
    if not isinstance(data, dict):
        raise UsageError(f"{path} is not an element file: expected a JSON object.")
    return chevalley.AlgebraElement.from_json(data)


def cmd_orbit_dim(args: argparse.Namespace) -> Any:
    """Orbit dimension of a given element, or of a seeded random one of a level."""
    choice = _choice(args)
    gr = gradation.grade(choice)
    sc = chevalley.build_chevalley(choice.root_system)
    attempts = 0
    if args.element is not None:
        element = _read_element(args.element)
        sc.check(element)
        if element.is_zero():
            raise exceptions.DomainError("The zero element has no level.")
        level = chevalley.element_level(gr, element)
        if args.level is not None and args.level != level:
            raise exceptions.ShapeError(
                f"The element lies in level {level}, not {args.level}.")
    else:
        level = 1 if args.level is None else args.level
    if level == 0:
        raise exceptions.DomainError("Orbit dimensions are for levels other than 0.")
    if not gr.level(level):
        raise exceptions.EmptyLevel(level)
    if args.element is None:
        element, attempts = chevalley.sample_generic(sc, gr, level, seed=args.seed)
        if element is None:
            element = chevalley.random_level_element(sc, gr, level,
                                                     random.Random(args.seed))
    dimension = chevalley.orbit_dimension(sc, gr, element)
    return {"level": level, "dim": len(gr.level(level)),
            "orbit_dimension": dimension, "attempts": attempts,
            "generic": dimension == len(gr.level(level))}


def _read_pair(path: str) -> glorbits.TwoFormPair:
    try:
        with open(path, "r", encoding="utf-8") as file:
            text = file.read()
    except OSError as error:
        raise UsageError(f"Cannot read {path}: {error.strerror}.") from error
    try:
        return glorbits.TwoFormPair.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as error:
        raise UsageError(f"{path} is not a pair file: {error}.") from error


def cmd_glorbits(args: argparse.Namespace) -> Any:
    """Binary form, U1/U2 class, orbit dimension or points of a pair file."""
    pair = _read_pair(args.pair)
    if args.m is not None and pair.m != args.m:
        raise exceptions.ShapeError(
            f"The pair lives on C^{pair.n}, which does not match m = {args.m}.")
    if args.action == "phi":
        form = glorbits.phi(pair)
        return {"m": pair.m, "coefficients": [str(c) for c in form.coeffs],
                "form": str(form)}
    if args.action == "classify":
        return {"m": pair.m, "class": glorbits.classify_u1_u2(pair)}
    if args.action == "orbit-dim":
        dimension = glorbits.orbit_dim_gl2sl(pair)
        target = pair.n * (pair.n - 1)
        return {"orbit_dimension": dimension, "target": target,
                "open": dimension == target}
    return {"points": glorbits.point_config_invariant(pair).to_json()}


def cmd_tables(args: argparse.Namespace) -> Any:
    """Regenerated tables and the golden rows they miss."""
    built = tables.build_all(args.max_rank)
    if args.name:
        built = {args.name: built[args.name]}
    result = {name: tables.to_records(frame) for name, frame in built.items()}
    result["golden_mismatches"] = {
        name: len(tables.compare_with_golden(name, frame))
        for name, frame in built.items() if name in tables.GOLDEN}
    return result


def cmd_verify(args: argparse.Namespace) -> Any:
    """The full invariant suite."""
    return verify.run_suite(max_rank=args.max_rank, seed=args.seed)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help=f"random seed (default ${SEED_VARIABLE} or 0)")
    common.add_argument("--pretty", action="store_true",
                        help="aligned text instead of JSON")
    common.add_argument("--max-rank", type=int, default=tables.DEFAULT_MAX_RANK,
                        help="largest rank for tables and verify (default 8)")
    common.add_argument("--json", metavar="PATH", default=None,
                        help="also write the JSON output to PATH")
    common.add_argument("-v", "--verbose", action="store_true",
                        help="log progress to standard error")
    return common


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subcommand per operation."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="dynkin-forge",
        description="Gradations of semisimple Lie algebras from marked Dynkin nodes.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    for name, handler, help_text in (
            ("grade", cmd_grade, "levels of a marked node"),
            ("levi", cmd_levi, "Levi data and graded pieces"),
            ("nu", cmd_nu, "connecting multiplicities"),
            ("generic", cmd_generic, "generic pair of a simply laced gradation")):
        sub = add(name, handler, help_text)
        sub.add_argument("diagram", help='e.g. "E8" or "A1xA4"')
        sub.add_argument("node", type=int, help="Bourbaki number of the marked node")

    sub = add("orbit-dim", cmd_orbit_dim, "orbit dimension of a level element")
    sub.add_argument("diagram")
    sub.add_argument("node", type=int)
    sub.add_argument("--level", type=int, default=None,
                     help="graded piece (default 1, or the level of --element)")
    sub.add_argument("--element", metavar="PATH", default=None,
                     help='JSON file {"cartan": [..], "roots": {"1,0": "p/q"}}')

    sub = add("augment", cmd_augment, "ambient algebra of Levi data")
    sub.add_argument("levi", help='e.g. "A1xA4"')
    sub.add_argument("omega", help='e.g. "1;0,1,0,0"')
    sub.add_argument("nu", help='e.g. "1,1"')

    sub = add("enumerate", cmd_enumerate, "all augmentations of a Levi diagram")
    sub.add_argument("levi", help='e.g. "A1xA2", or "-" for the empty diagram')

    sub = add("glorbits", cmd_glorbits, "pairs of 2-forms")
    sub.add_argument("action", choices=["phi", "classify", "orbit-dim", "points"])
    sub.add_argument("--pair", required=True, help='JSON file {"m1": .., "m2": ..}')
    sub.add_argument("--m", type=int, default=None, help="expected m")

    sub = add("tables", cmd_tables, "regenerate the reference tables")
    sub.add_argument("--name", choices=["table1", "table2", "table4", "twisted_affine"],
                     default=None)

    add("verify", cmd_verify, "run the invariant suite")
    return parser


def _jsonable(result: Any) -> Any:
    if isinstance(result, verify.SuiteReport):
        return result.to_json()
    return result


def _pretty(result: Any) -> str:
    if isinstance(result, verify.SuiteReport):
        frame = pd.DataFrame([check.to_json() for check in result.checks])
        frame["failures"] = frame["failures"].map(len)
        return tables.format_text(frame)
    if isinstance(result, list):
        return tables.format_text(pd.DataFrame(result)) if result else ""
    lines = []
    for key, value in result.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.append(tables.format_text(pd.DataFrame(value)))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and print its output.

    Returns:
        int: the exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 0

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.seed = _seed(args.seed)
        result = args.handler(args)
    except (UsageError, *USAGE_ERRORS) as error:
        print(f"dynkin-forge {args.command}: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except exceptions.DynkinForgeException as error:
        print(json.dumps({"error": type(error).__name__, "message": str(error)},
                         ensure_ascii=False))
        return EXIT_DOMAIN_ERROR

    document = json.dumps(_jsonable(result), indent=2, ensure_ascii=False)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as file:
            file.write(document + "\n")
    print(_pretty(result) if args.pretty else document)

    if isinstance(result, verify.SuiteReport) and not result.passed:
        return EXIT_VERIFY_FAILED
    return 0


def main():
    """Console entry point."""
    sys.exit(run())
