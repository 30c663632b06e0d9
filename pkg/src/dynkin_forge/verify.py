"""The full invariant suite behind `dynkin-forge verify`.

Every stage runs over all simple types up to a maximum rank, in a fixed
order, with its own seeded random generator, so the report of two runs
with the same seed is identical. No timings are recorded.
"""

import dataclasses
import logging
import random
from typing import Callable, List, Tuple

from . import augment
from . import chevalley
from . import exceptions
from . import gradation
from . import glorbits
from . import levirep
from . import rootsys
from . import tables
from .gradation import NodeChoice
from .rootsys import DynkinDiagram

_logger = logging.getLogger("dynkin-forge")

JACOBI_SAMPLES = 100_000
"""Random basis triples checked for the rank 7 and 8 exceptional algebras."""

EXHAUSTIVE_JACOBI_MAX_RANK = 4
"""Types up to this rank get every basis triple checked."""

SAMPLED_JACOBI_TRIPLES = 20_000
"""Random basis triples checked for the other types above EXHAUSTIVE_JACOBI_MAX_RANK."""

PFAFFIAN_INSTANCES = 100
"""Random pairs per m for the Pfaffian and covariance checks."""

TRANSLATES = 50
"""Random group translates per pair for the U1/U2 invariance check."""


@dataclasses.dataclass(frozen=True)
class SuiteCheck:
    """Outcome of one stage of the suite.

    Attributes:
        name (str): stage name.
        passed (bool): no failures.
        count (int): number of cases checked.
        failures (Tuple[str, ...]): labels of the failing cases.
        detail (str): extra counts, e.g. irregular gradations.
    """

    name: str
    passed: bool
    count: int
    failures: Tuple[str, ...] = ()
    detail: str = ""

    def to_json(self) -> dict:
        """Plain dictionary for JSON output."""
        return {"check": self.name, "passed": self.passed, "count": self.count,
                "failures": list(self.failures), "detail": self.detail}


@dataclasses.dataclass(frozen=True)
class SuiteReport:
    """All stages in the order they ran."""

    max_rank: int
    seed: int
    checks: Tuple[SuiteCheck, ...]

    @property
    def passed(self) -> bool:
        """Whether every stage passed."""
        return all(check.passed for check in self.checks)

    def to_json(self) -> dict:
        """{"max_rank": .., "seed": .., "passed": .., "checks": [...]}."""
        return {"max_rank": self.max_rank, "seed": self.seed,
                "passed": self.passed,
                "checks": [check.to_json() for check in self.checks]}


def _diagram(lie_type: str) -> DynkinDiagram:
    return DynkinDiagram.parse(lie_type, allow_fuzzy_match=False)


def _choices(max_rank: int) -> List[NodeChoice]:
    found = []
    for lie_type in rootsys.simple_types(max_rank):
        diagram = _diagram(lie_type)
        found.extend(NodeChoice(diagram, node) for node in range(1, diagram.rank + 1))
    return found


def _tally(name: str, cases: List[Tuple[str, bool]], detail: str = "") -> SuiteCheck:
    failures = tuple(label for label, ok in cases if not ok)
    return SuiteCheck(name, not failures, len(cases), failures, detail)


def check_root_systems(max_rank: int, seed: int) -> List[SuiteCheck]:
    """Root counts, Weyl invariance and recognition of every simple type."""
    counts, invariance, recognition = [], [], []
    for lie_type in rootsys.simple_types(max_rank):
        diagram = _diagram(lie_type)
        rs = rootsys.build_root_system(diagram)
        family, rank = diagram.components[0]
        counts.append((lie_type, rs.dimension == rootsys.classical_dimension(family, rank)))
        roots = rs.positive_roots
        invariant = all(
            rootsys.inner_product(rs, rootsys.reflect(rs, rs.simple_root(k), i),
                                  rootsys.reflect(rs, beta, i))
            == rootsys.inner_product(rs, rs.simple_root(k), beta)
            for i in range(rs.rank) for k in range(rs.rank) for beta in roots)
        invariance.append((lie_type, invariant))
        found, permutation = rootsys.identify_cartan_type(rootsys.cartan_matrix(diagram))
        recognition.append((lie_type, found == diagram
                            and permutation == tuple(range(rs.rank))))
    return [_tally("root counts", counts), _tally("Weyl invariance", invariance),
            _tally("type recognition", recognition)]


def check_gradations(max_rank: int, seed: int) -> List[SuiteCheck]:
    """Order, dimension sum and level symmetry of every gradation."""
    cases = []
    for choice in _choices(max_rank):
        gr = gradation.grade(choice)
        dims = gradation.dims(gr)
        symmetric = all(gr.level(-i) == frozenset(tuple(-c for c in root)
                                                  for root in gr.level(i))
                        for i in range(1, gr.order + 1))
        ok = (gradation.order_of(choice) == gr.order
              and sum(dims.values()) == choice.root_system.dimension
              and bool(gr.level(gr.order)) and symmetric)
        cases.append((str(choice), ok))
    return [_tally("gradations", cases)]


def check_tables(max_rank: int, seed: int) -> List[SuiteCheck]:
    """Regenerated tables against the checked-in copies."""
    built = {"table1": tables.table1(), "table2": tables.table2(max_rank),
             "table4": tables.table4(max_rank)}
    results = []
    for name, frame in built.items():
        missing = tables.compare_with_golden(name, frame)
        golden = tables.GOLDEN[name]
        count = int(golden["lie_type"].isin(set(frame["lie_type"])).sum())
        failures = tuple(" ".join(str(v) for v in row)
                         for row in missing.itertuples(index=False))
        results.append(SuiteCheck(f"{name} golden rows", not failures, count, failures))
    twisted = levirep.twisted_affine_dim_check()
    results.append(_tally("twisted affine dimensions",
                          [(f"case {case.case}", case.passed) for case in twisted]))
    return results


def check_round_trips(max_rank: int, seed: int) -> List[SuiteCheck]:
    """Augmentation recovers every (type, node); the embedding checks pass."""
    trips, embeddings = [], []
    for choice in _choices(max_rank):
        trips.append((str(choice), augment.round_trip(choice)))
        report = chevalley.verify_embedding(augment.from_gradation(choice))
        embeddings.append((str(choice), report.passed))
    return [_tally("augmentation round trip", trips),
            _tally("embedding checks", embeddings)]


def check_chevalley(max_rank: int, seed: int) -> List[SuiteCheck]:
    """Jacobi identity, grading and Killing form checks."""
    jacobi, grading, killing = [], [], []
    for lie_type in rootsys.simple_types(max_rank):
        diagram = _diagram(lie_type)
        rs = rootsys.build_root_system(diagram)
        sc = chevalley.build_chevalley(rs)
        if rs.rank <= EXHAUSTIVE_JACOBI_MAX_RANK:
            triples = None
        else:
            count = JACOBI_SAMPLES if lie_type in ("E7", "E8") else SAMPLED_JACOBI_TRIPLES
            triples = chevalley.random_triples(sc, count, seed)
        jacobi.append((lie_type, chevalley.antisymmetric(sc)
                       and chevalley.jacobi_holds(sc, triples)))
        for node in range(1, rs.rank + 1):
            gr = gradation.grade(NodeChoice(diagram, node))
            label = f"{lie_type} node {node}"
            grading.append((label, chevalley.grading_respected(sc, gr)))
            killing.append((label, chevalley.killing_orthogonal(sc, gr) and all(
                chevalley.killing_nondegenerate(sc, gr, i)
                for i in range(0, gr.order + 1))))
    return [_tally("Jacobi identity", jacobi), _tally("bracket grading", grading),
            _tally("Killing orthogonality and nondegeneracy", killing)]


def check_generic_pairs(max_rank: int, seed: int) -> List[SuiteCheck]:
    """Generic pairs and orbit sums of every simply laced gradation."""
    pairs, sums = [], []
    irregular = []
    for choice in _choices(max_rank):
        rs = choice.root_system
        if not chevalley.is_simply_laced(rs):
            continue
        sc = chevalley.build_chevalley(rs)
        gr = gradation.grade(choice)
        sums.append((str(choice), chevalley.orbit_sums(sc, gr).passed))
        try:
            x, y = chevalley.generic_pair(sc, gr, seed=seed)
        except exceptions.RegularityFailed:
            irregular.append(str(choice))
            continue
        ok = (chevalley.bracket(sc, x, y) == chevalley.grading_element(sc, gr)
              and chevalley.orbit_dimension(sc, gr, x) == len(gr.level(1)))
        pairs.append((str(choice), ok))
    detail = f"irregular: {', '.join(irregular)}" if irregular else ""
    return [_tally("generic pairs", pairs, detail), _tally("orbit sums", sums)]


def check_open_orbits(max_rank: int, seed: int) -> List[SuiteCheck]:
    """Every nonzero level of every gradation has a generic random element."""
    cases = []
    for choice in _choices(max_rank):
        sc = chevalley.build_chevalley(choice.root_system)
        gr = gradation.grade(choice)
        for k in range(1, gr.order + 1):
            for level in (k, -k):
                element, _ = chevalley.sample_generic(sc, gr, level, seed=seed)
                cases.append((f"{choice} level {level}", element is not None))
    return [_tally("open orbits", cases)]


def check_two_forms(max_rank: int, seed: int) -> List[SuiteCheck]:
    """Binary forms of pairs of 2-forms and the U1/U2 dichotomy."""
    rng = random.Random(seed)
    oracle, covariance = [], []
    for m in range(1, 5):
        for instance in range(PFAFFIAN_INSTANCES):
            pair = glorbits.random_pair(2 * m, rng)
            label = f"m={m} #{instance}"
            if m <= 3:
                oracle.append((label, glorbits.phi(pair) == glorbits.phi_by_wedge(pair)))
            a = glorbits.random_invertible_2x2(rng)
            g = glorbits.random_unimodular(2 * m, rng)
            covariance.append((label, glorbits.covariance_check(pair, a, g)))

    points = glorbits.PointConfig(((0, 1), (1, 0), (1, 1), (2, 1)))
    recovered = glorbits.point_config_invariant(glorbits.construct_from_points(points))
    round_trip = [("four points", recovered == points)]

    invariance = []
    for m in (1, 2):
        n = 2 * m + 1
        padded = glorbits.random_pair(2 * m, rng)
        u1 = glorbits.TwoFormPair(
            [list(row) + [0] for row in padded.m1] + [[0] * n],
            [list(row) + [0] for row in padded.m2] + [[0] * n])
        for pair in (u1, glorbits.u2_witness(m)):
            expected = glorbits.classify_u1_u2(pair)
            same = all(glorbits.classify_u1_u2(glorbits.act(
                pair, glorbits.random_invertible_2x2(rng),
                glorbits.random_unimodular(n, rng))) == expected
                for _ in range(TRANSLATES))
            invariance.append((f"m={m} {expected}", same))

    open_orbits = [
        ("m=1 random", any(glorbits.orbit_dim_gl2sl(glorbits.random_pair(3, rng)) == 6
                           for _ in range(chevalley.GENERIC_RETRIES))),
        ("m=4 witness", glorbits.orbit_dim_gl2sl(glorbits.u2_witness(4)) == 72),
    ]

    first = glorbits.PointConfig(((0, 1), (1, 0), (1, 1), (2, 1)))
    second = glorbits.PointConfig(((0, 1), (1, 0), (1, 1), (3, 1)))
    pair_one = glorbits.construct_from_points(first)
    pair_two = glorbits.construct_from_points(second)
    separated = (glorbits.orbit_dim_gl2sl(pair_one) == glorbits.orbit_dim_gl2sl(pair_two)
                 and glorbits.point_config_invariant(pair_one)
                 != glorbits.point_config_invariant(pair_two)
                 and glorbits.cross_ratio(first.points)
                 != glorbits.cross_ratio(second.points))
    return [
        _tally("Pfaffian against wedge expansion", oracle),
        _tally("covariance", covariance),
        _tally("points round trip", round_trip),
        _tally("U1/U2 invariance", invariance),
        _tally("open orbits of pairs", open_orbits),
        _tally("cross-ratio separation", [("m=4", separated)]),
    ]


STAGES: Tuple[Callable[[int, int], List[SuiteCheck]], ...] = (
    check_root_systems,
    check_gradations,
    check_tables,
    check_round_trips,
    check_chevalley,
    check_generic_pairs,
    check_open_orbits,
    check_two_forms,
)
"""Suite stages in the order they run."""


def run_suite(max_rank: int = tables.DEFAULT_MAX_RANK,
              seed: int = chevalley.DEFAULT_SEED) -> SuiteReport:
    """Run every stage and collect the results.

    Args:
        max_rank (int, optional): largest rank of the simple types checked.
        seed (int, optional): seed of every random choice.

    Returns:
        SuiteReport: `passed` is False if any case of any stage failed.
    """
    checks: List[SuiteCheck] = []
    for stage in STAGES:
        _logger.info("Running %s up to rank %d", stage.__name__, max_rank)
        results = stage(max_rank, seed)
        for result in results:
            if not result.passed:
                _logger.warning("%s failed on %s", result.name,
                                ", ".join(result.failures))
        checks.extend(results)
    return SuiteReport(max_rank, seed, tuple(checks))
