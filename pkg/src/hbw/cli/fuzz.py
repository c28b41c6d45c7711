"""
Randomized Differential Testing

Generates random (quiver, representation) pairs and checks, per instance:
- the partition returned by Algorithm A is valid,
- the Algorithm B output keeps its structural invariants and agrees with
  the recursive vectors,
- the partition route and the oracle agree on dim H^1 and on the subspace
  of inner derivations.

Quivers may contain loops and parallel arrows. A single random.Random
seeded from the config drives everything, so equal configs give
byte-identical reports.
"""

import logging
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from ..algebra.matrices import algorithm_b, check_matrix_pair, check_recursion
from ..algebra.partition import algorithm_a, validate_partition
from ..algebra.representation import QuiverRep
from ..cohomology.oracle import check_equivalence
from ..core.field import Field, PrimeField, parse_field
from ..core.quiver import Quiver
from ..linalg.dense import DenseMatrix
from .documents import quiver_to_doc, rep_to_doc

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 101
DEFAULT_MAX_VERTICES = 6
DEFAULT_MAX_ARROWS = 10
DEFAULT_MAX_DIM = 3
DEFAULT_SEED = 1
DEFAULT_COUNT = 200


@dataclass(frozen=True)
class FuzzConfig:
    """Fuzz run parameters, recorded in the report for reproducibility."""
    count: int = DEFAULT_COUNT
    seed: int = DEFAULT_SEED
    field: str = "q"
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_arrows: int = DEFAULT_MAX_ARROWS
    max_dim: int = DEFAULT_MAX_DIM

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if self.max_vertices < 1 or self.max_arrows < 0 or self.max_dim < 0:
            raise ValueError("Bounds must be positive (arrows and dimensions may be 0)")
        parse_field(self.field)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class FuzzReport:
    """Outcome of a fuzz run."""
    config: dict[str, Any]
    total: int = 0
    passed: int = 0
    first_failure: dict[str, Any] | None = None
    failed_indices: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def summary(self) -> str:
        return f"{self.passed}/{self.total} instances pass"


def random_quiver(rng: random.Random, max_vertices: int, max_arrows: int) -> Quiver:
    """Random quiver; every (source, target) pair, loops included, is equally likely."""
    vertices = [f"v{i}" for i in range(1, rng.randint(1, max_vertices) + 1)]
    arrows = [
        (f"e{i}", rng.choice(vertices), rng.choice(vertices))
        for i in range(1, rng.randint(0, max_arrows) + 1)
    ]
    return Quiver.build(vertices, arrows)


def _random_scalar(rng: random.Random, field: Field) -> Any:
    if isinstance(field, PrimeField):
        return rng.randrange(field.p)
    if rng.random() < 0.2:
        return Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return Fraction(rng.randint(-2, 2))


def random_rep(
    rng: random.Random,
    quiver: Quiver,
    field: Field,
    max_dim: int,
    fixed_dim: int | None = None,
) -> QuiverRep:
    """
    Random representation with vertex dimensions in [0, max_dim].

    Args:
        fixed_dim: Use this dimension at every vertex instead
    """
    dims = {
        v: fixed_dim if fixed_dim is not None else rng.randint(0, max_dim)
        for v in quiver.vertices
    }
    mats = {}
    for arrow in quiver.arrows:
        rows, cols = dims[arrow.target], dims[arrow.source]
        entries = tuple(_random_scalar(rng, field) for _ in range(rows * cols))
        mats[arrow.name] = DenseMatrix(field, rows, cols, entries)
    return QuiverRep(quiver=quiver, field=field, dims=dims, mats=mats)


def check_instance(quiver: Quiver, rep: QuiverRep) -> list[str]:
    """Run every check on one instance; return the violations found."""
    try:
        partition = algorithm_a(quiver)
        violations = list(validate_partition(quiver, partition).violations)
        if violations:
            return violations
        pair = algorithm_b(quiver, partition)
        violations += check_matrix_pair(quiver, partition, pair).violations
        violations += check_recursion(quiver, partition, pair).violations
        violations += check_equivalence(quiver, rep).report.violations
    except ValueError as e:
        violations = [f"{type(e).__name__}: {e}"]
    return violations


def run_fuzz(config: FuzzConfig) -> FuzzReport:
    """Generate config.count instances and check each one."""
    rng = random.Random(config.seed)
    field_ = parse_field(config.field)
    report = FuzzReport(config=config.to_dict())
    for index in range(config.count):
        quiver = random_quiver(rng, config.max_vertices, config.max_arrows)
        rep = random_rep(rng, quiver, field_, config.max_dim)
        violations = check_instance(quiver, rep)
        report.total += 1
        if violations:
            logger.warning(f"Instance {index} failed: {violations[0]}")
            report.failed_indices.append(index)
            if report.first_failure is None:
                report.first_failure = {
                    "index": index,
                    "quiver": quiver_to_doc(quiver),
                    "rep": rep_to_doc(rep),
                    "violations": violations,
                }
        else:
            report.passed += 1
        if (index + 1) % 50 == 0:
            logger.info(f"Fuzz progress: {index + 1}/{config.count}, {report.passed} pass")
    return report
