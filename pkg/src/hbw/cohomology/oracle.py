"""
Inner-Derivation Oracle

Computes HBW^1 without partitioning: Der is the product of N_{t(a)} over
all arrows a in quiver order, and Ider is the image of

    (n_x)_x  ->  (mats(a) n_{s(a)} - n_{t(a)})_a

For a loop both terms land in the same block, giving mats(a) - I.

check_equivalence runs both routes and compares the dimensions and, after
reordering coordinates into partition order, the subspaces themselves.
"""

import logging
from dataclasses import dataclass

from ..algebra.matrices import algorithm_b
from ..algebra.partition import algorithm_a
from ..algebra.representation import QuiverRep, rep_validate
from ..core.quiver import Quiver
from ..core.report import ValidationReport
from ..linalg.dense import DenseMatrix, rank, same_span
from .theorem import CochainSpace, H1Result, build_generators

logger = logging.getLogger(__name__)


def oracle_ider_matrix(quiver: Quiver, rep: QuiverRep) -> DenseMatrix:
    """
    Matrix of the map from the vertex spaces to the arrow blocks.

    Rows follow the arrows in input order, columns the vertices in input
    order, each expanded by the dimension of its space.
    """
    f = rep.field
    ambient = CochainSpace.build(quiver, rep, [a.name for a in quiver.arrows])
    col_offset = {}
    offset = 0
    for vertex in quiver.vertices:
        col_offset[vertex] = offset
        offset += rep.dims[vertex]

    rows = [[f.zero()] * offset for _ in range(ambient.total_dim)]
    minus_one = f.neg(f.one())
    for arrow, block in zip(quiver.arrows, ambient.blocks, strict=True):
        matrix = rep.mats[arrow.name]
        source_col = col_offset[arrow.source]
        for i in range(matrix.rows):
            for j in range(matrix.cols):
                row = rows[block.offset + i]
                row[source_col + j] = f.add(row[source_col + j], matrix[i, j])
        target_col = col_offset[arrow.target]
        for i in range(block.dim):
            row = rows[block.offset + i]
            row[target_col + i] = f.add(row[target_col + i], minus_one)
    return DenseMatrix(f, ambient.total_dim, offset, tuple(x for row in rows for x in row))


def oracle_h1(quiver: Quiver, rep: QuiverRep) -> H1Result:
    """Cokernel of the inner-derivation map, blocks in quiver arrow order."""
    report = rep_validate(rep)
    if not report.is_valid:
        raise ValueError(f"Invalid representation: {report.first()}")
    ambient = CochainSpace.build(quiver, rep, [a.name for a in quiver.arrows])
    ider = oracle_ider_matrix(quiver, rep)
    result = H1Result.from_generators(ambient, ider, rep, quiver)
    logger.debug(f"Oracle route: ambient {ambient.total_dim}, rank {result.ider_rank}, dim {result.dim}")
    return result


@dataclass(frozen=True)
class EquivalenceReport:
    """
    Outcome of comparing the partition route with the oracle.

    Attributes:
        theorem_dim: dim H^1 by the partition route
        oracle_dim: dim H^1 by the oracle
        generator_rank: Rank of V-bar + W-bar
        oracle_rank: Rank of the oracle matrix
        report: Violations, empty when both routes agree
    """
    theorem_dim: int
    oracle_dim: int
    generator_rank: int
    oracle_rank: int
    report: ValidationReport

    @property
    def passed(self) -> bool:
        return self.report.is_valid

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        text = f"{status}: dim {self.theorem_dim} (partition) vs {self.oracle_dim} (oracle)"
        if not self.passed:
            text += "\n" + str(self.report)
        return text


def check_equivalence(quiver: Quiver, rep: QuiverRep) -> EquivalenceReport:
    """
    Run both routes and compare dimensions and subspaces.

    The oracle rows are permuted from quiver arrow order into the
    partition's row order before the spans are compared.
    """
    report = ValidationReport("equivalence")
    partition = algorithm_a(quiver)
    pair = algorithm_b(quiver, partition)
    generators = build_generators(quiver, partition, pair, rep)
    theorem_ambient = CochainSpace.build(quiver, rep, partition.row_arrows)
    oracle_ambient = CochainSpace.build(quiver, rep, [a.name for a in quiver.arrows])
    ider = oracle_ider_matrix(quiver, rep)

    permutation = []
    for block in theorem_ambient.blocks:
        source = oracle_ambient.block(block.arrow)
        permutation.extend(range(source.offset, source.offset + source.dim))
    ider_in_partition_order = ider.select_rows(permutation)

    generator_rank = rank(generators)
    oracle_rank = rank(ider)
    theorem_dim = theorem_ambient.total_dim - generator_rank
    oracle_dim = oracle_ambient.total_dim - oracle_rank
    if theorem_dim != oracle_dim:
        report.add(f"dimension: partition route gives {theorem_dim}, oracle gives {oracle_dim}")
    if not same_span(generators, ider_in_partition_order):
        joint = rank(generators.hstack(ider_in_partition_order))
        report.add(
            f"subspace: ranks {generator_rank} (V-bar + W-bar) and {oracle_rank} (oracle) "
            f"but {joint} jointly"
        )
    if not report.is_valid:
        logger.debug(f"Equivalence failed for {quiver}: {report.first()}")
    return EquivalenceReport(
        theorem_dim=theorem_dim,
        oracle_dim=oracle_dim,
        generator_rank=generator_rank,
        oracle_rank=oracle_rank,
        report=report,
    )
