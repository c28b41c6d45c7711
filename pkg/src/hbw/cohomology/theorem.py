"""
First Cohomology via the Partition Route

For a free category with coefficients pi(N) o t, a derivation is fixed by
its values on arrows, so Der = A_1 + A_2 + A_3 with one block N_{t(e)} per
row arrow e (f's, then g's, then h's). The inner derivations form the span
of the evaluated columns of V and W:

    V-bar = < v_j n : n in N_{a_j} >,   W-bar = < w_j n : n in N_{b_j} >

and H^1 = (A_1 + A_2 + A_3) / (V-bar + W-bar).
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..algebra.matrices import MatrixPair, algorithm_b
from ..algebra.partition import Partition, algorithm_a
from ..algebra.representation import QuiverRep, eval_element, rep_validate
from ..core.quiver import Quiver
from ..linalg.dense import DenseMatrix, quotient_basis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CochainBlock:
    """
    One summand N_{t(e)} of the cochain space.

    Attributes:
        arrow: Row arrow e
        target: t(e)
        dim: dims[t(e)]
        offset: First coordinate of the block
    """
    arrow: str
    target: str
    dim: int
    offset: int


@dataclass(frozen=True)
class CochainSpace:
    """Direct sum of the blocks N_{t(e)}, in a fixed arrow order."""
    blocks: tuple[CochainBlock, ...]
    total_dim: int

    @classmethod
    def build(cls, quiver: Quiver, rep: QuiverRep, arrows: Sequence[str]) -> 'CochainSpace':
        blocks = []
        offset = 0
        for name in arrows:
            target = quiver.arrow(name).target
            dim = rep.dims[target]
            blocks.append(CochainBlock(arrow=name, target=target, dim=dim, offset=offset))
            offset += dim
        return cls(blocks=tuple(blocks), total_dim=offset)

    def block(self, arrow: str) -> CochainBlock:
        for block in self.blocks:
            if block.arrow == arrow:
                return block
        raise KeyError(arrow)

    def locate(self, coordinate: int) -> tuple[str, int]:
        """Map a global coordinate to (arrow, index within its block)."""
        for block in self.blocks:
            if block.offset <= coordinate < block.offset + block.dim:
                return block.arrow, coordinate - block.offset
        raise IndexError(f"Coordinate {coordinate} outside a space of dimension {self.total_dim}")


@dataclass(frozen=True)
class H1Result:
    """
    Dimension and coordinate basis of HBW^1.

    Attributes:
        ambient: Cochain space the quotient is taken in
        ider_rank: Rank of the inner derivations
        dim: ambient.total_dim - ider_rank
        basis_labels: (arrow, basis index in N_{t(arrow)}) per representative
        display_labels: Same labels rendered as "arrow:basis-name"
    """
    ambient: CochainSpace
    ider_rank: int
    dim: int
    basis_labels: tuple[tuple[str, int], ...]
    display_labels: tuple[str, ...]

    @classmethod
    def from_generators(
        cls,
        ambient: CochainSpace,
        generators: DenseMatrix,
        rep: QuiverRep,
        quiver: Quiver,
    ) -> 'H1Result':
        quotient = quotient_basis(ambient.total_dim, generators)
        labels = tuple(ambient.locate(row) for row in quotient.representative_rows)
        display = tuple(
            f"{arrow}:{rep.basis_label(quiver.arrow(arrow).target, index)}" for arrow, index in labels
        )
        return cls(
            ambient=ambient,
            ider_rank=quotient.rank,
            dim=quotient.dim,
            basis_labels=labels,
            display_labels=display,
        )


def _require_valid(rep: QuiverRep) -> None:
    report = rep_validate(rep)
    if not report.is_valid:
        raise ValueError(f"Invalid representation: {report.first()}")


def build_generators(
    quiver: Quiver,
    partition: Partition,
    pair: MatrixPair,
    rep: QuiverRep,
) -> DenseMatrix:
    """
    Evaluate the columns of V and W on the basis of each N_x.

    Returns:
        Matrix over rep.field with ambient-dimension rows whose columns are
        v_j e for every basis vector e of N_{a_j}, then w_j e for N_{b_j}

    Raises:
        HomogeneityError: If an entry of the pair is not homogeneous
    """
    ambient = CochainSpace.build(quiver, rep, pair.row_arrows)
    targets = [quiver.arrow(name).target for name in pair.row_arrows]
    columns = []
    for vertices, column_of in (
        (pair.col_vertices_V, pair.v_column),
        (pair.col_vertices_W, pair.w_column),
    ):
        for j, vertex in enumerate(vertices):
            blocks = [
                eval_element(rep, entry, vertex, target)
                for entry, target in zip(column_of(j), targets, strict=True)
            ]
            for k in range(rep.dims[vertex]):
                columns.append([x for block in blocks for x in block.column(k)])
    return DenseMatrix.from_columns(rep.field, columns, ambient.total_dim)


def h1(quiver: Quiver, rep: QuiverRep) -> H1Result:
    """
    Compute HBW^1 by partitioning the quiver and evaluating V and W.

    Raises:
        ValueError: If the representation is invalid
        PartitionError: If the partition cannot be built
    """
    _require_valid(rep)
    partition = algorithm_a(quiver)
    pair = algorithm_b(quiver, partition)
    ambient = CochainSpace.build(quiver, rep, partition.row_arrows)
    generators = build_generators(quiver, partition, pair, rep)
    result = H1Result.from_generators(ambient, generators, rep, quiver)
    logger.debug(
        f"Partition route: ambient {ambient.total_dim}, "
        f"{generators.cols} generators of rank {result.ider_rank}, dim {result.dim}"
    )
    return result
