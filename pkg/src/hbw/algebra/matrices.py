"""
Matrices over the Path Algebra (Algorithm B)

Given a partition, Algorithm B builds two matrices with entries in kQ whose
rows are labeled by the arrows f_1..f_l, g_1..g_n, h_1..h_r:

    V: (l+n+r) x l, columns a_1..a_l   (top l x l block = diag(id_{a_j}))
    W: (l+n+r) x m, columns b_1..b_m   (top l x m block = 0)

Below the top block, the entry at row arrow e and column vertex x is

    + p      if p is the Q1 path from x to t(e)
    - e*p    if p is the Q1 path from x to s(e)

with identities admitted as Q1 paths. The same vectors arise from the
recursion r_x = (col of r at x) + sum over f in Q1 with s(f) = x of
r_{t(f)} * f, which recursive_columns evaluates independently.
"""

import logging
from dataclasses import dataclass

from ..core.quiver import CyclicQuiverError, Quiver, q1_path
from ..core.report import ValidationReport
from .partition import Partition, PartitionError, validate_partition
from .path_algebra import PathAlgebraElement

logger = logging.getLogger(__name__)

Column = tuple[PathAlgebraElement, ...]


@dataclass(frozen=True)
class MatrixPair:
    """
    Output of Algorithm B.

    Attributes:
        V: Rows of V, one tuple of l entries per row arrow
        W: Rows of W, one tuple of m entries per row arrow
        row_arrows: (f_1..f_l, g_1..g_n, h_1..h_r)
        col_vertices_V: (a_1..a_l)
        col_vertices_W: (b_1..b_m)
    """
    V: tuple[Column, ...]
    W: tuple[Column, ...]
    row_arrows: tuple[str, ...]
    col_vertices_V: tuple[str, ...]
    col_vertices_W: tuple[str, ...]

    def __post_init__(self):
        rows = len(self.row_arrows)
        if len(self.V) != rows or len(self.W) != rows:
            raise ValueError(f"V and W must have {rows} rows")
        for name, matrix, width in (
            ("V", self.V, len(self.col_vertices_V)),
            ("W", self.W, len(self.col_vertices_W)),
        ):
            for row in matrix:
                if len(row) != width:
                    raise ValueError(f"{name} rows must have {width} entries, got {len(row)}")

    def v_column(self, j: int) -> Column:
        """Column v_{j+1} of V (0-based index)."""
        return tuple(row[j] for row in self.V)

    def w_column(self, j: int) -> Column:
        """Column w_{j+1} of W (0-based index)."""
        return tuple(row[j] for row in self.W)


def _entry(quiver: Quiver, q1: frozenset[str], row_arrow: str, vertex: str) -> PathAlgebraElement:
    arrow = quiver.arrow(row_arrow)
    pairs = []
    into_target = q1_path(quiver, q1, vertex, arrow.target)
    if into_target is not None:
        pairs.append((into_target, 1))
    into_source = q1_path(quiver, q1, vertex, arrow.source)
    if into_source is not None:
        pairs.append((quiver.path(row_arrow, *into_source.arrows), -1))
    return PathAlgebraElement.from_pairs(pairs)


def algorithm_b(quiver: Quiver, partition: Partition) -> MatrixPair:
    """
    Build the matrices V and W of a partitioned quiver (Algorithm B).

    Args:
        quiver: The quiver
        partition: A valid partition of the quiver

    Returns:
        MatrixPair with the identity and zero top blocks filled in directly

    Raises:
        PartitionError: If the partition fails validate_partition
    """
    report = validate_partition(quiver, partition)
    if not report.is_valid:
        raise PartitionError(f"Invalid partition: {report.first()}")

    q1 = partition.q1
    zero = PathAlgebraElement.zero()
    l = partition.l  # noqa: E741
    V: list[Column] = []
    W: list[Column] = []
    for i, row_arrow in enumerate(partition.row_arrows):
        if i < l:
            V.append(tuple(
                PathAlgebraElement.of(quiver.identity(a)) if j == i else zero
                for j, a in enumerate(partition.a)
            ))
            W.append((zero,) * partition.m)
            continue
        V.append(tuple(_entry(quiver, q1, row_arrow, a) for a in partition.a))
        W.append(tuple(_entry(quiver, q1, row_arrow, b) for b in partition.b))

    logger.debug(
        f"Algorithm B: {len(partition.row_arrows)} rows, "
        f"{partition.l} V columns, {partition.m} W columns"
    )
    return MatrixPair(
        V=tuple(V),
        W=tuple(W),
        row_arrows=partition.row_arrows,
        col_vertices_V=partition.a,
        col_vertices_W=partition.b,
    )


def recursive_columns(quiver: Quiver, partition: Partition) -> dict[str, Column]:
    """
    Evaluate the recursively defined vectors r_x for every vertex.

    r_x has one entry per row arrow e: id_x if t(e) = x, minus e if
    s(e) = x (both for a loop), plus r_{t(f)} * f for each Q1 arrow f
    leaving x.

    Raises:
        CyclicQuiverError: If Q1 contains a cycle
    """
    rows = partition.row_arrows
    q1 = quiver.ordered(partition.q1)
    columns: dict[str, Column] = {}
    in_progress: set[str] = set()

    def local(x: str) -> Column:
        entries = []
        for name in rows:
            arrow = quiver.arrow(name)
            pairs = []
            if arrow.target == x:
                pairs.append((quiver.identity(x), 1))
            if arrow.source == x:
                pairs.append((quiver.arrow_path(name), -1))
            entries.append(PathAlgebraElement.from_pairs(pairs))
        return tuple(entries)

    def resolve(x: str) -> Column:
        if x in columns:
            return columns[x]
        if x in in_progress:
            raise CyclicQuiverError(f"Q1 has a cycle through {x}")
        in_progress.add(x)
        column = local(x)
        for name in q1:
            arrow = quiver.arrow(name)
            if arrow.source != x:
                continue
            step = PathAlgebraElement.of(quiver.arrow_path(name))
            column = tuple(
                entry + upstream * step
                for entry, upstream in zip(column, resolve(arrow.target), strict=True)
            )
        in_progress.discard(x)
        columns[x] = column
        return column

    for vertex in quiver.vertices:
        resolve(vertex)
    return columns


def check_recursion(quiver: Quiver, partition: Partition, pair: MatrixPair) -> ValidationReport:
    """Compare every column of V and W with the recursive vector of its vertex."""
    report = ValidationReport("recursion")
    expected = recursive_columns(quiver, partition)
    for label, vertices, column_of in (
        ("v", pair.col_vertices_V, pair.v_column),
        ("w", pair.col_vertices_W, pair.w_column),
    ):
        for j, vertex in enumerate(vertices):
            for row_arrow, got, want in zip(pair.row_arrows, column_of(j), expected[vertex], strict=True):
                if got != want:
                    report.add(
                        f"{label}{j + 1} at row {row_arrow}: got {got}, recursion gives {want}"
                    )
    return report


def check_matrix_pair(quiver: Quiver, partition: Partition, pair: MatrixPair) -> ValidationReport:
    """
    Check the structural invariants of an Algorithm B output.

    Clauses: homogeneity of every entry, the identity block of V, the zero
    block of W, and at most two terms per entry outside the identity block.
    """
    report = ValidationReport("matrix pair")
    labels = (pair.row_arrows, pair.col_vertices_V, pair.col_vertices_W)
    if labels != (partition.row_arrows, partition.a, partition.b):
        report.add("labels: rows and columns do not match the partition")
        return report

    l = partition.l  # noqa: E741
    for label, matrix, vertices in (("V", pair.V, partition.a), ("W", pair.W, partition.b)):
        for i, row_arrow in enumerate(pair.row_arrows):
            target = quiver.arrow(row_arrow).target
            for j, vertex in enumerate(vertices):
                entry = matrix[i][j]
                for path in entry.paths():
                    if path.source != vertex or path.target != target:
                        report.add(
                            f"homogeneity: {label}[{row_arrow}, {vertex}] contains {path} "
                            f"which does not run from {vertex} to {target}"
                        )
                if i < l:
                    if label == "V":
                        want = PathAlgebraElement.of(quiver.identity(vertex)) if i == j else PathAlgebraElement.zero()
                        if entry != want:
                            report.add(f"identity block: V[{row_arrow}, {vertex}] is {entry}, expected {want}")
                    elif not entry.is_zero:
                        report.add(f"zero block: W[{row_arrow}, {vertex}] is {entry}")
                elif len(entry) > 2:
                    report.add(f"term count: {label}[{row_arrow}, {vertex}] has {len(entry)} terms")
    return report
