"""
Dense Exact Matrices

Row-major matrices over a Field, column echelon form by Gaussian
elimination, and bases of quotient spaces ambient / span(columns).

No floating point is used anywhere: entries are Fractions over Q or ints
mod p, and every operation goes through the matrix's field.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from ..core.field import Field


@dataclass(frozen=True)
class DenseMatrix:
    """
    A rows x cols matrix over a field.

    Attributes:
        field: Scalar field of all entries
        rows: Number of rows
        cols: Number of columns
        entries: Row-major entries, length rows * cols
    """
    field: Field
    rows: int
    cols: int
    entries: tuple[Any, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"Expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> 'DenseMatrix':
        return cls(field, rows, cols, (field.zero(),) * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> 'DenseMatrix':
        one, zero = field.one(), field.zero()
        entries = tuple(one if i == j else zero for i in range(n) for j in range(n))
        return cls(field, n, n, entries)

    @classmethod
    def from_rows(
        cls,
        field: Field,
        rows: Sequence[Sequence[Any]],
        cols: int | None = None,
    ) -> 'DenseMatrix':
        """
        Build a matrix from nested rows, coercing every entry into the field.

        Args:
            field: Scalar field
            rows: List of rows
            cols: Column count; required when there are no rows
        """
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError(f"Ragged matrix: expected {cols} columns, got {len(row)}")
        entries = tuple(field.coerce(x) for row in rows for x in row)
        return cls(field, len(rows), cols, entries)

    @classmethod
    def from_columns(
        cls,
        field: Field,
        columns: Sequence[Sequence[Any]],
        rows: int,
    ) -> 'DenseMatrix':
        """Build a matrix from columns of raw field values."""
        for column in columns:
            if len(column) != rows:
                raise ValueError(f"Column of length {len(column)} in a {rows}-row matrix")
        entries = tuple(columns[j][i] for i in range(rows) for j in range(len(columns)))
        return cls(field, rows, len(columns), entries)

    def __getitem__(self, index: tuple[int, int]) -> Any:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Index ({i}, {j}) out of range for {self.shape}")
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> tuple[Any, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Any, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Any]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_columns(self) -> list[list[Any]]:
        return [list(self.column(j)) for j in range(self.cols)]

    def transpose(self) -> 'DenseMatrix':
        return DenseMatrix.from_columns(self.field, self.to_rows(), self.cols)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for x in self.entries)

    def _check_compatible(self, other: 'DenseMatrix') -> None:
        if self.field != other.field:
            raise ValueError(f"Field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: 'DenseMatrix') -> 'DenseMatrix':
        self._check_compatible(other)
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} vs {other.shape}")
        add = self.field.add
        entries = tuple(add(x, y) for x, y in zip(self.entries, other.entries, strict=True))
        return DenseMatrix(self.field, self.rows, self.cols, entries)

    def scaled(self, scalar: Any) -> 'DenseMatrix':
        """Multiply every entry by a field scalar."""
        mul = self.field.mul
        return DenseMatrix(self.field, self.rows, self.cols, tuple(mul(scalar, x) for x in self.entries))

    def __neg__(self) -> 'DenseMatrix':
        return self.scaled(self.field.neg(self.field.one()))

    def __sub__(self, other: 'DenseMatrix') -> 'DenseMatrix':
        return self + (-other)

    def __matmul__(self, other: 'DenseMatrix') -> 'DenseMatrix':
        self._check_compatible(other)
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        f = self.field
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                acc = f.zero()
                for k in range(self.cols):
                    if not f.is_zero(row[k]):
                        acc = f.add(acc, f.mul(row[k], other.entries[k * other.cols + j]))
                entries.append(acc)
        return DenseMatrix(f, self.rows, other.cols, tuple(entries))

    def hstack(self, other: 'DenseMatrix') -> 'DenseMatrix':
        """Concatenate the columns of two matrices with equal row counts."""
        self._check_compatible(other)
        if self.rows != other.rows:
            raise ValueError(f"Cannot stack {self.shape} beside {other.shape}")
        return DenseMatrix.from_columns(
            self.field, self.to_columns() + other.to_columns(), self.rows
        )

    def select_rows(self, order: Iterable[int]) -> 'DenseMatrix':
        """New matrix whose i-th row is row order[i] of this one."""
        rows = [list(self.row(i)) for i in order]
        return DenseMatrix(self.field, len(rows), self.cols, tuple(x for r in rows for x in r))

    def __str__(self) -> str:
        if not self.rows or not self.cols:
            return f"[{self.rows}x{self.cols}]"
        cells = [[self.field.format(x) for x in self.row(i)] for i in range(self.rows)]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


@dataclass(frozen=True)
class EchelonForm:
    """
    Result of column echelon reduction.

    Attributes:
        echelon: Reduced column echelon matrix with the same column span
        rank: Number of nonzero columns
        pivot_rows: Pivot row of each nonzero column, strictly increasing
    """
    echelon: DenseMatrix
    rank: int
    pivot_rows: tuple[int, ...]


def column_echelon(matrix: DenseMatrix) -> EchelonForm:
    """
    Reduce a matrix to reduced column echelon form.

    Rows are scanned top to bottom; at each row the first remaining column
    with a nonzero entry becomes the pivot column, is normalized to 1 and
    cleared from every other column. Pivot columns come first, in order of
    their pivot rows; the remaining columns are zero.
    """
    f = matrix.field
    columns = matrix.to_columns()
    pivot_rows: list[int] = []
    rank = 0
    for i in range(matrix.rows):
        pivot = next((k for k in range(rank, len(columns)) if not f.is_zero(columns[k][i])), None)
        if pivot is None:
            continue
        columns[rank], columns[pivot] = columns[pivot], columns[rank]
        scale = f.inv(columns[rank][i])
        columns[rank] = [f.mul(scale, x) for x in columns[rank]]
        for k in range(len(columns)):
            if k == rank or f.is_zero(columns[k][i]):
                continue
            factor = columns[k][i]
            columns[k] = [
                f.sub(x, f.mul(factor, y)) for x, y in zip(columns[k], columns[rank], strict=True)
            ]
        pivot_rows.append(i)
        rank += 1
        if rank == len(columns):
            break
    echelon = DenseMatrix.from_columns(f, columns, matrix.rows)
    return EchelonForm(echelon=echelon, rank=rank, pivot_rows=tuple(pivot_rows))


def rank(matrix: DenseMatrix) -> int:
    """Rank of a matrix over its field."""
    return column_echelon(matrix).rank


@dataclass(frozen=True)
class QuotientBasis:
    """
    Basis of ambient / span(generators) by standard coordinates.

    Attributes:
        dim: Dimension of the quotient
        rank: Rank of the generators
        representative_rows: Coordinates whose unit vectors form the basis
    """
    dim: int
    rank: int
    representative_rows: tuple[int, ...]


def quotient_basis(ambient_dim: int, generators: DenseMatrix) -> QuotientBasis:
    """
    Compute a basis of the quotient of k^ambient_dim by the column span.

    The representatives are the unit vectors at the non-pivot coordinates
    of the column echelon form.

    Raises:
        ValueError: If the generator matrix has the wrong number of rows
    """
    if generators.rows != ambient_dim:
        raise ValueError(
            f"Generators have {generators.rows} rows, ambient dimension is {ambient_dim}"
        )
    form = column_echelon(generators)
    pivots = set(form.pivot_rows)
    representatives = tuple(i for i in range(ambient_dim) if i not in pivots)
    return QuotientBasis(dim=len(representatives), rank=form.rank, representative_rows=representatives)


def same_span(first: DenseMatrix, second: DenseMatrix) -> bool:
    """True iff two matrices with equal row counts have the same column span."""
    joint = rank(first.hstack(second))
    return rank(first) == joint and rank(second) == joint
