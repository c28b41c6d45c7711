"""
Quiver Representations

A finite-dimensional left module N over the path algebra is given as a
representation: a space N_x = id_x * N of dimension dims[x] per vertex and
a matrix per arrow f of shape dims[t(f)] x dims[s(f)], acting by left
multiplication.

For an acyclic quiver the regular module kQ itself is finite-dimensional.
Its basis at x is the set of paths with target x, in enumerate_paths
order, and each arrow acts by concatenation as a 0/1 matrix.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from ..core.field import Field
from ..core.quiver import CyclicQuiverError, Path, Quiver, compose, is_acyclic
from ..core.report import ValidationReport
from ..linalg.dense import DenseMatrix
from .path_algebra import PathAlgebraElement

logger = logging.getLogger(__name__)


class HomogeneityError(ValueError):
    """A path-algebra element mixes paths with different endpoints."""


@dataclass(frozen=True)
class QuiverRep:
    """
    A representation of a quiver over a field.

    Attributes:
        quiver: The quiver represented
        field: Scalar field of every matrix
        dims: Vertex -> dimension of N_x
        mats: Arrow name -> matrix of shape dims[t(f)] x dims[s(f)]
        basis_names: Optional vertex -> names of the basis vectors of N_x
    """
    quiver: Quiver
    field: Field
    dims: Mapping[str, int]
    mats: Mapping[str, DenseMatrix]
    basis_names: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("dims", "mats", "basis_names"):
            object.__setattr__(self, name, MappingProxyType(dict(getattr(self, name))))

    def __hash__(self) -> int:
        return hash((
            self.quiver,
            self.field,
            frozenset(self.dims.items()),
            frozenset(self.mats.items()),
            frozenset(self.basis_names.items()),
        ))

    @property
    def total_dim(self) -> int:
        return sum(self.dims.get(v, 0) for v in self.quiver.vertices)

    def basis_label(self, vertex: str, index: int) -> str:
        """Name of a basis vector of N_x, or its index when unnamed."""
        names = self.basis_names.get(vertex)
        if names is not None and index < len(names):
            return names[index]
        return str(index)


def rep_validate(rep: QuiverRep) -> ValidationReport:
    """Check dimensions, matrix shapes and scalar ranges of a representation."""
    report = ValidationReport("representation")
    for vertex in rep.quiver.vertices:
        if vertex not in rep.dims:
            report.add(f"missing dimension at vertex {vertex}")
        elif rep.dims[vertex] < 0:
            report.add(f"negative dimension at vertex {vertex}")
    if not report.is_valid:
        return report

    for arrow in rep.quiver.arrows:
        matrix = rep.mats.get(arrow.name)
        if matrix is None:
            report.add(f"missing matrix at arrow {arrow.name}")
            continue
        expected = (rep.dims[arrow.target], rep.dims[arrow.source])
        if matrix.shape != expected:
            report.add(f"shape mismatch at arrow {arrow.name}: expected {expected}, got {matrix.shape}")
        if matrix.field != rep.field:
            report.add(f"field mismatch at arrow {arrow.name}: {matrix.field} is not {rep.field}")
        elif not all(rep.field.contains(x) for x in matrix.entries):
            report.add(f"scalar out of range at arrow {arrow.name}")
    return report


def eval_path(rep: QuiverRep, path: Path) -> DenseMatrix:
    """
    Matrix by which a path acts: mats(f_1) @ ... @ mats(f_l).

    The identity at x acts as the identity matrix of size dims[x].
    """
    if path.is_identity:
        return DenseMatrix.identity(rep.field, rep.dims[path.source])
    result = rep.mats[path.arrows[0]]
    for name in path.arrows[1:]:
        result = result @ rep.mats[name]
    return result


def eval_element(
    rep: QuiverRep,
    element: PathAlgebraElement,
    source: str,
    target: str,
) -> DenseMatrix:
    """
    Matrix by which a homogeneous element acts from N_source to N_target.

    Raises:
        HomogeneityError: If some path does not run from source to target
    """
    result = DenseMatrix.zeros(rep.field, rep.dims[target], rep.dims[source])
    for path, coeff in element:
        if path.source != source or path.target != target:
            raise HomogeneityError(
                f"Path {path} runs from {path.source} to {path.target}, "
                f"expected {source} to {target}"
            )
        result = result + eval_path(rep, path).scaled(rep.field.coerce(coeff))
    return result


def enumerate_paths(quiver: Quiver) -> list[Path]:
    """
    All paths of an acyclic quiver, identities first.

    Order: by length, then lexicographically by arrow input indices;
    identities follow vertex input order.

    Raises:
        CyclicQuiverError: If the quiver has a cycle
    """
    if not is_acyclic(quiver, quiver.all_arrows):
        raise CyclicQuiverError("quiver has a cycle")
    paths = [quiver.identity(v) for v in quiver.vertices]
    frontier = [quiver.arrow_path(a.name) for a in quiver.arrows]
    while frontier:
        frontier.sort(key=lambda p: tuple(quiver.arrow_index(n) for n in p.arrows))
        paths.extend(frontier)
        frontier = [
            extended
            for path in frontier
            for arrow in quiver.arrows
            if (extended := compose(quiver.arrow_path(arrow.name), path)) is not None
        ]
    return paths


def regular_rep(quiver: Quiver, field: Field) -> QuiverRep:
    """
    The regular module kQ of an acyclic quiver.

    Raises:
        CyclicQuiverError: If the quiver has a cycle
    """
    try:
        paths = enumerate_paths(quiver)
    except CyclicQuiverError:
        raise CyclicQuiverError("regular module requires acyclic quiver") from None

    basis: dict[str, list[Path]] = {v: [] for v in quiver.vertices}
    for path in paths:
        basis[path.target].append(path)
    position = {path: i for v in quiver.vertices for i, path in enumerate(basis[v])}

    one = field.one()
    mats = {}
    for arrow in quiver.arrows:
        step = quiver.arrow_path(arrow.name)
        columns = []
        for path in basis[arrow.source]:
            column = [field.zero()] * len(basis[arrow.target])
            column[position[compose(step, path)]] = one
            columns.append(column)
        mats[arrow.name] = DenseMatrix.from_columns(field, columns, len(basis[arrow.target]))

    dims = {v: len(basis[v]) for v in quiver.vertices}
    logger.debug(f"Regular module over {field}: dims {dims}")
    return QuiverRep(
        quiver=quiver,
        field=field,
        dims=dims,
        mats=mats,
        basis_names={v: tuple(str(p) for p in basis[v]) for v in quiver.vertices},
    )
