"""
JSON Documents

Quiver document (arrow order is semantic; it drives every tie-break):

    {
      "vertices": ["1", "2", "3"],
      "arrows": [
        {"name": "a1", "source": "2", "target": "1"},
        {"name": "a2", "source": "3", "target": "2"}
      ]
    }

Representation document, either the regular module of an acyclic quiver

    {"field": "q", "module": "regular"}

or explicit data, with entries as integers or "p/q" strings. Integer
values over F_p, written as numbers or strings, are taken as given and
must lie in [0, p); a non-integer "a/b" maps to a * b^-1 mod p:

    {
      "field": "p:101",
      "dims": {"1": 1, "2": 1},
      "matrices": {"a1": [[1]]}
    }

Partition document: {"a": [...], "b": [...], "f": [...], "g": [...], "h": [...]}

Structured matrix pair: V and W as lists of rows, each entry a list of
terms {"coeff": c, "path": [arrow, ...]} or {"coeff": c, "identity": x}.

Canonical serialization is json.dumps(..., indent=2) plus a newline.
"""

import json
import sys
from fractions import Fraction
from typing import Any

from ..algebra.matrices import MatrixPair
from ..algebra.partition import Partition, partition_from_lists
from ..algebra.path_algebra import Coefficient, PathAlgebraElement
from ..algebra.representation import QuiverRep, regular_rep
from ..core.field import RATIONALS, Field, PrimeField, parse_field
from ..core.quiver import Quiver, QuiverError
from ..linalg.dense import DenseMatrix


class DocumentError(ValueError):
    """A document is not valid JSON or does not follow its schema."""


def read_text(path: str) -> str:
    """Read a file, or standard input when path is "-"."""
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise DocumentError(f"Cannot read {path}: {e.strerror}") from e


def load_json(path: str) -> Any:
    text = read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from e


def dump_json(document: Any) -> str:
    """Canonical text of a document."""
    return json.dumps(document, indent=2) + "\n"


def _require(document: Any, key: str, kind: type | tuple[type, ...], where: str) -> Any:
    if not isinstance(document, dict) or key not in document:
        raise DocumentError(f"{where}: missing key {key!r}")
    value = document[key]
    if not isinstance(value, kind):
        kinds = kind if isinstance(kind, tuple) else (kind,)
        raise DocumentError(f"{where}: {key!r} must be a {' or '.join(k.__name__ for k in kinds)}")
    return value


def _identifier(value: Any, where: str) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(f"{where}: identifiers must be strings or integers, got {value!r}")
    return str(value)


# Quivers

def quiver_from_doc(document: Any) -> Quiver:
    """
    Parse a quiver document.

    Raises:
        DocumentError: On schema violations or an invalid quiver
    """
    vertices = _require(document, "vertices", list, "quiver")
    arrows = _require(document, "arrows", list, "quiver")
    triples = []
    for i, record in enumerate(arrows):
        where = f"quiver arrow #{i}"
        triples.append((
            _identifier(_require(record, "name", (str, int), where), where),
            _identifier(_require(record, "source", (str, int), where), where),
            _identifier(_require(record, "target", (str, int), where), where),
        ))
    try:
        return Quiver.build([_identifier(v, "quiver vertex") for v in vertices], triples)
    except QuiverError as e:
        raise DocumentError(f"quiver: {e}") from e


def quiver_to_doc(quiver: Quiver) -> dict[str, Any]:
    return {
        "vertices": list(quiver.vertices),
        "arrows": [
            {"name": a.name, "source": a.source, "target": a.target} for a in quiver.arrows
        ],
    }


def load_quiver(path: str) -> Quiver:
    return quiver_from_doc(load_json(path))


# Scalars

def scalar_to_json(value: Any) -> int | str:
    """Integers stay integers; other rationals become "p/q" strings."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    return value


def _scalar_from_json(field: Field, value: Any, where: str) -> Any:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"{where}: scalars must be integers or strings, got {value!r}")
    if isinstance(value, int) and isinstance(field, PrimeField):
        return value
    try:
        if isinstance(field, PrimeField):
            rational = RATIONALS.coerce(value)
            if rational.denominator == 1:
                return rational.numerator
        return field.coerce(value)
    except ValueError as e:
        raise DocumentError(f"{where}: {e}") from e


def _coefficient_from_json(value: Any, where: str) -> Coefficient:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"{where}: coefficients must be integers or strings")
    if isinstance(value, int):
        return value
    try:
        coeff = Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise DocumentError(f"{where}: bad coefficient {value!r}") from e
    return coeff.numerator if coeff.denominator == 1 else coeff


# Representations

def rep_from_doc(quiver: Quiver, document: Any) -> QuiverRep:
    """
    Parse a representation document against its quiver.

    Shape problems are left to rep_validate; only malformed JSON structure
    raises here.

    Raises:
        DocumentError: On schema violations or an unknown field
        CyclicQuiverError: If the regular module is asked of a cyclic quiver
    """
    descriptor = _require(document, "field", str, "representation")
    try:
        field = parse_field(descriptor)
    except ValueError as e:
        raise DocumentError(f"representation: {e}") from e

    if "module" in document:
        if document["module"] != "regular":
            raise DocumentError(f"representation: unknown module {document['module']!r}")
        return regular_rep(quiver, field)

    raw_dims = _require(document, "dims", dict, "representation")
    raw_mats = _require(document, "matrices", dict, "representation")
    dims = {}
    for vertex, value in raw_dims.items():
        if isinstance(value, bool) or not isinstance(value, int):
            raise DocumentError(f"representation: dimension of {vertex} must be an integer")
        dims[str(vertex)] = value

    mats = {}
    for name, rows in raw_mats.items():
        where = f"matrix {name}"
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise DocumentError(f"{where}: must be a list of rows")
        cols = len(rows[0]) if rows else 0
        if not rows and quiver.has_arrow(name):
            cols = dims.get(quiver.arrow(name).source, 0)
        if any(len(r) != cols for r in rows):
            raise DocumentError(f"{where}: rows have different lengths")
        entries = tuple(_scalar_from_json(field, x, where) for r in rows for x in r)
        mats[name] = DenseMatrix(field, len(rows), cols, entries)
    return QuiverRep(quiver=quiver, field=field, dims=dims, mats=mats)


def rep_to_doc(rep: QuiverRep) -> dict[str, Any]:
    return {
        "field": rep.field.descriptor,
        "dims": {v: rep.dims[v] for v in rep.quiver.vertices},
        "matrices": {
            a.name: [[scalar_to_json(x) for x in row] for row in rep.mats[a.name].to_rows()]
            for a in rep.quiver.arrows
        },
    }


def load_rep(quiver: Quiver, path: str) -> QuiverRep:
    return rep_from_doc(quiver, load_json(path))


# Partitions

def partition_from_doc(quiver: Quiver, document: Any) -> Partition:
    lists = {}
    for key in ("a", "b", "f", "g", "h"):
        lists[key] = [_identifier(x, f"partition {key}") for x in _require(document, key, list, "partition")]
    try:
        return partition_from_lists(quiver, **lists)
    except QuiverError as e:
        raise DocumentError(f"partition: {e}") from e


def partition_to_doc(partition: Partition) -> dict[str, list[str]]:
    return {
        "a": list(partition.a),
        "b": list(partition.b),
        "f": list(partition.f),
        "g": list(partition.g),
        "h": list(partition.h),
    }


def load_partition(quiver: Quiver, path: str) -> Partition:
    return partition_from_doc(quiver, load_json(path))


# Matrix pairs

def element_to_doc(element: PathAlgebraElement) -> list[dict[str, Any]]:
    terms = []
    for path, coeff in element:
        term: dict[str, Any] = {"coeff": scalar_to_json(coeff)}
        if path.is_identity:
            term["identity"] = path.source
        else:
            term["path"] = list(path.arrows)
        terms.append(term)
    return terms


def element_from_doc(quiver: Quiver, terms: Any) -> PathAlgebraElement:
    if not isinstance(terms, list):
        raise DocumentError("matrix entry must be a list of terms")
    pairs = []
    for term in terms:
        if not isinstance(term, dict) or "coeff" not in term:
            raise DocumentError(f"bad term {term!r}")
        coeff = _coefficient_from_json(term["coeff"], "term")
        try:
            if "identity" in term:
                path = quiver.identity(_identifier(term["identity"], "term"))
            else:
                path = quiver.path(*(_identifier(n, "term") for n in _require(term, "path", list, "term")))
        except QuiverError as e:
            raise DocumentError(f"term: {e}") from e
        pairs.append((path, coeff))
    return PathAlgebraElement.from_pairs(pairs)


def matrix_pair_to_doc(pair: MatrixPair) -> dict[str, Any]:
    return {
        "row_arrows": list(pair.row_arrows),
        "col_vertices_V": list(pair.col_vertices_V),
        "col_vertices_W": list(pair.col_vertices_W),
        "V": [[element_to_doc(e) for e in row] for row in pair.V],
        "W": [[element_to_doc(e) for e in row] for row in pair.W],
    }


def matrix_pair_from_doc(quiver: Quiver, document: Any) -> MatrixPair:
    def matrix(key: str) -> tuple[tuple[PathAlgebraElement, ...], ...]:
        rows = _require(document, key, list, "matrix pair")
        return tuple(tuple(element_from_doc(quiver, e) for e in row) for row in rows)

    def labels(key: str) -> tuple[str, ...]:
        return tuple(_identifier(x, key) for x in _require(document, key, list, "matrix pair"))

    V, W = matrix("V"), matrix("W")
    row_arrows = labels("row_arrows")
    col_vertices_V, col_vertices_W = labels("col_vertices_V"), labels("col_vertices_W")
    try:
        return MatrixPair(
            V=V,
            W=W,
            row_arrows=row_arrows,
            col_vertices_V=col_vertices_V,
            col_vertices_W=col_vertices_W,
        )
    except ValueError as e:
        raise DocumentError(f"matrix pair: {e}") from e


def render_matrix_pair(pair: MatrixPair) -> str:
    """
    Text rendering: one line per row arrow, entries separated by " | ".

        V (columns 1, 2)
          a1: id_1 | 0
    """
    lines = []
    for label, matrix, columns in (
        ("V", pair.V, pair.col_vertices_V),
        ("W", pair.W, pair.col_vertices_W),
    ):
        lines.append(f"{label} (columns {', '.join(columns) if columns else '—'})")
        if not columns:
            continue
        for arrow, row in zip(pair.row_arrows, matrix, strict=True):
            lines.append(f"  {arrow}: " + " | ".join(str(e) for e in row))
    return "\n".join(lines)
