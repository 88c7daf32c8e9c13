"""JSON instance files and matrix output.

Instance file::

    {"field": "rational", "nodes": ["-1", "0", "2"],
     "F": ["1", "2", "3", "4"], "G": ["5", "6", "7"]}

Matrix file::

    {"rows": 3, "cols": 3, "entries": ["28", "24", ...]}

Scalars are always strings so rationals survive the round trip.
"""

from __future__ import annotations

import json
from pathlib import Path

from .field import RATIONAL, ParseError, PreconditionError, check_mode, format_scalar, parse_scalar
from .linalg import DenseMatrix
from .newton import Instance, NewtonPolynomial


def instance_to_dict(inst: Instance, field: str = RATIONAL) -> dict:
    return {
        "field": field,
        "nodes": [format_scalar(v) for v in inst.nodes],
        "F": [format_scalar(v) for v in inst.F.coeffs],
        "G": [format_scalar(v) for v in inst.G.coeffs],
    }


def dumps_instance(inst: Instance, field: str = RATIONAL) -> str:
    return json.dumps(instance_to_dict(inst, field), indent=2) + "\n"


def _scalar_list(doc: dict, key: str, field: str) -> list:
    values = doc.get(key)
    if not isinstance(values, list):
        raise ParseError(f"instance field {key!r} must be a list of scalar strings")
    return [parse_scalar(v, field) for v in values]


def instance_from_dict(doc) -> tuple[Instance, str]:
    if not isinstance(doc, dict):
        raise ParseError("instance must be a JSON object")
    missing = {"nodes", "F", "G"} - doc.keys()
    if missing:
        raise ParseError(f"instance is missing {sorted(missing)}")
    field = check_mode(doc.get("field", RATIONAL))
    nodes = tuple(_scalar_list(doc, "nodes", field))
    a = _scalar_list(doc, "F", field)
    b = _scalar_list(doc, "G", field)
    if not nodes:
        raise ParseError("at least one node is required")
    if len(a) != len(nodes) + 1:
        raise ParseError(f"F needs {len(nodes) + 1} coefficients for {len(nodes)} nodes, got {len(a)}")
    if not b:
        raise ParseError("G needs at least one coefficient")
    if len(b) > len(a):
        raise PreconditionError(f"G has {len(b)} coefficients but F only {len(a)} (m > n)")
    if a[-1] == 0:
        raise PreconditionError("leading coefficient of F must be nonzero")
    return Instance(nodes, NewtonPolynomial(nodes, a), NewtonPolynomial(nodes, b)), field


def loads_instance(text: str) -> tuple[Instance, str]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return instance_from_dict(doc)


def read_instance(path) -> tuple[Instance, str]:
    return loads_instance(Path(path).read_text())


def write_instance(path, inst: Instance, field: str = RATIONAL) -> None:
    Path(path).write_text(dumps_instance(inst, field))


def dumps_matrix(M: DenseMatrix) -> str:
    doc = {"rows": M.nrows, "cols": M.ncols, "entries": [format_scalar(v) for v in M.entries()]}
    return json.dumps(doc, indent=2) + "\n"


def loads_matrix(text: str, field: str = RATIONAL) -> DenseMatrix:
    try:
        doc = json.loads(text)
        rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed matrix document: {exc}") from exc
    try:
        return DenseMatrix.from_entries(rows, cols, [parse_scalar(e, field) for e in entries])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def write_matrix(path, M: DenseMatrix) -> None:
    Path(path).write_text(dumps_matrix(M))
