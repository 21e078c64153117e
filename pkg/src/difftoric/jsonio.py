"""JSON schemas shared by the CLI and the file formats.

Matrices are arrays of columns, each column an array of polynomial strings
in the text grammar; the ambient dimension is the column length.  Semimodules
are {"generators": [[...], ...]}.  Indices in face payloads are 1-based to
match the y1, y2, ... variable numbering.
"""

from __future__ import annotations

import json

from .errors import InputError
from .poly_core import NEG_INF, PolyParseError, format_poly, parse_poly
from .zx_lattice import LatticeVector


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def parse_vector(obj) -> LatticeVector:
    if not isinstance(obj, list) or not obj:
        raise InputError("a vector must be a nonempty array of polynomial strings")
    out = []
    for item in obj:
        if not isinstance(item, str):
            raise InputError(f"polynomial entries must be strings, got {item!r}")
        try:
            out.append(parse_poly(item))
        except PolyParseError as exc:
            raise InputError(str(exc)) from None
    return LatticeVector(out)


def parse_matrix(obj) -> list[LatticeVector]:
    """Array of columns -> list of LatticeVector with a shared dimension."""
    if isinstance(obj, dict) and "columns" in obj:
        obj = obj["columns"]
    if not isinstance(obj, list) or not obj:
        raise InputError("a matrix must be a nonempty array of columns")
    cols = [parse_vector(c) for c in obj]
    dims = {c.dim for c in cols}
    if len(dims) != 1:
        raise InputError("matrix columns have different lengths")
    return cols


def vector_json(v: LatticeVector) -> list[str]:
    return [format_poly(e) for e in v.entries]


def matrix_json(cols) -> list[list[str]]:
    return [vector_json(c) for c in cols]


def witness_json(w) -> dict:
    return {"h": vector_json(w.vector), "p": format_poly(w.multiplier)}


def parse_semimodule_payload(obj):
    if not isinstance(obj, dict) or "generators" not in obj:
        raise InputError('semimodule input must be {"generators": [[...], ...]}')
    return parse_matrix(obj["generators"])


def parse_jacobi_matrix(obj) -> list[list]:
    if isinstance(obj, dict) and "matrix" in obj:
        obj = obj["matrix"]
    if not isinstance(obj, list) or not obj:
        raise InputError("jacobi input must be a nonempty square array of rows")
    rows = []
    for row in obj:
        if not isinstance(row, list):
            raise InputError("jacobi matrix rows must be arrays")
        parsed = []
        for e in row:
            if e is None or e == "-inf":
                parsed.append(NEG_INF)
            elif isinstance(e, int) and not isinstance(e, bool) and e >= 0:
                parsed.append(e)
            else:
                raise InputError(f"jacobi entries are naturals or '-inf', got {e!r}")
        rows.append(parsed)
    if any(len(r) != len(rows) for r in rows):
        raise InputError("jacobi matrix must be square")
    return rows


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
