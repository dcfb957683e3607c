"""Canonical JSON documents for matrices, witnesses, paths and reports.

MatrixDocument::

    {"field": {"kind": "fp", "p": 5} | {"kind": "q"}, "n": 3, "entries": [[...], ...]}

F_p entries are integers (reduced mod p on load); rational entries are
integers or "a/b" strings on load and always strings on output.
Polynomials are coefficient lists, lowest degree first.
"""

from __future__ import annotations

import json
import math
from typing import Any, Union

from .fields import Field
from .matrix import Mat
from .oracle import GraphReport
from .pathfinder import CommutingPath, PathFailure
from .poly import Poly
from .witness import Witness, WitnessFailure


class DocumentError(ValueError):
    """Malformed input document."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "), allow_nan=False) + "\n"


def _number(x: Union[int, float]):
    return "Infinity" if x == math.inf else x


def _entries(m: Mat) -> list:
    enc = m.field.encode
    return [[enc(x) for x in row] for row in m.rows]


def matrix_to_doc(m: Mat) -> dict:
    return {"field": m.field.to_json(), "n": m.n, "entries": _entries(m)}


def _parse_field(doc: Any) -> Field:
    if not isinstance(doc, dict):
        raise DocumentError("'field' must be an object")
    try:
        return Field.from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad field: {exc}") from exc


def _parse_entries(field: Field, n: Any, entries: Any) -> Mat:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError("'n' must be a positive integer")
    if not isinstance(entries, list) or len(entries) != n:
        raise DocumentError(f"'entries' must have {n} rows")
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"every row must have {n} entries")
        try:
            rows.append([field.parse(x) for x in row])
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(str(exc)) from exc
    return Mat(field, rows)


def doc_to_matrix(doc: Any) -> Mat:
    if not isinstance(doc, dict):
        raise DocumentError("matrix document must be an object")
    for key in ("field", "n", "entries"):
        if key not in doc:
            raise DocumentError(f"missing key {key!r}")
    return _parse_entries(_parse_field(doc["field"]), doc["n"], doc["entries"])


def poly_to_list(f: Poly) -> list:
    return [f.field.encode(c) for c in f.coeffs]


def witness_to_doc(w: Union[Witness, WitnessFailure]) -> dict:
    if isinstance(w, WitnessFailure):
        return {
            "failure": "witness_failure",
            "field": w.minimal_poly.field.to_json(),
            "minimal_poly": poly_to_list(w.minimal_poly),
        }
    cert = {"minimal_poly": poly_to_list(w.minimal_poly)}
    if w.squarefree_part is not None:
        cert["squarefree_part"] = poly_to_list(w.squarefree_part)
    if w.divisor is not None:
        cert["divisor"] = poly_to_list(w.divisor)
    return {
        "kind": w.kind.value,
        "branch": w.branch.value,
        "matrix": matrix_to_doc(w.matrix),
        "certificate": cert,
    }


def path_to_doc(result: Union[CommutingPath, PathFailure]) -> dict:
    if isinstance(result, PathFailure):
        return {
            "failure": "path_failure",
            "reason": result.reason,
            "detail": result.detail,
            "failed_endpoints": list(result.failed_endpoints),
        }
    first = result.vertices[0]
    return {
        "field": first.field.to_json(),
        "n": first.n,
        "vertices": [_entries(v) for v in result.vertices],
        "annotations": list(result.annotations),
        "length": result.length,
    }


def doc_to_path(doc: Any) -> CommutingPath:
    if not isinstance(doc, dict):
        raise DocumentError("path document must be an object")
    for key in ("field", "n", "vertices"):
        if key not in doc:
            raise DocumentError(f"missing key {key!r}")
    field = _parse_field(doc["field"])
    verts = doc["vertices"]
    if not isinstance(verts, list):
        raise DocumentError("'vertices' must be a list")
    mats = tuple(_parse_entries(field, doc["n"], v) for v in verts)
    ann = doc.get("annotations", [])
    if not isinstance(ann, list) or not all(isinstance(a, str) for a in ann):
        raise DocumentError("'annotations' must be a list of strings")
    return CommutingPath(mats, tuple(ann))


def report_to_doc(r: GraphReport) -> dict:
    return {
        "n": r.n,
        "p": r.p,
        "vertex_count": r.vertex_count,
        "edge_count": r.edge_count,
        "connected": r.connected,
        "component_count": r.component_count,
        "component_sizes": r.component_sizes,
        "component_diameters": r.component_diameters,
        "diameter": _number(r.diameter),
        "eccentricity_histogram": {str(k): v for k, v in r.eccentricity_histogram.items()},
        "witness_failure_count": r.witness_failure_count,
        "similarity_classes": r.similarity_classes,
    }


def distance_to_doc(d: Union[int, float]) -> dict:
    return {"distance": _number(d)}
