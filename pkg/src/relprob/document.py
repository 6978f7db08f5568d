"""JSON documents holding a dense or classed RPF.

Dense::

    {"format": "rpf-dense-v1", "k": 2, "matrix": [["1", "inf"], ["0", "1"]]}

Classed::

    {"format": "rpf-classed-v1", "k": 3, "assignment": [0, 0, 1],
     "log_value": [0.0, 0.693, 0.0], "class_order": [["1", "inf"], ["0", "1"]]}

Matrix cells are strings: a non-negative decimal, ``"inf"`` or ``"*"``
(plain JSON numbers are accepted on input).  Output is canonical: sorted
keys, compact separators, shortest round-trip decimals, one trailing newline.
"""

from __future__ import annotations

import json

from .errors import AxiomViolationError, DocumentError, RpfError
from .magnitude import parse_value, render
from .rpf import ClassedRpf, DenseRpf, to_dense

__all__ = ["DENSE_FORMAT", "CLASSED_FORMAT", "parse_document", "serialize_document", "load_dense"]

DENSE_FORMAT = "rpf-dense-v1"
CLASSED_FORMAT = "rpf-classed-v1"


def _matrix(obj, k: int, name: str) -> DenseRpf:
    if not isinstance(obj, list) or len(obj) != k or any(
        not isinstance(row, list) or len(row) != k for row in obj
    ):
        raise DocumentError(f"{name} must be a {k}x{k} array")
    return DenseRpf.from_entries([[parse_value(v) for v in row] for row in obj])


def _int(obj, name: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int) or obj < 0:
        raise DocumentError(f"{name} must be a non-negative integer")
    return obj


def parse_document(text: str, check: bool = True) -> DenseRpf | ClassedRpf:
    """Parse a document; with ``check`` the RPF is validated before returning."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    fmt = doc.get("format")
    k = _int(doc.get("k"), "k")

    if fmt == DENSE_FORMAT:
        rpf = _matrix(doc.get("matrix"), k, "matrix")
        if check and rpf.violations:
            raise AxiomViolationError(rpf.violations)
        return rpf

    if fmt == CLASSED_FORMAT:
        assignment = doc.get("assignment")
        log_value = doc.get("log_value")
        for name, arr in (("assignment", assignment), ("log_value", log_value)):
            if not isinstance(arr, list) or len(arr) != k:
                raise DocumentError(f"{name} must be an array of length {k}")
        assignment = [_int(a, "assignment entry") for a in assignment]
        if any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in log_value):
            raise DocumentError("log_value entries must be numbers")
        order = doc.get("class_order")
        n = len(order) if isinstance(order, list) else -1
        rpf = ClassedRpf(tuple(assignment), tuple(log_value), _matrix(order, n, "class_order"))
        if check:
            problems = rpf.problems()
            if problems:
                raise RpfError("invalid classed RPF: " + "; ".join(problems))
        return rpf

    raise DocumentError(f"unknown format tag {fmt!r}")


def serialize_document(rpf: DenseRpf | ClassedRpf) -> str:
    if isinstance(rpf, DenseRpf):
        doc = {
            "format": DENSE_FORMAT,
            "k": rpf.k,
            "matrix": [[render(m) for m in row] for row in rpf.entries()],
        }
    elif isinstance(rpf, ClassedRpf):
        doc = {
            "format": CLASSED_FORMAT,
            "k": rpf.k,
            "assignment": list(rpf.assignment),
            "log_value": [float(x) + 0.0 for x in rpf.log_values],
            "class_order": [[render(m) for m in row] for row in rpf.class_order.entries()],
        }
    else:
        raise TypeError(f"cannot serialize {type(rpf).__name__}")
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def load_dense(text: str) -> DenseRpf:
    """Parse either format and return the validated dense table."""
    rpf = parse_document(text)
    return to_dense(rpf) if isinstance(rpf, ClassedRpf) else rpf
