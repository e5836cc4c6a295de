"""JSON documents for algebras, maps and bilinear forms.

Algebra document::

    {"field": {"kind": "GF", "p": 5}, "dim": 2, "labels": ["1", "t"],
     "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]],
     "unit": ["1", "0"]}

``table[i][j]`` holds the coordinates of ``b_i b_j``.  Map documents carry
``source`` and ``target`` (each a ``"builtin:..."`` name, a path relative
to the document, or an inline algebra document), an optional
``target_blocks`` list of simple blocks whose product is the target, and
``matrix`` with dim(target) rows and dim(source) columns.  Scalars are
strings such as ``"-3/4"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import Algebra, parse_builtin
from .errors import ZlpdError
from .exactfield import FieldSpec


class DocumentError(ZlpdError, ValueError):
    pass


def field_from_doc(obj) -> FieldSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise DocumentError('"field" must be {"kind": "Q"} or {"kind": "GF", "p": <prime>}')
    kind = obj["kind"]
    try:
        if kind == "Q":
            return FieldSpec.rationals()
        if kind == "GF":
            p = obj.get("p")
            if not isinstance(p, int) or isinstance(p, bool):
                raise DocumentError("GF field needs an integer p")
            return FieldSpec.gf(p)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    raise DocumentError(f"unknown field kind {kind!r}")


def field_to_doc(f: FieldSpec) -> dict:
    return {"kind": "Q"} if f.kind == "Q" else {"kind": "GF", "p": f.p}


def _scalar(f: FieldSpec, v):
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise DocumentError(f"scalar must be a string, got {v!r}")
    return f.coerce(v)


def _vector(f, v, n, what):
    if not isinstance(v, list) or len(v) != n:
        raise DocumentError(f"{what} must be a list of {n} scalars")
    return tuple(_scalar(f, x) for x in v)


def algebra_from_doc(doc: dict, field: FieldSpec | None = None) -> Algebra:
    if not isinstance(doc, dict):
        raise DocumentError("algebra document must be a JSON object")
    if "field" in doc:
        f = field_from_doc(doc["field"])
    elif field is not None:
        f = field
    else:
        raise DocumentError('algebra document needs a "field"')
    n = doc.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError('"dim" must be a positive integer')
    table = doc.get("table")
    if not isinstance(table, list) or len(table) != n:
        raise DocumentError(f'"table" must have {n} rows')
    structure = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f'"table" row {i} must have {n} entries')
        structure.append([_vector(f, v, n, f"table[{i}][{j}]") for j, v in enumerate(row)])
    unit = doc.get("unit")
    if unit is not None:
        unit = _vector(f, unit, n, '"unit"')
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise DocumentError(f'"labels" must be a list of {n} strings')
    return Algebra(f, structure, unit, labels)


def algebra_to_doc(A: Algebra) -> dict:
    doc = {
        "field": field_to_doc(A.field),
        "dim": A.dim,
        "table": [[[str(c) for c in A.basis_product(i, j)] for j in range(A.dim)]
                  for i in range(A.dim)],
    }
    if A.labels:
        doc["labels"] = list(A.labels)
    if A.unit is not None:
        doc["unit"] = [str(c) for c in A.unit]
    return doc


def read_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from exc


def resolve_algebra(ref, base_dir=None, field: FieldSpec | None = None) -> Algebra:
    """Load an algebra from ``builtin:NAME``, a file path or an inline document."""
    if isinstance(ref, dict):
        return algebra_from_doc(ref, field)
    if not isinstance(ref, str):
        raise DocumentError(f"cannot interpret algebra reference {ref!r}")
    if ref.startswith("builtin:"):
        return parse_builtin(ref[len("builtin:"):], field)
    path = Path(ref)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    return algebra_from_doc(read_json(path), field)


def map_from_doc(doc: dict, base_dir=None, field: FieldSpec | None = None):
    """Return ``(AlgebraMap, BlockAlgebra or None)``."""
    from .jordanhom import AlgebraMap, BlockAlgebra

    if not isinstance(doc, dict):
        raise DocumentError("map document must be a JSON object")
    if "field" in doc:
        field = field_from_doc(doc["field"])
    if "source" not in doc or "matrix" not in doc:
        raise DocumentError('map document needs "source" and "matrix"')
    source = resolve_algebra(doc["source"], base_dir, field)
    blocks = None
    if "target_blocks" in doc:
        refs = doc["target_blocks"]
        if not isinstance(refs, list) or not refs:
            raise DocumentError('"target_blocks" must be a nonempty list')
        blocks = BlockAlgebra([resolve_algebra(r, base_dir, field) for r in refs])
    if "target" in doc:
        target = resolve_algebra(doc["target"], base_dir, field)
        if blocks is not None and blocks.algebra != target:
            raise DocumentError('"target" is not the product of "target_blocks"')
    elif blocks is not None:
        target = blocks.algebra
    else:
        raise DocumentError('map document needs "target" or "target_blocks"')
    matrix = doc["matrix"]
    if not isinstance(matrix, list) or len(matrix) != target.dim:
        raise DocumentError(f'"matrix" must have {target.dim} rows')
    rows = [_vector(target.field, r, source.dim, f"matrix row {i}")
            for i, r in enumerate(matrix)]
    return AlgebraMap(source, target, rows), blocks


def load_map(path, field: FieldSpec | None = None):
    path = Path(path)
    return map_from_doc(read_json(path), path.parent, field)


def map_to_doc(J, source_ref=None, target_ref=None, block_refs=None) -> dict:
    doc = {
        "field": field_to_doc(J.field),
        "source": source_ref if source_ref is not None else algebra_to_doc(J.source),
        "matrix": [[str(c) for c in row] for row in J.matrix],
    }
    if block_refs is not None:
        doc["target_blocks"] = block_refs
    if target_ref is not None or block_refs is None:
        doc["target"] = target_ref if target_ref is not None else algebra_to_doc(J.target)
    return doc


def form_to_doc(phi) -> list:
    return [[str(c) for c in row] for row in phi.m]


def form_from_doc(rows, field: FieldSpec):
    from .bilinear import BilinearForm

    if not isinstance(rows, list) or not rows:
        raise DocumentError("form must be a square list of scalar rows")
    n = len(rows)
    return BilinearForm(field, [_vector(field, r, n, "form row") for r in rows])
