"""JSON documents for algebra elements, maps and reduction results.

Complex numbers are serialized as two-element [re, im] arrays; floats go
through repr, which is lossless for doubles, so encode(decode(doc)) is
byte-identical to doc for canonical documents.  Every document carries
schema_version 1 and a kind tag:

    cd_element   {"level": n,  "data": [[re, im] * 2**n]}
    herm_biquat  {"order": n,  "data": n x n x 4 nested pairs}
    c6_element   {"data": 3 x 3 x 8 nested pairs}
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .cd import CDElement
from .errors import DomainError
from .jordan import HermMatrix

SCHEMA_VERSION = 1

KIND_CD = "cd_element"
KIND_BIQUAT = "herm_biquat"
KIND_C6 = "c6_element"


class DocumentError(DomainError):
    """Malformed or unsupported element document."""


def _pair(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def _unpair(value: Any) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(v, (int, float)) for v in value)):
        raise DocumentError(f"expected [re, im], got {value!r}")
    return complex(value[0], value[1])


def encode_element(obj: CDElement | HermMatrix) -> dict:
    if isinstance(obj, CDElement):
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": KIND_CD,
            "level": obj.level,
            "data": [_pair(z) for z in obj.coords],
        }
    if isinstance(obj, HermMatrix):
        data = [
            [[_pair(z) for z in obj.entries[i, j]] for j in range(obj.order)]
            for i in range(obj.order)
        ]
        if obj.level == 2:
            return {
                "schema_version": SCHEMA_VERSION,
                "kind": KIND_BIQUAT,
                "order": obj.order,
                "data": data,
            }
        if obj.level == 3:
            return {"schema_version": SCHEMA_VERSION, "kind": KIND_C6, "data": data}
    raise DomainError(f"cannot encode {type(obj).__name__}")


def decode_element(doc: dict) -> CDElement | HermMatrix:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(
            f"unsupported schema_version {doc.get('schema_version')!r}"
        )
    kind = doc.get("kind")
    data = doc.get("data")
    if kind == KIND_CD:
        level = doc.get("level")
        if not isinstance(level, int) or level < 0:
            raise DocumentError(f"bad level {level!r}")
        if not isinstance(data, list) or len(data) != (1 << level):
            raise DocumentError("coordinate count does not match the level")
        return CDElement(level, np.array([_unpair(v) for v in data]))
    if kind in (KIND_BIQUAT, KIND_C6):
        level = 2 if kind == KIND_BIQUAT else 3
        order = doc.get("order", 3) if kind == KIND_BIQUAT else 3
        if not isinstance(order, int) or order < 1:
            raise DocumentError(f"bad order {order!r}")
        width = 1 << level
        if (not isinstance(data, list) or len(data) != order
                or any(not isinstance(row, list) or len(row) != order for row in data)):
            raise DocumentError("entry grid does not match the order")
        entries = np.zeros((order, order, width), dtype=np.complex128)
        for i, row in enumerate(data):
            for j, cell in enumerate(row):
                if not isinstance(cell, list) or len(cell) != width:
                    raise DocumentError(
                        f"entry ({i},{j}) must have {width} coordinates"
                    )
                entries[i, j] = [_unpair(v) for v in cell]
        try:
            return HermMatrix(entries, level)
        except DomainError as exc:
            raise DocumentError(f"decoded matrix is invalid: {exc}") from exc
    raise DocumentError(f"unknown document kind {kind!r}")


def encode_linear_map(matrix: np.ndarray, kind: str, provenance: list[str]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "linear_map",
        "map_kind": kind,
        "provenance": provenance,
        "matrix": [[_pair(z) for z in row] for row in np.asarray(matrix)],
    }


def dumps(obj: CDElement | HermMatrix) -> str:
    return json.dumps(encode_element(obj), indent=1)


def loads(text: str) -> CDElement | HermMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return decode_element(doc)


def save(obj: CDElement | HermMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
        fh.write("\n")


def load(path) -> CDElement | HermMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())
