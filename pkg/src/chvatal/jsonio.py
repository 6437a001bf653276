"""Canonical JSON form of a family.

``{"vertices": ["a", "b", "c"], "faces": [["a", "b"], ["b", "c"]]}`` where
every face label appears in ``vertices``; faces are unique and nonempty.
"""
from __future__ import annotations

import json

from .core import Family, GroundSet
from .errors import ChvatalError, MalformedInput

FAMILY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Family",
    "type": "object",
    "required": ["vertices", "faces"],
    "additionalProperties": False,
    "properties": {
        "vertices": {
            "type": "array",
            "items": {"type": "string", "minLength": 1},
            "uniqueItems": True,
        },
        "faces": {
            "type": "array",
            "uniqueItems": True,
            "items": {
                "type": "array",
                "minItems": 1,
                "uniqueItems": True,
                "items": {"type": "string", "minLength": 1},
            },
        },
    },
}


def family_from_json(doc) -> Family:
    if not isinstance(doc, dict):
        raise MalformedInput("family document must be a JSON object")
    extra = set(doc) - {"vertices", "faces"}
    if extra:
        raise MalformedInput(f"unexpected keys: {sorted(extra)}")
    vertices, faces = doc.get("vertices"), doc.get("faces")
    if not isinstance(vertices, list) or not isinstance(faces, list):
        raise MalformedInput("'vertices' and 'faces' must both be arrays")
    if any(not isinstance(f, list) for f in faces):
        raise MalformedInput("every face must be an array of labels")
    ground = GroundSet(vertices)
    try:
        return Family.from_labels(ground, faces)
    except ChvatalError as exc:
        # unknown labels surface as UnknownVertex; the caller only needs "malformed"
        raise MalformedInput(str(exc)) from exc


def family_to_json(family: Family) -> dict:
    return {"vertices": list(family.ground.labels), "faces": family.label_faces()}


def loads(text: str) -> Family:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc
    return family_from_json(doc)


def dumps(family: Family) -> str:
    return json.dumps(family_to_json(family))
