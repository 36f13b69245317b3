"""JSON poset and realizer files.

Poset: ``{"elements": [...], "relations": [[x, y], ...], "parts": [[...], ...]}``
with ``parts`` present only for multipartite posets.  Relations may be any
generating set; cover relations are written.
Realizer: ``{"orders": [[...], ...]}``.
"""
from __future__ import annotations

import json
import sys

from .errors import PosetError
from .multipartite import MultipartitePoset, new_multipartite
from .poset import Poset
from .solver import Realizer


class ParseError(PosetError):
    pass


def poset_to_json(obj) -> dict:
    p = obj if isinstance(obj, Poset) else obj.poset
    data = {"elements": list(p.elements), "relations": [list(r) for r in p.cover_relations()]}
    if isinstance(obj, MultipartitePoset):
        data["parts"] = [list(part) for part in obj.parts]
    return data


def poset_from_json(data):
    if not isinstance(data, dict) or "elements" not in data:
        raise ParseError("poset JSON needs an 'elements' list")
    elements = data["elements"]
    relations = data.get("relations", [])
    if not isinstance(elements, list) or not isinstance(relations, list):
        raise ParseError("'elements' and 'relations' must be lists")
    for r in relations:
        if not isinstance(r, (list, tuple)) or len(r) != 2:
            raise ParseError(f"relation {r!r} is not a pair")
    parts = data.get("parts")
    if parts is None:
        return Poset.from_relations(elements, relations)
    flat = [x for part in parts for x in part]
    if sorted(map(str, flat)) != sorted(map(str, elements)):
        raise ParseError("'parts' must partition 'elements'")
    return new_multipartite(parts, relations)


def realizer_from_json(data) -> Realizer:
    if not isinstance(data, dict) or not isinstance(data.get("orders"), list):
        raise ParseError("realizer JSON needs an 'orders' list")
    return Realizer.from_json(data)


def read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def load_poset(path: str):
    return poset_from_json(read_json(path))


def load_realizer(path: str) -> Realizer:
    return realizer_from_json(read_json(path))
