"""Reading complexes, graphs and power tables from JSON or family specs."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

import jsonschema

from .complex import (
    FAMILY_PARAMS,
    ComplexError,
    Graph,
    SimplicialComplex,
    build_complex,
    build_graph,
    edge_ideal_complex,
    named_family,
)
from .limits import PowerTable, TableError


class InputError(ValueError):
    def __init__(self, message: str, pointer: str = ""):
        super().__init__(message)
        self.pointer = pointer


_POS_INT = {"type": "integer", "minimum": 1}
_EXACT = {"type": ["string", "integer"], "pattern": r"^-?\d+(/\d+)?$"}

SCHEMAS = {
    "complex": {
        "type": "object",
        "required": ["vertices", "facets"],
        "properties": {
            "vertices": _POS_INT,
            "facets": {"type": "array", "minItems": 1, "items": {"type": "array", "items": _POS_INT}},
        },
    },
    "graph": {
        "type": "object",
        "required": ["vertices", "edges"],
        "properties": {
            "vertices": _POS_INT,
            "edges": {
                "type": "array",
                "items": {"type": "array", "items": _POS_INT, "minItems": 2, "maxItems": 2},
            },
            "as": {"enum": ["edge_ideal"]},
        },
    },
    "family": {
        "type": "object",
        "required": ["family"],
        "properties": {"family": {"type": "string"}},
        "additionalProperties": _POS_INT,
    },
    "power_table": {
        "type": "object",
        "required": ["d", "r", "e0", "ehk"],
        "properties": {
            "d": _POS_INT,
            "r": {"type": "integer", "minimum": 0},
            "e0": _EXACT,
            "ehk": {
                "type": "object",
                "propertyNames": {"pattern": r"^[1-9]\d*$"},
                "additionalProperties": _EXACT,
            },
            "assumptions": {"type": "array", "items": {"type": "string"}},
        },
    },
}

ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete_graph",
    "complete_graph": "complete_graph",
    "bipartite": "complete_bipartite",
    "complete_bipartite": "complete_bipartite",
    "simplex": "simplex",
}

Parsed = Union[SimplicialComplex, Graph, PowerTable]


def _validate(doc: Any, kind: str) -> None:
    validator = jsonschema.Draft202012Validator(SCHEMAS[kind])
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        pointer = "".join(f"/{p}" for p in err.absolute_path) or "/"
        raise InputError(err.message, pointer)


def parse_family(spec: str) -> SimplicialComplex:
    """Parse ``name:p1,p2`` (e.g. ``cycle:5``, ``bipartite:2,3``)."""
    name, sep, params = spec.partition(":")
    kind = ALIASES.get(name.strip())
    if kind is None:
        raise InputError(f"unknown family {name!r}; choose from {', '.join(sorted(ALIASES))}")
    try:
        values = [int(p) for p in params.split(",")] if sep and params.strip() else []
    except ValueError:
        raise InputError(f"family parameters must be integers: {params!r}") from None
    try:
        return named_family(kind, *values)
    except ComplexError as exc:
        raise InputError(str(exc)) from None


def from_document(doc: Any) -> Parsed:
    """Turn a decoded JSON document into a validated domain object."""
    if not isinstance(doc, dict):
        raise InputError("top-level JSON value must be an object", "/")
    try:
        if "family" in doc:
            _validate(doc, "family")
            kind = ALIASES.get(doc["family"])
            if kind is None:
                raise InputError(f"unknown family {doc['family']!r}", "/family")
            names = FAMILY_PARAMS[kind]
            missing = [n for n in names if n not in doc]
            if missing:
                raise InputError(f"family {kind} needs parameter {missing[0]!r}", "/")
            return named_family(kind, *(doc[n] for n in names))
        if "edges" in doc:
            _validate(doc, "graph")
            g = build_graph(doc["vertices"], doc["edges"])
            return edge_ideal_complex(g) if doc.get("as") == "edge_ideal" else g
        if "facets" in doc or "vertices" in doc:
            _validate(doc, "complex")
            return build_complex(doc["vertices"], doc["facets"])
        if "d" in doc:
            _validate(doc, "power_table")
            return PowerTable.from_json(doc)
    except ComplexError as exc:
        raise InputError(str(exc), exc.pointer) from None
    except TableError as exc:
        raise InputError(str(exc), "/ehk") from None
    raise InputError("unrecognised document: expected facets, edges, family or a power table", "/")


def parse_input(source: str | Path) -> Parsed:
    """Read a JSON file, or treat ``source`` as a family spec like ``path:5``."""
    path = Path(source)
    if path.suffix == ".json" or path.exists():
        try:
            doc = json.loads(path.read_text())
        except FileNotFoundError:
            raise InputError(f"no such file: {source}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
        return from_document(doc)
    return parse_family(str(source))


def parse_exponents(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"exponent vector must be comma-separated integers: {text!r}") from None


def exact(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
