"""JSON Schemas (draft 2020-12) for every ``--json`` report, version 1."""

from __future__ import annotations

_STR = {"type": "string"}
_INT = {"type": "integer"}
_NUM = {"type": "number"}
_BOOL = {"type": "boolean"}
_INTS = {"type": "array", "items": _INT}
_PAIR = {"type": "array", "items": _NUM, "minItems": 2, "maxItems": 2}
_GRAPH = {
    "type": "object",
    "required": ["n", "edges"],
    "properties": {"n": _INT, "edges": {"type": "array", "items": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2}}},
}
_NULL_NUM = {"type": ["number", "null"]}
_WIENER = {
    "type": "object",
    "required": ["base", "coeffs", "norm"],
    "properties": {"coeffs": {"type": "object", "additionalProperties": _STR}},
}


def _report(command: str, properties: dict) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": f"gnum {command} report",
        "type": "object",
        "required": ["command", "schema_version", *properties],
        "properties": {"command": {"const": command}, "schema_version": {"const": 1}, **properties},
    }


SCHEMAS: dict[str, dict] = {
    "eval": _report("eval", {"expression": _STR, "kind": {"enum": ["integer", "rational"]}, "value": _STR, "norm": _STR, "terms": {"type": "object"}}),
    "chi": _report("chi", {"expression": _STR, "value": _STR}),
    "fvector": _report("fvector", {"expression": _STR, "fvector": _INTS}),
    "wu": _report("wu", {"expression": _STR, "k": _INT, "value": _INT}),
    "betti": _report("betti", {"expression": _STR, "betti": _INTS}),
    "poincare": _report("poincare", {"expression": _STR, "coefficients": _INTS, "polynomial": _STR}),
    "zeta": _report("zeta", {"expression": _STR, "s": _PAIR, "value": _PAIR}),
    "curvature": _report(
        "curvature",
        {"graph": _GRAPH, "curvatures": {"type": "array", "items": _STR}, "sum": _STR, "euler_characteristic": _INT},
    ),
    "factor": _report("factor", {"graph": _GRAPH, "factors": {"type": "array", "items": _GRAPH}, "names": {"type": "array", "items": _STR}}),
    "certify": _report(
        "certify",
        {
            "connected": _BOOL,
            "verdict": {"enum": ["prime", "composite", "unknown", "unit"]},
            "reason": _STR,
            "factors": {"type": "array"},
        },
    ),
    "sieve": _report(
        "sieve",
        {
            "n": _INT,
            "classes": _INT,
            "connected": _INT,
            "primes": _INT,
            "composite_count": _INT,
            "composites": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["certificate", "factors", "graph"],
                    "properties": {"certificate": _STR, "factors": {"type": "array", "items": _STR}, "graph": _GRAPH},
                },
            },
            "composite_classes_per_labelled_graph": _NUM,
            "composite_fraction_classes": _NUM,
            "composite_fraction_labelled": _NUM,
            "bound": _NUM,
            "below_bound": _BOOL,
        },
    ),
    "progression": _report(
        "progression",
        {
            "a": _STR,
            "g": _STR,
            "n_max": _INT,
            "rows": {
                "type": "array",
                "items": {"type": "object", "required": ["n", "element", "verdict", "reason", "factors"]},
            },
            "composites": _INTS,
            "dirichlet": {"type": "array", "items": {"type": "object", "required": ["functional", "applies"]}},
        },
    ),
    "series": _report(
        "series",
        {
            "expression": _STR,
            "mode": {"enum": ["exact", "wiener"]},
            "series": _STR,
            "truncation": _INT,
            "argument_norm": _NUM,
            "tail_bound": _NUM,
            "value": {"type": "object"},
            "value_norm": {"type": ["string", "number"]},
        },
    ),
    "invert": _report(
        "invert",
        {
            "expression": _STR,
            "element": _WIENER,
            "invertible": {"type": ["boolean", "null"]},
            "inverse": {"oneOf": [_WIENER, {"type": "null"}]},
            "residual_norm": _NULL_NUM,
            "witness": {"oneOf": [_PAIR, {"type": "null"}]},
            "witness_modulus": _NULL_NUM,
            "method": _STR,
        },
    ),
    "audit-multiplicativity": _report(
        "audit-multiplicativity",
        {
            "graphs": {"type": "array", "items": _STR},
            "reports": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["functional", "product_kind", "pairs_checked", "violations"],
                    "properties": {"pairs_checked": _INT, "violations": {"type": "array"}},
                },
            },
        },
    ),
    "capacity": _report(
        "capacity",
        {
            "graph": _GRAPH,
            "powers": {"type": "array", "items": {"type": "object", "required": ["k", "alpha", "bound"]}},
            "lower_bound": _NUM,
        },
    ),
    "kunneth": _report(
        "kunneth",
        {"a": _STR, "b": _STR, "product": _STR, "coefficients": _INTS, "equal": _BOOL, "harmonic": {"type": "array"}},
    ),
}
