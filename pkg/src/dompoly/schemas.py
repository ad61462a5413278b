"""JSON Schemas for the files and reports this package writes."""

_BIGINT = {"type": "string", "pattern": "^(0|[1-9][0-9]*)$"}

POLYNOMIAL = {
    "type": "object",
    "required": ["n", "coeffs"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 0, "maximum": 64},
        "coeffs": {"type": "array", "items": _BIGINT, "minItems": 1},
    },
}

CLASS_REPORT = {
    "type": "object",
    "required": ["poly", "members", "size"],
    "additionalProperties": False,
    "properties": {
        "poly": {"type": "array", "items": _BIGINT},
        "members": {"type": "array", "items": {"type": "string"}, "uniqueItems": True},
        "size": {"type": "integer", "minimum": 1},
    },
}

ATLAS = {
    "type": "object",
    "required": ["order", "total", "classes"],
    "additionalProperties": False,
    "properties": {
        "order": {"type": "integer", "minimum": 0},
        "total": {"type": "integer", "minimum": 0},
        "classes": {"type": "array", "items": CLASS_REPORT},
    },
}

KK_REPORT = {
    "type": "object",
    "required": ["family_size", "k", "x_solved", "shadow_size", "bound", "bound_met", "equality", "clique_witness"],
    "additionalProperties": False,
    "properties": {
        "family_size": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 1},
        "x_solved": {"type": "number"},
        "shadow_size": {"type": "integer", "minimum": 0},
        "bound": {"type": "number"},
        "bound_met": {"type": "boolean"},
        "equality": {"type": "boolean"},
        "clique_witness": {"type": ["array", "null"], "items": {"type": "integer", "minimum": 0}},
    },
}

VERIFICATION_OUTCOME = {
    "type": "object",
    "required": ["claim_id", "parameters", "verdict", "evidence"],
    "additionalProperties": False,
    "properties": {
        "claim_id": {"type": "string"},
        "parameters": {"type": "array", "items": {"type": "integer"}},
        "verdict": {"enum": ["pass", "fail"]},
        "evidence": {"type": "object"},
    },
}

SET_FAMILY = {
    "type": "object",
    "required": ["n", "k", "sets"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 0, "maximum": 64},
        "k": {"type": "integer", "minimum": 0},
        "sets": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
    },
}
