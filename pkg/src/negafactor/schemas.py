"""JSON schemas for the machine-readable outputs."""

_COEFF = {"anyOf": [{"type": "integer", "minimum": 0}, {"type": "array", "items": {"type": "integer", "minimum": 0}}]}

POLY = {
    "type": "object",
    "properties": {"coeffs": {"type": "array", "items": _COEFF}},
    "required": ["coeffs"],
    "additionalProperties": False,
}

FACTOR_REPORT = {
    "type": "object",
    "properties": {
        "q": {"type": "integer"},
        "n": {"type": "integer", "minimum": 1},
        "s": {"type": "integer", "minimum": 0},
        "i": {"type": "integer", "minimum": 0},
        "nprime": {"type": "integer", "minimum": 1},
        "beta": {"type": "integer", "minimum": 3},
        "lambda": {"type": "integer", "minimum": 0},
        "branch": {"enum": ["I.i.a", "I.i.b", "I.i.c", "I.ii.a", "I.ii.b", "I.ii.c", "II.i", "II.ii"]},
        "count": {"type": "integer", "minimum": 1},
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"poly": POLY, "mult": {"type": "integer", "minimum": 1}},
                "required": ["poly", "mult"],
            },
        },
    },
    "required": ["q", "n", "s", "i", "nprime", "beta", "lambda", "branch", "count", "factors"],
}

CODE = {
    "type": "object",
    "properties": {"n": {"type": "integer"}, "generator": POLY, "dimension": {"type": "integer", "minimum": 0}},
    "required": ["n", "generator", "dimension"],
}

CODE_FAMILY = {
    "type": "object",
    "properties": {
        "k": {"type": "integer"},
        "count": {"type": "string", "pattern": "^[0-9]+$"},
        "truncated": {"type": "boolean"},
        "codes": {"type": "array", "items": CODE},
    },
    "required": ["k", "count", "truncated"],
}

COSETS = {
    "type": "object",
    "properties": {
        "all": {"type": "array", "items": {"type": "integer"}},
        "odd": {"type": "array", "items": {"type": "integer"}},
        "even": {"type": "array", "items": {"type": "integer"}},
    },
    "required": ["all", "odd", "even"],
}

ERROR = {
    "type": "object",
    "properties": {"error": {"type": "string"}, "message": {"type": "string"}},
    "required": ["error", "message"],
}
