"""JSON forms of results.

Rationals are emitted as exact integer pairs {"num": ..., "den": ...},
never as decimals.  The schemas at the bottom are published as part of
the package so consumers (and the test suite) can validate outputs.
"""

from __future__ import annotations

from fractions import Fraction

from .base_p import positional_digits
from .engine import Binomial, FptResult
from .oracle import VerificationReport
from .parsing import binomial_to_text


def rational_to_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def result_to_json(
    g: Binomial,
    p: int,
    result: FptResult,
    limit: Fraction,
    verification: VerificationReport | None = None,
) -> dict:
    head, block = positional_digits(result.value, p)
    if result.carry_free:
        level: int | str | None = "inf"
    else:
        level = result.L
    limit_text = str(limit)
    data = {
        "input": binomial_to_text(g),
        "prime": p,
        "case": result.case.value,
        "value": rational_to_json(result.value),
        "value_base_p": {"preperiod": head, "period": block},
        "eta": None
        if result.eta is None
        else [rational_to_json(result.eta.s1), rational_to_json(result.eta.s2)],
        "eta_sum": None if result.eta_sum is None else rational_to_json(result.eta_sum),
        "L": level,
        "d": result.d,
        "epsilon": None if result.epsilon is None else rational_to_json(result.epsilon),
        "monomial_part": None
        if result.monomial_fpt is None
        else rational_to_json(result.monomial_fpt),
        "notes": [
            f"characteristic-zero limit (log canonical threshold) = {limit_text}"
        ],
    }
    if verification is not None:
        data["verification"] = verification.to_json()
    return data


def scan_to_json(
    g: Binomial,
    lo: int,
    hi: int,
    congruence: tuple[int, int] | None,
    limit: Fraction,
    rows: list[tuple[int, FptResult]],
) -> dict:
    return {
        "input": binomial_to_text(g),
        "prime_range": [lo, hi],
        "filter": None if congruence is None else {"mod": congruence[0], "residue": congruence[1]},
        "limit": rational_to_json(limit),
        "rows": [
            {"p": p, "value": rational_to_json(r.value), "case": r.case.value}
            for p, r in rows
        ],
        "limit_match_count": sum(1 for _, r in rows if r.value == limit),
    }


def oracle_to_json(
    g: Binomial | None,
    p: int,
    e: int,
    semigroup: int | None,
    naive: int | None,
    source: str | None = None,
) -> dict:
    match = None
    if semigroup is not None and naive is not None:
        match = semigroup == naive
    return {
        "input": source if g is None else binomial_to_text(g),
        "prime": p,
        "level": e,
        "semigroup_nu": semigroup,
        "naive_nu": naive,
        "match": match,
    }


_RATIONAL = {
    "type": "object",
    "properties": {"num": {"type": "integer"}, "den": {"type": "integer", "minimum": 1}},
    "required": ["num", "den"],
    "additionalProperties": False,
}

_DIGITS = {"type": "array", "items": {"type": "integer", "minimum": 0}}

VERIFICATION_SCHEMA = {
    "type": "object",
    "properties": {
        "predicted_nu": {"type": "integer", "minimum": 0},
        "semigroup_nu": {"type": "integer", "minimum": 0},
        "naive_nu": {"type": ["integer", "null"], "minimum": 0},
        "match": {"type": "boolean"},
    },
    "required": ["predicted_nu", "semigroup_nu", "naive_nu", "match"],
    "additionalProperties": False,
}

COMPUTE_SCHEMA = {
    "type": "object",
    "properties": {
        "input": {"type": "string"},
        "prime": {"type": "integer", "minimum": 2},
        "case": {
            "enum": [
                "UNIT",
                "MONOMIAL_ONLY",
                "STANDARD_GT1",
                "CARRY_FREE",
                "TRUNCATED",
                "TRUNCATED_PLUS_EPSILON",
                "MIN_COMBINED",
            ]
        },
        "value": _RATIONAL,
        "value_base_p": {
            "type": "object",
            "properties": {"preperiod": _DIGITS, "period": _DIGITS},
            "required": ["preperiod", "period"],
            "additionalProperties": False,
        },
        "eta": {
            "type": ["array", "null"],
            "items": _RATIONAL,
            "minItems": 2,
            "maxItems": 2,
        },
        "eta_sum": {"oneOf": [_RATIONAL, {"type": "null"}]},
        "L": {"oneOf": [{"type": "integer", "minimum": 0}, {"enum": ["inf", None]}]},
        "d": {"type": ["integer", "null"], "minimum": 1},
        "epsilon": {"oneOf": [_RATIONAL, {"type": "null"}]},
        "monomial_part": {"oneOf": [_RATIONAL, {"type": "null"}]},
        "notes": {"type": "array", "items": {"type": "string"}},
        "verification": VERIFICATION_SCHEMA,
    },
    "required": [
        "input",
        "prime",
        "case",
        "value",
        "value_base_p",
        "eta",
        "eta_sum",
        "L",
        "d",
        "epsilon",
        "monomial_part",
        "notes",
    ],
    "additionalProperties": False,
}

SCAN_SCHEMA = {
    "type": "object",
    "properties": {
        "input": {"type": "string"},
        "prime_range": {
            "type": "array",
            "items": {"type": "integer"},
            "minItems": 2,
            "maxItems": 2,
        },
        "filter": {
            "type": ["object", "null"],
            "properties": {"mod": {"type": "integer"}, "residue": {"type": "integer"}},
            "required": ["mod", "residue"],
            "additionalProperties": False,
        },
        "limit": _RATIONAL,
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "p": {"type": "integer", "minimum": 2},
                    "value": _RATIONAL,
                    "case": {"type": "string"},
                },
                "required": ["p", "value", "case"],
                "additionalProperties": False,
            },
        },
        "limit_match_count": {"type": "integer", "minimum": 0},
    },
    "required": ["input", "prime_range", "filter", "limit", "rows", "limit_match_count"],
    "additionalProperties": False,
}

ORACLE_SCHEMA = {
    "type": "object",
    "properties": {
        "input": {"type": "string"},
        "prime": {"type": "integer", "minimum": 2},
        "level": {"type": "integer", "minimum": 1},
        "semigroup_nu": {"type": ["integer", "null"], "minimum": 0},
        "naive_nu": {"type": ["integer", "null"], "minimum": 0},
        "match": {"type": ["boolean", "null"]},
    },
    "required": ["input", "prime", "level", "semigroup_nu", "naive_nu", "match"],
    "additionalProperties": False,
}

POLYTOPE_SCHEMA = {
    "type": "object",
    "properties": {
        "rows": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "minItems": 2,
                "maxItems": 2,
            },
            "minItems": 1,
        },
        "vertices": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "string"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "maximal_point": {
            "type": ["array", "null"],
            "items": {"type": "string"},
            "minItems": 2,
            "maxItems": 2,
        },
        "eta_sum": {"type": ["string", "null"]},
    },
    "required": ["rows", "vertices", "maximal_point", "eta_sum"],
    "additionalProperties": False,
}
