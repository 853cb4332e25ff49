"""Exact F-pure thresholds of binomial hypersurfaces over prime fields."""

from .base_p import (
    CarryProfile,
    DigitExpansion,
    adds_without_carrying,
    carry_profile,
    digit,
    expand,
    multinomial_nonzero,
    render_positional,
    scaled_truncation,
    tail,
    truncate,
)
from .engine import (
    Binomial,
    Factorization,
    FptCase,
    FptResult,
    core_fpt,
    factor,
    fpt,
    fpt_limit,
    fpt_truncation,
    monomial_fpt,
)
from .oracle import (
    BudgetExceeded,
    NuQuery,
    VerificationReport,
    nu_monomial,
    nu_naive,
    nu_semigroup,
    verify,
)
from .parsing import ParseError, binomial_to_text, parse, parse_monomial
from .polytope import (
    Axis,
    MaximalPoint,
    Point2,
    Region,
    SplittingMatrix,
    build,
    classify_region,
    contains,
    contains_lower_interior,
    maximal_point,
    ray_max_delta,
    segment_meets_lower_interior,
    vertices,
)
from .rationals import Rational, format_rational, parse_rational, reduce, scale_floor_pow

__all__ = [
    "Axis",
    "Binomial",
    "BudgetExceeded",
    "CarryProfile",
    "DigitExpansion",
    "Factorization",
    "FptCase",
    "FptResult",
    "MaximalPoint",
    "NuQuery",
    "ParseError",
    "Point2",
    "Rational",
    "Region",
    "SplittingMatrix",
    "VerificationReport",
    "adds_without_carrying",
    "binomial_to_text",
    "build",
    "carry_profile",
    "classify_region",
    "contains",
    "contains_lower_interior",
    "core_fpt",
    "digit",
    "expand",
    "factor",
    "format_rational",
    "fpt",
    "fpt_limit",
    "fpt_truncation",
    "maximal_point",
    "monomial_fpt",
    "multinomial_nonzero",
    "nu_monomial",
    "nu_naive",
    "nu_semigroup",
    "parse",
    "parse_monomial",
    "parse_rational",
    "ray_max_delta",
    "reduce",
    "render_positional",
    "scale_floor_pow",
    "scaled_truncation",
    "segment_meets_lower_interior",
    "tail",
    "truncate",
    "verify",
    "vertices",
]
