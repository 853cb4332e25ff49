"""The splitting polytope of a pair of exponent vectors.

For exponent vectors a, b over the same m variables, the splitting
matrix E has rows (a_i, b_i) and the splitting polytope is

    P = { s in R^2 : s >= 0 and E s <= 1 }.

Everything here is exact: points are pairs of Fractions, vertices come
from pairwise line intersections, and all comparisons are rational.
The "lower interior" of P requires every row constraint to hold
strictly; the coordinate inequalities s1, s2 >= 0 may be tight.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple


class Point2(NamedTuple):
    s1: Fraction
    s2: Fraction


@dataclass(frozen=True)
class SplittingMatrix:
    rows: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MaximalPoint:
    """The unique point of P maximizing s1 + s2, with its coordinate sum."""

    point: Point2
    sum: Fraction


class Region(Enum):
    UPPER_LEFT = "upper_left"
    STAR = "star"
    BELOW = "below"


class Axis(Enum):
    AXIS1 = "axis1"
    AXIS2 = "axis2"


def build(a: tuple[int, ...], b: tuple[int, ...]) -> SplittingMatrix:
    """Splitting matrix for exponent vectors a and b."""
    if len(a) != len(b) or not a:
        raise ValueError("exponent vectors must have equal positive length")
    if any(x < 0 for x in a) or any(x < 0 for x in b):
        raise ValueError("exponents must be nonnegative")
    if a == b:
        raise ValueError("monomials not distinct")
    rows = tuple(zip(a, b))
    if any(row == (0, 0) for row in rows):
        raise ValueError("variable appears in neither monomial")
    return SplittingMatrix(rows)


def contains(matrix: SplittingMatrix, s: Point2) -> bool:
    """Membership in P (all constraints weak)."""
    if s.s1 < 0 or s.s2 < 0:
        return False
    return all(a * s.s1 + b * s.s2 <= 1 for a, b in matrix.rows)


def contains_lower_interior(matrix: SplittingMatrix, s: Point2) -> bool:
    """Membership with every row constraint strict; s >= 0 may be tight."""
    if s.s1 < 0 or s.s2 < 0:
        return False
    return all(a * s.s1 + b * s.s2 < 1 for a, b in matrix.rows)


def _is_bounded(matrix: SplittingMatrix) -> bool:
    return any(a > 0 for a, _ in matrix.rows) and any(b > 0 for _, b in matrix.rows)


def vertices(matrix: SplittingMatrix) -> tuple[Point2, ...]:
    """All vertices of P, sorted by s1 then s2.

    Candidates are intersections of pairs drawn from the constraint
    lines a_i x + b_i y = 1 together with the axes x = 0 and y = 0;
    feasible candidates are vertices and every vertex arises this way.
    """
    lines = [(Fraction(a), Fraction(b), Fraction(1)) for a, b in matrix.rows]
    lines.append((Fraction(1), Fraction(0), Fraction(0)))
    lines.append((Fraction(0), Fraction(1), Fraction(0)))
    found: set[Point2] = set()
    for i in range(len(lines)):
        a1, b1, c1 = lines[i]
        for j in range(i + 1, len(lines)):
            a2, b2, c2 = lines[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = (c1 * b2 - c2 * b1) / det
            y = (a1 * c2 - a2 * c1) / det
            pt = Point2(x, y)
            if contains(matrix, pt):
                found.add(pt)
    return tuple(sorted(found))


def maximal_point(matrix: SplittingMatrix) -> MaximalPoint | None:
    """The unique maximizer of s1 + s2 over P, or None when the
    maximal face is an edge rather than a single point.

    A row with a_i = b_i makes the objective constant along that
    constraint, which is the only way uniqueness can fail.
    """
    if not _is_bounded(matrix):
        raise ValueError("splitting polytope is unbounded")
    verts = vertices(matrix)
    best = max(v.s1 + v.s2 for v in verts)
    argmax = [v for v in verts if v.s1 + v.s2 == best]
    if len(argmax) != 1:
        return None
    return MaximalPoint(argmax[0], best)


def classify_region(matrix: SplittingMatrix, eta: Point2, s: Point2) -> Region:
    """Place a point of P in the three-piece decomposition at eta.

    Points with s2 >= eta2 are UPPER_LEFT (eta itself included), the
    remaining points with s1 >= eta1 are STAR, everything else BELOW.
    """
    if not contains(matrix, s):
        raise ValueError("point outside polytope")
    if s.s2 >= eta.s2:
        return Region.UPPER_LEFT
    if s.s1 >= eta.s1:
        return Region.STAR
    return Region.BELOW


def ray_max_delta(
    matrix: SplittingMatrix, base: Point2, direction: Axis
) -> Fraction | None:
    """Largest delta >= 0 with base + delta*axis still in P.

    Returns None (infeasible) when the base point itself lies outside
    P; constraint rows only grow along an axis direction, so no
    positive delta can recover feasibility.
    """
    if not contains(matrix, base):
        return None
    coord = 0 if direction is Axis.AXIS1 else 1
    bounds = []
    for row in matrix.rows:
        if row[coord] > 0:
            slack = 1 - row[0] * base.s1 - row[1] * base.s2
            bounds.append(Fraction(slack, row[coord]))
    if not bounds:
        raise ValueError("ray is unbounded inside the polytope")
    return min(bounds)


def segment_meets_lower_interior(
    matrix: SplittingMatrix, total: Fraction, min_s2: Fraction
) -> bool:
    """Does some point with coordinate sum `total` and second
    coordinate at least `min_s2` lie in the lower interior of P?

    Parametrizing by t = s2, the point (total - t, t) must satisfy
    t >= max(min_s2, 0), t <= total, and each row strictly.  Rows with
    b > a give strict upper bounds on t, rows with b < a strict lower
    bounds, and rows with a = b are independent of t.  Over the
    rationals the mixed open/closed interval is nonempty iff every
    lower bound sits properly below every upper bound.
    """
    if total < 0:
        raise ValueError("coordinate sum must be nonnegative")
    lo_closed = max(min_s2, Fraction(0))
    hi_closed = total
    lo_open: Fraction | None = None
    hi_open: Fraction | None = None
    for a, b in matrix.rows:
        if a == b:
            if a * total >= 1:
                return False
            continue
        bound = Fraction(1 - a * total, b - a)
        if b > a:
            hi_open = bound if hi_open is None else min(hi_open, bound)
        else:
            lo_open = bound if lo_open is None else max(lo_open, bound)
    if lo_closed > hi_closed:
        return False
    if hi_open is not None and lo_closed >= hi_open:
        return False
    if lo_open is not None and lo_open >= hi_closed:
        return False
    if lo_open is not None and hi_open is not None and lo_open >= hi_open:
        return False
    return True


def matrix_to_json(matrix: SplittingMatrix) -> dict:
    return {"rows": [[a, b] for a, b in matrix.rows]}


def matrix_from_json(data: dict) -> SplittingMatrix:
    rows = data["rows"]
    a = tuple(int(r[0]) for r in rows)
    b = tuple(int(r[1]) for r in rows)
    return build(a, b)


def point_to_json(pt: Point2) -> list[str]:
    return [str(pt.s1), str(pt.s2)]
