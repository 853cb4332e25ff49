"""Deterministic SVG figures of splitting polytopes.

All geometry is computed with exact rationals; numbers are converted
to decimal (12 significant digits) only when written into the SVG
text.  Given a prime, the figure gains a legend with the carry data
and a zoomed inset around the truncation of the maximal point, where
the candidate points and the epsilon segment actually become visible.
"""

from __future__ import annotations

from fractions import Fraction

from .base_p import carry_profile, truncate
from .engine import Binomial
from .polytope import (
    Axis,
    Point2,
    SplittingMatrix,
    build,
    contains_lower_interior,
    maximal_point,
    ray_max_delta,
    vertices,
)

_FILL = "#d7e7f5"
_EDGE = "#1f4e79"
_ETA = "#c0392b"
_CAND = "#7d3c98"
_EPS = "#1e8449"
_GRID = "#8a8a8a"


def _fmt(x: Fraction | int | float) -> str:
    return f"{float(x):.12g}"


class _Panel:
    """Maps an exact world window onto a pixel rectangle (y flipped)."""

    def __init__(self, wx0, wy0, wx1, wy1, px, py, size):
        self.wx0, self.wy0 = Fraction(wx0), Fraction(wy0)
        self.wx1, self.wy1 = Fraction(wx1), Fraction(wy1)
        self.px, self.py, self.size = px, py, size

    def x(self, wx: Fraction) -> str:
        t = (Fraction(wx) - self.wx0) / (self.wx1 - self.wx0)
        return _fmt(self.px + t * self.size)

    def y(self, wy: Fraction) -> str:
        t = (Fraction(wy) - self.wy0) / (self.wy1 - self.wy0)
        return _fmt(self.py + self.size - t * self.size)

    def inside(self, pt: Point2) -> bool:
        return (
            self.wx0 <= pt.s1 <= self.wx1 and self.wy0 <= pt.s2 <= self.wy1
        )

    def clip_line(self, a: int, b: int, c: int = 1) -> tuple[Point2, Point2] | None:
        """Segment of a*x + b*y = c inside the window, if any."""
        hits: set[Point2] = set()
        if b != 0:
            for wx in (self.wx0, self.wx1):
                wy = Fraction(c - a * wx, b)
                if self.wy0 <= wy <= self.wy1:
                    hits.add(Point2(Fraction(wx), wy))
        if a != 0:
            for wy in (self.wy0, self.wy1):
                wx = Fraction(c - b * wy, a)
                if self.wx0 <= wx <= self.wx1:
                    hits.add(Point2(wx, Fraction(wy)))
        if len(hits) < 2:
            return None
        ordered = sorted(hits)
        return ordered[0], ordered[-1]

    def line(self, p1: Point2, p2: Point2, stroke: str, width="1.5", dash=None) -> str:
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        return (
            f'<line x1="{self.x(p1.s1)}" y1="{self.y(p1.s2)}" '
            f'x2="{self.x(p2.s1)}" y2="{self.y(p2.s2)}" '
            f'stroke="{stroke}" stroke-width="{width}"{dash_attr} />'
        )

    def dot(self, pt: Point2, color: str, r="4") -> str:
        return (
            f'<circle cx="{self.x(pt.s1)}" cy="{self.y(pt.s2)}" r="{r}" '
            f'fill="{color}" />'
        )

    def text(self, pt: Point2, content: str, dx=6, dy=-6, size="11") -> str:
        x = float(self.x(pt.s1)) + dx
        y = float(self.y(pt.s2)) + dy
        return (
            f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{size}" '
            f'font-family="monospace">{content}</text>'
        )


def _boundary_ring(verts: tuple[Point2, ...]) -> list[Point2]:
    origin = Point2(Fraction(0), Fraction(0))
    others = sorted(
        (v for v in verts if v != origin), key=lambda v: (v.s1, -v.s2)
    )
    return [origin, *others]


def _axis_extents(matrix: SplittingMatrix) -> tuple[Fraction, Fraction]:
    ext1 = min(Fraction(1, a) for a, _ in matrix.rows if a > 0)
    ext2 = min(Fraction(1, b) for _, b in matrix.rows if b > 0)
    return ext1, ext2


def polytope_figure(
    g: Binomial, prime: int | None = None, level: int | None = None
) -> str:
    matrix = build(g.a, g.b)
    verts = vertices(matrix)
    mp = maximal_point(matrix)

    ext1, ext2 = _axis_extents(matrix)
    m = max(ext1, ext2) * Fraction(11, 10)
    main = _Panel(0, 0, m, m, 70, 50, 470)

    carry = None
    trunc_pt = None
    cands: list[tuple[Point2, Axis]] = []
    eps = None
    eps_ray: tuple[Point2, Axis] | None = None
    if prime is not None and mp is not None and mp.sum <= 1:
        carry = carry_profile(mp.point.s1, mp.point.s2, prime)
        if not carry.carry_free and carry.d is not None:
            d = carry.d
            step = Fraction(1, prime**d)
            t1 = truncate(mp.point.s1, prime, d)
            t2 = truncate(mp.point.s2, prime, d)
            trunc_pt = Point2(t1, t2)
            cands = [
                (Point2(t1 + step, t2), Axis.AXIS2),
                (Point2(t1, t2 + step), Axis.AXIS1),
            ]
            if any(contains_lower_interior(matrix, c) for c, _ in cands):
                best = None
                for cand, axis in cands:
                    if not contains_lower_interior(matrix, cand):
                        continue
                    delta = ray_max_delta(matrix, cand, axis)
                    if delta is not None and (best is None or delta > best):
                        best = delta
                        eps_ray = (cand, axis)
                eps = best

    with_inset = trunc_pt is not None
    width = 1020 if with_inset else 620
    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="600" '
        f'viewBox="0 0 {width} 600">'
    )
    out.append('<rect width="100%" height="100%" fill="white" />')
    out.append(
        '<text x="70" y="30" font-size="14" font-family="monospace">'
        f"splitting polytope of {_escape(_input_text(g))}</text>"
    )
    _draw_panel(out, main, matrix, verts, mp, trunc_pt, cands, eps, eps_ray, labels=True)
    if mp is not None and level is not None and prime is not None:
        lv = Point2(
            truncate(mp.point.s1, prime, level), truncate(mp.point.s2, prime, level)
        )
        out.append(main.dot(lv, _GRID, r="3"))
        out.append(main.text(lv, f"trunc level {level}", dx=6, dy=12))

    out.extend(_legend(g, matrix, mp, prime, carry, eps))

    if with_inset and trunc_pt is not None:
        d = carry.d  # type: ignore[union-attr]
        step = Fraction(1, prime**d)  # type: ignore[operator]
        pad = step / 2
        inset = _Panel(
            trunc_pt.s1 - pad,
            trunc_pt.s2 - pad,
            trunc_pt.s1 + 2 * step + pad,
            trunc_pt.s2 + 2 * step + pad,
            640,
            120,
            330,
        )
        out.append(
            '<rect x="640" y="120" width="330" height="330" fill="none" '
            f'stroke="{_GRID}" stroke-width="1" />'
        )
        out.append(
            '<text x="640" y="110" font-size="12" font-family="monospace">'
            "zoom near the truncated maximal point</text>"
        )
        _draw_panel(
            out, inset, matrix, verts, mp, trunc_pt, cands, eps, eps_ray, labels=False
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _input_text(g: Binomial) -> str:
    from .parsing import binomial_to_text

    return binomial_to_text(g)


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _draw_panel(
    out: list[str],
    panel: _Panel,
    matrix: SplittingMatrix,
    verts: tuple[Point2, ...],
    mp,
    trunc_pt: Point2 | None,
    cands: list[tuple[Point2, Axis]],
    eps: Fraction | None,
    eps_ray: tuple[Point2, Axis] | None,
    labels: bool,
) -> None:
    if labels:
        ring = _boundary_ring(verts)
        points = " ".join(f"{panel.x(v.s1)},{panel.y(v.s2)}" for v in ring)
        out.append(f'<polygon points="{points}" fill="{_FILL}" stroke="none" />')
        zero = Fraction(0)
        out.append(panel.line(Point2(zero, panel.wy0), Point2(zero, panel.wy1), "black", "1"))
        out.append(panel.line(Point2(panel.wx0, zero), Point2(panel.wx1, zero), "black", "1"))
        out.append(panel.text(Point2(panel.wx1, zero), "s1", dx=-14, dy=16))
        out.append(panel.text(Point2(zero, panel.wy1), "s2", dx=-16, dy=4))
    for a, b in matrix.rows:
        seg = panel.clip_line(a, b)
        if seg:
            out.append(panel.line(seg[0], seg[1], _EDGE))
            if labels:
                out.append(
                    panel.text(seg[0], f"{a} s1 + {b} s2 = 1", dx=4, dy=-4, size="10")
                )
    if mp is not None:
        total = mp.sum
        # the sum line s1 + s2 = |eta|, clipped exactly to the window
        seg = panel.clip_line(total.denominator, total.denominator, total.numerator)
        if seg:
            out.append(panel.line(seg[0], seg[1], _ETA, "1.2", dash="6 4"))
            if labels:
                out.append(
                    panel.text(seg[0], f"s1 + s2 = {total}", dx=4, dy=14, size="10")
                )
        if labels:
            eta = mp.point
            out.append(
                panel.line(Point2(Fraction(0), eta.s2), eta, _GRID, "1", dash="3 3")
            )
            out.append(
                panel.line(Point2(eta.s1, Fraction(0)), eta, _GRID, "1", dash="3 3")
            )
            out.append(panel.text(Point2(eta.s1 / 4, eta.s2 * Fraction(3, 2)), "upper-left", size="10"))
            out.append(panel.text(Point2(eta.s1 * Fraction(5, 4), eta.s2 / 3), "star", size="10"))
            out.append(panel.text(Point2(eta.s1 / 3, eta.s2 / 3), "below", size="10"))
    for v in verts:
        if panel.inside(v):
            out.append(panel.dot(v, _EDGE, r="3"))
            if labels:
                out.append(panel.text(v, f"({v.s1}, {v.s2})", size="10"))
    if mp is not None and panel.inside(mp.point):
        out.append(panel.dot(mp.point, _ETA, r="4"))
        if labels:
            out.append(panel.text(mp.point, f"eta = ({mp.point.s1}, {mp.point.s2})"))
    if trunc_pt is not None and panel.inside(trunc_pt):
        out.append(panel.dot(trunc_pt, _GRID, r="3"))
        if not labels:
            out.append(panel.text(trunc_pt, "trunc(eta)", size="10"))
    for cand, _axis in cands:
        if panel.inside(cand):
            out.append(panel.dot(cand, _CAND, r="3"))
    if not labels and cands:
        for cand, axis in cands:
            if panel.inside(cand):
                tag = "right candidate" if axis is Axis.AXIS2 else "upper candidate"
                out.append(panel.text(cand, tag, size="10"))
    if eps is not None and eps_ray is not None:
        base, axis = eps_ray
        if axis is Axis.AXIS2:
            tip = Point2(base.s1, base.s2 + eps)
        else:
            tip = Point2(base.s1 + eps, base.s2)
        if panel.inside(base) and panel.inside(tip):
            out.append(panel.line(base, tip, _EPS, "3"))
            if not labels:
                out.append(panel.text(tip, f"epsilon = {eps}", dx=8, dy=0, size="10"))


def _legend(
    g: Binomial,
    matrix: SplittingMatrix,
    mp,
    prime: int | None,
    carry,
    eps: Fraction | None,
) -> list[str]:
    lines = [f"rows: {' '.join(f'({a},{b})' for a, b in matrix.rows)}"]
    if mp is None:
        lines.append("maximal face is an edge (equal-exponent variable)")
    else:
        lines.append(f"eta = ({mp.point.s1}, {mp.point.s2})")
        lines.append(f"|eta| = {mp.sum}")
    if prime is not None:
        lines.append(f"p = {prime}")
        if carry is not None:
            if carry.carry_free:
                lines.append("carry-free: threshold equals |eta|")
            else:
                lines.append(f"L = {carry.L}, d = {carry.d}")
                if eps is not None:
                    lines.append(f"epsilon = {eps}")
        elif mp is not None and mp.sum > 1:
            lines.append("|eta| > 1: threshold equals 1")
    out = []
    base_y = 590 - 14 * len(lines)
    for i, content in enumerate(lines):
        out.append(
            f'<text x="70" y="{base_y + 14 * i}" font-size="11" '
            f'font-family="monospace">{_escape(content)}</text>'
        )
    return out
