"""Deterministic SVG pictures of a base shape and its translates.

Coordinates are printed as rounded decimals for display only.
"""

from __future__ import annotations

from .family import TranslateFamily, ValidationReport
from .geom import Point, SimplePolygon
from .star import SegmentStar

STYLE = """
polygon, line { vector-effect: non-scaling-stroke; }
.base { fill: #9ecae1; stroke: #08519c; stroke-width: 1.5; }
.translate { fill: none; stroke: #333333; stroke-width: 1; }
.violation { fill: #fcbba1; fill-opacity: 0.6; stroke: #cb181d; stroke-width: 2; stroke-dasharray: 4 2; }
.vector { stroke: #31a354; stroke-width: 0.8; marker-end: url(#arrow); }
""".strip()


def _f(q) -> str:
    s = f"{float(q):.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _pts(points) -> str:
    # SVG y grows downward; flip so pictures match the usual orientation
    return " ".join(f"{_f(p.x)},{_f(-p.y)}" for p in points)


def _shape_elements(shape, cls: str) -> list[str]:
    if isinstance(shape, SimplePolygon):
        return [f'<polygon class="{cls}" points="{_pts(shape.vertices)}"/>']
    lines = "".join(f'<line x1="{_f(shape.center.x)}" y1="{_f(-shape.center.y)}" '
                    f'x2="{_f(e.x)}" y2="{_f(-e.y)}"/>' for e in shape.arm_endpoints)
    return [f'<g class="{cls}">{lines}</g>']


def _points_of(shape) -> tuple[Point, ...]:
    return shape.vertices if isinstance(shape, SimplePolygon) else shape.points()


def render_svg(family: TranslateFamily, report: ValidationReport | None = None,
               show_vectors: bool = False, size: int = 480) -> str:
    """SVG with the base filled and every translate outlined.

    Members named in ``report`` violations are drawn in the violation style.
    """
    base = family.base
    bad = set()
    if report is not None:
        for v in report.violations:
            bad.add(v.i)
            if v.j is not None:
                bad.add(v.j)
    members = family.members()
    pts = list(_points_of(base))
    for m in members:
        pts.extend(_points_of(m))
    xs = [float(p.x) for p in pts]
    ys = [-float(p.y) for p in pts]
    w = max(xs) - min(xs) or 1.0
    h = max(ys) - min(ys) or 1.0
    mx, my = 0.05 * w, 0.05 * h
    view = f"{_f(min(xs) - mx)} {_f(min(ys) - my)} {_f(w + 2 * mx)} {_f(h + 2 * my)}"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="{view}" preserveAspectRatio="xMidYMid meet">',
        f"<style>{STYLE}</style>",
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="4" markerHeight="4" '
        'orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="#31a354"/></marker></defs>',
    ]
    out.extend(_shape_elements(base, "base"))
    for i, m in enumerate(members):
        out.extend(_shape_elements(m, "violation" if i in bad else "translate"))
    if show_vectors:
        for x in family.vectors:
            out.append(f'<line class="vector" x1="0" y1="0" x2="{_f(x.x)}" y2="{_f(-x.y)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
