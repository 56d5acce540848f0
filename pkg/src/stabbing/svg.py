"""SVG 1.1 rendering of plane instances and solutions."""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape, quoteattr

from .geometry import Instance2D, Line, Solution

MARGIN = 1.0
PIXELS = 600


def _num(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _clip(line: Line, box: tuple[float, float, float, float]) -> tuple[float, float, float, float] | None:
    """Segment of ``line`` inside ``box`` (Liang-Barsky on a parametric form)."""
    x0, y0, x1, y1 = box
    a, b = (float(v) for v in line.direction.normal)
    off = float(line.offset)
    nn = a * a + b * b
    px, py = a * off / nn, b * off / nn
    dx, dy = -b, a
    lo, hi = -float("inf"), float("inf")
    for p, d, low, high in ((px, dx, x0, x1), (py, dy, y0, y1)):
        if d == 0:
            if not low <= p <= high:
                return None
            continue
        t0, t1 = (low - p) / d, (high - p) / d
        if t0 > t1:
            t0, t1 = t1, t0
        lo, hi = max(lo, t0), min(hi, t1)
    if lo > hi:
        return None
    return px + lo * dx, py + lo * dy, px + hi * dx, py + hi * dy


def render_svg(instance: Instance2D, solution: Solution | None = None, title: str | None = None) -> str:
    """Deterministic SVG of the objects (one polygon each) and solution lines.

    World coordinates are used directly with a y flip so the picture matches
    the usual mathematical orientation.
    """
    pts = [v for o in instance.objects for v in o.vertices]
    if pts:
        x0 = float(min(p[0] for p in pts)) - MARGIN
        x1 = float(max(p[0] for p in pts)) + MARGIN
        y0 = float(min(p[1] for p in pts)) - MARGIN
        y1 = float(max(p[1] for p in pts)) + MARGIN
    else:
        x0, y0, x1, y1 = 0.0, 0.0, 1.0, 1.0
    w, h = x1 - x0, y1 - y0
    stroke = max(w, h) / 500
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{PIXELS}" '
        f'height="{_num(PIXELS * h / w)}" viewBox="{_num(x0)} {_num(-y1)} {_num(w)} {_num(h)}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<g transform="scale(1,-1)" stroke-width="{_num(stroke)}">')
    for o in instance.objects:
        coords = " ".join(f"{_num(float(x))},{_num(float(y))}" for x, y in o.vertices)
        style = "none" if o.closed else f"{_num(3 * stroke)},{_num(2 * stroke)}"
        out.append(
            f'<polygon points={quoteattr(coords)} fill="#9ecae1" fill-opacity="0.5" stroke="#08519c" '
            f'stroke-dasharray="{style}"/>'
        )
    lines: Sequence[Line] = solution.lines if solution is not None else ()
    for line in lines:
        seg = _clip(line, (x0, y0, x1, y1))
        if seg is None:
            continue
        a, b, c, d = (_num(v) for v in seg)
        out.append(f'<line x1="{a}" y1="{b}" x2="{c}" y2="{d}" stroke="#cb181d"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
