"""SVG drawings of type-B partitions in the linear and cyclic styles.

Geometry is fixed (no auto-scaling) and all coordinates are printed with two
decimals, so identical input gives byte-identical files.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import IoError
from .partition import TypeBPartition, element_at, ground_set, linear_arcs, position

SPACING = 40.0
MARGIN = 30.0
POINT_R = 3.0
CYCLE_R = 160.0
FONT = 12


@dataclass(frozen=True)
class RenderSpec:
    style: str = "linear"
    out: str | None = None
    width: float | None = None
    height: float | None = None
    labels: bool = True


def _f(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def chords(p: TypeBPartition) -> list[tuple[int, int]]:
    """Cyclic style edges: each block of size m >= 3 is drawn as a closed polygon."""
    out = []
    for b in p.blocks:
        if len(b) == 2:
            out.append((b[0], b[1]))
        elif len(b) > 2:
            out.extend((b[i], b[(i + 1) % len(b)]) for i in range(len(b)))
    return out


def _header(w, h):
    return [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w)}" height="{_f(h)}" '
            f'viewBox="0 0 {_f(w)} {_f(h)}">',
            '<g fill="none" stroke="black" stroke-width="1.5">']


def render_linear(p: TypeBPartition, spec: RenderSpec = RenderSpec()) -> str:
    n = p.n
    span = SPACING * max(2 * n - 1, 0)
    base_y = MARGIN + span / 2 + 10
    w = spec.width or 2 * MARGIN + span
    h = spec.height or base_y + MARGIN
    xs = {e: MARGIN + SPACING * (position(e, n) - 1) for e in ground_set(n)}
    lines = _header(w, h)
    for a in linear_arcs(p):
        x1, x2 = xs[a.left], xs[a.right]
        r = (x2 - x1) / 2
        lines.append(f'<path class="arc" data-left="{a.left}" data-right="{a.right}" '
                     f'd="M {_f(x1)} {_f(base_y)} A {_f(r)} {_f(r)} 0 0 1 {_f(x2)} {_f(base_y)}"/>')
    lines.append("</g>")
    for e in ground_set(n):
        lines.append(f'<circle class="point" data-element="{e}" cx="{_f(xs[e])}" cy="{_f(base_y)}" '
                     f'r="{_f(POINT_R)}" fill="black"/>')
        if spec.labels:
            lines.append(f'<text x="{_f(xs[e])}" y="{_f(base_y + 18)}" font-size="{FONT}" '
                         f'text-anchor="middle">{e}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_cyclic(p: TypeBPartition, spec: RenderSpec = RenderSpec()) -> str:
    n = p.n
    w = spec.width or 2 * (CYCLE_R + MARGIN)
    h = spec.height or 2 * (CYCLE_R + MARGIN)
    cx, cy = w / 2, h / 2
    pts = {}
    # 1 at the top, clockwise in linear order
    for k in range(1, 2 * n + 1):
        t = -math.pi / 2 + 2 * math.pi * (k - 1) / (2 * n)
        pts[element_at(k, n)] = (cx + CYCLE_R * math.cos(t), cy + CYCLE_R * math.sin(t))
    lines = _header(w, h)
    lines.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(CYCLE_R)}" stroke="gray"/>')
    for a, b in chords(p):
        (x1, y1), (x2, y2) = pts[a], pts[b]
        lines.append(f'<line class="chord" data-a="{a}" data-b="{b}" x1="{_f(x1)}" y1="{_f(y1)}" '
                     f'x2="{_f(x2)}" y2="{_f(y2)}"/>')
    lines.append("</g>")
    for e, (x, y) in pts.items():
        lines.append(f'<circle class="point" data-element="{e}" cx="{_f(x)}" cy="{_f(y)}" '
                     f'r="{_f(POINT_R)}" fill="black"/>')
        if spec.labels:
            lx = cx + (x - cx) * (CYCLE_R + 16) / CYCLE_R
            ly = cy + (y - cy) * (CYCLE_R + 16) / CYCLE_R + 4
            lines.append(f'<text x="{_f(lx)}" y="{_f(ly)}" font-size="{FONT}" '
                         f'text-anchor="middle">{e}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_svg(p: TypeBPartition, spec: RenderSpec) -> str:
    """Render ``p``; when ``spec.out`` is set the SVG is also written there."""
    if spec.style == "linear":
        svg = render_linear(p, spec)
    elif spec.style == "cyclic":
        svg = render_cyclic(p, spec)
    else:
        raise ValueError(f"unknown style {spec.style!r}")
    if spec.out:
        try:
            Path(spec.out).write_text(svg, encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot write {spec.out}: {exc.strerror or exc}") from None
    return svg
