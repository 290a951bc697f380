"""Deterministic SVG emission for permutation graphs and Dyck-path grids."""
from __future__ import annotations

from dataclasses import dataclass

from .dyck import RationalDyckPath
from .stirling import StirlingPermutation


@dataclass(frozen=True)
class Styling:
    """Canvas knobs shared by both figure kinds.

    The y-axis points upward; coordinates are flipped internally when
    mapping to SVG's top-left origin.
    """

    cell: int = 24
    margin: int = 40
    point_radius: int = 4
    draw_slope_line: bool = True


def _svg_document(width: int, height: int, body_lines) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
    ]
    lines.extend(body_lines)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_permutation(w: StirlingPermutation, styling: Styling = Styling()) -> str:
    """Plot the points (i, w(i)) joined by a polyline, with axes.

    Output bytes are a pure function of the word and styling.
    """
    cell, margin = styling.cell, styling.margin
    n, word = w.order, w.word
    width = 2 * margin + cell * (2 * n - 1)
    height = 2 * margin + cell * (n - 1) if n > 1 else 2 * margin

    def x(i):  # 1-based position
        return margin + cell * (i - 1)

    def y(v):  # value, flipped so larger values sit higher
        return margin + cell * (n - v)

    body = []
    axis_pad = cell // 2
    body.append(
        f'<polyline points="{x(1) - axis_pad},{y(n) - axis_pad} '
        f'{x(1) - axis_pad},{y(1) + axis_pad} '
        f'{x(2 * n) + axis_pad},{y(1) + axis_pad}" '
        'fill="none" stroke="black" stroke-width="2"/>'
    )
    for v in range(1, n + 1):
        body.append(
            f'<text x="{x(1) - axis_pad - 6}" y="{y(v) + 4}" font-size="11" '
            f'text-anchor="end" font-family="monospace">{v}</text>'
        )
    pts = " ".join(f"{x(i)},{y(v)}" for i, v in enumerate(word, start=1))
    body.append(
        f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>'
    )
    for i, v in enumerate(word, start=1):
        body.append(
            f'<circle cx="{x(i)}" cy="{y(v)}" r="{styling.point_radius}" '
            'fill="black"/>'
        )
    return _svg_document(width, height, body)


def render_dyck(p: RationalDyckPath, styling: Styling = Styling()) -> str:
    """Draw the l-by-m grid, the bold path, and the dashed slope line."""
    cell, margin = styling.cell, styling.margin
    ell, m = p.target
    width = 2 * margin + cell * ell
    height = 2 * margin + cell * m

    def x(a):
        return margin + cell * a

    def y(b):  # flipped: b = 0 is the bottom edge
        return margin + cell * (m - b)

    body = []
    for a in range(ell + 1):
        body.append(
            f'<line x1="{x(a)}" y1="{y(0)}" x2="{x(a)}" y2="{y(m)}" '
            'stroke="gray" stroke-width="1"/>'
        )
    for b in range(m + 1):
        body.append(
            f'<line x1="{x(0)}" y1="{y(b)}" x2="{x(ell)}" y2="{y(b)}" '
            'stroke="gray" stroke-width="1"/>'
        )
    if styling.draw_slope_line:
        body.append(
            f'<line x1="{x(0)}" y1="{y(0)}" x2="{x(ell)}" y2="{y(m)}" '
            'stroke="red" stroke-width="2" stroke-dasharray="6,4"/>'
        )
    pts = [(0, 0)]
    for s in p.steps:
        a, b = pts[-1]
        pts.append((a + 1, b) if s == "E" else (a, b + 1))
    path_pts = " ".join(f"{x(a)},{y(b)}" for a, b in pts)
    body.append(
        f'<polyline points="{path_pts}" fill="none" stroke="black" '
        'stroke-width="4"/>'
    )
    return _svg_document(width, height, body)
