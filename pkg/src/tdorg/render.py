"""Deterministic SVG rendering of a representation as crossing rays.

Each vertex sits at (1 + x-rank, 1 + y-rank) on an integer grid.
A u-vertex emits a rightward ray, a v-vertex a downward ray, so the
rays of u and v cross exactly when u precedes v in both orders.
"""

from __future__ import annotations

from .graph import BipartiteGraph, vertex_token
from .representation import Representation

SCALE = 40
MARGIN = 20


def render_svg(g: BipartiteGraph, rep: Representation) -> str:
    n = g.n_vertices
    px, py = rep.pos_x(), rep.pos_y()
    side = (n + 1) * SCALE + 2 * MARGIN

    def x_of(ref):
        return MARGIN + (px[ref] + 1) * SCALE

    def y_of(ref):
        # ranks grow upward; SVG y grows downward
        return MARGIN + (n - py[ref]) * SCALE

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f'<rect width="{side}" height="{side}" fill="white"/>',
    ]
    for k in range(1, n + 1):
        c = MARGIN + k * SCALE
        lines.append(
            f'<line x1="{c}" y1="0" x2="{c}" y2="{side}" stroke="#cccccc" '
            f'stroke-dasharray="4 4" stroke-width="1"/>')
        lines.append(
            f'<line x1="0" y1="{c}" x2="{side}" y2="{c}" stroke="#cccccc" '
            f'stroke-dasharray="4 4" stroke-width="1"/>')
    for ref in g.vertices():
        x, y = x_of(ref), y_of(ref)
        color = "#1f77b4" if ref[0] == "u" else "#d62728"
        if ref[0] == "u":
            lines.append(f'<line x1="{x}" y1="{y}" x2="{side}" y2="{y}" '
                         f'stroke="{color}" stroke-width="2"/>')
        else:
            lines.append(f'<line x1="{x}" y1="{y}" x2="{x}" y2="{side}" '
                         f'stroke="{color}" stroke-width="2"/>')
        lines.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{color}"/>')
        label = g.label(ref)
        if not label:
            label = vertex_token(ref)
        lines.append(f'<text x="{x - 6}" y="{y - 8}" font-family="monospace" '
                     f'font-size="14" fill="black">{label}</text>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"
