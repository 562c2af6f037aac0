"""Rendering a representation as an SVG ray diagram.

Every vertex becomes a grid point at (1 + x-rank, 1 + y-rank); u-vertices
emit rightward rays and v-vertices downward rays, so crossings coincide
with edges.  Output is deterministic, byte for byte.
"""

import pathlib

from tdorg import construct_normalized_representation, render_svg
from tdorg.catalog import fan6, sunlet10

out_dir = pathlib.Path(__file__).resolve().parent / "out"
out_dir.mkdir(exist_ok=True)

for name, g in [("fan", fan6()), ("sunlet", sunlet10())]:
    rep = construct_normalized_representation(g)
    svg = render_svg(g, rep)
    path = out_dir / f"{name}.svg"
    path.write_text(svg, encoding="utf-8")
    print(f"wrote {path} ({len(svg)} bytes)")
