"""Static SVG pictures of planar Gale diagrams."""

from __future__ import annotations

from .errors import WrongCodim
from .exactlin import IntegerMatrix, as_matrix
from .gale import ALL_QUADRANTS, quadrant_coverage

SIZE = 400
MARGIN = 40

_HEADER = """<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">
<defs><marker id="arrowhead" markerWidth="10" markerHeight="10" refX="9" refY="5" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="black"/></marker></defs>
<rect x="0" y="0" width="{s}" height="{s}" fill="white"/>
"""

_SHADES = {1: "#4c72b0", 2: "#dd8452", 3: "#55a868", 4: "#c44e52"}


def _f(x: float) -> str:
    return f"{x:.2f}"


def gale_svg(B) -> str:
    """Render the rows of an n x 2 matrix as arrows from the origin.

    All four open quadrants are shaded when the diagram meets each of them.
    Output depends only on the matrix.
    """
    B: IntegerMatrix = as_matrix(B)
    if B.ncols != 2:
        raise WrongCodim(f"Gale diagram pictures need rank 2, got {B.ncols}")
    c = SIZE / 2
    extent = max(max(abs(x), abs(y)) for x, y in B.rows) or 1
    scale = (c - MARGIN) / extent

    def pt(x, y):
        return c + x * scale, c - y * scale

    out = [_HEADER.format(s=SIZE)]
    if quadrant_coverage(B) == ALL_QUADRANTS:
        corners = {1: (c, 0), 2: (0, 0), 3: (0, c), 4: (c, c)}
        for q in sorted(corners):
            x, y = corners[q]
            out.append(
                f'<rect class="quadrant-shade" x="{_f(x)}" y="{_f(y)}" width="{_f(c)}" '
                f'height="{_f(c)}" fill="{_SHADES[q]}" fill-opacity="0.15"/>\n'
            )
    out.append(f'<line class="axis" x1="0" y1="{_f(c)}" x2="{SIZE}" y2="{_f(c)}" stroke="gray"/>\n')
    out.append(f'<line class="axis" x1="{_f(c)}" y1="0" x2="{_f(c)}" y2="{SIZE}" stroke="gray"/>\n')
    for i, (x, y) in enumerate(B.rows, start=1):
        px, py = pt(x, y)
        out.append(
            f'<line class="arrow" x1="{_f(c)}" y1="{_f(c)}" x2="{_f(px)}" y2="{_f(py)}" '
            f'stroke="black" stroke-width="2" marker-end="url(#arrowhead)"/>\n'
        )
        out.append(
            f'<text class="label" x="{_f(px + 6)}" y="{_f(py - 6)}" font-size="14">'
            f"b{i} ({x}, {y})</text>\n"
        )
    out.append("</svg>\n")
    return "".join(out)
