"""
Schematic SVG of a rational tangle.

The drawing shows the four endpoints on the boundary circle and one box per
twist region of the canonical alternating word, labelled with its signed
exponent.  It is not a crossing diagram.  Output depends only on the
tangle class, so equal inputs give byte-identical files.
"""

from __future__ import annotations

import math
from pathlib import Path
from xml.sax.saxutils import escape

from .tangle import Base, TangleExpr, canonical, fraction_of

BOX_W = 56
BOX_H = 36
GAP = 24
MARGIN = 40


def _f(x):
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render_svg(t: TangleExpr) -> str:
    canon = canonical(t)
    frac = fraction_of(t)
    boxes = [(m.letter, m.exponent) for m in canon.moves]
    n = len(boxes)

    row = n * BOX_W + max(n - 1, 0) * GAP
    radius = max(110, row / 2 + 50)
    cx = cy = radius + MARGIN
    size = 2 * (radius + MARGIN)
    off = radius * math.sqrt(0.5)
    # 1 in the first quadrant, then clockwise
    ends = {
        1: (cx + off, cy - off),
        2: (cx + off, cy + off),
        3: (cx - off, cy + off),
        4: (cx - off, cy - off),
    }

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(size)}" height="{_f(size)}" '
        f'viewBox="0 0 {_f(size)} {_f(size)}">',
        f"<title>{escape(str(canon))} (fraction {escape(str(frac))})</title>",
        f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(radius)}" fill="none" stroke="#999" stroke-dasharray="4 4"/>',
    ]

    strands = []
    if n == 0:
        if canon.base is Base.VERTICAL:
            pairs = [(1, 2), (4, 3)]
        else:
            pairs = [(4, 1), (3, 2)]
        for i, j in pairs:
            strands.append((ends[i], ends[j]))
    else:
        x0 = cx - row / 2
        top, bottom = cy - BOX_H / 2, cy + BOX_H / 2
        strands.append((ends[4], (x0, top)))
        strands.append((ends[3], (x0, bottom)))
        for i in range(n - 1):
            xr = x0 + i * (BOX_W + GAP) + BOX_W
            strands.append(((xr, top), (xr + GAP, top)))
            strands.append(((xr, bottom), (xr + GAP, bottom)))
        xe = x0 + row
        strands.append(((xe, top), ends[1]))
        strands.append(((xe, bottom), ends[2]))
    for (x1, y1), (x2, y2) in strands:
        out.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" stroke="black" stroke-width="2"/>')

    if n:
        x0 = cx - row / 2
        for i, (letter, k) in enumerate(boxes):
            x = x0 + i * (BOX_W + GAP)
            fill = "#dbe9f7" if k > 0 else "#f7dbdb"
            out.append(
                f'<rect class="twist" x="{_f(x)}" y="{_f(cy - BOX_H / 2)}" width="{BOX_W}" height="{BOX_H}" '
                f'fill="{fill}" stroke="black" stroke-width="1.5"/>'
            )
            out.append(
                f'<text class="exponent" x="{_f(x + BOX_W / 2)}" y="{_f(cy + 5)}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="15">{k:+d}</text>'
            )
            out.append(
                f'<text class="letter" x="{_f(x + BOX_W / 2)}" y="{_f(cy - BOX_H / 2 - 6)}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="11" fill="#555">{letter}</text>'
            )
    else:
        out.append(
            f'<text class="base" x="{_f(cx)}" y="{_f(cy + 5)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13" fill="#555">{escape(str(canon.base))}</text>'
        )

    for i, (x, y) in sorted(ends.items()):
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="4" fill="black"/>')
        dx = 12 if x > cx else -12
        dy = -8 if y < cy else 18
        out.append(
            f'<text class="endpoint" x="{_f(x + dx)}" y="{_f(y + dy)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{i}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(t: TangleExpr, path) -> Path:
    path = Path(path)
    path.write_text(render_svg(t), encoding="utf-8", newline="\n")
    return path
