"""Deterministic SVG drawings of L-embeddings."""

from __future__ import annotations

from typing import Collection, Mapping, Sequence
from xml.sax.saxutils import escape, quoteattr

from .geometry import LSegment

SCALE = 10
MARGIN = 2
STROKE = 2
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2")
HIGHLIGHT = "#000000"


def _collinear(segs: Sequence[LSegment]) -> bool:
    pts = sorted({(s.x, s.y) for s in segs})
    if len(pts) < 3:
        return len(pts) == 2
    (x0, y0), (x1, y1) = pts[0], pts[-1]
    return all((x1 - x0) * (y - y0) == (y1 - y0) * (x - x0) for x, y in pts)


def render_svg(
    e: Mapping[int, LSegment],
    names: Sequence[str] | None = None,
    highlight: Collection[int] = (),
) -> str:
    """One two-stroke polyline per L plus a dot on each corner.

    The y axis points down, as in the embedding coordinates. When all
    corners share a line, a dashed guide is drawn through them.
    """
    segs = dict(sorted(e.items()))
    if segs:
        xmax = max(s.right for s in segs.values())
        ymax = max(s.y for s in segs.values())
    else:
        xmax = ymax = 0
    width = (xmax + 2 * MARGIN) * SCALE
    height = (ymax + 2 * MARGIN) * SCALE

    def px(v: int) -> int:
        return (v + MARGIN) * SCALE

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    if len(segs) >= 2 and _collinear(list(segs.values())):
        pts = sorted((s.x, s.y) for s in segs.values())
        (x0, y0), (x1, y1) = pts[0], pts[-1]
        out.append(
            f'<line class="guide" x1="{px(x0)}" y1="{px(y0)}" x2="{px(x1)}" y2="{px(y1)}" '
            'stroke="#bbbbbb" stroke-width="1" stroke-dasharray="4 3"/>'
        )
    for i, (v, s) in enumerate(segs.items()):
        color = HIGHLIGHT if v in highlight else PALETTE[i % len(PALETTE)]
        label = names[v] if names is not None else str(v)
        pts = f"{px(s.right)},{px(s.y)} {px(s.x)},{px(s.y)} {px(s.x)},{px(s.top)}"
        out.append(f"<g id={quoteattr('L-' + label)}>")
        out.append(f"<title>{escape(label)}</title>")
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="{STROKE}"/>'
        )
        out.append(f'<circle cx="{px(s.x)}" cy="{px(s.y)}" r="3" fill="{color}"/>')
        out.append(
            f'<text x="{px(s.x) - 4}" y="{px(s.y) + 12}" font-size="9" '
            f'font-family="monospace" text-anchor="end">{escape(label)}</text>'
        )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
