"""Self-contained SVG scatter plots of 2-D embeddings.

No plotting dependency: the output is deterministic text, so identical
embeddings produce byte-identical files.
"""

from xml.sax.saxutils import escape

import numpy as np

from condmds.exceptions import InputValidationError

__all__ = ["scatter_svg"]

_WIDTH = 640.0
_HEIGHT = 480.0
_PAD = 40.0


def _span(lo, hi):
    if hi > lo:
        margin = 0.05 * (hi - lo)
        return lo - margin, hi - lo + 2 * margin
    # degenerate axis: all points share the coordinate
    return lo - 0.5, 1.0


def scatter_svg(points, labels):
    """Render labeled 2-D points as an SVG document string.

    Axes are scaled to the data bounding box with a 5% margin. Only 2-D
    input is accepted; higher-dimensional embeddings have no canonical
    planar projection here.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InputValidationError(
            f"plotting needs 2-D points, got shape {pts.shape}; "
            "fit with p=2 or disable plotting"
        )
    if len(labels) != pts.shape[0]:
        raise InputValidationError(
            f"{pts.shape[0]} points but {len(labels)} labels"
        )
    x0, xspan = _span(pts[:, 0].min(), pts[:, 0].max())
    y0, yspan = _span(pts[:, 1].min(), pts[:, 1].max())
    inner_w = _WIDTH - 2 * _PAD
    inner_h = _HEIGHT - 2 * _PAD

    def to_px(p):
        px = _PAD + (p[0] - x0) / xspan * inner_w
        py = _HEIGHT - _PAD - (p[1] - y0) / yspan * inner_h
        return px, py

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH:.0f}" '
        f'height="{_HEIGHT:.0f}" viewBox="0 0 {_WIDTH:.0f} {_HEIGHT:.0f}">',
        f'<rect x="0" y="0" width="{_WIDTH:.0f}" height="{_HEIGHT:.0f}" fill="white"/>',
        f'<rect x="{_PAD:.1f}" y="{_PAD:.1f}" width="{inner_w:.1f}" '
        f'height="{inner_h:.1f}" fill="none" stroke="#999999" stroke-width="1"/>',
        f'<text x="{_PAD:.1f}" y="{_HEIGHT - _PAD + 16:.1f}" font-size="10" '
        f'fill="#555555">{_num(x0)}</text>',
        f'<text x="{_WIDTH - _PAD:.1f}" y="{_HEIGHT - _PAD + 16:.1f}" font-size="10" '
        f'fill="#555555" text-anchor="end">{_num(x0 + xspan)}</text>',
        f'<text x="{_PAD - 4:.1f}" y="{_HEIGHT - _PAD:.1f}" font-size="10" '
        f'fill="#555555" text-anchor="end">{_num(y0)}</text>',
        f'<text x="{_PAD - 4:.1f}" y="{_PAD + 4:.1f}" font-size="10" '
        f'fill="#555555" text-anchor="end">{_num(y0 + yspan)}</text>',
    ]
    for p, label in zip(pts, labels):
        px, py = to_px(p)
        lines.append(
            f'<circle cx="{px:.2f}" cy="{py:.2f}" r="3" fill="#1f6fb2"/>'
        )
        lines.append(
            f'<text x="{px + 5:.2f}" y="{py - 5:.2f}" font-size="11" '
            f'fill="#222222">{escape(str(label))}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _num(x):
    return f"{x:.4g}"
