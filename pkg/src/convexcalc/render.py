"""SVG drawings of closed geodesics in the Poincare disk.

Each curve is drawn as its chords through the fundamental 4g-gon; chords are
arcs of circles orthogonal to the boundary, sampled as polylines so that the
output depends only on the input words and the precision.
"""

from __future__ import annotations

import gmpy2

from . import hyperbolic as hyp
from .chords import chord_crossings, trace_chords
from .surface import Curve

__all__ = ["render_curves"]

_SIZE = 400
_SAMPLES = 24
_COLOURS = ("#c0392b", "#2471a3", "#229954", "#b9770e", "#7d3c98", "#17202a")


def _to_disk(k):
    return k / (1 + gmpy2.sqrt(1 - abs(k) ** 2))


def _xy(z) -> str:
    x = _SIZE / 2 * (1 + float(z.real))
    y = _SIZE / 2 * (1 - float(z.imag))
    return f"{x:.2f},{y:.2f}"


def _polyline(points, colour: str, width: float = 1.5) -> str:
    pts = " ".join(_xy(z) for z in points)
    return f'  <polyline points="{pts}" fill="none" stroke="{colour}" stroke-width="{width}"/>'


def render_curves(curves: list[Curve], genus: int | None = None) -> str:
    """The fundamental polygon with the chords of every curve, as an SVG document."""
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
    ]
    if not curves:
        return "\n".join(head + ["</svg>"]) + "\n"
    genus = genus or curves[0].genus
    m, chords = trace_chords(curves, strict=False)
    body = [
        f"  <!-- genus {genus}; curves: {'; '.join(str(c) for c in curves)}; "
        f"chords: {len(chords)}; crossings: {chord_crossings(chords)} -->",
        f'  <circle cx="{_SIZE / 2}" cy="{_SIZE / 2}" r="{_SIZE / 2 - 0.5}" fill="none" stroke="#999"/>',
    ]
    with hyp.ctx(m.bits):
        n = len(m.kvertices)
        for k in range(n):
            a, b = m.kvertices[k], m.kvertices[(k + 1) % n]
            side = [_to_disk(a + (b - a) * j / _SAMPLES) for j in range(_SAMPLES + 1)]
            body.append(_polyline(side, "#444", 1.0))
        for ch in chords:
            # straight in the Klein model, so sample there and map to the disk
            pts = [_to_disk(ch.start + (ch.end - ch.start) * j / _SAMPLES) for j in range(_SAMPLES + 1)]
            body.append(_polyline(pts, _COLOURS[ch.curve % len(_COLOURS)]))
    return "\n".join(head + body + ["</svg>"]) + "\n"
