"""
SVG drawing of the projected diagram.

The unit circle is drawn 400 px across. Chords are straight segments; at
each crossing the under-strand is interrupted by a 4 px gap. Maxima of the
height function are hollow circles and minima filled dots. Output depends
only on the parameters, so it is byte-for-byte reproducible.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .braid import diagram
from .geometry import CurveParams, curve_point, vertices

SIZE = 400
MARGIN = 20
GAP = 4.0


def _px(x: float, y: float) -> tuple[float, float]:
    half = SIZE / 2
    return MARGIN + half + half * x, MARGIN + half - half * y


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _extrema(m: int, phi: Fraction) -> tuple[list[float], list[float]]:
    """Curve parameters of maxima (g = 1) and minima (g = 0) of g(m t + phi)."""
    maxima = [float(((j - phi) / m) % 1) for j in range(m)]
    minima = [float(((j + Fraction(1, 2) - phi) / m) % 1) for j in range(m)]
    return sorted(maxima), sorted(minima)


def render_svg(params: CurveParams) -> str:
    s, n = params.s, params.n
    V = vertices(s, n)
    cuts: dict[int, list[float]] = {k: [] for k in range(n)}
    for c in diagram(params).crossings:
        u = c.under
        chord = (u.k - 1) // 2
        cuts[chord].append(float(u) * n - chord)

    total = SIZE + 2 * MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{total}" height="{total}" '
        f'viewBox="0 0 {total} {total}">',
        f'<title>Z({s},{n},{params.m},{params.phi})</title>',
    ]
    cx, cy = _px(0.0, 0.0)
    out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(SIZE / 2)}" fill="none" stroke="#bbbbbb"/>')
    out.append('<g stroke="black" stroke-width="1.5" fill="none">')
    for k in range(n):
        p0 = _px(*V[k])
        p1 = _px(*V[(k + 1) % n])
        length = math.dist(p0, p1)
        half_gap = GAP / 2 / length
        pieces = []
        start = 0.0
        for u in sorted(cuts[k]):
            pieces.append((start, u - half_gap))
            start = u + half_gap
        pieces.append((start, 1.0))
        for a, b in pieces:
            xa, ya = p0[0] + a * (p1[0] - p0[0]), p0[1] + a * (p1[1] - p0[1])
            xb, yb = p0[0] + b * (p1[0] - p0[0]), p0[1] + b * (p1[1] - p0[1])
            out.append(f'<line x1="{_fmt(xa)}" y1="{_fmt(ya)}" x2="{_fmt(xb)}" y2="{_fmt(yb)}"/>')
    out.append("</g>")
    maxima, minima = _extrema(params.m, params.phi)
    for t in maxima:
        x, y = _px(*curve_point(t, s, n))
        out.append(f'<circle class="max" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="white" stroke="black"/>')
    for t in minima:
        x, y = _px(*curve_point(t, s, n))
        out.append(f'<circle class="min" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
