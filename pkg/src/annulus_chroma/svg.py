"""SVG rendering of radial colorings and gadget embeddings.

Fixed conventions: 1000x1000 viewBox, annulus centered at (500, 500), outer
radius drawn at 400 units, mathematical y-axis pointing up (so math-CCW arcs
use SVG sweep flag 0).  Sector arcs are split at their midpoint so every
drawn arc spans at most pi and the large-arc flag is never needed.
"""

from __future__ import annotations

import math

from .gadgets import GadgetEmbedding
from .geometry import Annulus
from .radial import RadialColoring

PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf")

VIEW_SIZE = 1000.0
CENTER = 500.0
OUTER_PX = 400.0


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def color_for(color_id: int) -> str:
    return PALETTE[color_id % len(PALETTE)]


def _point_px(scale: float, x: float, y: float) -> tuple[float, float]:
    return (CENTER + scale * x, CENTER - scale * y)


def _ring_point(radius_px: float, angle: float) -> tuple[float, float]:
    return (CENTER + radius_px * math.cos(angle), CENTER - radius_px * math.sin(angle))


def _sector_path(inner_px: float, outer_px: float, start: float, width: float) -> str:
    mid = start + width / 2.0
    end = start + width
    points = [
        _ring_point(outer_px, start),
        _ring_point(outer_px, mid),
        _ring_point(outer_px, end),
        _ring_point(inner_px, end),
        _ring_point(inner_px, mid),
        _ring_point(inner_px, start),
    ]
    p = [f"{_fmt(x)} {_fmt(y)}" for x, y in points]
    ro, ri = _fmt(outer_px), _fmt(inner_px)
    return (
        f"M {p[0]} "
        f"A {ro} {ro} 0 0 0 {p[1]} A {ro} {ro} 0 0 0 {p[2]} "
        f"L {p[3]} "
        f"A {ri} {ri} 0 0 1 {p[4]} A {ri} {ri} 0 0 1 {p[5]} Z"
    )


def _document(body: list[str]) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW_SIZE:.0f}" '
        f'height="{VIEW_SIZE:.0f}" viewBox="0 0 {VIEW_SIZE:.0f} {VIEW_SIZE:.0f}">',
        *body,
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def render_radial_coloring(coloring: RadialColoring) -> str:
    """Sectors as filled annular wedges, boundary rays as 1px radial lines."""
    annulus = coloring.annulus
    scale = OUTER_PX / annulus.outer_radius
    inner_px = scale * annulus.inner_radius
    body = ['<g id="sectors">']
    for i in range(coloring.n):
        path = _sector_path(inner_px, OUTER_PX, coloring.boundaries[i], coloring.sector_width(i))
        body.append(f'<path d="{path}" fill="{color_for(coloring.sector_colors[i])}" stroke="none"/>')
    body.append("</g>")
    body.append('<g id="boundaries">')
    for i in range(coloring.n):
        x1, y1 = _ring_point(inner_px, coloring.boundaries[i])
        x2, y2 = _ring_point(OUTER_PX, coloring.boundaries[i])
        body.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{color_for(coloring.boundary_colors[i])}" stroke-width="1"/>'
        )
    body.append("</g>")
    body.append('<g id="annulus">')
    for radius_px in (inner_px, OUTER_PX):
        body.append(
            f'<circle cx="{_fmt(CENTER)}" cy="{_fmt(CENTER)}" r="{_fmt(radius_px)}" '
            'fill="none" stroke="#000000" stroke-width="0.5"/>'
        )
    body.append("</g>")
    return _document(body)


def render_embedding(embedding: GadgetEmbedding, annulus: Annulus) -> str:
    """Annulus outline with the gadget's unit edges and vertices on top."""
    scale = OUTER_PX / annulus.outer_radius
    body = ['<g id="annulus">']
    for radius in (annulus.inner_radius, annulus.outer_radius):
        body.append(
            f'<circle cx="{_fmt(CENTER)}" cy="{_fmt(CENTER)}" r="{_fmt(scale * radius)}" '
            'fill="none" stroke="#000000" stroke-width="1"/>'
        )
    body.append("</g>")
    body.append('<g id="edges">')
    for i, j in embedding.edges:
        x1, y1 = _point_px(scale, *embedding.vertices[i])
        x2, y2 = _point_px(scale, *embedding.vertices[j])
        body.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            'stroke="#377eb8" stroke-width="2"/>'
        )
    body.append("</g>")
    body.append('<g id="vertices">')
    for x, y in embedding.vertices:
        cx, cy = _point_px(scale, x, y)
        body.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4" fill="#e41a1c"/>')
    body.append("</g>")
    return _document(body)
