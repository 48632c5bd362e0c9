import math
import re
import xml.etree.ElementTree as ET

import pytest

from annulus_chroma.gadgets import embed_moser_spindle, embed_trirod
from annulus_chroma.geometry import Annulus, TWO_PI
from annulus_chroma.radial import construct_radial_coloring
from annulus_chroma.svg import (
    CENTER,
    OUTER_PX,
    PALETTE,
    color_for,
    render_embedding,
    render_radial_coloring,
)

SVG_NS = "{http://www.w3.org/2000/svg}"


def to_world(annulus, x_px, y_px):
    scale = OUTER_PX / annulus.outer_radius
    return ((x_px - CENTER) / scale, (CENTER - y_px) / scale)


def parse_groups(text):
    root = ET.fromstring(text)
    return {g.get("id"): g for g in root.iter(f"{SVG_NS}g")}


def path_points(d):
    numbers = [float(t) for t in re.findall(r"-?\d+\.?\d*(?:[eE][-+]?\d+)?", d)]
    # M x y (A r r rot large sweep x y) x2 L x y (A ...) x2
    points = [(numbers[0], numbers[1])]
    i = 2
    for _ in range(2):
        points.append((numbers[i + 5], numbers[i + 6]))
        i += 7
    points.append((numbers[i], numbers[i + 1]))
    i += 2
    for _ in range(2):
        points.append((numbers[i + 5], numbers[i + 6]))
        i += 7
    return points


class TestRadialSvg:
    def test_well_formed_and_structured(self):
        coloring = construct_radial_coloring(0.1)
        text = render_radial_coloring(coloring)
        groups = parse_groups(text)
        assert set(groups) == {"sectors", "boundaries", "annulus"}
        assert len(groups["sectors"].findall(f"{SVG_NS}path")) == coloring.n
        assert len(groups["boundaries"].findall(f"{SVG_NS}line")) == coloring.n

    def test_sector_geometry_round_trips(self):
        coloring = construct_radial_coloring(0.23)
        annulus = coloring.annulus
        text = render_radial_coloring(coloring)
        groups = parse_groups(text)
        paths = groups["sectors"].findall(f"{SVG_NS}path")
        for i, path in enumerate(paths):
            pts = [to_world(annulus, x, y) for x, y in path_points(path.get("d"))]
            start_outer, _, end_outer, end_inner, _, start_inner = pts
            assert math.hypot(*start_outer) == pytest.approx(annulus.outer_radius, abs=1e-6)
            assert math.hypot(*end_inner) == pytest.approx(annulus.inner_radius, abs=1e-6)
            start_angle = math.atan2(start_outer[1], start_outer[0]) % TWO_PI
            end_angle = math.atan2(end_outer[1], end_outer[0]) % TWO_PI
            assert start_angle == pytest.approx(coloring.boundaries[i], abs=1e-6)
            expected_end = (coloring.boundaries[i] + coloring.sector_width(i)) % TWO_PI
            delta = abs(end_angle - expected_end)
            assert min(delta, TWO_PI - delta) <= 1e-6
            assert math.atan2(start_inner[1], start_inner[0]) % TWO_PI == pytest.approx(
                coloring.boundaries[i], abs=1e-6
            )

    def test_sector_colors_follow_palette(self):
        coloring = construct_radial_coloring(0.3)
        groups = parse_groups(render_radial_coloring(coloring))
        fills = [p.get("fill") for p in groups["sectors"].findall(f"{SVG_NS}path")]
        assert fills == [color_for(c) for c in coloring.sector_colors]

    def test_boundary_lines_round_trip(self):
        coloring = construct_radial_coloring(0.1)
        annulus = coloring.annulus
        groups = parse_groups(render_radial_coloring(coloring))
        lines = groups["boundaries"].findall(f"{SVG_NS}line")
        for i, line in enumerate(lines):
            x1, y1 = to_world(annulus, float(line.get("x1")), float(line.get("y1")))
            x2, y2 = to_world(annulus, float(line.get("x2")), float(line.get("y2")))
            assert math.hypot(x1, y1) == pytest.approx(annulus.inner_radius, abs=1e-6)
            assert math.hypot(x2, y2) == pytest.approx(annulus.outer_radius, abs=1e-6)
            assert math.atan2(y2, x2) % TWO_PI == pytest.approx(coloring.boundaries[i], abs=1e-6)
            assert line.get("stroke") == color_for(coloring.boundary_colors[i])
            assert line.get("stroke-width") == "1"

    def test_palette_has_seven_colors(self):
        assert len(PALETTE) == 7
        assert len(set(PALETTE)) == 7


class TestEmbeddingSvg:
    def test_vertices_round_trip(self):
        annulus = Annulus(0.42)
        emb = embed_moser_spindle(0.42)
        groups = parse_groups(render_embedding(emb, annulus))
        circles = groups["vertices"].findall(f"{SVG_NS}circle")
        assert len(circles) == 7
        for circle, vertex in zip(circles, emb.vertices):
            x, y = to_world(annulus, float(circle.get("cx")), float(circle.get("cy")))
            assert x == pytest.approx(vertex[0], abs=1e-6)
            assert y == pytest.approx(vertex[1], abs=1e-6)

    def test_edges_match(self):
        emb = embed_trirod(0.3)
        annulus = Annulus(0.3)
        groups = parse_groups(render_embedding(emb, annulus))
        lines = groups["edges"].findall(f"{SVG_NS}line")
        assert len(lines) == len(emb.edges)
        for line, (i, j) in zip(lines, emb.edges):
            p = to_world(annulus, float(line.get("x1")), float(line.get("y1")))
            q = to_world(annulus, float(line.get("x2")), float(line.get("y2")))
            assert p == pytest.approx(emb.vertices[i], abs=1e-6)
            assert q == pytest.approx(emb.vertices[j], abs=1e-6)

    def test_annulus_outline_radii(self):
        annulus = Annulus(0.2)
        emb = embed_trirod(0.2)
        groups = parse_groups(render_embedding(emb, annulus))
        radii = sorted(float(c.get("r")) for c in groups["annulus"].findall(f"{SVG_NS}circle"))
        scale = OUTER_PX / annulus.outer_radius
        assert radii[0] == pytest.approx(scale * annulus.inner_radius, abs=1e-6)
        assert radii[1] == pytest.approx(OUTER_PX, abs=1e-6)
