"""Radial colorings of an annulus and the radial chromatic number.

A radial coloring partitions the annulus by finitely many boundary rays:
each open sector between consecutive rays is monochromatic and each ray
(a closed radial segment) carries its own color.  The least number of
colors in a proper radial coloring is ceil(2*pi / theta), where theta is
the angular width of a unit chord on the outer circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import (
    DEFAULT_TOLERANCE,
    TWO_PI,
    AngularInterval,
    AnnularSector,
    Annulus,
    Point,
    contains_unit_pair,
    unit_chord_angle,
)
from .schema import SchemaError, require_int, require_keys, require_list, require_number

# Snap 2*pi/theta to an integer when this close, so that closed right
# endpoints of the threshold table evaluate to the table's N despite
# floating-point error.
INTEGER_SNAP = 1e-9

SPAN_SLACK = 1e-9


@dataclass(frozen=True)
class Threshold:
    """Largest half-width r for which ``colors`` colors suffice radially."""

    colors: int
    max_r: float
    expression: str


def thresholds() -> list[Threshold]:
    """The exact band boundaries of the radial chromatic number.

    N colors suffice for r up to and including the N-th entry's max_r
    (the final band is open at 1/2, which lies outside the domain).
    """
    return [
        Threshold(3, (2.0 - math.sqrt(3.0)) / (2.0 * math.sqrt(3.0)), "(2 - sqrt(3)) / (2*sqrt(3))"),
        Threshold(4, (2.0 - math.sqrt(2.0)) / (2.0 * math.sqrt(2.0)), "(2 - sqrt(2)) / (2*sqrt(2))"),
        Threshold(5, -0.5 + math.sqrt(2.0 / (5.0 - math.sqrt(5.0))), "-1/2 + sqrt(2 / (5 - sqrt(5)))"),
        Threshold(6, 0.5, "1/2"),
    ]


def radial_chromatic_number(r: float) -> int:
    """Least number of colors in a proper radial coloring of the annulus.

    Equals ceil(2*pi / theta) with theta the unit-chord angle at the outer
    radius; ratios within INTEGER_SNAP of an integer are rounded to it
    first, so the thresholds land in their closed band.
    """
    if not 0.0 < r < 0.5:
        raise ValueError(f"annulus half-width must lie strictly in (0, 1/2), got {r}")
    ratio = TWO_PI / unit_chord_angle(0.5 + r)
    nearest = round(ratio)
    if abs(ratio - nearest) <= INTEGER_SNAP:
        return int(nearest)
    return math.ceil(ratio)


@dataclass(frozen=True)
class RadialColoring:
    """A coloring given by boundary rays, per-sector colors, and per-ray colors.

    ``boundaries`` must be strictly increasing angles in [0, 2*pi).  Sector i
    spans boundaries[i] to boundaries[(i+1) % n], open at both ends; with a
    single boundary the lone sector spans the full circle minus that ray.
    """

    annulus: Annulus
    boundaries: tuple[float, ...]
    sector_colors: tuple[int, ...]
    boundary_colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "boundaries", tuple(float(b) for b in self.boundaries))
        object.__setattr__(self, "sector_colors", tuple(int(c) for c in self.sector_colors))
        object.__setattr__(self, "boundary_colors", tuple(int(c) for c in self.boundary_colors))
        n = len(self.boundaries)
        if n < 1:
            raise ValueError("a radial coloring needs at least one boundary ray")
        for i, b in enumerate(self.boundaries):
            if not 0.0 <= b < TWO_PI:
                raise ValueError(f"boundary angle {i} out of [0, 2*pi): {b}")
            if i > 0 and b <= self.boundaries[i - 1]:
                raise ValueError(f"boundary angles must be strictly increasing at index {i}")
        if len(self.sector_colors) != n:
            raise ValueError(f"expected {n} sector colors, got {len(self.sector_colors)}")
        if len(self.boundary_colors) != n:
            raise ValueError(f"expected {n} boundary colors, got {len(self.boundary_colors)}")
        for name, colors in (("sector", self.sector_colors), ("boundary", self.boundary_colors)):
            for i, c in enumerate(colors):
                if c < 0:
                    raise ValueError(f"{name} color {i} must be a nonnegative integer, got {c}")

    @property
    def n(self) -> int:
        return len(self.boundaries)

    def sector_width(self, i: int) -> float:
        if self.n == 1:
            return TWO_PI
        width = (self.boundaries[(i + 1) % self.n] - self.boundaries[i]) % TWO_PI
        return width

    def sector(self, i: int) -> AnnularSector:
        """Open sector between boundary rays i and i+1 (full circle minus the ray when n == 1)."""
        arc = AngularInterval(self.boundaries[i], self.sector_width(i), False, False)
        return AnnularSector(self.annulus, arc)

    def boundary_segment(self, i: int) -> AnnularSector:
        return AnnularSector.radial_segment(self.annulus, self.boundaries[i])

    def colors_used(self) -> list[int]:
        return sorted(set(self.sector_colors) | set(self.boundary_colors))

    def pieces(self) -> list[tuple[str, AnnularSector, int]]:
        """All monochromatic pieces as (label, region, color) triples."""
        out: list[tuple[str, AnnularSector, int]] = []
        for i in range(self.n):
            out.append((f"sector {i}", self.sector(i), self.sector_colors[i]))
        for i in range(self.n):
            out.append((f"boundary {i}", self.boundary_segment(i), self.boundary_colors[i]))
        return out


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of checking a radial coloring for unit-distance conflicts."""

    proper: bool
    witness: tuple[Point, Point] | None = None
    color: int | None = None
    piece_labels: tuple[str, str] | None = None


def construct_radial_coloring(r: float) -> RadialColoring:
    """Proper radial coloring with exactly radial_chromatic_number(r) colors.

    N - 1 sectors of width exactly theta take colors 0..N-2 and the leftover
    sector takes color N-1; the ray at angle k*theta takes the color of the
    sector ending there (the clockwise neighbor), so each ray merges with a
    sector of its own color.
    """
    n_colors = radial_chromatic_number(r)
    theta = unit_chord_angle(0.5 + r)
    boundaries = tuple(k * theta for k in range(n_colors))
    sector_colors = tuple(range(n_colors))
    boundary_colors = (n_colors - 1,) + tuple(range(n_colors - 1))
    return RadialColoring(Annulus(r), boundaries, sector_colors, boundary_colors)


def verify_radial_coloring(
    coloring: RadialColoring, tolerance: float = DEFAULT_TOLERANCE
) -> VerificationResult:
    """Check every pair of same-colored pieces (including self-pairs) for a unit chord.

    Sectors are open at both angular ends; boundary rays are closed
    zero-width segments.  Proper iff no same-colored pair of points lies at
    distance exactly 1; otherwise a witness pair is returned.
    """
    pieces = coloring.pieces()
    by_color: dict[int, list[tuple[str, AnnularSector]]] = {}
    for label, region, color in pieces:
        by_color.setdefault(color, []).append((label, region))
    for color in sorted(by_color):
        group = by_color[color]
        for i in range(len(group)):
            for j in range(i, len(group)):
                found, witness = contains_unit_pair(group[i][1], group[j][1], tolerance)
                if found:
                    return VerificationResult(
                        proper=False,
                        witness=witness,
                        color=color,
                        piece_labels=(group[i][0], group[j][0]),
                    )
    return VerificationResult(proper=True)


def _merge_circular(intervals: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Union of closed arcs given as (start, end) with end >= start, on [0, 2*pi]."""
    flat: list[tuple[float, float]] = []
    for start, end in intervals:
        if end - start >= TWO_PI:
            return [(0.0, TWO_PI)]
        if end > TWO_PI:
            flat.append((start, TWO_PI))
            flat.append((0.0, end - TWO_PI))
        else:
            flat.append((start, end))
    flat.sort()
    merged = [flat[0]]
    for start, end in flat[1:]:
        last_start, last_end = merged[-1]
        if start <= last_end:
            merged[-1] = (last_start, max(last_end, end))
        else:
            merged.append((start, end))
    # Stitch across the 0 == 2*pi seam.
    if len(merged) > 1 and merged[0][0] <= 0.0 and merged[-1][1] >= TWO_PI:
        merged[0] = (merged[-1][0] - TWO_PI, merged[0][1])
        merged.pop()
    return merged


def max_color_class_span(coloring: RadialColoring) -> dict[int, float]:
    """Angular width of the smallest arc covering each color's open sectors.

    Boundary rays are excluded (only sector interiors count); a color used
    solely on rays gets span 0.  Equals 2*pi minus the largest angular gap
    left uncovered by the color's sectors.
    """
    spans = {color: 0.0 for color in coloring.colors_used()}
    arcs_by_color: dict[int, list[tuple[float, float]]] = {}
    for i in range(coloring.n):
        start = coloring.boundaries[i]
        arcs_by_color.setdefault(coloring.sector_colors[i], []).append(
            (start, start + coloring.sector_width(i))
        )
    for color, arcs in arcs_by_color.items():
        merged = _merge_circular(arcs)
        if len(merged) == 1 and merged[0][1] - merged[0][0] >= TWO_PI:
            spans[color] = TWO_PI
            continue
        largest_gap = 0.0
        for k in range(len(merged)):
            next_start = merged[(k + 1) % len(merged)][0] + (TWO_PI if k == len(merged) - 1 else 0.0)
            largest_gap = max(largest_gap, next_start - merged[k][1])
        spans[color] = TWO_PI - largest_gap
    return spans


def spans_within_unit_sector(coloring: RadialColoring) -> bool:
    """Whether every color's sector span fits inside one unit-chord sector.

    Holds for every proper radial coloring: a color class whose interior
    needs more than theta of arc would contain a unit chord.
    """
    limit = unit_chord_angle(coloring.annulus.outer_radius) + SPAN_SLACK
    return all(span <= limit for span in max_color_class_span(coloring).values())


def coloring_to_json(coloring: RadialColoring) -> dict:
    return {
        "r": coloring.annulus.r,
        "boundaries": list(coloring.boundaries),
        "sector_colors": list(coloring.sector_colors),
        "boundary_colors": list(coloring.boundary_colors),
    }


def coloring_from_json(data: dict) -> RadialColoring:
    require_keys(data, ("r", "boundaries", "sector_colors", "boundary_colors"), "coloring")
    r = require_number(data["r"], "coloring.r")
    boundaries = [
        require_number(v, f"coloring.boundaries[{i}]")
        for i, v in enumerate(require_list(data["boundaries"], "coloring.boundaries"))
    ]
    sector_colors = [
        require_int(v, f"coloring.sector_colors[{i}]")
        for i, v in enumerate(require_list(data["sector_colors"], "coloring.sector_colors"))
    ]
    boundary_colors = [
        require_int(v, f"coloring.boundary_colors[{i}]")
        for i, v in enumerate(require_list(data["boundary_colors"], "coloring.boundary_colors"))
    ]
    try:
        return RadialColoring(Annulus(r), tuple(boundaries), tuple(sector_colors), tuple(boundary_colors))
    except ValueError as exc:
        raise SchemaError(f"coloring: {exc}") from exc
