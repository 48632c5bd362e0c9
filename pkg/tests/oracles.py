"""Independent oracles and random generators shared across the test suite.

Everything here deliberately avoids the library's analytic machinery: the
distance oracles work from dense grids, and the chromatic oracle is a plain
backtracking enumeration in natural vertex order.
"""

from __future__ import annotations

import math
import random

import numpy as np

from annulus_chroma.geometry import Annulus, AnnularSector
from annulus_chroma.radial import RadialColoring
from annulus_chroma.udg import UnitDistanceGraph

TWO_PI = 2.0 * math.pi


def angle_grid(sector: AnnularSector, n_angles: int) -> np.ndarray:
    arc = sector.arc
    if arc.width == 0.0:
        return np.array([arc.start])
    return arc.start + np.linspace(0.0, arc.width, n_angles)


def radius_grid(sector: AnnularSector, n_radii: int) -> np.ndarray:
    return np.linspace(sector.annulus.inner_radius, sector.annulus.outer_radius, n_radii)


def sector_grid_points(sector: AnnularSector, n_angles: int, n_radii: int) -> np.ndarray:
    angles = angle_grid(sector, n_angles)
    radii = radius_grid(sector, n_radii)
    rho = radii[:, None]
    xs = (rho * np.cos(angles)[None, :]).ravel()
    ys = (rho * np.sin(angles)[None, :]).ravel()
    return np.column_stack([xs, ys])


def _augmented_angles(sector: AnnularSector, other: AnnularSector, n_angles: int) -> np.ndarray:
    """Sector angle grid plus the other arc's endpoints and their antipodes.

    Plain linspaces on two different arcs almost never align, so a grid-only
    sample can miss angular differences of exactly 0 or pi by half a step.
    Adding these few angles (when they fall inside the arc) pins the
    extreme alignments without using any distance analysis.
    """
    base = angle_grid(sector, n_angles)
    extras = []
    other_end = other.arc.start + other.arc.width
    for t in (other.arc.start, other_end):
        for shift in (0.0, math.pi, -math.pi):
            u = (t + shift - sector.arc.start) % TWO_PI
            if u <= sector.arc.width:
                extras.append(sector.arc.start + u)
    if not extras:
        return base
    return np.concatenate([base, np.array(extras)])


def sampled_extremes(
    s1: AnnularSector, s2: AnnularSector, n_angles: int = 400, n_radii: int = 400
) -> tuple[float, float]:
    """Distance extremes over the closure grids of two sectors.

    Uses only the pointwise fact that d^2 = r1^2 + r2^2 - 2*r1*r2*cos(dphi)
    is decreasing in cos(dphi) for positive radii, so the grid extremes
    split into an angle part (extreme cosines over all angle pairs) and a
    radius part (extremes of the quadratic over all radius pairs).
    """
    a1 = _augmented_angles(s1, s2, n_angles)
    a2 = _augmented_angles(s2, s1, n_angles)
    cosines = np.cos(a1[:, None] - a2[None, :])
    c_min = float(cosines.min())
    c_max = float(cosines.max())
    r1 = radius_grid(s1, n_radii)[:, None]
    r2 = radius_grid(s2, n_radii)[None, :]
    base = r1 * r1 + r2 * r2
    cross = 2.0 * r1 * r2
    sq_min = float((base - cross * c_max).min())
    sq_max = float((base - cross * c_min).max())
    return math.sqrt(max(sq_min, 0.0)), math.sqrt(max(sq_max, 0.0))


def pairwise_extremes(
    s1: AnnularSector, s2: AnnularSector, n_angles: int = 120, n_radii: int = 10
) -> tuple[float, float]:
    """Brute-force distance extremes over the full cross product of coarse grids."""
    p1 = sector_grid_points(s1, n_angles, n_radii)
    p2 = sector_grid_points(s2, n_angles, n_radii)
    dx = p1[:, 0][:, None] - p2[:, 0][None, :]
    dy = p1[:, 1][:, None] - p2[:, 1][None, :]
    d = np.hypot(dx, dy)
    return float(d.min()), float(d.max())


def random_sector(
    rng: random.Random, annulus: Annulus, closed: bool = True, allow_degenerate: bool = True
) -> AnnularSector:
    if allow_degenerate and rng.random() < 0.1:
        return AnnularSector.radial_segment(annulus, rng.uniform(0.0, TWO_PI))
    start = rng.uniform(0.0, TWO_PI)
    width = rng.uniform(1e-3, TWO_PI)
    if closed:
        return AnnularSector.of(annulus, start, width, True, True)
    return AnnularSector.of(annulus, start, width, rng.random() < 0.5, rng.random() < 0.5)


def random_point_in(sector: AnnularSector, rng: random.Random) -> tuple[float, float]:
    """Uniform in (angle, radius) parameter space over the closure."""
    phi = sector.arc.start + rng.uniform(0.0, sector.arc.width)
    rho = rng.uniform(sector.annulus.inner_radius, sector.annulus.outer_radius)
    return (rho * math.cos(phi), rho * math.sin(phi))


def random_radial_coloring(
    rng: random.Random, r: float, n_colors: int, max_boundaries: int = 8
) -> RadialColoring:
    n = rng.randint(1, max_boundaries)
    while True:
        angles = sorted(rng.uniform(0.0, TWO_PI) for _ in range(n))
        if len(set(angles)) == n:
            break
    sector_colors = tuple(rng.randrange(n_colors) for _ in range(n))
    boundary_colors = tuple(rng.randrange(n_colors) for _ in range(n))
    return RadialColoring(Annulus(r), tuple(angles), sector_colors, boundary_colors)


def brute_chromatic(graph: UnitDistanceGraph) -> int:
    """Exhaustive chromatic number by backtracking in natural vertex order."""
    masks = graph.adjacency_masks()
    n = graph.n

    def colorable(k: int) -> bool:
        colors = [-1] * n

        def extend(v: int) -> bool:
            if v == n:
                return True
            for c in range(k):
                if all(colors[u] != c for u in range(v) if masks[v] >> u & 1):
                    colors[v] = c
                    if extend(v + 1):
                        return True
                    colors[v] = -1
            return False

        return extend(0)

    for k in range(1, n + 1):
        if colorable(k):
            return k
    return n


def brute_colorable(graph: UnitDistanceGraph, k: int) -> bool:
    """Whether some k-coloring is proper, by scanning assignments exhaustively."""
    import itertools

    from annulus_chroma.udg import is_proper

    return any(is_proper(graph, assignment) for assignment in itertools.product(range(k), repeat=graph.n))


def random_graph(rng: random.Random, max_n: int = 8, edge_probability: float = 0.4) -> UnitDistanceGraph:
    n = rng.randint(1, max_n)
    edges = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < edge_probability
    )
    return UnitDistanceGraph(n, edges)
