"""Exact planar geometry of annuli, angular intervals, and distances between sectors.

All angles are radians, normalized to [0, 2*pi). Angular intervals carry
explicit open/closed endpoint flags because colorings assign boundary rays
to one adjacent sector; treating everything as closed would reject valid
colorings whose extreme chords sit exactly on an excluded boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_TOLERANCE = 1e-9
TWO_PI = 2.0 * math.pi

Point = tuple[float, float]


def normalize_angle(angle: float) -> float:
    """Reduce an angle to the canonical range [0, 2*pi)."""
    a = angle % TWO_PI
    if a >= TWO_PI or a < 0.0:
        a = 0.0
    return a


@dataclass(frozen=True)
class Annulus:
    """Closed ring centered at the origin: inner radius 1/2 - r, outer radius 1/2 + r.

    The half-width r must satisfy 0 < r < 1/2, so the inner radius is
    positive and the two radii always sum to 1.
    """

    r: float

    def __post_init__(self) -> None:
        if not 0.0 < self.r < 0.5:
            raise ValueError(f"annulus half-width must lie strictly in (0, 1/2), got {self.r}")

    @property
    def inner_radius(self) -> float:
        return 0.5 - self.r

    @property
    def outer_radius(self) -> float:
        return 0.5 + self.r

    def contains(self, point: Point, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        rho = math.hypot(point[0], point[1])
        return self.inner_radius - tolerance <= rho <= self.outer_radius + tolerance

    def strictly_contains(self, point: Point, slack: float = DEFAULT_TOLERANCE) -> bool:
        """True when the point is interior with clearance at least ``slack``."""
        rho = math.hypot(point[0], point[1])
        return self.inner_radius + slack < rho < self.outer_radius - slack


@dataclass(frozen=True)
class AngularInterval:
    """Arc of directions [start, start + width] with per-endpoint open/closed flags.

    width == 0 is the degenerate single-direction case and requires both
    endpoints closed.  width == 2*pi is the full circle; both flags are
    then ignored.  Membership is invariant under adding multiples of 2*pi
    to the query angle.
    """

    start: float
    width: float
    start_closed: bool = True
    end_closed: bool = True

    def __post_init__(self) -> None:
        if not 0.0 <= self.width <= TWO_PI:
            raise ValueError(f"interval width must lie in [0, 2*pi], got {self.width}")
        if self.width == 0.0 and not (self.start_closed and self.end_closed):
            raise ValueError("zero-width interval must be closed at both endpoints")
        object.__setattr__(self, "start", normalize_angle(self.start))

    @property
    def end(self) -> float:
        return self.start + self.width

    def contains(self, angle: float, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        if self.width >= TWO_PI:
            return True
        t = normalize_angle(angle - self.start)
        if t <= tolerance or t >= TWO_PI - tolerance:
            return self.start_closed
        if abs(t - self.width) <= tolerance:
            return self.end_closed
        return t < self.width


@dataclass(frozen=True)
class AnnularSector:
    """Intersection of an annulus with an angular interval (full radial extent)."""

    annulus: Annulus
    arc: AngularInterval

    @classmethod
    def of(
        cls,
        annulus: Annulus,
        start: float,
        width: float,
        start_closed: bool = True,
        end_closed: bool = True,
    ) -> "AnnularSector":
        return cls(annulus, AngularInterval(start, width, start_closed, end_closed))

    @classmethod
    def radial_segment(cls, annulus: Annulus, angle: float) -> "AnnularSector":
        """Degenerate sector: the intersection of one ray with the annulus."""
        return cls(annulus, AngularInterval(angle, 0.0, True, True))

    @property
    def is_radial_segment(self) -> bool:
        return self.arc.width == 0.0

    def contains(self, point: Point, tolerance: float = DEFAULT_TOLERANCE) -> bool:
        if not self.annulus.contains(point, tolerance):
            return False
        return self.arc.contains(math.atan2(point[1], point[0]), tolerance)


@dataclass(frozen=True)
class DistanceInterval:
    """Range of Euclidean distances realizable between two sectors.

    The min/max are the extremes over the sector closures; the attainment
    flags record whether each extreme is realized by a point pair that
    respects the sectors' open/closed endpoint flags.
    """

    min: float
    max: float
    min_attained_interior: bool
    max_attained_interior: bool


def unit_chord_angle(outer_radius: float) -> float:
    """Central angle subtended by a chord of length 1 on a circle of the given radius.

    Equals 2*asin(1/(2*R)); defined only for R > 1/2, where the unit chord
    exists.  Strictly decreasing in the radius.
    """
    if outer_radius <= 0.5:
        raise ValueError(f"outer radius must exceed 1/2 for a unit chord to exist, got {outer_radius}")
    return 2.0 * math.asin(1.0 / (2.0 * outer_radius))


# --------------------------------------------------------------------------
# Distance analysis between two sectors of the same annulus.
#
# With p = (rho1, phi1) and q = (rho2, phi2),
#     d^2 = rho1^2 + rho2^2 - 2*rho1*rho2*cos(phi1 - phi2),
# which is strictly decreasing in cos(phi1 - phi2) and jointly convex in
# the radii.  The angular difference phi1 - phi2 ranges over an arc of
# width w1 + w2, so the extremes of cos over that arc (with attainment
# flags derived from the endpoint flags) reduce the problem to a small
# radius-box optimization.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class _AngleExtreme:
    value: float  # extreme value of cos(delta)
    delta: float  # a realizing angular difference, within [lo, hi]
    attained: bool  # realizable by a pair respecting the endpoint flags


@dataclass(frozen=True)
class _PairAnalysis:
    interval: DistanceInterval
    arc1: AngularInterval
    arc2: AngularInterval
    cos_max: _AngleExtreme  # governs the distance minimum
    cos_min: _AngleExtreme  # governs the distance maximum
    radii_min: tuple[float, float]
    radii_max: tuple[float, float]
    swapped: bool


def _difference_arc(arc1: AngularInterval, arc2: AngularInterval):
    """Unwrapped range [lo, hi] of phi1 - phi2 plus endpoint attainment flags."""
    lo = arc1.start - (arc2.start + arc2.width)
    hi = (arc1.start + arc1.width) - arc2.start
    lo_ok = arc1.start_closed and arc2.end_closed
    hi_ok = arc1.end_closed and arc2.start_closed
    if arc1.width >= TWO_PI:
        lo_ok = hi_ok = True
    if arc2.width >= TWO_PI:
        lo_ok = hi_ok = True
    return lo, hi, lo_ok, hi_ok


def _cos_extreme(
    arc1: AngularInterval,
    arc2: AngularInterval,
    target: float,
    want_max: bool,
    tolerance: float,
) -> _AngleExtreme:
    """Extreme of cos over the angular-difference arc.

    ``target`` is the critical angle of cos being hunted (0 for the max,
    pi for the min); if it is unreachable the extreme sits at an arc
    endpoint.
    """
    lo, hi, lo_ok, hi_ok = _difference_arc(arc1, arc2)
    span = hi - lo

    if span >= TWO_PI + tolerance:
        delta = lo + ((target - lo) % TWO_PI)
        return _AngleExtreme(math.cos(target), delta, True)

    u = (target - lo) % TWO_PI
    if u >= TWO_PI - tolerance:
        u = 0.0

    if abs(span - TWO_PI) <= tolerance:
        # Full circle with a single seam at lo (== hi mod 2*pi).
        if u <= tolerance or u >= span - tolerance:
            return _AngleExtreme(math.cos(target), lo, lo_ok or hi_ok)
        return _AngleExtreme(math.cos(target), lo + u, True)

    at_lo = u <= tolerance
    at_hi = abs(u - span) <= tolerance
    if at_lo and at_hi:
        return _AngleExtreme(math.cos(target), lo, lo_ok or hi_ok)
    if at_lo:
        return _AngleExtreme(math.cos(target), lo, lo_ok)
    if at_hi:
        return _AngleExtreme(math.cos(target), hi, hi_ok)
    if u < span:
        return _AngleExtreme(math.cos(target), lo + u, True)

    # Critical angle unreachable: the extreme is at an arc endpoint.
    v_lo = math.cos(abs(lo))
    v_hi = math.cos(abs(hi))
    if abs(v_lo - v_hi) <= 1e-12:
        return _AngleExtreme(v_lo if want_max else v_hi, lo, lo_ok or hi_ok)
    if (v_lo > v_hi) == want_max:
        return _AngleExtreme(v_lo, lo, lo_ok)
    return _AngleExtreme(v_hi, hi, hi_ok)


def _dist_sq(r1: float, r2: float, c: float) -> float:
    return r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * c


def _sector_key(s: AnnularSector):
    a = s.arc
    return (a.start, a.width, a.start_closed, a.end_closed)


def _analyze_pair(s1: AnnularSector, s2: AnnularSector, tolerance: float) -> _PairAnalysis:
    if s1.annulus != s2.annulus:
        raise ValueError("sectors belong to different annuli")

    # Canonical operand order makes the result exactly symmetric in (s1, s2).
    swapped = _sector_key(s2) < _sector_key(s1)
    arc1, arc2 = (s2.arc, s1.arc) if swapped else (s1.arc, s2.arc)

    cos_max = _cos_extreme(arc1, arc2, 0.0, want_max=True, tolerance=tolerance)
    cos_min = _cos_extreme(arc1, arc2, math.pi, want_max=False, tolerance=tolerance)

    a = s1.annulus.inner_radius
    b = s1.annulus.outer_radius
    corners = ((a, a), (a, b), (b, a), (b, b))

    # Maximum distance: d^2 is convex in the radii, so the maximum over the
    # radius box sits at a corner, evaluated at the smallest cos.
    radii_max = max(corners, key=lambda p: _dist_sq(p[0], p[1], cos_min.value))
    d_max = math.sqrt(max(0.0, _dist_sq(radii_max[0], radii_max[1], cos_min.value)))

    # Minimum distance: corners plus the per-edge critical points
    # rho1 = cos * rho2 (present only when cos > 0).
    candidates = list(corners)
    c = cos_max.value
    if c > 0.0:
        for fixed in (a, b):
            crit = c * fixed
            if a <= crit <= b:
                candidates.append((crit, fixed))
                candidates.append((fixed, crit))
    radii_min = min(candidates, key=lambda p: _dist_sq(p[0], p[1], c))
    d_min = math.sqrt(max(0.0, _dist_sq(radii_min[0], radii_min[1], c)))

    interval = DistanceInterval(
        min=d_min,
        max=d_max,
        min_attained_interior=cos_max.attained,
        max_attained_interior=cos_min.attained,
    )
    return _PairAnalysis(interval, arc1, arc2, cos_max, cos_min, radii_min, radii_max, swapped)


def sector_distance_interval(
    s1: AnnularSector, s2: AnnularSector, tolerance: float = DEFAULT_TOLERANCE
) -> DistanceInterval:
    """Exact range of ||p - q|| over p in s1, q in s2.

    Both sectors must belong to the same annulus.  Because sectors are
    connected and distance is continuous, every value in [min, max] is
    realized by some pair of closure points; the attainment flags report
    whether the extremes survive the open/closed endpoint flags.
    """
    return _analyze_pair(s1, s2, tolerance).interval


def _pair_for_delta(arc1: AngularInterval, arc2: AngularInterval, delta: float) -> tuple[float, float]:
    """Angles (phi1, phi2), unwrapped within the arcs, with phi1 - phi2 = delta."""
    u0, w1 = arc1.start, arc1.width
    v0, w2 = arc2.start, arc2.width
    lo = u0 - (v0 + w2)
    hi = (u0 + w1) - v0
    delta = min(max(delta, lo), hi)
    phi2_lo = max(v0, u0 - delta)
    phi2_hi = min(v0 + w2, u0 + w1 - delta)
    phi2 = 0.5 * (phi2_lo + phi2_hi)
    return phi2 + delta, phi2


def _polar_point(rho: float, phi: float) -> Point:
    return (rho * math.cos(phi), rho * math.sin(phi))


def _extreme_witness(analysis: _PairAnalysis, side: str) -> tuple[Point, Point]:
    if side == "min":
        extreme, radii = analysis.cos_max, analysis.radii_min
    else:
        extreme, radii = analysis.cos_min, analysis.radii_max
    phi1, phi2 = _pair_for_delta(analysis.arc1, analysis.arc2, extreme.delta)
    p = _polar_point(radii[0], phi1)
    q = _polar_point(radii[1], phi2)
    return (q, p) if analysis.swapped else (p, q)


def _clamped_offset(arc: AngularInterval, phi: float, margin: float) -> float:
    """Offset of phi within [0, width], pushed off any open endpoint by ``margin``."""
    offset = min(max(phi - arc.start, 0.0), arc.width)
    lo = margin if (not arc.start_closed and arc.width > 0.0) else 0.0
    hi = arc.width - (margin if (not arc.end_closed and arc.width > 0.0) else 0.0)
    if lo > hi:  # interval too narrow for the margin; fall back to the midpoint
        return 0.5 * arc.width
    return min(max(offset, lo), hi)


def _bisect_witness(analysis: _PairAnalysis, tolerance: float) -> tuple[Point, Point]:
    """Pair at distance exactly 1 when 1 lies strictly inside the distance range.

    Bisects along a straight-line path in (offset1, rho1, offset2, rho2)
    space between a near-minimum and a near-maximum configuration.  Open
    endpoints are avoided by clamping offsets inward; the clamp margin
    shrinks adaptively until the path endpoints bracket distance 1.
    """
    arc1, arc2 = analysis.arc1, analysis.arc2
    phi1_min, phi2_min = _pair_for_delta(arc1, arc2, analysis.cos_max.delta)
    phi1_max, phi2_max = _pair_for_delta(arc1, arc2, analysis.cos_min.delta)

    def config_distance(o1: float, r1: float, o2: float, r2: float) -> float:
        delta = (arc1.start + o1) - (arc2.start + o2)
        return math.sqrt(max(0.0, _dist_sq(r1, r2, math.cos(delta))))

    margin = 4.0 * tolerance
    for _ in range(45):
        c_lo = (
            _clamped_offset(arc1, phi1_min, margin),
            analysis.radii_min[0],
            _clamped_offset(arc2, phi2_min, margin),
            analysis.radii_min[1],
        )
        c_hi = (
            _clamped_offset(arc1, phi1_max, margin),
            analysis.radii_max[0],
            _clamped_offset(arc2, phi2_max, margin),
            analysis.radii_max[1],
        )
        d_lo = config_distance(*c_lo)
        d_hi = config_distance(*c_hi)
        if d_lo > d_hi:
            c_lo, c_hi = c_hi, c_lo
            d_lo, d_hi = d_hi, d_lo
        if d_lo < 1.0 < d_hi:
            lo_u, hi_u = 0.0, 1.0
            for _ in range(100):
                mid = 0.5 * (lo_u + hi_u)
                cfg = tuple(c_lo[k] + mid * (c_hi[k] - c_lo[k]) for k in range(4))
                if config_distance(*cfg) < 1.0:
                    lo_u = mid
                else:
                    hi_u = mid
            u = 0.5 * (lo_u + hi_u)
            cfg = tuple(c_lo[k] + u * (c_hi[k] - c_lo[k]) for k in range(4))
            p = _polar_point(cfg[1], arc1.start + cfg[0])
            q = _polar_point(cfg[3], arc2.start + cfg[2])
            return (q, p) if analysis.swapped else (p, q)
        margin *= 0.25
    raise RuntimeError("failed to bracket a unit-distance pair despite interior containment")


def contains_unit_pair(
    s1: AnnularSector, s2: AnnularSector, tolerance: float = DEFAULT_TOLERANCE
) -> tuple[bool, tuple[Point, Point] | None]:
    """Whether some p in s1 and q in s2 are at distance exactly 1.

    Returns (verdict, witness).  A distance-1 value strictly inside the
    realizable range always yields a witness; a value matching the range
    minimum or maximum counts only when the corresponding extreme is
    attained by points respecting the open/closed flags.
    """
    analysis = _analyze_pair(s1, s2, tolerance)
    di = analysis.interval
    if 1.0 < di.min - tolerance or 1.0 > di.max + tolerance:
        return False, None
    if di.min + tolerance < 1.0 < di.max - tolerance:
        return True, _bisect_witness(analysis, tolerance)
    if abs(1.0 - di.min) <= tolerance and di.min_attained_interior:
        return True, _extreme_witness(analysis, "min")
    if abs(1.0 - di.max) <= tolerance and di.max_attained_interior:
        return True, _extreme_witness(analysis, "max")
    return False, None
