# -*- coding:utf-8 -*-

"""
Non-existence checks for asymptotic boundary data of minimal hypersurfaces in H^n x R.

Every check certifies its hypotheses at sampling resolution only, with the angular margin
`TOLERANCES.angle_tol_deg` and the strictness margin `TOLERANCES.conv_tol`. A verdict
`no_obstruction_detected` never asserts existence.

Date:   2026/10/19
"""

import json
import math

import numpy as np
from scipy.spatial import ConvexHull, cKDTree

from hnrkit import const
from hnrkit.utils import logger
from hnrkit.configure import config
from hnrkit.geometry import Geodesic, IdealPoint, plane_through
from hnrkit.error import DomainError, UnsupportedDimensionError

__all__ = ("Verdict", "check_slab_projection", "check_asymptotic_theorem", "check_strict_convexity",
           "excluded_halfspace", "halfspace_chart", "check_all")

TWO_PI = 2.0 * math.pi
ARC_TOL = 1e-12  # Covered arcs closer than this are merged.


class Verdict:
    """Result of a non-existence check.

    Attributes:
        status: `obstructed` or `no_obstruction_detected`.
        rule: `slab_and_projection`, `asymptotic_theorem`, `strict_convexity`, or `none`.
        details: Measured quantities.
        checked: The rule that was evaluated, also when it did not apply.
    """

    def __init__(self, status, rule, details, checked=None):
        if (rule == const.RULE_NONE) != (status == const.VERDICT_NONE):
            raise DomainError("verdict rule {!r} inconsistent with status {!r}".format(rule, status))
        self.status = status
        self.rule = rule
        self.details = details
        self.checked = checked or rule

    @property
    def obstructed(self):
        return self.status == const.VERDICT_OBSTRUCTED

    @property
    def citation(self):
        return const.RULE_CITATIONS[self.rule]

    @property
    def data(self):
        d = {
            "status": self.status,
            "rule": self.rule,
            "checked": self.checked,
            "details": self.details,
            "citation": self.citation
        }
        return d

    def __str__(self):
        info = json.dumps(self.data, sort_keys=True)
        return info

    def __repr__(self):
        return str(self)


def _verdict(obstructed, rule, details):
    if obstructed:
        return Verdict(const.VERDICT_OBSTRUCTED, rule, details)
    return Verdict(const.VERDICT_NONE, const.RULE_NONE, details, checked=rule)


def _check_dimension(curve, n):
    if n not in (2, 3):
        raise UnsupportedDimensionError("boundary checks support n = 2 and n = 3, got n = {}".format(n))
    if curve.n != n:
        raise DomainError("boundary directions of dimension {} for n = {}".format(curve.n, n))


def _slab(curve, n, slab_tol):
    """Height span and whether it fits an open slab of the critical height."""
    heights = curve.heights
    low, high = float(heights.min()), float(heights.max())
    critical = const.critical_height(n)
    details = {"t_min": low, "t_max": high, "span": high - low, "critical_height": critical}
    return high - low < critical - slab_tol, details


def _angle(u):
    return math.atan2(float(u[1]), float(u[0])) % TWO_PI


def _covered_arcs(curve):
    """Merged covered arcs `[start, end]` (radians, start in [0, 2pi)) of the projection, n = 2."""
    dirs = curve.directions
    spans = []
    for i, j in curve.edges():
        start = _angle(dirs[i])
        delta = math.atan2(float(dirs[i][0] * dirs[j][1] - dirs[i][1] * dirs[j][0]), float(dirs[i] @ dirs[j]))
        if delta < 0:
            start, delta = (start + delta) % TWO_PI, -delta
        spans.append((start, start + delta))
    for u in dirs:
        spans.append((_angle(u), _angle(u)))
    pieces = []
    for lo, hi in spans:
        if hi > TWO_PI:
            pieces.append((lo, TWO_PI))
            pieces.append((0.0, hi - TWO_PI))
        else:
            pieces.append((lo, hi))
    pieces.sort()
    merged = []
    for lo, hi in pieces:
        if merged and lo <= merged[-1][1] + ARC_TOL:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    if len(merged) > 1 and merged[0][0] <= ARC_TOL and merged[-1][1] >= TWO_PI - ARC_TOL:
        first = merged.pop(0)
        merged[-1][1] = TWO_PI + first[1]
    return merged


def _gaps(arcs):
    """Omitted arcs `(start, width)` between merged covered arcs, widest first."""
    if len(arcs) == 1 and arcs[0][1] - arcs[0][0] >= TWO_PI:
        return []
    gaps = []
    for k, (lo, hi) in enumerate(arcs):
        next_lo = arcs[(k + 1) % len(arcs)][0]
        width = (next_lo - hi) % TWO_PI
        if width > ARC_TOL:
            gaps.append((hi % TWO_PI, width))
    gaps.sort(key=lambda g: -g[1])
    return gaps


def _densify(curve, spacing):
    """Direction samples along the edges with angular spacing at most `spacing`, n = 3."""
    dirs = curve.directions
    samples = [dirs]
    for i, j in curve.edges():
        p, q = dirs[i], dirs[j]
        omega = math.acos(max(-1.0, min(1.0, float(p @ q))))
        steps = int(math.ceil(omega / spacing))
        if steps <= 1:
            continue
        s = np.arange(1, steps) / steps
        chunk = (np.sin((1.0 - s) * omega)[:, None] * p + np.sin(s * omega)[:, None] * q) / math.sin(omega)
        samples.append(chunk / np.linalg.norm(chunk, axis=1)[:, None])
    return np.concatenate(samples)


def _fibonacci_sphere(count):
    k = np.arange(count) + 0.5
    z = 1.0 - 2.0 * k / count
    r = np.sqrt(1.0 - z * z)
    theta = math.pi * (1.0 + math.sqrt(5.0)) * k
    return np.column_stack([r * np.cos(theta), r * np.sin(theta), z])


def _chord_to_angle(chord):
    return 2.0 * np.arcsin(np.minimum(np.asarray(chord) / 2.0, 1.0))


def _omitted_cap(samples, count=const.SPHERE_SAMPLES):
    """Farthest test direction from the sampled projection and its angular distance."""
    grid = _fibonacci_sphere(count)
    chord, _ = cKDTree(samples).query(grid)
    angles = _chord_to_angle(chord)
    k = int(np.argmax(angles))
    return grid[k], float(angles[k])


def _omitted_region(curve, n, angle_tol):
    """Largest omitted region of the projection: (omitted, details, centre direction)."""
    if n == 2:
        gaps = _gaps(_covered_arcs(curve))
        if not gaps:
            return False, {"omitted_arc_deg": None}, None
        start, width = gaps[0]
        centre = start + width / 2.0
        details = {"omitted_arc_deg": [math.degrees(start), math.degrees((start + width) % TWO_PI)],
                   "omitted_width_deg": math.degrees(width)}
        return width > angle_tol, details, np.array([math.cos(centre), math.sin(centre)])
    spacing = angle_tol / 2.0
    centre, radius = _omitted_cap(_densify(curve, spacing))
    certified = radius - spacing / 2.0
    details = {"omitted_cap_centre": centre.tolist(), "omitted_cap_radius_deg": math.degrees(max(certified, 0.0))}
    return certified > angle_tol, details, centre


def check_slab_projection(curve, n, angle_tol_deg=None, slab_tol=None):
    """Closed boundary in an open slab of height pi/(n-1) whose projection omits an open region.

    Args:
        curve: Closed AsymptoticCurve.
        n: 2 or 3.
        angle_tol_deg: Width an omitted arc (or radius a cap) must exceed, degrees.
        slab_tol: Margin below the critical height.

    Raises:
        DomainError: Open curve.
        UnsupportedDimensionError: n not in {2, 3}.
    """
    _check_dimension(curve, n)
    if not curve.closed:
        raise DomainError("slab check needs a closed boundary curve")
    angle_tol = math.radians(config.angle_tol_deg if angle_tol_deg is None else angle_tol_deg)
    slab_tol = config.slab_tol if slab_tol is None else slab_tol
    in_slab, details = _slab(curve, n, slab_tol)
    omitted, region, _ = _omitted_region(curve, n, angle_tol)
    details.update(region)
    details.update({"in_slab": in_slab, "omits_open_region": omitted})
    verdict = _verdict(in_slab and omitted, const.RULE_SLAB, details)
    logger.debug("slab check:", verdict.status, "span:", details["span"])
    return verdict


def _projection_boundary(curve, n, angle_tol):
    """Sampled directions on the topological boundary of Pr(Gamma)."""
    if n == 2:
        ends = []
        for start, width in _gaps(_covered_arcs(curve)):
            ends.append(start)
            ends.append(start + width)
        if not ends:
            return np.zeros((0, 2)), 0.0
        return np.array([[math.cos(a), math.sin(a)] for a in ends]), 0.0
    dirs = curve.directions
    if len(dirs) > 1:
        chord, _ = cKDTree(dirs).query(dirs, k=2)
        resolution = float(_chord_to_angle(chord[:, 1]).max())
    else:
        resolution = angle_tol
    grid = _fibonacci_sphere(const.SPHERE_SAMPLES)
    chord, _ = cKDTree(dirs).query(grid)
    covered = _chord_to_angle(chord) <= resolution
    if covered.all():
        return np.zeros((0, 3)), resolution
    uncovered = cKDTree(grid[~covered])
    chord, _ = uncovered.query(grid[covered])
    boundary = grid[covered][_chord_to_angle(chord) <= 2.0 * resolution]
    return boundary, resolution


def check_asymptotic_theorem(curve, n, angle_tol_deg=None, slab_tol=None):
    """Boundary direction of Pr(Gamma) away from Pr(dGamma), with Gamma in a critical slab.

    Vertices flagged in `boundary_flags` sample dGamma. For n = 3 the vertices are a point
    sample of the surface Gamma.

    Raises:
        DomainError: Open curve without boundary flags.
        UnsupportedDimensionError: n not in {2, 3}.
    """
    _check_dimension(curve, n)
    flags = np.array(curve.boundary_flags, dtype=bool)
    if not curve.closed and not flags.any():
        raise DomainError("open boundary data needs flagged boundary vertices")
    angle_tol = math.radians(config.angle_tol_deg if angle_tol_deg is None else angle_tol_deg)
    slab_tol = config.slab_tol if slab_tol is None else slab_tol
    in_slab, details = _slab(curve, n, slab_tol)
    boundary, resolution = _projection_boundary(curve, n, angle_tol)
    margin = angle_tol + resolution
    witness = None
    if boundary.shape[0]:
        flagged = curve.directions[flags]
        if flagged.shape[0]:
            chord, _ = cKDTree(flagged).query(boundary)
            away = _chord_to_angle(chord)
        else:
            away = np.full(boundary.shape[0], math.pi)
        k = int(np.argmax(away))
        if away[k] > margin:
            witness = boundary[k]
        details["witness_distance_deg"] = math.degrees(float(away[k]))
    details.update({"in_slab": in_slab, "projection_boundary_samples": int(boundary.shape[0]),
                    "witness": None if witness is None else witness.tolist()})
    verdict = _verdict(in_slab and witness is not None, const.RULE_ASYMPTOTIC, details)
    logger.debug("asymptotic check:", verdict.status)
    return verdict


def _segments_cross(p1, p2, q1, q2):
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    d1, d2 = orient(q1, q2, p1), orient(q1, q2, p2)
    d3, d4 = orient(p1, p2, q1), orient(p1, p2, q2)
    return (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0) and d1 * d2 < 0 and d3 * d4 < 0


def _check_simple(points):
    k = len(points)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if _segments_cross(points[i], points[(i + 1) % k], points[j], points[(j + 1) % k]):
                raise DomainError("boundary sample self-intersects at edges {} and {}".format(i, j))


def check_strict_convexity(points, n, conv_tol=None):
    """Strict Euclidean convexity of a closed sample in half-space boundary coordinates.

    n = 2: closed plane polygon; every turning cross product, scaled by the squared
    diameter, exceeds conv_tol with one common sign. n = 3: every point is a vertex of the
    convex hull and lies strictly (conv_tol times the diameter) inside all other facets.

    Raises:
        DomainError: Too few points, self-intersecting polygon, flat point set.
        UnsupportedDimensionError: n not in {2, 3}.
    """
    if n not in (2, 3):
        raise UnsupportedDimensionError("convexity check supports n = 2 and n = 3, got n = {}".format(n))
    conv_tol = config.conv_tol if conv_tol is None else conv_tol
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != n:
        raise DomainError("convexity sample must be an array (N, {}), got shape {}".format(n, points.shape))
    if points.shape[0] < n + 1:
        raise DomainError("convexity sample needs at least {} points".format(n + 1))
    diff = points[:, None, :] - points[None, :, :]
    diam = float(np.sqrt(np.einsum("ijk,ijk->ij", diff, diff).max()))
    if diam == 0:
        raise DomainError("convexity sample is a single point")
    details = {"diameter": diam, "points": int(points.shape[0])}

    if n == 2:
        _check_simple(points)
        before = points - np.roll(points, 1, axis=0)
        after = np.roll(points, -1, axis=0) - points
        cross = (before[:, 0] * after[:, 1] - before[:, 1] * after[:, 0]) / (diam * diam)
        k = int(np.argmin(np.abs(cross)))
        strict = bool(np.all(cross > conv_tol) or np.all(cross < -conv_tol))
        details.update({"min_turning": float(np.abs(cross).min()), "witness": k})
    else:
        try:
            hull = ConvexHull(points)
        except Exception as e:
            raise DomainError("convex hull of the sample failed: {}".format(e))
        extreme = len(hull.vertices) == points.shape[0]
        values = points @ hull.equations[:, :-1].T + hull.equations[:, -1]
        values[hull.simplices.T, np.arange(hull.simplices.shape[0])] = -np.inf
        margin = float(values.max())
        strict = extreme and margin < -conv_tol * diam
        details.update({"hull_vertices": int(len(hull.vertices)), "max_facet_offset": margin})
    verdict = _verdict(strict, const.RULE_CONVEXITY, details)
    logger.debug("convexity check:", verdict.status)
    return verdict


def excluded_halfspace(curve, angle_tol_deg=None):
    """Vertical plane over the omitted arc of Pr(S), n = 2.

    Minimal surfaces with asymptotic boundary S avoid the closed half-space over the
    omitted arc, bounded by the plane gamma x R over the geodesic gamma joining its ends.

    Returns:
        (VerticalHyperplane, side) with `side` the sign of the allowed half-space.

    Raises:
        DomainError: The projection omits no arc wider than angle_tol.
    """
    _check_dimension(curve, 2)
    angle_tol = math.radians(config.angle_tol_deg if angle_tol_deg is None else angle_tol_deg)
    gaps = _gaps(_covered_arcs(curve))
    if not gaps or gaps[0][1] <= angle_tol:
        raise DomainError("the projection omits no arc wider than {!r} degrees".format(math.degrees(angle_tol)))
    start, width = gaps[0]
    end = start + width
    plane = plane_through(Geodesic(IdealPoint.from_angle(start), IdealPoint.from_angle(end)))
    inside = end + (TWO_PI - width) / 2.0
    side = plane.side_of_ideal([math.cos(inside), math.sin(inside)])
    return plane, side


def halfspace_chart(curve, pole, angle_tol_deg=None):
    """Boundary coordinates R^{n-1} x R of the vertices, by stereographic projection from `pole`.

    Raises:
        DomainError: The pole is not omitted by the projection.
    """
    n = curve.n
    pole = np.asarray(pole, dtype=float)
    if pole.size != n:
        raise DomainError("pole of dimension {} for n = {}".format(pole.size, n))
    pole = pole / np.linalg.norm(pole)
    angle_tol = math.radians(config.angle_tol_deg if angle_tol_deg is None else angle_tol_deg)
    if n == 2:
        if not _in_gap(_angle(pole), _gaps(_covered_arcs(curve)), angle_tol):
            raise DomainError("pole {} lies in the projection of the boundary".format(pole.tolist()))
    else:
        chord, _ = cKDTree(_densify(curve, angle_tol / 2.0)).query(pole)
        if _chord_to_angle(chord) <= angle_tol:
            raise DomainError("pole {} lies in the projection of the boundary".format(pole.tolist()))
    basis, _ = np.linalg.qr(np.column_stack([pole, np.eye(n)]))
    basis[:, 0] = pole
    local = curve.directions @ basis
    chart = local[:, 1:] / (1.0 - local[:, :1])
    return np.column_stack([chart, curve.heights])


def _in_gap(angle, gaps, margin):
    """Whether `angle` lies in an omitted arc, farther than `margin` from its ends."""
    for start, width in gaps:
        offset = (angle - start) % TWO_PI
        if margin < offset < width - margin:
            return True
    return False


def check_all(curve, n, chart_points=None):
    """Every applicable check of the boundary data.

    The slab check runs on closed curves, the asymptotic check on open or flagged data and
    the convexity check on `chart_points`, or, for closed curves, on the chart from the
    centre of the omitted region.

    Returns:
        List of Verdict.
    """
    _check_dimension(curve, n)
    verdicts = []
    if curve.closed:
        verdicts.append(check_slab_projection(curve, n))
    if not curve.closed or any(curve.boundary_flags):
        verdicts.append(check_asymptotic_theorem(curve, n))
    if chart_points is not None:
        verdicts.append(check_strict_convexity(chart_points, n))
    elif curve.closed:
        omitted, _, centre = _omitted_region(curve, n, math.radians(config.angle_tol_deg))
        if omitted:
            try:
                verdicts.append(check_strict_convexity(halfspace_chart(curve, centre), n))
            except DomainError as e:
                logger.info("convexity check skipped:", e.msg)
    return verdicts
