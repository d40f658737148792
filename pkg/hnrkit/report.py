# -*- coding:utf-8 -*-

"""
Self-verification report.

`verify` runs the acceptance checks of the toolkit (height laws, inverse round trips,
route agreement, intersections, symmetry residuals, sweep oracles, obstruction fixtures
and quadrature honesty) and collects one entry per check.

Date:   2026/10/19
"""

import json
import math

import numpy as np
from scipy import special

from hnrkit import const
from hnrkit.tasks import GridTask
from hnrkit.utils import tools, logger
from hnrkit.configure import config
from hnrkit.geometry import BallPoint, Geodesic, IdealPoint, bisector_plane, dist
from hnrkit.quadrature import QuadratureSpec, integrate_sqrt_singular, integrate_improper
from hnrkit.family.catenoid import (CatenoidParams, cat_T, cat_lambda, cat_f, cat_profile_ode, cat_intersection,
                                    cat_mesh)
from hnrkit.family.translation import TranslationParams, AsymptoticCurve, md_H, md_S, md_mesh
from hnrkit.barriers import geodesic_sphere_mesh, sweep_contact, reflect_residual, translate_mesh, first_contact
from hnrkit.obstruction import check_slab_projection, check_strict_convexity

__all__ = ("Report", "verify")


def _rounded(value):
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return tools.float_to_str(value)
        return float(tools.float_to_str(value))
    if isinstance(value, (list, tuple)):
        return [_rounded(v) for v in value]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


class Report:
    """Verification report.

    Attributes:
        entries: List of `{"name", "expected", "observed", "tolerance", "passed"}`.
        metadata: Tolerances, grids and timestamp.
    """

    def __init__(self, metadata=None):
        self.entries = []
        self.metadata = metadata or {}

    def add(self, name, expected, observed, tolerance=None, passed=None):
        """Add an entry; without `passed`, it passes iff |expected - observed| <= tolerance."""
        if passed is None:
            passed = abs(expected - observed) <= tolerance
        entry = {
            "name": name,
            "expected": _rounded(expected),
            "observed": _rounded(observed),
            "tolerance": _rounded(tolerance),
            "passed": bool(passed)
        }
        self.entries.append(entry)
        logger.info("check:", name, "passed:", entry["passed"], caller=self)
        return entry

    @property
    def summary(self):
        return {"passed": sum(1 for e in self.entries if e["passed"]), "total": len(self.entries)}

    @property
    def ok(self):
        return all(e["passed"] for e in self.entries)

    @property
    def data(self):
        d = {
            "entries": self.entries,
            "summary": self.summary,
            "metadata": self.metadata
        }
        return d

    def to_json(self):
        return json.dumps(self.data, indent=2, sort_keys=True)

    def __str__(self):
        return json.dumps(self.summary)

    def __repr__(self):
        return str(self)


def _strictly_increasing(values):
    return all(b > a for a, b in zip(values, values[1:]))


def _strictly_decreasing(values):
    return all(b < a for a, b in zip(values, values[1:]))


def _cat_height_at(a, n, tol):
    return cat_T(CatenoidParams(n, a), QuadratureSpec(tol))[1]


def _md_H_at(d, tol):
    return md_H(d, QuadratureSpec(tol))


def _md_2S_at(d, n, tol):
    return 2.0 * md_S(d, n, QuadratureSpec(tol))


def _check_height_law(report, quick, spec):
    grid = tools.parse_range("0.1:5.0:0.5" if quick else "0.1:5.0:0.1")
    for n in (3, 4):
        critical = const.critical_height(n)
        heights = GridTask.run(_cat_height_at, grid, name="height law n={}".format(n), n=n, tol=spec.tol)
        gaps = [critical - h for h in heights]
        report.add("catenoid height law n={}: increasing".format(n), "strictly increasing",
                   _strictly_increasing(heights), passed=_strictly_increasing(heights))
        report.add("catenoid height law n={}: below pi/(n-1)".format(n), critical, max(heights),
                   passed=max(heights) < critical)
        report.add("catenoid height law n={}: gap decreasing".format(n), "strictly decreasing",
                   _strictly_decreasing(gaps), passed=_strictly_decreasing(gaps))


def _round_trip_error(item, tol, points):
    a, n = item
    spec = QuadratureSpec(tol)
    params = CatenoidParams(n, a)
    T = cat_T(params, spec)[0]
    worst = 0.0
    for t in np.linspace(-0.95 * T, 0.95 * T, points):
        f = cat_f(params, t, spec, T)
        worst = max(worst, abs(cat_lambda(params, f, spec, T) - abs(t)))
    return worst


def _check_round_trip(report, quick, spec):
    combos = [(1.0, 2), (1.0, 3)] if quick else [(a, n) for a in (0.5, 1.0, 2.0) for n in (2, 3, 4)]
    errors = GridTask.run(_round_trip_error, combos, name="round trip", tol=spec.tol, points=10 if quick else 50)
    for (a, n), err in zip(combos, errors):
        report.add("lambda(a, f(a, t)) = |t| a={} n={}".format(a, n), 0.0, err, 1e-8)


def _route_gap(a, tol, stride):
    spec = QuadratureSpec(tol)
    params = CatenoidParams(3, a)
    curve = cat_profile_ode(params, spec=spec)
    worst = 0.0
    for t, f in curve.samples[::stride]:
        if t > 0.9 * curve.T:
            break
        worst = max(worst, abs(f - cat_f(params, t, spec, curve.T)))
    return worst


def _check_routes(report, quick, spec):
    necks = [1.0] if quick else [0.5, 1.0, 2.0]
    gaps = GridTask.run(_route_gap, necks, name="route agreement", tol=spec.tol, stride=8 if quick else 1)
    for a, gap in zip(necks, gaps):
        report.add("ode vs quadrature profile a={} n=3".format(a), 0.0, gap, 1e-6)


def _check_intersections(report, quick, spec):
    rng = np.random.default_rng(20261019)
    pairs = 3 if quick else 20
    samples = 50 if quick else 200
    n = 3
    for _ in range(pairs):
        a, b = sorted(rng.uniform(0.3, 2.5, size=2))
        pa, pb = CatenoidParams(n, a), CatenoidParams(n, b)
        ta, tb = cat_T(pa, spec)[0], cat_T(pb, spec)[0]
        t_min = min(ta, tb)
        ts = t_min * np.arange(1, samples) / samples
        g = np.array([cat_f(pa, t, spec, ta) - cat_f(pb, t, spec, tb) for t in ts])
        changes = np.nonzero(np.diff(np.sign(g)))[0]
        root = cat_intersection(a, b, n, spec)
        name = "catenoid intersection a={:.6f} b={:.6f}".format(a, b)
        report.add(name + ": sign changes", 1, int(changes.size), passed=changes.size == 1)
        if changes.size == 1:
            lo, hi = ts[changes[0]], ts[changes[0] + 1]
            report.add(name + ": root in sampled bracket", [lo, hi], root, passed=lo - 1e-6 <= root <= hi + 1e-6)
        residual = cat_f(pa, root, spec, ta) - cat_f(pb, root, spec, tb)
        report.add(name + ": f(a,t*) = f(b,t*)", 0.0, residual, 1e-6)


def _check_md_heights(report, quick, spec):
    grid = tools.parse_range("1.1:10:1.0" if quick else "1.1:10:0.1")
    values = GridTask.run(_md_H_at, grid, name="H(d)", tol=spec.tol)
    report.add("H(d) decreasing", "strictly decreasing", _strictly_decreasing(values),
               passed=_strictly_decreasing(values))
    report.add("H(d) > pi/2", math.pi / 2, min(values), passed=min(values) > math.pi / 2)
    fine = QuadratureSpec(1e-12)
    gap3 = md_H(1e3, fine) - math.pi / 2
    gap4 = md_H(1e4, fine) - math.pi / 2
    report.add("H(1e4) - pi/2 < 10 (H(1e3) - pi/2)", gap3, gap4, passed=0 < gap4 < 10 * gap3 and gap3 > 0)
    near = [md_H(1.0 + 10.0 ** -k, spec) for k in range(1, 7)]
    report.add("H(1 + 10^-k) increasing", "strictly increasing", _strictly_increasing(near),
               passed=_strictly_increasing(near))
    report.add("H(2)", float(special.ellipk(0.25)), md_H(2.0, spec), 1e-8)
    for n in (3, 4, 5):
        critical = const.critical_height(n)
        doubled = GridTask.run(_md_2S_at, grid, name="2S(d) n={}".format(n), n=n, tol=spec.tol)
        report.add("2S(d) n={} decreasing".format(n), "strictly decreasing", _strictly_decreasing(doubled),
                   passed=_strictly_decreasing(doubled))
        report.add("2S(d) n={} > pi/(n-1)".format(n), critical, min(doubled), passed=min(doubled) > critical)
        far = 2.0 * md_S(1e4, n, fine)
        report.add("2S(1e4) n={} near pi/(n-1)".format(n), critical, far,
                   passed=critical < far < doubled[-1])


def _check_symmetry(report, quick, spec):
    mesh = cat_mesh(CatenoidParams(3, 1.0), 4 if quick else 6, 8 if quick else 12, spec)
    report.add("catenoid mesh about t = 0", 0.0, reflect_residual(mesh, 0.0), 1e-9)
    params = TranslationParams(2, 2.0)
    md, _ = md_mesh(params, 1.5, 6 if quick else 10, spec)
    report.add("M_d mesh about the bisector plane", 0.0, reflect_residual(md, bisector_plane(params.base)), 1e-9)


def _oracle_contact(moving, fixed, g, grid, step, contact_tol):
    """All-pairs vertex distances scanned on the grid, dips searched, then bisected."""
    def clearance(s):
        moved = translate_mesh(moving, g, float(s))
        horizontal = np.array([[dist(p, q) for q in fixed.points] for p in moved.points])
        return float(np.hypot(horizontal, moved.heights[:, None] - fixed.heights[None, :]).min())

    profile = [(s, clearance(s)) for s in grid]
    return first_contact(profile, clearance, step, contact_tol)[0]


def _check_sweeps(report, quick, spec):
    rng = np.random.default_rng(7)
    g = Geodesic([-1.0, 0.0], [1.0, 0.0])
    contact_tol = config.contact_tol
    step = 0.05
    for k in range(2 if quick else 10):
        r1, r2 = rng.uniform(0.2, 0.5, size=2)
        D = r1 + r2 + rng.uniform(0.3, 1.0)
        left = rng.uniform(0.2, 0.8) * D
        x1, x2 = -math.tanh(left / 2.0), math.tanh((D - left) / 2.0)
        moving = geodesic_sphere_mesh(BallPoint([x1, 0.0]), r1, 8, "moving")
        fixed = geodesic_sphere_mesh(BallPoint([x2, 0.0]), r2, 8, "fixed")
        hi = D - r1 - r2 + 0.3
        result = sweep_contact(moving, fixed, g, (0.0, hi), step, contact_tol)
        count = int(math.floor(hi / step + 1e-9))
        grid = [i * step for i in range(count + 1)]
        if hi - grid[-1] > 1e-9 * step:
            grid.append(hi)
        oracle = _oracle_contact(moving, fixed, g, grid, step, contact_tol)
        name = "sweep config {}".format(k)
        if result.contact is None or oracle is None:
            report.add(name + ": contact found", D - r1 - r2, result.contact, passed=False)
            continue
        report.add(name + ": vs all-pairs oracle", oracle, result.contact, step * 1e-3)
        report.add(name + ": vs D - r1 - r2", D - r1 - r2, result.contact, 10 * contact_tol)


def _check_obstruction(report):
    half = np.linspace(0.0, math.pi, 33)
    upper = [IdealPoint.from_angle(a, 0.2) for a in half]
    lower = [IdealPoint.from_angle(a, 0.8) for a in half[::-1]]
    verdict = check_slab_projection(AsymptoticCurve(upper + lower, True), 2)
    report.add("half-circle curve in a slab", const.RULE_SLAB, verdict.rule, passed=verdict.rule == const.RULE_SLAB)

    theta = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
    ellipse = np.column_stack([2.0 * np.cos(theta), np.sin(theta)])
    verdict = check_strict_convexity(ellipse, 2)
    report.add("planar ellipse", const.RULE_CONVEXITY, verdict.rule, passed=verdict.rule == const.RULE_CONVEXITY)

    ring = [IdealPoint.from_angle(a, 2.0) for a in theta]
    ring += [IdealPoint.from_angle(a, -2.0) for a in theta[::-1]]
    verdict = check_slab_projection(AsymptoticCurve(ring, True), 2)
    report.add("full circle beyond the slab", const.VERDICT_NONE, verdict.status,
               passed=verdict.status == const.VERDICT_NONE)


def _check_quadrature(report):
    for tol in (1e-6, 1e-8, 1e-10):
        spec = QuadratureSpec(tol)
        report.add("int_0^1 u^-1/2 tol={}".format(tol), 2.0,
                   integrate_sqrt_singular(lambda u: 1.0 / np.sqrt(u), 0.0, 1.0, spec, offset=True), 10 * tol)
        report.add("int_0^inf e^-u tol={}".format(tol), 1.0,
                   integrate_improper(lambda u: np.exp(-u), 0.0, 1.0, spec), 10 * tol)
        report.add("int_1^inf e^-2u tol={}".format(tol), math.exp(-2.0) / 2.0,
                   integrate_improper(lambda u: np.exp(-2.0 * u), 1.0, 2.0, spec), 10 * tol)


def verify(quick=False, spec=None):
    """Run the acceptance checks.

    Args:
        quick: Coarser grids and fewer random configurations.
        spec: QuadratureSpec, default from the configuration.

    Returns:
        Report.
    """
    spec = spec or QuadratureSpec.default()
    report = Report({
        "quick": quick,
        "quadrature": spec.data,
        "tolerances": dict(config.tolerances),
        "timestamp": tools.get_datetime_str()
    })
    _check_quadrature(report)
    _check_height_law(report, quick, spec)
    _check_round_trip(report, quick, spec)
    _check_routes(report, quick, spec)
    _check_intersections(report, quick, spec)
    _check_md_heights(report, quick, spec)
    _check_symmetry(report, quick, spec)
    _check_sweeps(report, quick, spec)
    _check_obstruction(report)
    logger.info("verify:", report.summary, caller=report)
    return report
