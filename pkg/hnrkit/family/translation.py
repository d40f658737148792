# -*- coding:utf-8 -*-

"""
Translation-invariant minimal hypersurfaces M_d (d > 1) of H^n x R.

M_d is the union of two symmetric vertical graphs over the exterior of the equidistant
hypersurface gamma_d, at distance arcosh(d) from a geodesic gamma, inside one half-space
Q_gamma of gamma. The upper graph rises from height 0 on gamma_d to its supremum H(d)
(n = 2) or S(d) (n >= 3):

    H(d) = int_{arcosh d}^inf d (cosh^2 u - d^2)^{-1/2} du
    S(d) = cosh(a) int_1^inf (t^{2n-2} - 1)^{-1/2} (cosh^2(a) t^2 - 1)^{-1/2} dt,   cosh^{n-1}(a) = d

The height over a point at distance rho from gamma is the partial integral up to rho.

Date:   2026/10/19
"""

import json
import math

import numpy as np

from hnrkit import const
from hnrkit.mesh import Mesh, grid_faces
from hnrkit.utils import logger
from hnrkit.geometry import Geodesic, IdealPoint, equidistant_offset, plane_through
from hnrkit.quadrature import QuadratureSpec, integrate_improper, integrate_singular_partial
from hnrkit.error import DomainError, UnsupportedDimensionError

__all__ = ("TranslationParams", "AsymptoticCurve", "md_H", "md_S", "md_height", "md_profile_height",
           "md_mesh", "md_boundary", "md_halfspace")


class TranslationParams:
    """Member M_d of the translation family.

    Attributes:
        n: Dimension of the hyperbolic factor, >= 2.
        d: Parameter, > 1; gamma_d lies at distance arcosh(d) from the base geodesic.
        base: Geodesic gamma, default the diameter from -e_1 to e_1.
    """

    def __init__(self, n, d, base=None):
        if int(n) != n or n < 2:
            raise DomainError("dimension n must be an integer >= 2, got {!r}".format(n))
        _check_d(d)
        self.n = int(n)
        self.d = float(d)
        if base is None:
            e1 = np.zeros(self.n)
            e1[0] = 1.0
            base = Geodesic(-e1, e1)
        if base.n != self.n:
            raise DomainError("base geodesic of dimension {} for n = {}".format(base.n, self.n))
        self.base = base

    @property
    def seam_distance(self):
        """Distance arcosh(d) of gamma_d from gamma."""
        return math.acosh(self.d)

    @property
    def data(self):
        d = {
            "family": const.FAMILY_MD,
            "n": self.n,
            "d": self.d,
            "base": [p.u.tolist() for p in self.base.endpoints]
        }
        return d

    def __str__(self):
        info = json.dumps(self.data)
        return info

    def __repr__(self):
        return str(self)


class AsymptoticCurve:
    """Polyline in the asymptotic boundary of H^n x R.

    Edges join consecutive vertices along the shorter great-circle arc of directions.

    Attributes:
        vertices: List of IdealPoint, each with a finite height.
        closed: The last vertex joins the first.
        boundary_flags: Per vertex, True on the boundary of the curve (or surface) Gamma.
    """

    def __init__(self, vertices, closed, boundary_flags=None):
        vertices = list(vertices)
        if len(vertices) < 2:
            raise DomainError("asymptotic curve needs at least 2 vertices, got {}".format(len(vertices)))
        n = vertices[0].n
        for i, v in enumerate(vertices):
            if v.n != n:
                raise DomainError("vertex {} has dimension {}, expected {}".format(i, v.n, n))
            if v.t is None or not math.isfinite(v.t):
                raise DomainError("vertex {} needs a finite height".format(i))
        count = len(vertices) if closed else len(vertices) - 1
        for i in range(count):
            p, q = vertices[i], vertices[(i + 1) % len(vertices)]
            if np.array_equal(p.u, q.u) and p.t == q.t:
                raise DomainError("consecutive vertices {} and {} coincide".format(i, (i + 1) % len(vertices)))
            if float(p.u @ q.u) <= -1.0 + const.UNIT_TOL:
                raise DomainError("consecutive vertices {} and {} are antipodal, the edge is not determined".format(
                    i, (i + 1) % len(vertices)))
        if boundary_flags is None:
            boundary_flags = [False] * len(vertices)
        boundary_flags = [bool(b) for b in boundary_flags]
        if len(boundary_flags) != len(vertices):
            raise DomainError("{} boundary flags for {} vertices".format(len(boundary_flags), len(vertices)))
        self.vertices = vertices
        self.closed = bool(closed)
        self.boundary_flags = boundary_flags

    @property
    def n(self):
        return self.vertices[0].n

    @property
    def directions(self):
        return np.array([v.u for v in self.vertices])

    @property
    def heights(self):
        return np.array([v.t for v in self.vertices])

    def edges(self):
        """Index pairs of the edges."""
        k = len(self.vertices)
        count = k if self.closed else k - 1
        return [(i, (i + 1) % k) for i in range(count)]

    @property
    def data(self):
        d = {
            "n": self.n,
            "closed": self.closed,
            "vertices": [{"u": v.u.tolist(), "t": v.t, "boundary": b}
                         for v, b in zip(self.vertices, self.boundary_flags)]
        }
        return d

    def __str__(self):
        info = json.dumps(self.data)
        return info

    def __repr__(self):
        return str(self)


def _check_d(d):
    if not (d > 1 and math.isfinite(d)):
        raise DomainError("M_d needs d > 1, got {!r}".format(d))


def _log_cosh(u):
    return np.abs(u) + np.log1p(np.exp(-2.0 * np.abs(u))) - math.log(2.0)


def _h_integrand(d):
    """H integrand of the offset delta = u - arcosh(d).

    With E = log(cosh(u) / d) the integrand is e^{-E} / sqrt(1 - e^{-2E}).
    """
    u0 = math.acosh(d)
    log_d = math.log(d)

    def phi(delta):
        delta = np.asarray(delta, dtype=float)
        near = np.minimum(delta, 1.0)
        e_near = np.log1p(2.0 * np.sinh(u0 + near / 2.0) * np.sinh(near / 2.0) / d)
        e_far = _log_cosh(u0 + delta) - log_d
        e = np.where(delta <= 1.0, e_near, e_far)
        return np.exp(-e) / np.sqrt(-np.expm1(-2.0 * e))
    return phi


def _s_integrand(d, n):
    """S integrand in v = log t, the factor cosh(a) absorbed into the second root.

    e^{-mv} / sqrt(1 - e^{-2mv}) / sqrt(1 - e^{-2v} / cosh^2 a), m = n - 1.
    """
    m = n - 1
    a = math.acosh(d ** (1.0 / m))
    tanh2 = math.tanh(a) ** 2

    def psi(v):
        v = np.asarray(v, dtype=float)
        first = np.exp(-m * v) / np.sqrt(-np.expm1(-2.0 * m * v))
        second = 1.0 / np.sqrt(-np.expm1(-2.0 * v) + np.exp(-2.0 * v) * tanh2)
        return first * second
    return psi, a


def md_H(d, spec=None):
    """Supremum H(d) of the upper graph of M_d for n = 2; decreases from +inf to pi/2.

    Raises:
        DomainError: d <= 1.
    """
    _check_d(d)
    spec = spec or QuadratureSpec.default()
    value = integrate_improper(_h_integrand(d), math.acosh(d), 1.0, spec, singular=True, offset=True)
    logger.debug("d:", float(d), "H:", value)
    return value


def md_S(d, n, spec=None):
    """S(d) for n >= 3; the vertical height 2 S(d) decreases to pi/(n-1).

    Raises:
        DomainError: d <= 1 or n < 3.
    """
    _check_d(d)
    if int(n) != n or n < 3:
        raise DomainError("S(d) needs an integer n >= 3, got {!r}".format(n))
    spec = spec or QuadratureSpec.default()
    psi, _ = _s_integrand(d, int(n))
    value = integrate_improper(psi, 0.0, n - 1.0, spec, singular=True, offset=True)
    logger.debug("d:", float(d), "n:", n, "S:", value)
    return value


def md_height(d, n, spec=None):
    """Supremum of the upper graph: H(d) for n = 2, S(d) for n >= 3."""
    if n == 2:
        return md_H(d, spec)
    return md_S(d, n, spec)


def md_profile_height(d, rho, n, spec=None, total=None):
    """Height of the upper graph of M_d over a point at distance rho from gamma.

    n = 2: int_{arcosh d}^rho d (cosh^2 u - d^2)^{-1/2} du.
    n >= 3: cosh(a) int_1^{cosh(rho)/cosh(a)} (t^{2n-2} - 1)^{-1/2} (cosh^2(a) t^2 - 1)^{-1/2} dt.

    Args:
        d: Parameter, > 1.
        rho: Distance from gamma, at least the lower limit (arcosh d, resp. a).
        n: Dimension.
        spec: QuadratureSpec.
        total: md_height(d, n) if already computed.

    Raises:
        DomainError: d <= 1, or rho below the lower limit.
    """
    _check_d(d)
    spec = spec or QuadratureSpec.default()
    if n == 2:
        lower = math.acosh(d)
        if not rho >= lower:
            raise DomainError("rho = {!r} below arcosh(d) = {!r}".format(rho, lower))
        if rho == lower:
            return 0.0
        return integrate_singular_partial(_h_integrand(d), lower, rho, 1.0, spec, total=total, offset=True)
    if int(n) != n or n < 2:
        raise DomainError("dimension n must be an integer >= 2, got {!r}".format(n))
    psi, a = _s_integrand(d, int(n))
    if not rho >= a:
        raise DomainError("rho = {!r} below the lower limit a = {!r}".format(rho, a))
    if rho == a:
        return 0.0
    # v = log(cosh rho) - log(cosh a), without cancellation near rho = a.
    v = math.log1p(2.0 * math.sinh((rho + a) / 2.0) * math.sinh((rho - a) / 2.0) / math.cosh(a)) \
        if rho - a <= 1.0 else float(_log_cosh(rho) - _log_cosh(a))
    return integrate_singular_partial(psi, 0.0, v, n - 1.0, spec, total=total, offset=True)


def md_halfspace(params):
    """Vertical plane over gamma oriented so that M_d lies on its positive side (n = 2)."""
    plane = plane_through(params.base)
    point = equidistant_offset(params.base, 1.0, 1, 0.0)
    if plane.sinh_distance(point) < 0:
        plane = plane.flipped()
    return plane


def md_boundary(params, spec=None, samples=const.ARC_SAMPLES, height=None):
    """Asymptotic boundary L_d u alpha_d u R_d u alpha_{-d} of M_d for n = 2.

    alpha_d runs at height H(d) along the arc at infinity of Q_gamma from p to q (the
    endpoints of gamma), R_d is the vertical segment {q} x [-H, H], alpha_{-d} returns to p
    at height -H, and the closing edge is L_d.

    Raises:
        UnsupportedDimensionError: n != 2.
    """
    if params.n != 2:
        raise UnsupportedDimensionError("M_d boundary curve needs n = 2, got n = {}".format(params.n))
    if samples < 3:
        raise DomainError("arc samples must be >= 3, got {}".format(samples))
    g = params.base
    H = md_H(params.d, spec) if height is None else float(height)
    e = g.direction
    w = g.normal()
    phis = np.pi - np.pi * np.arange(samples) / (samples - 1)
    arc = []
    for phi in phis:
        u = g.from_frame(math.cos(phi) * e + math.sin(phi) * w)
        arc.append(u / np.linalg.norm(u))
    vertices = [IdealPoint(u, H) for u in arc]
    vertices += [IdealPoint(u, -H) for u in arc[::-1]]
    return AsymptoticCurve(vertices, closed=True)


def md_mesh(params, extent, res, spec=None):
    """Mesh of the two graphs of M_d, with its asymptotic boundary curve (n = 2).

    Vertices sit at equidistant offsets of distance rho_k = arcosh(d) + extent (k/res)^2 from
    gamma over arclength u in [-extent, extent], heights +-md_profile_height. The lower sheet
    shares the seam gamma_d (height 0) with the upper one.

    Args:
        params: TranslationParams.
        extent: Truncation along gamma and away from gamma_d, > 0.
        res: Samples along gamma and across, >= 4.
        spec: QuadratureSpec.

    Returns:
        (Mesh, AsymptoticCurve)

    Raises:
        UnsupportedDimensionError: n != 2.
        DomainError: extent <= 0 or res < 4.
    """
    if params.n != 2:
        raise UnsupportedDimensionError("M_d mesh needs n = 2, got n = {}".format(params.n))
    if not extent > 0:
        raise DomainError("mesh extent must be positive, got {!r}".format(extent))
    if res < 4:
        raise DomainError("mesh resolution must be >= 4, got {}".format(res))
    spec = spec or QuadratureSpec.default()
    g = params.base
    H = md_H(params.d, spec)
    rho0 = params.seam_distance
    us = np.linspace(-extent, extent, res)
    us = (us - us[::-1]) / 2.0
    rhos = [rho0 + extent * (k / res) ** 2 for k in range(res + 1)]
    heights = [0.0] + [md_profile_height(params.d, rho, 2, spec, total=H) for rho in rhos[1:]]

    # Rows of the grid: lower sheet from the outermost offset in, then the upper sheet out.
    rows = [(rhos[k], -heights[k]) for k in range(res, 0, -1)] + [(rhos[k], heights[k]) for k in range(res + 1)]
    points, ts = [], []
    for rho, t in rows:
        for u in us:
            points.append(equidistant_offset(g, rho, 1, float(u)))
            ts.append(t)
    faces = grid_faces(len(rows), res)
    label = "md d={} n=2".format(params.d)
    mesh = Mesh(points, ts, faces, label)
    logger.info("mesh:", label, "vertices:", len(mesh), "faces:", int(faces.shape[0]), caller=params)
    return mesh, md_boundary(params, spec, height=H)
