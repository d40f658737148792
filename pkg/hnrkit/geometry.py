# -*- coding:utf-8 -*-

"""
Hyperbolic geometry of H^n (Poincare ball) and H^n x R.

Points of H^n x R are `(x, t)` with `|x| < 1`; ideal points are unit vectors of the
boundary sphere, optionally carrying a height. Isometries are written with Moebius
addition `a (+) x`, the hyperbolic translation taking the origin to `a`.

Date:   2026/10/19
"""

import math

import numpy as np
from scipy import optimize

from hnrkit import const
from hnrkit.error import DomainError, DegenerateConfigurationError, UnsupportedDimensionError

__all__ = ("BallPoint", "IdealPoint", "Geodesic", "VerticalHyperplane", "Line", "Translation", "dist",
           "product_dist", "mobius_add", "reflect", "translate_along", "geodesic_point", "equidistant_offset",
           "dist_to_geodesic", "signed_distance", "region_membership", "plane_through", "bisector_plane")


def _as_vector(x, name="point"):
    v = np.array(x, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise DomainError("{} must be a vector of dimension n >= 2, got shape {}".format(name, v.shape))
    if not np.all(np.isfinite(v)):
        raise DomainError("{} has non-finite coordinates".format(name))
    return v


def _check_ball(x, name="point"):
    v = _as_vector(x, name)
    if np.dot(v, v) >= 1.0:
        raise DomainError("{} {} is outside the open unit ball".format(name, v.tolist()))
    return v


def _coords(p):
    """Ball coordinates of a BallPoint or a plain vector."""
    if isinstance(p, BallPoint):
        return p.x
    return _check_ball(p)


def _frozen(v):
    v = np.array(v, dtype=float)
    v.setflags(write=False)
    return v


class BallPoint:
    """Point of H^n x R in Poincare-ball coordinates.

    Attributes:
        x: Ball coordinate, `|x| < 1`.
        t: Height.
    """

    def __init__(self, x, t=0.0):
        self._x = _frozen(_check_ball(x))
        self._t = float(t)
        if not math.isfinite(self._t):
            raise DomainError("height must be finite, got {}".format(t))

    @property
    def x(self):
        return self._x

    @property
    def t(self):
        return self._t

    @property
    def n(self):
        return self._x.size

    @property
    def data(self):
        return {"x": self._x.tolist(), "t": self._t}

    def __eq__(self, other):
        if not isinstance(other, BallPoint):
            return NotImplemented
        return self._t == other._t and np.array_equal(self._x, other._x)

    def __hash__(self):
        return hash((tuple(self._x.tolist()), self._t))

    def __repr__(self):
        return "BallPoint(x={}, t={!r})".format(self._x.tolist(), self._t)


class IdealPoint:
    """Point of the boundary sphere of H^n, with an optional height.

    Attributes:
        u: Unit vector.
        t: Height, or None for a point of the ideal boundary of H^n alone.
    """

    def __init__(self, u, t=None, tol=const.GEOMETRY_TOL):
        v = _as_vector(u, "ideal point")
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > tol:
            raise DomainError("ideal point must be a unit vector, |u| = {!r}".format(norm))
        self._u = _frozen(v / norm)
        self._t = None if t is None else float(t)
        if self._t is not None and not math.isfinite(self._t):
            raise DomainError("ideal point height must be finite, got {}".format(t))

    @classmethod
    def from_angle(cls, theta, t=None):
        """Ideal point of the circle at infinity of H^2."""
        return cls([math.cos(theta), math.sin(theta)], t)

    @property
    def u(self):
        return self._u

    @property
    def t(self):
        return self._t

    @property
    def n(self):
        return self._u.size

    @property
    def data(self):
        return {"u": self._u.tolist(), "t": self._t}

    def __repr__(self):
        return "IdealPoint(u={}, t={!r})".format(self._u.tolist(), self._t)


def mobius_add(a, x):
    """Moebius addition `a (+) x`; `x` may be a single vector or an `(N, n)` array.

    `x -> a (+) x` is the hyperbolic translation along the diameter through `a` taking the
    origin to `a`; it extends to the boundary sphere.
    """
    a = np.asarray(a, dtype=float)
    x = np.asarray(x, dtype=float)
    ax = x @ a
    aa = float(a @ a)
    xx = np.einsum("...i,...i->...", x, x)
    num = (1.0 + 2.0 * ax + xx)[..., None] * a + (1.0 - aa) * x
    den = 1.0 + 2.0 * ax + aa * xx
    return num / den[..., None]


def dist(p, q):
    """Hyperbolic distance of two points of H^n.

    Uses `sinh(d/2) = |p-q| / sqrt((1-|p|^2)(1-|q|^2))`, accurate for nearby points.

    Raises:
        DomainError: A point outside the open unit ball.
    """
    p = _coords(p)
    q = _coords(q)
    if p.size != q.size:
        raise DomainError("points of different dimension {} and {}".format(p.size, q.size))
    den = math.sqrt((1.0 - p @ p) * (1.0 - q @ q))
    return 2.0 * math.asinh(float(np.linalg.norm(p - q)) / den)


def dist_many(points, q):
    """Distances from each row of `points` to the ball point `q`."""
    points = np.asarray(points, dtype=float)
    q = np.asarray(q, dtype=float)
    diff = np.linalg.norm(points - q, axis=-1)
    den = np.sqrt((1.0 - np.einsum("...i,...i->...", points, points)) * (1.0 - q @ q))
    return 2.0 * np.arcsinh(diff / den)


def dist_matrix(a, b):
    """Pairwise hyperbolic distances between the rows of `a` and `b`."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    diff = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=-1)
    den = np.sqrt(np.outer(1.0 - np.einsum("ij,ij->i", a, a), 1.0 - np.einsum("ij,ij->i", b, b)))
    return 2.0 * np.arcsinh(diff / den)


def product_dist(p, q):
    """Distance of two BallPoints in the product metric of H^n x R."""
    return math.hypot(dist(p.x, q.x), p.t - q.t)


class Geodesic:
    """Complete geodesic of H^n x {0}, oriented from `endpoints[0]` to `endpoints[1]`.

    Attributes:
        endpoints: The two ideal endpoints.
        midpoint: Point of the geodesic closest to the origin (arclength origin).
        direction: Unit direction of the geodesic in the frame where the midpoint sits at the origin.
    """

    def __init__(self, start, end):
        start = start if isinstance(start, IdealPoint) else IdealPoint(start)
        end = end if isinstance(end, IdealPoint) else IdealPoint(end)
        if start.n != end.n:
            raise DomainError("geodesic endpoints of different dimension")
        u, v = start.u, end.u
        angle = 2.0 * math.atan2(float(np.linalg.norm(u - v)), float(np.linalg.norm(u + v)))
        if angle <= 1e-9:
            raise DomainError("geodesic endpoints must be distinct, angle {!r}".format(angle))
        self._endpoints = (IdealPoint(u), IdealPoint(v))
        self._midpoint = _frozen((u + v) / (2.0 + float(np.linalg.norm(u - v))))
        e = mobius_add(-self._midpoint, v)
        self._direction = _frozen(e / np.linalg.norm(e))

    @classmethod
    def from_angles(cls, theta1, theta2):
        """Geodesic of H^2 between two angles of the circle at infinity."""
        return cls(IdealPoint.from_angle(theta1), IdealPoint.from_angle(theta2))

    @property
    def endpoints(self):
        return self._endpoints

    @property
    def midpoint(self):
        return self._midpoint

    @property
    def direction(self):
        return self._direction

    @property
    def n(self):
        return self._midpoint.size

    def to_frame(self, x):
        """Isometry taking the midpoint to the origin and the geodesic to the diameter along `direction`."""
        return mobius_add(-self._midpoint, x)

    def from_frame(self, y):
        return mobius_add(self._midpoint, y)

    def normal(self, direction=None):
        """Unit vector orthogonal to `direction` in the frame, selecting the offset side.

        For n = 2 it is `direction` turned by +90 degrees; otherwise `direction` (a frame
        vector) is made orthogonal, falling back to the first usable coordinate axis.
        """
        e = self._direction
        if direction is None and e.size == 2:
            return np.array([-e[1], e[0]])
        if direction is not None:
            w = np.asarray(direction, dtype=float)
            w = w - (w @ e) * e
            norm = float(np.linalg.norm(w))
            if norm <= const.GEOMETRY_TOL:
                raise DegenerateConfigurationError("offset direction is parallel to the geodesic")
            return w / norm
        for w in np.eye(e.size):
            w = w - (w @ e) * e
            norm = float(np.linalg.norm(w))
            if norm > 0.5:
                return w / norm
        raise DegenerateConfigurationError("no direction orthogonal to the geodesic")

    def __repr__(self):
        return "Geodesic({}, {})".format(self._endpoints[0].u.tolist(), self._endpoints[1].u.tolist())


class Line:
    """Vertical line {p} x R of the asymptotic boundary.

    Attributes:
        base: Ideal point p (height ignored).
    """

    def __init__(self, base):
        base = base if isinstance(base, IdealPoint) else IdealPoint(base)
        self._base = IdealPoint(base.u)

    @classmethod
    def from_angle(cls, theta):
        return cls(IdealPoint.from_angle(theta))

    @property
    def base(self):
        return self._base

    def __repr__(self):
        return "Line({})".format(self._base.u.tolist())


class VerticalHyperplane:
    """Vertical hyperplane pi x R, pi totally geodesic in H^n, with a selected side.

    Stored canonically: diameter-type `{<x, normal> = 0}` when pi passes through the origin,
    sphere-type `{|x - center| = radius}` with `|center|^2 = radius^2 + 1` otherwise.
    The positive side is `<x, normal> > 0` (diameter) or the exterior of the sphere, times `side`.
    """

    def __init__(self, kind, normal=None, center=None, radius=None, side=1):
        if side not in (1, -1):
            raise DomainError("side must be +1 or -1, got {!r}".format(side))
        self._side = side
        if kind == const.PLANE_DIAMETER:
            w = _as_vector(normal, "normal")
            norm = float(np.linalg.norm(w))
            if norm <= const.GEOMETRY_TOL:
                raise DomainError("diameter plane needs a non-zero normal")
            self._kind = kind
            self._normal = _frozen(w / norm)
            self._center = None
            self._radius = None
        elif kind == const.PLANE_SPHERE:
            c = _as_vector(center, "center")
            r = float(radius)
            if not r > 0:
                raise DomainError("degenerate mirror, radius {!r} <= 0".format(r))
            cc = float(c @ c)
            if abs(cc - r * r - 1.0) > const.GEOMETRY_TOL * max(1.0, cc):
                raise DomainError("sphere not orthogonal to the unit sphere: |c|^2 - r^2 = {!r}".format(cc - r * r))
            self._kind = kind
            self._normal = None
            self._center = _frozen(c)
            self._radius = math.sqrt(cc - 1.0)
        else:
            raise DomainError("unknown hyperplane kind {!r}".format(kind))

    @classmethod
    def diameter(cls, normal, side=1):
        return cls(const.PLANE_DIAMETER, normal=normal, side=side)

    @classmethod
    def sphere(cls, center, radius, side=1):
        return cls(const.PLANE_SPHERE, center=center, radius=radius, side=side)

    @property
    def kind(self):
        return self._kind

    @property
    def normal(self):
        return self._normal

    @property
    def center(self):
        return self._center

    @property
    def radius(self):
        return self._radius

    @property
    def side(self):
        return self._side

    @property
    def n(self):
        return (self._normal if self._normal is not None else self._center).size

    def flipped(self):
        """Same hyperplane, other side."""
        if self._kind == const.PLANE_DIAMETER:
            return VerticalHyperplane.diameter(self._normal, -self._side)
        return VerticalHyperplane.sphere(self._center, self._radius, -self._side)

    def sinh_distance(self, x):
        """`sinh` of the signed distance of ball points `x` (single or `(N, n)`), side included."""
        x = np.asarray(x, dtype=float)
        xx = np.einsum("...i,...i->...", x, x)
        if self._kind == const.PLANE_DIAMETER:
            value = 2.0 * (x @ self._normal) / (1.0 - xx)
        else:
            d = x - self._center
            value = (np.einsum("...i,...i->...", d, d) - self._radius ** 2) / (self._radius * (1.0 - xx))
        return self._side * value

    def side_of_ideal(self, u, tol=const.GEOMETRY_TOL):
        """+1 / -1 for an ideal point on the positive / negative side, 0 on the plane."""
        u = np.asarray(u, dtype=float)
        if self._kind == const.PLANE_DIAMETER:
            value = float(u @ self._normal)
        else:
            value = (2.0 - 2.0 * float(u @ self._center)) / self._radius
        if abs(value) <= tol:
            return 0
        return self._side * (1 if value > 0 else -1)

    def reflect_points(self, x):
        """Reflection of ball points `x` (single or `(N, n)`) through the hyperplane."""
        x = np.asarray(x, dtype=float)
        if self._kind == const.PLANE_DIAMETER:
            return x - 2.0 * (x @ self._normal)[..., None] * self._normal
        d = x - self._center
        dd = np.einsum("...i,...i->...", d, d)
        return self._center + (self._radius ** 2 / dd)[..., None] * d

    @property
    def data(self):
        if self._kind == const.PLANE_DIAMETER:
            return {"kind": self._kind, "normal": self._normal.tolist(), "side": self._side}
        return {"kind": self._kind, "center": self._center.tolist(), "radius": self._radius, "side": self._side}

    def __repr__(self):
        return "VerticalHyperplane({})".format(self.data)


def plane_through(g, side=1):
    """Vertical plane g x R over a geodesic of H^2.

    Raises:
        UnsupportedDimensionError: n != 2, where the hyperplane through g is not unique.
    """
    if g.n != 2:
        raise UnsupportedDimensionError("plane through a geodesic needs n = 2, got n = {}".format(g.n))
    u, v = g.endpoints[0].u, g.endpoints[1].u
    s = u + v
    ss = float(s @ s)
    if math.sqrt(ss) <= const.GEOMETRY_TOL:
        return VerticalHyperplane.diameter([-u[1], u[0]], side)
    return VerticalHyperplane.sphere(2.0 * s / ss, float(np.linalg.norm(u - v)) / math.sqrt(ss), side)


def bisector_plane(g, side=1):
    """Hyperplane orthogonal to g through its midpoint; it passes through the origin."""
    return VerticalHyperplane.diameter(g.direction, side)


def reflect(p, mirror):
    """Reflect a BallPoint through a vertical hyperplane, or through the slice t = s.

    Args:
        p: BallPoint.
        mirror: VerticalHyperplane, or a real slice height s (t -> 2s - t).

    Raises:
        DomainError: Degenerate mirror or dimension mismatch.
    """
    if isinstance(mirror, VerticalHyperplane):
        if mirror.n != p.n:
            raise DomainError("mirror of dimension {} for a point of dimension {}".format(mirror.n, p.n))
        x = mirror.reflect_points(p.x)
        return BallPoint(_clip_to_ball(x), p.t)
    s = float(mirror)
    if not math.isfinite(s):
        raise DomainError("slice height must be finite, got {}".format(mirror))
    return BallPoint(p.x, 2.0 * s - p.t)


def _clip_to_ball(x):
    """Pull rounding overshoot of images near the boundary back inside the ball."""
    x = np.asarray(x, dtype=float)
    norm = float(np.linalg.norm(x))
    if norm >= 1.0:
        x = x * ((1.0 - 1e-16) / norm)
    return x


class Translation:
    """Hyperbolic translation by oriented distance `s` along a geodesic, acting slice-wise on H^n x R.
    """

    def __init__(self, g, s):
        self._g = g
        self._s = float(s)
        self._step = math.tanh(self._s / 2.0) * g.direction

    @property
    def geodesic(self):
        return self._g

    @property
    def s(self):
        return self._s

    def apply(self, x):
        """Image of ball points `x` (single or `(N, n)`)."""
        g = self._g
        return g.from_frame(mobius_add(self._step, g.to_frame(x)))

    def __call__(self, p):
        if isinstance(p, BallPoint):
            return BallPoint(_clip_to_ball(self.apply(p.x)), p.t)
        return self.apply(_coords(p))


def translate_along(g, s):
    """Hyperbolic translation along g by oriented distance s (towards `g.endpoints[1]` for s > 0).

    Returns:
        Translation, callable on BallPoints.
    """
    return Translation(g, s)


def geodesic_point(g, tau):
    """Point of g at signed arclength tau from its midpoint."""
    return g.from_frame(math.tanh(tau / 2.0) * g.direction)


def equidistant_offset(g, rho, side, u, direction=None):
    """Point at distance rho from g, over the point of g at arclength u.

    Args:
        g: Geodesic.
        rho: Distance, > 0.
        side: +1 / -1, side of the offset (left of g for n = 2 and side = +1).
        u: Signed arclength parameter along g.
        direction: Frame direction selecting the perpendicular for n >= 3, optional.

    Raises:
        DomainError: rho <= 0 or side not +-1.
    """
    if not rho > 0:
        raise DomainError("offset distance must be positive, got {!r}".format(rho))
    if side not in (1, -1):
        raise DomainError("side must be +1 or -1, got {!r}".format(side))
    w = g.normal(direction)
    along = math.tanh(u / 2.0) * g.direction
    across = side * math.tanh(rho / 2.0) * w
    return _clip_to_ball(g.from_frame(mobius_add(along, across)))


def foot_parameter(p, g):
    """Closed-form arclength of the foot of p on g: tanh(tau) = 2<y,e> / (1 + |y|^2) in the frame."""
    y = g.to_frame(_coords(p))
    return math.atanh(2.0 * float(y @ g.direction) / (1.0 + float(y @ y)))


def dist_to_geodesic(p, g, tol=const.GOLDEN_TOL):
    """Distance of p to g by golden-section minimization of dist along g.

    Returns:
        (distance, tau) with tau the arclength of the foot point.
    """
    x = _coords(p)
    shift = foot_parameter(x, g) - 1.0

    def along(delta):
        return dist(x, _clip_to_ball(geodesic_point(g, shift + delta)))

    # Searched variable sits near 1 so the relative xtol acts as an absolute one.
    res = optimize.minimize_scalar(along, bracket=(0.5, 1.5), method="golden", options={"xtol": tol})
    return float(res.fun), float(shift + res.x)


def signed_distance(x, plane):
    """Signed hyperbolic distance of ball point(s) to a hyperplane, positive on its selected side."""
    if isinstance(x, BallPoint):
        x = x.x
    return np.arcsinh(plane.sinh_distance(x))


def region_membership(p, lines, tol=const.GEOMETRY_TOL):
    """Whether p lies in the closed region P(L_1, ..., L_k) of H^2 x R.

    P_i is the vertical plane whose ideal boundary is L_i u L_{i+1} (L_{k+1} = L_1), and the
    region is the intersection of the half-spaces of the P_i whose ideal boundary contains every L_j.

    Raises:
        DomainError: fewer than 3 lines, repeated base points, n != 2.
        DegenerateConfigurationError: the half-space of some P_i is not determined.
    """
    lines = list(lines)
    if len(lines) < 3:
        raise DomainError("region needs at least 3 lines, got {}".format(len(lines)))
    x = _coords(p)
    if x.size != 2:
        raise UnsupportedDimensionError("region P(L_1..L_k) is defined in H^2 x R, got n = {}".format(x.size))
    bases = [l.base.u for l in lines]
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            if np.linalg.norm(bases[i] - bases[j]) <= 1e-9:
                raise DomainError("lines {} and {} share the base point {}".format(i, j, bases[i].tolist()))
    for plane in _region_planes(bases, tol):
        if plane.sinh_distance(x) < -tol:
            return False
    return True


def _region_planes(bases, tol=const.GEOMETRY_TOL):
    """Half-spaces P~_i of the region, oriented so that every base point is on their closed side."""
    planes = []
    k = len(bases)
    for i in range(k):
        g = Geodesic(bases[i], bases[(i + 1) % k])
        plane = plane_through(g)
        sides = set()
        for j in range(k):
            if j in (i, (i + 1) % k):
                continue
            s = plane.side_of_ideal(bases[j], tol)
            if s:
                sides.add(s)
        if not sides:
            raise DegenerateConfigurationError("every line lies on the plane P_{}".format(i + 1))
        if len(sides) > 1:
            raise DegenerateConfigurationError(
                "lines on both sides of P_{}, no half-space contains them all".format(i + 1))
        planes.append(plane if sides.pop() == 1 else plane.flipped())
    return planes
