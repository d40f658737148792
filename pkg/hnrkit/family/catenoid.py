# -*- coding:utf-8 -*-

"""
Rotational n-catenoids C_a of H^n x R.

The generating curve is the even profile t -> f(a, t) >= a (hyperbolic distance to the
vertical axis at height t), solution of

    f_tt = (n - 1) (1 + f_t^2) coth(f),    f(0) = a,    f_t(0) = 0,

defined on (-T(a), T(a)). Its inverse on [0, T) is

    lambda(a, rho) = sinh^{n-1}(a) * int_a^rho (sinh^{2n-2}(u) - sinh^{2n-2}(a))^{-1/2} du,

and T(a) = lambda(a, +inf). The catenoid has vertical height h_R(a) = 2 T(a), increasing
from 0 to pi/(n-1).

Date:   2026/10/19
"""

import json
import math

import numpy as np
from scipy import optimize
from scipy.integrate import solve_ivp

from hnrkit import const
from hnrkit.mesh import Mesh, ring_faces, uv_sphere
from hnrkit.utils import logger
from hnrkit.quadrature import QuadratureSpec, integrate_improper, integrate_singular_partial
from hnrkit.error import DomainError, DegenerateConfigurationError, IntegrationError, NumericalError

__all__ = ("CatenoidParams", "ProfileCurve", "cat_T", "cat_height", "cat_lambda", "cat_f", "cat_profile_ode",
           "cat_intersection", "cat_mesh", "cat_neck_for_height", "cat_slab_barrier")


class CatenoidParams:
    """Catenoid C_a of H^n x R.

    Attributes:
        n: Dimension of the hyperbolic factor, >= 2.
        a: Neck parameter, the distance of the neck to the axis, > 0.
    """

    def __init__(self, n, a):
        if int(n) != n or n < 2:
            raise DomainError("catenoid dimension n must be an integer >= 2, got {!r}".format(n))
        if not (a > 0 and math.isfinite(a)):
            raise DomainError("catenoid neck a must be positive, got {!r}".format(a))
        self.n = int(n)
        self.a = float(a)
        if self.n == 2:
            logger.warn("n = 2 catenoid evaluated as an extension of the n >= 3 construction", caller=self)

    @property
    def extension(self):
        return self.n == 2

    @property
    def data(self):
        d = {
            "family": const.FAMILY_CATENOID,
            "n": self.n,
            "a": self.a
        }
        if self.extension:
            d["extension"] = True
        return d

    def __str__(self):
        info = json.dumps(self.data)
        return info

    def __repr__(self):
        return str(self)


class ProfileCurve:
    """Sampled profile t -> f(a, t) on [0, T).

    Attributes:
        samples: List of `(t, f)` pairs, t strictly increasing from 0.
        T: Blow-up parameter (always from quadrature).
        params: CatenoidParams.
        source: `ode` or `quadrature-inversion`.
        slopes: f_t at the samples, when known.
    """

    def __init__(self, samples, T, params, source, slopes=None):
        self.samples = [(float(t), float(f)) for t, f in samples]
        self.T = float(T)
        self.params = params
        self.source = source
        self.slopes = None if slopes is None else [float(s) for s in slopes]

    @property
    def t(self):
        return np.array([s[0] for s in self.samples])

    @property
    def f(self):
        return np.array([s[1] for s in self.samples])

    @property
    def ball_radii(self):
        """Poincare-ball radius tanh(f/2) of the rotational orbits."""
        return np.tanh(self.f / 2.0)

    @property
    def klein_radii(self):
        """Radial coordinate tanh(f) of the generating curve in the Klein model."""
        return np.tanh(self.f)

    @property
    def data(self):
        d = {
            "params": self.params.data,
            "T": self.T,
            "source": self.source,
            "samples": len(self.samples)
        }
        return d

    def __str__(self):
        info = json.dumps(self.data)
        return info

    def __repr__(self):
        return str(self)


def _log_sinh(u):
    """log(sinh u) for u > 0 without overflow."""
    return u + np.log(-np.expm1(-2.0 * u)) - math.log(2.0)


def _integrand(params):
    """lambda integrand of the offset delta = u - a, the factor sinh^{n-1}(a) absorbed.

    With D = log(sinh(a + delta) / sinh(a)) the integrand is e^{-mD} / sqrt(1 - e^{-2mD}), m = n - 1.
    """
    a = params.a
    m = params.n - 1
    if a > 700:
        raise DomainError("catenoid neck a = {!r} overflows sinh".format(a))
    sinh_a = math.sinh(a)
    log_sinh_a = float(_log_sinh(a))

    def phi(delta):
        delta = np.asarray(delta, dtype=float)
        near = np.minimum(delta, 1.0)
        d_near = np.log1p(2.0 * np.cosh(a + near / 2.0) * np.sinh(near / 2.0) / sinh_a)
        d_far = _log_sinh(a + delta) - log_sinh_a
        d = np.where(delta <= 1.0, d_near, d_far)
        return np.exp(-m * d) / np.sqrt(-np.expm1(-2.0 * m * d))
    return phi


def cat_T(params, spec=None):
    """Blow-up parameter T(a) and vertical height h_R(a) = 2 T(a).

    Returns:
        (T, h_R)

    Raises:
        AccuracyError: Quadrature tolerance not reached.
    """
    spec = spec or QuadratureSpec.default()
    T = integrate_improper(_integrand(params), params.a, params.n - 1, spec, singular=True, offset=True)
    logger.debug("a:", params.a, "n:", params.n, "T:", T)
    return T, 2.0 * T


def cat_height(params, spec=None):
    """Vertical height h_R(a) = 2 T(a) of C_a."""
    return cat_T(params, spec)[1]


def cat_lambda(params, rho, spec=None, total=None):
    """lambda(a, rho), the parameter t at which the profile reaches distance rho from the axis.

    Args:
        params: CatenoidParams.
        rho: Distance, >= a.
        spec: QuadratureSpec.
        total: T(a) if already computed.

    Raises:
        DomainError: rho < a.
    """
    spec = spec or QuadratureSpec.default()
    if not rho >= params.a:
        raise DomainError("lambda needs rho >= a = {!r}, got {!r}".format(params.a, rho))
    if rho == params.a:
        return 0.0
    return integrate_singular_partial(_integrand(params), params.a, rho, params.n - 1, spec, total=total,
                                      offset=True)


def cat_f(params, t, spec=None, total=None):
    """Profile f(a, t) by inversion of lambda, extended evenly to negative t.

    Solves lambda(a, a + s^2) = |t| for s by bracketing and bisection.

    Raises:
        DomainError: |t| >= T(a).
        NumericalError: No bracket found (|t| within quadrature noise of T).
    """
    spec = spec or QuadratureSpec.default()
    if total is None:
        total = cat_T(params, spec)[0]
    target = abs(float(t))
    if target >= total:
        raise DomainError("|t| = {!r} >= T(a) = {!r}, the profile blows up".format(target, total))
    if target == 0:
        return params.a

    def residual(s):
        return cat_lambda(params, params.a + s * s, spec, total) - target

    hi = 1.0
    for _ in range(60):
        if residual(hi) > 0:
            break
        hi *= 2.0
    else:
        raise NumericalError("no bracket for f(a={!r}, t={!r})".format(params.a, t), [(hi, residual(hi))])
    s = optimize.bisect(residual, 0.0, hi, xtol=const.ROOT_TOL, maxiter=400)
    return params.a + s * s


def cat_profile_ode(params, slope_cap=const.DEFAULT_SLOPE_CAP, step=const.DEFAULT_ODE_STEP, spec=None):
    """Profile by integrating the Cauchy problem with RK45 until f_t exceeds `slope_cap`.

    Args:
        params: CatenoidParams.
        slope_cap: Slope at which the integration stops, > 1.
        step: Largest step, > 0.
        spec: QuadratureSpec of the stored T.

    Returns:
        ProfileCurve with source `ode`.

    Raises:
        DomainError: slope_cap <= 1 or step <= 0.
        IntegrationError: The solver failed (step size underflow) before reaching slope_cap.
    """
    if not slope_cap > 1:
        raise DomainError("slope_cap must be > 1, got {!r}".format(slope_cap))
    if not step > 0:
        raise DomainError("step must be positive, got {!r}".format(step))
    spec = spec or QuadratureSpec.default()
    T = cat_T(params, spec)[0]
    m = params.n - 1

    def rhs(t, y):
        return [y[1], m * (1.0 + y[1] * y[1]) / math.tanh(y[0])]

    def steep(t, y):
        return y[1] - slope_cap
    steep.terminal = True
    steep.direction = 1

    sol = solve_ivp(rhs, (0.0, T), [params.a, 0.0], method="RK45", rtol=1e-12, atol=1e-12, max_step=step,
                    events=steep)
    if sol.status == -1:
        raise IntegrationError("profile integration failed at t = {!r}: {}".format(float(sol.t[-1]), sol.message))
    ts, fs, slopes = sol.t, sol.y[0], sol.y[1]
    keep = np.concatenate([[True], np.diff(ts) > 0])
    logger.debug("a:", params.a, "n:", params.n, "ode samples:", int(keep.sum()), "stopped at t:", float(ts[-1]))
    return ProfileCurve(zip(ts[keep], fs[keep]), T, params, const.PROFILE_SOURCE_ODE, slopes[keep])


def cat_profile_quadrature(params, ts, spec=None):
    """Profile at the parameters `ts` (in [0, T)) by quadrature inversion."""
    spec = spec or QuadratureSpec.default()
    T = cat_T(params, spec)[0]
    samples = [(t, cat_f(params, t, spec, T)) for t in ts]
    return ProfileCurve(samples, T, params, const.PROFILE_SOURCE_QUADRATURE)


def cat_intersection(a, b, n, spec=None, samples=64):
    """Positive parameter t* where the profiles of C_a and C_b cross.

    g(t) = f(a, t) - f(b, t) changes sign exactly once on (0, min T); the crossing is
    bracketed on a scan that accumulates toward min T, then bisected.

    Raises:
        DegenerateConfigurationError: a == b.
        NumericalError: No sign change found; carries the sampled `(t, g)` pairs.
    """
    if a == b:
        raise DegenerateConfigurationError("catenoid intersection needs a != b, got a = b = {!r}".format(a))
    spec = spec or QuadratureSpec.default()
    pa, pb = CatenoidParams(n, a), CatenoidParams(n, b)
    ta, tb = cat_T(pa, spec)[0], cat_T(pb, spec)[0]
    t_min = min(ta, tb)

    def g(t):
        return cat_f(pa, t, spec, ta) - cat_f(pb, t, spec, tb)

    scan = [t_min * k / samples for k in range(1, samples)]
    scan += [t_min * (1.0 - 2.0 ** -k) for k in range(int(math.log2(samples)) + 1, 21)]
    seen = [(0.0, a - b)]
    for t in scan:
        value = g(t)
        if (value > 0) != (seen[-1][1] > 0):
            lo = seen[-1][0]
            root = optimize.bisect(g, lo, t, xtol=const.ROOT_TOL, maxiter=400)
            logger.debug("a:", a, "b:", b, "n:", n, "t*:", root)
            return root
        seen.append((t, value))
    raise NumericalError("no sign change of f(a,t) - f(b,t) on (0, {!r}) for a = {!r}, b = {!r}".format(
        t_min, a, b), seen)


def cat_mesh(params, res_t, res_angle, spec=None, t_max=None):
    """Mesh of the catenoid piece with |t| <= t_max.

    Vertices at height t lie on the rotational orbit of Poincare-ball radius tanh(f(a, t)/2).
    f is the hyperbolic distance to the axis, so tanh(f) is the Klein radius (ProfileCurve.klein_radii)
    and the ball radius is tanh(f/2), the same as ProfileCurve.ball_radii.
    n = 2: closed rings stacked into a tube. n = 3: a UV-sphere orbit per height level.
    n >= 4: the slice of the catenoid by the (x_1, x_2) plane.

    Args:
        params: CatenoidParams.
        res_t: Height levels on each side of t = 0, >= 4.
        res_angle: Vertices per orbit circle, >= 8.
        spec: QuadratureSpec.
        t_max: Truncation height in (0, T), default 0.9 T.

    Raises:
        DomainError: Resolution below minimum or t_max outside (0, T).
    """
    if res_t < 4 or res_angle < 8:
        raise DomainError("catenoid mesh needs res_t >= 4 and res_angle >= 8, got {} {}".format(res_t, res_angle))
    spec = spec or QuadratureSpec.default()
    T = cat_T(params, spec)[0]
    t_max = 0.9 * T if t_max is None else float(t_max)
    if not 0 < t_max < T:
        raise DomainError("t_max must lie in (0, T = {!r}), got {!r}".format(T, t_max))

    half_t = [t_max * k / res_t for k in range(res_t + 1)]
    half_f = [cat_f(params, t, spec, T) for t in half_t]
    ts = np.array([-t for t in half_t[:0:-1]] + half_t)
    radii = np.tanh(np.array(half_f[:0:-1] + half_f) / 2.0)

    if params.n == 3:
        dirs, sphere = uv_sphere(res_angle, res_angle // 2)
        points = np.concatenate([r * dirs for r in radii])
        heights = np.repeat(ts, dirs.shape[0])
        faces = np.concatenate([sphere + k * dirs.shape[0] for k in range(ts.size)])
    else:
        theta = 2.0 * np.pi * np.arange(res_angle) / res_angle
        ring = np.zeros((res_angle, params.n))
        ring[:, 0], ring[:, 1] = np.cos(theta), np.sin(theta)
        points = np.concatenate([r * ring for r in radii])
        heights = np.repeat(ts, res_angle)
        faces = ring_faces(ts.size, res_angle)
    label = "catenoid a={} n={}".format(params.a, params.n)
    mesh = Mesh(points, heights, faces, label)
    logger.info("mesh:", label, "vertices:", len(mesh), "faces:", int(faces.shape[0]), caller=params)
    return mesh


def cat_neck_for_height(h, n, spec=None):
    """Neck a with h_R(a) = h, inverting the increasing height law by bracketing and bisection.

    Raises:
        DomainError: h outside (0, pi/(n-1)), or too close to pi/(n-1) to bracket.
    """
    critical = const.critical_height(n)
    if not 0 < h < critical:
        raise DomainError("catenoid height must lie in (0, {!r}), got {!r}".format(critical, h))
    spec = spec or QuadratureSpec.default()

    def residual(a):
        return cat_height(CatenoidParams(n, a), spec) - h

    lo = hi = 1.0
    while residual(lo) > 0:
        lo /= 2.0
        if lo < 1e-12:
            raise DomainError("height {!r} too small to bracket".format(h))
    while residual(hi) < 0:
        hi *= 2.0
        if hi > 64.0:
            raise DomainError("height {!r} within quadrature noise of {!r}".format(h, critical))
    if lo == hi:
        hi = 2.0 * lo
    return optimize.bisect(residual, lo, hi, xtol=const.ROOT_TOL, maxiter=400)


def cat_slab_barrier(t0, height, n, spec=None, margin=None):
    """Catenoid taller than the slab (t0, t0 + height), centred in it.

    Its compact piece between the slab's slices is `cat_mesh(..., t_max=height/2)` shifted
    by the returned centre.

    Args:
        t0: Bottom of the slab.
        height: Slab height, < pi/(n-1).
        n: Dimension.
        spec: QuadratureSpec.
        margin: Excess of h_R(a) over `height`, default half the gap to pi/(n-1).

    Returns:
        (CatenoidParams, centre)

    Raises:
        DomainError: height + margin not in (0, pi/(n-1)).
    """
    critical = const.critical_height(n)
    if not 0 < height < critical:
        raise DomainError("slab height must lie in (0, {!r}), got {!r}".format(critical, height))
    margin = (critical - height) / 2.0 if margin is None else float(margin)
    if not (margin > 0 and height + margin < critical):
        raise DomainError("margin {!r} does not fit below the critical height {!r}".format(margin, critical))
    a = cat_neck_for_height(height + margin, n, spec)
    return CatenoidParams(n, a), t0 + height / 2.0
