# -*- coding:utf-8 -*-

"""
Quadrature kernels for the two integral shapes of the barrier families:
inverse-square-root endpoint singularities and improper tails with exponential decay.

Integrands are called with numpy arrays of nodes and must be vectorized.

Date:   2026/10/19
"""

import math
import heapq

import numpy as np

from hnrkit import const
from hnrkit.utils import logger
from hnrkit.configure import config
from hnrkit.error import DomainError, AccuracyError, ContractViolation

__all__ = ("QuadratureSpec", "integrate", "integrate_sqrt_singular", "integrate_improper",
           "integrate_singular_partial")


# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1], Kronrod points listed from the end.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[-2::-1]])
_KRONROD = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[-2::-1]])
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5, 7, 9, 11, 13]] = [_WG[0], _WG[1], _WG[2], _WG[3], _WG[2], _WG[1], _WG[0]]

# Adaptive subdivision stops here even below max_depth.
_MAX_INTERVALS = 200000


class QuadratureSpec:
    """Accuracy request of a quadrature.

    Attributes:
        tol: Absolute error target, > 0.
        max_depth: Bisection depth cap of the adaptive scheme, >= 10.
    """

    def __init__(self, tol=None, max_depth=None):
        self._tol = float(config.tol if tol is None else tol)
        self._max_depth = int(config.max_depth if max_depth is None else max_depth)
        if not self._tol > 0:
            raise DomainError("quadrature tol must be positive, got {!r}".format(self._tol))
        if self._max_depth < const.MIN_MAX_DEPTH:
            raise DomainError("quadrature max_depth must be >= {}, got {}".format(const.MIN_MAX_DEPTH,
                                                                                 self._max_depth))

    @classmethod
    def default(cls):
        """Spec from the configured `QUADRATURE` section (and `HNR_TOL`)."""
        return cls()

    @property
    def tol(self):
        return self._tol

    @property
    def max_depth(self):
        return self._max_depth

    def scaled(self, factor):
        """Same depth, tolerance times `factor`."""
        return QuadratureSpec(self._tol * factor, self._max_depth)

    @property
    def data(self):
        return {"tol": self._tol, "max_depth": self._max_depth}

    def __repr__(self):
        return "QuadratureSpec(tol={!r}, max_depth={})".format(self._tol, self._max_depth)


def _gk15(f, a, b):
    """Kronrod estimate on [a, b] and |Kronrod - Gauss| as its error."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    values = np.broadcast_to(np.asarray(f(center + half * _NODES), dtype=float), _NODES.shape)
    if not np.all(np.isfinite(values)):
        raise DomainError("integrand is not finite on [{!r}, {!r}]".format(a, b))
    kronrod = half * float(_KRONROD @ values)
    gauss = half * float(_GAUSS @ values)
    return kronrod, abs(kronrod - gauss)


def _adaptive(f, a, b, tol, max_depth):
    """Global adaptive bisection: always split the interval with the largest error estimate.

    Returns:
        (value, error_estimate)

    Raises:
        AccuracyError: An interval at max_depth still needs splitting.
    """
    value, error = _gk15(f, a, b)
    heap = [(-error, a, b, value, error, 0)]
    while True:
        if error <= tol:
            error = math.fsum(item[4] for item in heap)
            if error <= tol:
                break
        if len(heap) >= _MAX_INTERVALS:
            raise AccuracyError("quadrature exhausted {} intervals, error {!r} > tol {!r}".format(
                len(heap), error, tol), math.fsum(item[3] for item in heap), error)
        _, lo, hi, v, e, depth = heapq.heappop(heap)
        if depth >= max_depth:
            heapq.heappush(heap, (-e, lo, hi, v, e, depth))
            estimate = math.fsum(item[3] for item in heap)
            raise AccuracyError("quadrature reached max_depth {} on [{!r}, {!r}], error {!r} > tol {!r}".format(
                max_depth, lo, hi, error, tol), estimate, error)
        mid = 0.5 * (lo + hi)
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, v1, e1, depth + 1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2, depth + 1))
        value += v1 + v2 - v
        error += e1 + e2 - e
    return math.fsum(item[3] for item in heap), error


def integrate(phi, a, b, spec):
    """Adaptive integral of a smooth integrand over a finite interval [a, b]."""
    if not b > a:
        raise DomainError("integration needs b > a, got [{!r}, {!r}]".format(a, b))
    value, error = _adaptive(phi, float(a), float(b), spec.tol, spec.max_depth)
    return value


def integrate_sqrt_singular(phi, a, b, spec, offset=False):
    """Integral over [a, b] of an integrand with a (u - a)^(-1/2) singularity at u = a.

    The substitution u = a + s^2 turns it into the integral of 2 s phi(a + s^2) over
    [0, sqrt(b - a)], smooth at s = 0.

    Args:
        phi: Integrand of u, or of the offset u - a when `offset` is True (exact near a).
        a: Singular endpoint.
        b: Upper limit, > a.
        spec: QuadratureSpec.
        offset: Call `phi(u - a)` with the exact offset s^2.

    Raises:
        DomainError: b <= a.
        AccuracyError: Tolerance not reached within max_depth.
    """
    if not b > a:
        raise DomainError("singular integral needs b > a, got [{!r}, {!r}]".format(a, b))
    if offset:
        def substituted(s):
            return 2.0 * s * phi(s * s)
    else:
        def substituted(s):
            return 2.0 * s * phi(a + s * s)
    value, error = _adaptive(substituted, 0.0, math.sqrt(b - a), spec.tol, spec.max_depth)
    logger.debug("singular integral on", (float(a), float(b)), "value:", value, "error:", error)
    return value


def _tail_cut(phi, a, decay_rate, target):
    """First geometric step u_max = a + w 2^k where |phi(u_max)| / rate < target.

    The rate is the smaller of the caller's `decay_rate` and the decay observed between
    consecutive steps.

    Raises:
        ContractViolation: |phi| does not decrease between steps.
    """
    width = max(1.0, 1.0 / decay_rate)
    prev_u = prev_f = None
    for k in range(64):
        u = a + width * 2.0 ** k
        f = abs(float(np.asarray(phi(np.array([u])), dtype=float).reshape(-1)[0]))
        if not math.isfinite(f):
            raise ContractViolation("integrand not finite at tail point u = {!r}".format(u))
        rate = decay_rate
        if prev_f is not None:
            if f >= prev_f and f > 0 and k >= 2:
                raise ContractViolation("integrand not decaying: |phi({!r})| = {!r} >= |phi({!r})| = {!r}".format(
                    u, f, prev_u, prev_f))
            if f > 0 and prev_f > f:
                rate = min(decay_rate, math.log(prev_f / f) / (u - prev_u))
        if prev_f is not None and f / rate < target:
            return u
        prev_u, prev_f = u, f
    raise ContractViolation("integrand tail above {!r} up to u = {!r}".format(target, prev_u))


def integrate_improper(phi, a, decay_rate, spec, singular=False, offset=False):
    """Integral of phi over [a, +inf) for an exponentially decaying integrand.

    The range is truncated at the first geometric step u_max where the sampled tail bound
    |phi(u_max)| / rate drops below tol/2, then [a, u_max] is integrated to tol/2.

    Args:
        phi: Integrand (of u, or of u - a with `offset`).
        a: Lower limit.
        decay_rate: Caller-asserted rate with |phi(u)| <= C exp(-decay_rate u) for large u.
        spec: QuadratureSpec.
        singular: The integrand has a (u - a)^(-1/2) singularity at a.
        offset: phi takes the offset u - a instead of u.

    Raises:
        DomainError: decay_rate <= 0.
        ContractViolation: Sampled integrand not decaying.
    """
    if not decay_rate > 0:
        raise DomainError("decay_rate must be positive, got {!r}".format(decay_rate))
    half = spec.scaled(0.5)
    if offset:
        def of_u(u):
            return phi(u - a)
    else:
        of_u = phi
    u_max = _tail_cut(of_u, a, decay_rate, half.tol)
    if singular:
        value = integrate_sqrt_singular(phi, a, u_max, half, offset=offset)
    else:
        value = integrate(of_u, a, u_max, half)
    logger.debug("improper integral from", float(a), "cut at", u_max, "value:", value)
    return value


def integrate_singular_partial(phi, a, b, decay_rate, spec, total=None, offset=False):
    """Integral over [a, b] of an integrand singular at a and exponentially decaying.

    Short ranges are integrated directly; long ranges as total minus the tail beyond b, which
    stays accurate for b arbitrarily large.

    Args:
        phi: Integrand (of u, or of u - a with `offset`).
        a: Singular endpoint.
        b: Upper limit, >= a.
        decay_rate: Exponential decay rate of phi.
        spec: QuadratureSpec.
        total: Integral over [a, +inf) if already known.
        offset: phi takes the offset u - a.

    Raises:
        DomainError: b < a.
    """
    if b < a:
        raise DomainError("upper limit {!r} below lower limit {!r}".format(b, a))
    if b == a:
        return 0.0
    half = spec.scaled(0.5)
    if b <= a + max(1.0, 1.0 / decay_rate):
        return integrate_sqrt_singular(phi, a, b, spec, offset=offset)
    if total is None:
        total = integrate_improper(phi, a, decay_rate, half, singular=True, offset=offset)
    if offset:
        def of_u(u):
            return phi(u - a)
    else:
        of_u = phi
    return total - integrate_improper(of_u, b, decay_rate, half)
