# -*- coding:utf-8 -*-

"""
Maximum-principle experiments on meshes of H^n x R.

Clearance between two meshes is the smallest product-metric distance from a vertex of
one to a triangle of the other, both ways. A triangle is the flat triangle spanned by its
vertices in ball coordinates; distances to it are refined by 4-way subdivision with a
branch-and-bound on the hyperbolic diameter of the pieces, then polished by a constrained
local minimization over the triangle.

Contact found this way is a numerical illustration at mesh resolution, not a proof.

Date:   2026/10/19
"""

import json
import math

import numpy as np
from scipy import optimize

from hnrkit import const
from hnrkit.mesh import Mesh, uv_sphere
from hnrkit.tasks import GridTask
from hnrkit.utils import logger
from hnrkit.configure import config
from hnrkit.geometry import BallPoint, VerticalHyperplane, Translation, dist_many, dist_matrix, mobius_add
from hnrkit.error import DomainError

__all__ = ("SweepResult", "mesh_distance", "vertex_clearances", "translate_mesh", "reflect_mesh", "sweep_contact",
           "halfspace_clearance", "reflect_residual", "geodesic_sphere_mesh")


class SweepResult:
    """Outcome of a sweep.

    Attributes:
        contact: First contact parameter s*, or None.
        clearance_profile: List of `(s, min_distance)` on the sampled grid.
        status: `contact`, `disjoint` or `exhausted`.
        contact_distance: Clearance at s*, <= contact_tol.
    """

    def __init__(self, contact, clearance_profile, status, contact_distance=None):
        self.contact = contact
        self.clearance_profile = clearance_profile
        self.status = status
        self.contact_distance = contact_distance

    @property
    def data(self):
        d = {
            "status": self.status,
            "contact": self.contact,
            "contact_distance": self.contact_distance,
            "clearance_profile": [[s, c] for s, c in self.clearance_profile]
        }
        return d

    def __str__(self):
        info = json.dumps(self.data)
        return info

    def __repr__(self):
        return str(self)


def _product_dist_matrix(xa, ta, xb, tb):
    return np.hypot(dist_matrix(xa, xb), ta[:, None] - tb[None, :])


def _product_dist_many(x, t, xs, ts):
    return np.hypot(dist_many(xs, x), t - ts)


def _diameter_bound(tri):
    """Upper bound of the product-metric diameter of a flat triangle, rows `(x, t)`."""
    x, t = tri[:, :-1], tri[:, -1]
    edges = [np.linalg.norm(x[i] - x[j]) for i, j in ((0, 1), (1, 2), (2, 0))]
    r2 = float(np.max(np.einsum("ij,ij->i", x, x)))
    horizontal = max(edges) * 2.0 / (1.0 - r2)
    return math.hypot(horizontal, float(t.max() - t.min()))


def _inside(uv):
    uv = np.clip(uv, 0.0, 1.0)
    total = uv.sum()
    return uv / total if total > 1.0 else uv


def _polish(x, t, tri, seed):
    """Local minimum of the product distance over the triangle, from barycentric `seed`."""
    origin, span = tri[0], np.array([tri[1] - tri[0], tri[2] - tri[0]])

    def squared(uv):
        row = origin + _inside(uv) @ span
        return float(_product_dist_many(x, t, row[None, :-1], row[None, -1])[0] ** 2)

    found = optimize.minimize(squared, seed, method="SLSQP", bounds=[(0.0, 1.0), (0.0, 1.0)],
                              constraints=[{"type": "ineq", "fun": lambda uv: 1.0 - uv[0] - uv[1]}],
                              options={"ftol": 1e-16, "maxiter": 100})
    return math.sqrt(squared(found.x))


def _point_triangle(x, t, tri, best, tol, depth=const.TRIANGLE_DEPTH):
    """Product distance from (x, t) to the triangle, or `best` if it cannot beat it by tol.

    Pieces are barycentric sub-triangles; a piece is dropped once its nearest corner minus its
    diameter bound cannot beat `best`. Pieces still open at `depth` hand over to a constrained
    local minimization over the whole triangle, seeded at the best corner.
    """
    origin, span = tri[0], np.array([tri[1] - tri[0], tri[2] - tri[0]])
    seed, capped = None, False
    stack = [(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]), 0)]
    while stack:
        piece, level = stack.pop()
        rows = origin + piece @ span
        values = _product_dist_many(x, t, rows[:, :-1], rows[:, -1])
        k = int(np.argmin(values))
        if values[k] < best:
            best, seed = float(values[k]), piece[k]
        if best <= 0.0:
            return 0.0
        if max(0.0, float(values[k]) - _diameter_bound(rows)) >= best - tol:
            continue
        if level >= depth:
            capped = True
            continue
        m01 = 0.5 * (piece[0] + piece[1])
        m12 = 0.5 * (piece[1] + piece[2])
        m20 = 0.5 * (piece[2] + piece[0])
        for child in ([piece[0], m01, m20], [m01, piece[1], m12], [m20, m12, piece[2]], [m01, m12, m20]):
            stack.append((np.array(child), level + 1))
    if not capped:
        return best
    if seed is None:
        seed = np.array([1.0, 1.0]) / 3.0
    return min(best, _polish(x, t, tri, seed))


def _refine(source, target, tol, shared):
    """Per-vertex clearances of `source` against `target`.

    With `shared` only the overall minimum is needed, so a vertex-triangle pair is refined
    only while it can still beat the smallest clearance found so far.
    """
    if len(source) == 0 or len(target) == 0:
        raise DomainError("clearance of an empty mesh")
    D = _product_dist_matrix(source.points, source.heights, target.points, target.heights)
    result = D.min(axis=1)
    if target.faces.shape[0] == 0:
        return result
    tris = target.coords[target.faces]
    diam = np.array([_diameter_bound(tri) for tri in tris])
    lower = np.maximum(D[:, target.faces].min(axis=2) - diam[None, :], 0.0)
    ceiling = float(result.min())
    vs, fs = np.nonzero(lower < (ceiling if shared else result[:, None]) - tol)
    for i in np.argsort(lower[vs, fs], kind="stable"):
        v, f = vs[i], fs[i]
        threshold = ceiling if shared else result[v]
        if lower[v, f] >= threshold - tol:
            continue
        result[v] = _point_triangle(source.points[v], source.heights[v], tris[f], result[v], tol)
        ceiling = min(ceiling, float(result[v]))
    return result


def vertex_clearances(source, target, tol=const.TRIANGLE_TOL):
    """Per vertex of `source`, the product distance to the nearest triangle (or vertex) of `target`."""
    return _refine(source, target, tol, shared=False)


def mesh_distance(a, b, tol=const.TRIANGLE_TOL):
    """Two-sided vertex-to-triangle clearance of two meshes."""
    there = float(_refine(a, b, tol, shared=True).min())
    back = float(_refine(b, a, tol, shared=True).min())
    return min(there, back)


def _clip_rows(x):
    norms = np.linalg.norm(x, axis=1)
    over = norms >= 1.0
    if np.any(over):
        x = x.copy()
        x[over] *= ((1.0 - 1e-16) / norms[over])[:, None]
    return x


def translate_mesh(mesh, g, s):
    """Image of a mesh under the translation by s along g."""
    return mesh.moved(points=_clip_rows(Translation(g, s).apply(mesh.points)))


def reflect_mesh(mesh, mirror):
    """Image of a mesh under the reflection through a vertical hyperplane or the slice t = mirror."""
    if isinstance(mirror, VerticalHyperplane):
        if mirror.n != mesh.n:
            raise DomainError("mirror of dimension {} for a mesh of dimension {}".format(mirror.n, mesh.n))
        return mesh.moved(points=_clip_rows(mirror.reflect_points(mesh.points)))
    s = float(mirror)
    if not math.isfinite(s):
        raise DomainError("slice height must be finite, got {!r}".format(mirror))
    return mesh.moved(heights=2.0 * s - mesh.heights)


def _clearance_at(s, moving, fixed, g, tol):
    return mesh_distance(translate_mesh(moving, g, s), fixed, tol)


def _dip(profile, i):
    """Bracket around sample i when it is a local minimum of the sampled clearance, else None.

    Meshes passing through each other between two samples show up only as a dip of the
    unsigned clearance.
    """
    if i == 0 or profile[i][1] >= profile[i - 1][1]:
        return None
    if i + 1 < len(profile):
        if profile[i][1] > profile[i + 1][1]:
            return None
        return profile[i - 1][0], profile[i + 1][0]
    return profile[i - 1][0], profile[i][0]


def first_contact(profile, clearance, step, contact_tol):
    """First parameter where a sampled clearance reaches contact_tol.

    A sample at or below contact_tol is bisected against the previous one; a sampled dip is
    searched for its minimum first (bounded Brent), then bisected from its left end. Both
    stop at step * 1e-6.

    Args:
        profile: `[(s, clearance)]` in increasing s.
        clearance: Callable s -> clearance, for points between samples.
        step: Sampling step.
        contact_tol: Contact threshold.

    Returns:
        (s, clearance at s), or (None, None) without contact.
    """
    resolution = step * 1e-6
    for i, (s, c) in enumerate(profile):
        if c <= contact_tol:
            if i == 0:
                return s, c
            left, right, at = profile[i - 1][0], s, c
        else:
            bracket = _dip(profile, i)
            if bracket is None:
                continue
            found = optimize.minimize_scalar(clearance, bounds=bracket, method="bounded",
                                             options={"xatol": resolution})
            if not found.fun <= contact_tol:
                continue
            left, right, at = bracket[0], float(found.x), float(found.fun)
        while right - left > resolution:
            mid = 0.5 * (left + right)
            value = clearance(mid)
            if value <= contact_tol:
                right, at = mid, value
            else:
                left = mid
        return right, at
    return None, None


def sweep_contact(moving, fixed, g, s_range, step, contact_tol=None, tol=const.TRIANGLE_TOL):
    """Translate `moving` along g over `s_range` and report the first contact with `fixed`.

    The clearance is sampled at `lo, lo + step, ...` up to `hi` and handed to `first_contact`:
    the first sample at or below `contact_tol`, or the first sampled dip whose minimum reaches
    it, is refined by bisection down to step * 1e-6.

    Args:
        moving: Mesh moved by translate_along(g, s).
        fixed: Mesh kept in place.
        g: Geodesic of the sweep.
        s_range: (lo, hi), lo <= hi.
        step: Sampling step, > 0.
        contact_tol: Contact threshold, default `TOLERANCES.contact_tol`.
        tol: Vertex-to-triangle refinement tolerance.

    Returns:
        SweepResult.

    Raises:
        DomainError: Empty meshes, step <= 0, lo > hi, dimension mismatch.
    """
    contact_tol = config.contact_tol if contact_tol is None else float(contact_tol)
    if len(moving) == 0 or len(fixed) == 0:
        raise DomainError("sweep needs non-empty meshes")
    if moving.n != fixed.n or moving.n != g.n:
        raise DomainError("sweep meshes and geodesic of different dimensions")
    if not step > 0:
        raise DomainError("sweep step must be positive, got {!r}".format(step))
    if not contact_tol > 0:
        raise DomainError("contact_tol must be positive, got {!r}".format(contact_tol))
    lo, hi = float(s_range[0]), float(s_range[1])
    if lo > hi:
        raise DomainError("sweep range ({!r}, {!r}) is empty".format(lo, hi))

    count = int(math.floor((hi - lo) / step + 1e-9))
    grid = [lo + i * step for i in range(count + 1)]
    if hi - grid[-1] > 1e-9 * step:
        grid.append(hi)
    clearances = GridTask.run(_clearance_at, grid, name="sweep", moving=moving, fixed=fixed, g=g, tol=tol)
    profile = list(zip(grid, [float(c) for c in clearances]))

    def clearance(s):
        return _clearance_at(float(s), moving, fixed, g, tol)

    contact, at = first_contact(profile, clearance, step, contact_tol)
    if contact is not None:
        result = SweepResult(contact, profile, const.SWEEP_STATUS_CONTACT, at)
    else:
        decreasing = len(profile) > 1 and profile[-1][1] < profile[-2][1]
        status = const.SWEEP_STATUS_EXHAUSTED if decreasing else const.SWEEP_STATUS_DISJOINT
        result = SweepResult(None, profile, status)
    logger.info("sweep", moving.label, "vs", fixed.label, "status:", result.status, "contact:", result.contact)
    return result


def halfspace_clearance(mesh, plane, side=1):
    """Smallest signed distance of the vertices to `plane`, positive on its `side` half-space.

    Returns:
        (min_signed_distance, witness vertex index)
    """
    if side not in (1, -1):
        raise DomainError("side must be +1 or -1, got {!r}".format(side))
    if len(mesh) == 0:
        raise DomainError("clearance of an empty mesh")
    if plane.n != mesh.n:
        raise DomainError("plane of dimension {} for a mesh of dimension {}".format(plane.n, mesh.n))
    values = side * np.arcsinh(plane.sinh_distance(mesh.points))
    witness = int(np.argmin(values))
    return float(values[witness]), witness


def reflect_residual(mesh, mirror, tol=const.TRIANGLE_TOL):
    """Two-sided Hausdorff-type distance between a mesh and its mirror image."""
    image = reflect_mesh(mesh, mirror)
    there = vertex_clearances(mesh, image, tol)
    back = vertex_clearances(image, mesh, tol)
    return float(max(there.max(), back.max()))


def geodesic_sphere_mesh(centre, radius, res=12, label="sphere"):
    """Product-metric sphere of H^2 x R about `centre`, with poles on the horizontal e_1 axis.

    A direction w of S^2 maps to the point at horizontal distance radius |(w_1, w_2)| in the
    direction (w_1, w_2) from the centre and height t + radius w_3.

    Args:
        centre: BallPoint of H^2 x R.
        radius: Product-metric radius, > 0.
        res: Vertices per latitude ring, >= 4.
        label: Mesh label.
    """
    if not isinstance(centre, BallPoint):
        centre = BallPoint(centre)
    if centre.n != 2:
        raise DomainError("geodesic sphere mesh lives in H^2 x R, got n = {}".format(centre.n))
    if not radius > 0:
        raise DomainError("sphere radius must be positive, got {!r}".format(radius))
    if res < 4:
        raise DomainError("sphere resolution must be >= 4, got {}".format(res))
    dirs, faces = uv_sphere(res, max(2, res // 2))
    dirs = dirs[:, [2, 0, 1]]
    horizontal = np.linalg.norm(dirs[:, :2], axis=1)
    scale = np.where(horizontal > 0, np.tanh(radius * horizontal / 2.0) / np.maximum(horizontal, 1e-300), 0.0)
    offsets = scale[:, None] * dirs[:, :2]
    points = mobius_add(centre.x, offsets)
    heights = centre.t + radius * dirs[:, 2]
    return Mesh(points, heights, faces, label)
