# -*- coding:utf-8 -*-

import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import optimize

from hnrkit import const
from hnrkit.error import DomainError
from hnrkit.mesh import Mesh
from hnrkit.configure import config
from hnrkit.geometry import (BallPoint, Geodesic, VerticalHyperplane, dist_matrix, dist_to_geodesic, plane_through,
                             signed_distance)
from hnrkit.barriers import (mesh_distance, vertex_clearances, translate_mesh, reflect_mesh, sweep_contact,
                             halfspace_clearance, reflect_residual, geodesic_sphere_mesh, _point_triangle)
from hnrkit.family.catenoid import CatenoidParams, cat_mesh

AXIS = Geodesic([-1.0, 0.0], [1.0, 0.0])


def sphere_at(offset, radius, res=8, height=0.0, label="sphere"):
    return geodesic_sphere_mesh(BallPoint([math.tanh(offset / 2.0), 0.0], height), radius, res, label)


def all_pairs(a, b):
    d = np.hypot(dist_matrix(a.points, b.points), a.heights[:, None] - b.heights[None, :])
    return float(d.min())


def test_sphere_mesh_radius():
    mesh = geodesic_sphere_mesh(BallPoint([0.2, -0.1], 1.0), 0.4, res=10)
    centre = BallPoint([0.2, -0.1], 1.0)
    d = np.hypot(dist_matrix(mesh.points, centre.x[None, :])[:, 0], mesh.heights - 1.0)
    assert d == pytest.approx(np.full(len(mesh), 0.4), abs=1e-12)
    # Poles on the horizontal e1 axis through the centre.
    assert mesh.heights[0] == pytest.approx(1.0) and mesh.heights[-1] == pytest.approx(1.0)
    with pytest.raises(DomainError):
        geodesic_sphere_mesh(BallPoint([0.0, 0.0, 0.0]), 0.4)
    with pytest.raises(DomainError):
        geodesic_sphere_mesh(BallPoint([0.0, 0.0]), 0.0)


def test_vertex_clearance_to_triangle_interior():
    flat = Mesh([[-0.5, -0.5], [0.5, -0.5], [0.0, 0.5]], [0.0, 0.0, 0.0], [[0, 1, 2]], "flat")
    patch = Mesh([[0.0, 0.0], [0.01, 0.0], [0.0, 0.01]], [1.0, 1.0, 1.0], [[0, 1, 2]], "patch")
    clearance = vertex_clearances(patch, flat)
    # The origin lies inside the flat triangle, right below the first patch vertex.
    assert clearance[0] == pytest.approx(1.0, abs=1e-7)
    assert all_pairs(patch, flat) > 1.4


def test_mesh_distance_symmetric_and_bounded():
    a = sphere_at(-1.0, 0.3)
    b = sphere_at(1.0, 0.3)
    d = mesh_distance(a, b)
    assert d == pytest.approx(mesh_distance(b, a), abs=1e-12)
    assert d <= all_pairs(a, b)
    assert d == pytest.approx(2.0 - 0.6, abs=1e-6)


def test_empty_mesh():
    empty = Mesh(np.zeros((0, 2)), [], [])
    with pytest.raises(DomainError):
        vertex_clearances(empty, sphere_at(0.0, 0.3))


@given(st.floats(min_value=-2.0, max_value=2.0), st.floats(min_value=-2.0, max_value=2.0))
@settings(max_examples=20, deadline=None)
def test_translate_mesh_group_law(s1, s2):
    mesh = sphere_at(0.3, 0.2, res=6)
    twice = translate_mesh(translate_mesh(mesh, AXIS, s1), AXIS, s2)
    once = translate_mesh(mesh, AXIS, s1 + s2)
    assert twice.points == pytest.approx(once.points, abs=1e-10)
    assert np.array_equal(twice.heights, mesh.heights)


def test_translate_mesh_preserves_clearance():
    a, b = sphere_at(-0.8, 0.3), sphere_at(0.9, 0.25)
    moved = mesh_distance(translate_mesh(a, AXIS, 0.7), translate_mesh(b, AXIS, 0.7))
    assert moved == pytest.approx(mesh_distance(a, b), abs=1e-9)


def test_reflect_mesh():
    mesh = sphere_at(0.5, 0.3, height=1.0)
    slice_image = reflect_mesh(mesh, 0.0)
    assert slice_image.heights == pytest.approx(-mesh.heights)
    mirror = VerticalHyperplane.diameter([1.0, 0.0])
    image = reflect_mesh(mesh, mirror)
    assert image.points[:, 0] == pytest.approx(-mesh.points[:, 0])
    with pytest.raises(DomainError):
        reflect_mesh(mesh, VerticalHyperplane.diameter([1.0, 0.0, 0.0]))
    with pytest.raises(DomainError):
        reflect_mesh(mesh, float("inf"))


def test_reflect_residual():
    centred = sphere_at(0.0, 0.3)
    assert reflect_residual(centred, VerticalHyperplane.diameter([1.0, 0.0])) <= 1e-12
    assert reflect_residual(centred, 0.0) <= 1e-12
    off = sphere_at(0.0, 0.3, height=0.5)
    assert reflect_residual(off, 0.0) > 0.3


def test_sweep_contact_between_spheres():
    fixed = sphere_at(1.0, 0.3)
    moving = sphere_at(-1.0, 0.3)
    result = sweep_contact(moving, fixed, AXIS, (0.0, 2.0), 0.05)
    assert result.status == const.SWEEP_STATUS_CONTACT
    # Poles on the axis touch once the centres are 0.6 apart.
    assert result.contact == pytest.approx(1.4, abs=1e-5)
    assert result.contact_distance <= 1e-6
    assert len(result.clearance_profile) == 41
    assert result.clearance_profile[0] == (0.0, pytest.approx(1.4, abs=1e-9))


def test_sweep_finds_contact_between_samples():
    # Poles meet at s = 1.4; the samples 1.32 and 1.42 straddle it.
    result = sweep_contact(sphere_at(-1.0, 0.3), sphere_at(1.0, 0.3), AXIS, (0.02, 1.52), 0.1)
    assert result.status == const.SWEEP_STATUS_CONTACT
    assert result.contact == pytest.approx(1.4, abs=1e-5)
    assert result.contact_distance <= 1e-6
    assert all(c > 0.01 for _, c in result.clearance_profile)


def test_sweep_disjoint_and_exhausted():
    fixed = sphere_at(1.0, 0.3)
    away = sweep_contact(sphere_at(2.0, 0.3), fixed, AXIS, (0.0, 1.0), 0.25)
    assert away.status == const.SWEEP_STATUS_DISJOINT
    assert away.contact is None
    short = sweep_contact(sphere_at(-1.0, 0.3), fixed, AXIS, (0.0, 0.5), 0.25)
    assert short.status == const.SWEEP_STATUS_EXHAUSTED


def test_sweep_contact_at_start():
    mesh = sphere_at(0.0, 0.3)
    result = sweep_contact(mesh, mesh, AXIS, (0.0, 1.0), 0.5)
    assert result.contact == 0.0
    assert result.contact_distance == 0.0


def test_sweep_arguments():
    mesh = sphere_at(0.0, 0.3)
    with pytest.raises(DomainError):
        sweep_contact(mesh, mesh, AXIS, (0.0, 1.0), 0.0)
    with pytest.raises(DomainError):
        sweep_contact(mesh, mesh, AXIS, (1.0, 0.0), 0.1)
    with pytest.raises(DomainError):
        sweep_contact(mesh, mesh, Geodesic([-1.0, 0.0, 0.0], [1.0, 0.0, 0.0]), (0.0, 1.0), 0.1)


def test_halfspace_clearance():
    mesh = sphere_at(1.0, 0.3)
    plane = VerticalHyperplane.diameter([1.0, 0.0])
    clearance, witness = halfspace_clearance(mesh, plane)
    assert clearance == pytest.approx(0.7, abs=1e-9)
    assert mesh.points[witness][0] == pytest.approx(math.tanh(0.35), abs=1e-12)
    assert halfspace_clearance(mesh, plane, side=-1)[0] == pytest.approx(-1.3, abs=1e-9)
    with pytest.raises(DomainError):
        halfspace_clearance(mesh, plane, side=0)


def test_triangle_polish_converts_scalars_cleanly():
    tri = np.array([[-0.2, -0.2, 0.0], [0.3, -0.2, 0.0], [-0.2, 0.3, 0.0]])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        # depth 0 hands the whole triangle to the constrained polish at once.
        found = _point_triangle(np.array([0.0, 0.0]), 0.5, tri, math.inf, 1e-12, depth=0)
    assert found == pytest.approx(0.5, abs=1e-6)
    assert not [w for w in caught if issubclass(w.category, DeprecationWarning) and w.filename.endswith("barriers.py")]


def approach(r1, r2, extra, fraction):
    """Moving and fixed spheres on AXIS whose centres are r1 + r2 + extra apart."""
    D = r1 + r2 + extra
    return sphere_at(-fraction * D, r1, label="moving"), sphere_at((1.0 - fraction) * D, r2, label="fixed")


def all_pairs_contact(moving, fixed, grid, step, contact_tol):
    """First contact of the vertex-to-vertex clearance: grid scan, dip minimum, bisection."""
    def clearance(s):
        return all_pairs(translate_mesh(moving, AXIS, float(s)), fixed)

    values = [clearance(s) for s in grid]
    for i, s in enumerate(grid):
        left = right = None
        if values[i] <= contact_tol:
            if i == 0:
                return s
            left, right = grid[i - 1], s
        elif 0 < i and values[i] < values[i - 1] and (i + 1 == len(grid) or values[i] <= values[i + 1]):
            bounds = (grid[i - 1], grid[min(i + 1, len(grid) - 1)])
            bottom = optimize.minimize_scalar(clearance, bounds=bounds, method="bounded",
                                              options={"xatol": step * 1e-6})
            if bottom.fun <= contact_tol:
                left, right = grid[i - 1], float(bottom.x)
        if left is not None:
            while right - left > step * 1e-6:
                mid = 0.5 * (left + right)
                if clearance(mid) <= contact_tol:
                    right = mid
                else:
                    left = mid
            return right
    return None


@given(st.floats(min_value=0.2, max_value=0.5), st.floats(min_value=0.2, max_value=0.5),
       st.floats(min_value=0.3, max_value=1.0), st.floats(min_value=0.2, max_value=0.8))
@settings(max_examples=4, deadline=None)
def test_sweep_matches_all_pairs_scan(r1, r2, extra, fraction):
    moving, fixed = approach(r1, r2, extra, fraction)
    step, hi = 0.05, extra + 0.3
    result = sweep_contact(moving, fixed, AXIS, (0.0, hi), step)
    grid = [s for s, _ in result.clearance_profile]
    expected = all_pairs_contact(moving, fixed, grid, step, config.contact_tol)
    assert expected is not None
    assert result.contact == pytest.approx(expected, abs=step * 1e-3)
    assert result.contact == pytest.approx(extra, abs=10 * config.contact_tol)


@given(st.floats(min_value=0.3, max_value=1.0), st.lists(st.floats(min_value=1e-6, max_value=0.2),
                                                        min_size=2, max_size=4, unique=True))
@settings(max_examples=5, deadline=None)
def test_sweep_contact_monotone_in_contact_tol(extra, tolerances):
    moving, fixed = approach(0.3, 0.25, extra, 0.5)
    contacts = [sweep_contact(moving, fixed, AXIS, (0.0, extra + 0.3), 0.05, contact_tol).contact
                for contact_tol in sorted(tolerances)]
    assert None not in contacts
    assert all(later <= earlier for earlier, later in zip(contacts, contacts[1:]))


def relabelled(mesh, seed):
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(mesh))
    position = np.argsort(order)
    faces = position[mesh.faces][rng.permutation(mesh.faces.shape[0])]
    return Mesh(mesh.points[order], mesh.heights[order], faces, mesh.label)


@given(st.integers(min_value=0, max_value=2 ** 32 - 1), st.sampled_from([1, -1]))
@settings(max_examples=25, deadline=None)
def test_halfspace_clearance_ignores_labelling(seed, side):
    mesh = sphere_at(0.6, 0.4, res=6, height=0.2)
    plane = VerticalHyperplane.sphere([1.6, 0.4], math.sqrt(1.6 ** 2 + 0.4 ** 2 - 1.0))
    value, _ = halfspace_clearance(mesh, plane, side)
    shuffled = relabelled(mesh, seed)
    again, witness = halfspace_clearance(shuffled, plane, side)
    assert again == pytest.approx(value, abs=1e-15)
    assert side * float(signed_distance(shuffled.points[witness], plane)) == pytest.approx(value, abs=1e-15)


MIRRORS = [0.0, VerticalHyperplane.diameter([1.0, 0.0]), VerticalHyperplane.diameter([0.0, 1.0])]


@given(st.floats(min_value=-1.0, max_value=1.0), st.floats(min_value=0.1, max_value=0.5),
       st.floats(min_value=-1.0, max_value=1.0), st.sampled_from(MIRRORS))
@settings(max_examples=15, deadline=None)
def test_reflect_residual_same_for_the_image(offset, radius, height, mirror):
    mesh = sphere_at(offset, radius, res=6, height=height)
    image = reflect_mesh(mesh, mirror)
    assert reflect_residual(image, mirror) == pytest.approx(reflect_residual(mesh, mirror), abs=1e-12)


@pytest.mark.parametrize("plane", [VerticalHyperplane.diameter([0.6, 0.8]),
                                   VerticalHyperplane.sphere([1.25, 0.0], 0.75)])
def test_reflected_mesh_negates_witness_distance(plane):
    mesh = sphere_at(0.5, 0.3, height=0.4)
    image = reflect_mesh(mesh, plane)
    value, witness = halfspace_clearance(mesh, plane)
    mirrored, _ = halfspace_clearance(image, plane, side=-1)
    assert mirrored == pytest.approx(value, abs=1e-9)
    assert float(signed_distance(image.points[witness], plane)) == pytest.approx(
        -float(signed_distance(mesh.points[witness], plane)), abs=1e-9)


@pytest.mark.parametrize("margin", [0.5, -0.3])
def test_catenoid_against_vertical_plane(margin, spec):
    mesh = cat_mesh(CatenoidParams(2, 1.0), 4, 12, spec, t_max=0.5)
    reach = 2.0 * math.atanh(float(np.linalg.norm(mesh.points, axis=1).max()))
    delta = reach + margin
    # Geodesic perpendicular to the e1 axis at distance delta from the catenoid's axis.
    g = Geodesic([math.tanh(delta), 1.0 / math.cosh(delta)], [math.tanh(delta), -1.0 / math.cosh(delta)])
    plane = plane_through(g)
    side = 1 if float(signed_distance(np.zeros(2), plane)) > 0 else -1
    assert side * float(signed_distance(np.zeros(2), plane)) == pytest.approx(delta, abs=1e-12)
    value, witness = halfspace_clearance(mesh, plane, side)
    assert value == pytest.approx(margin, abs=1e-9)
    if margin > 0:
        brute = min(dist_to_geodesic(x, g)[0] for x in mesh.points)
        assert value == pytest.approx(brute, abs=1e-8)
