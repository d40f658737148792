# -*- coding:utf-8 -*-

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate, special

from hnrkit import const
from hnrkit.error import DomainError, UnsupportedDimensionError
from hnrkit.geometry import IdealPoint, Geodesic, bisector_plane, dist_to_geodesic
from hnrkit.quadrature import QuadratureSpec
from hnrkit.barriers import reflect_residual, halfspace_clearance
from hnrkit.family.translation import (TranslationParams, AsymptoticCurve, md_H, md_S, md_height, md_profile_height,
                                       md_halfspace, md_boundary, md_mesh)


def s_oracle(d, n):
    """S(d) with t = 1 + s^2 and scipy's adaptive quad."""
    a = math.acosh(d ** (1.0 / (n - 1)))
    c = math.cosh(a)

    def integrand(s):
        t = 1.0 + s * s
        if s == 0.0:
            return 2.0 / math.sqrt(2.0 * n - 2.0) / math.sqrt(c * c - 1.0)
        return 2.0 * s / math.sqrt(t ** (2 * n - 2) - 1.0) / math.sqrt(c * c * t * t - 1.0)
    head, _ = integrate.quad(integrand, 0.0, 3.0, epsabs=1e-13, epsrel=1e-13, limit=400)
    tail, _ = integrate.quad(lambda t: 1.0 / math.sqrt(t ** (2 * n - 2) - 1.0) / math.sqrt(c * c * t * t - 1.0),
                             10.0, np.inf, epsabs=1e-13, epsrel=1e-13, limit=400)
    return c * (head + tail)


def test_params():
    params = TranslationParams(2, 2.0)
    assert params.seam_distance == pytest.approx(math.acosh(2.0))
    assert params.base.endpoints[0].u == pytest.approx([-1.0, 0.0])
    with pytest.raises(DomainError):
        TranslationParams(2, 1.0)
    with pytest.raises(DomainError):
        TranslationParams(2, 0.5)
    with pytest.raises(DomainError):
        TranslationParams(3, 2.0, base=Geodesic([-1.0, 0.0], [1.0, 0.0]))


def test_H_closed_form(spec):
    # H(d) = K(1 / d^2).
    assert md_H(2.0, spec) == pytest.approx(special.ellipk(0.25), abs=1e-8)
    assert md_H(2.0, spec) == pytest.approx(1.685750354812596, abs=1e-8)
    for d in (1.3, 5.0, 40.0):
        assert md_H(d, spec) == pytest.approx(special.ellipk(1.0 / d ** 2), abs=1e-9)


def test_H_limits(spec):
    grid = [1.1 + 0.5 * k for k in range(19)]
    values = [md_H(d, spec) for d in grid]
    assert all(h2 < h1 for h1, h2 in zip(values, values[1:]))
    assert all(h > math.pi / 2 for h in values)
    gap3 = md_H(1e3, spec) - math.pi / 2
    gap4 = md_H(1e4, spec) - math.pi / 2
    assert 0 < gap4 < 10 * gap3
    near = [md_H(1.0 + 10.0 ** -k, spec) for k in range(1, 7)]
    assert all(h2 > h1 for h1, h2 in zip(near, near[1:]))
    assert near[-1] > 7.0


def test_H_domain(spec):
    with pytest.raises(DomainError):
        md_H(1.0, spec)
    with pytest.raises(DomainError):
        md_H(float("inf"), spec)


def test_S_against_quad(spec):
    assert md_S(2.0, 3, spec) == pytest.approx(s_oracle(2.0, 3), abs=1e-8)
    assert md_S(5.0, 4, spec) == pytest.approx(s_oracle(5.0, 4), abs=1e-8)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_S_law(n, spec):
    values = [2.0 * md_S(d, n, spec) for d in (1.1, 1.5, 2.0, 4.0, 10.0)]
    critical = const.critical_height(n)
    assert all(v2 < v1 for v1, v2 in zip(values, values[1:]))
    assert all(v > critical for v in values)
    assert 2.0 * md_S(1e6, n, spec) - critical < values[-1] - critical


def test_S_domain(spec):
    with pytest.raises(DomainError):
        md_S(2.0, 2, spec)
    with pytest.raises(DomainError):
        md_S(0.9, 3, spec)
    assert md_height(2.0, 2, spec) == md_H(2.0, spec)
    assert md_height(2.0, 3, spec) == md_S(2.0, 3, spec)


def test_profile_height_limits(spec):
    d = 2.0
    lower = math.acosh(d)
    assert md_profile_height(d, lower, 2, spec) == 0.0
    assert md_profile_height(d, 40.0, 2, spec) == pytest.approx(md_H(d, spec), abs=1e-8)
    with pytest.raises(DomainError):
        md_profile_height(d, lower - 0.1, 2, spec)


def test_profile_height_against_quad(spec):
    # int_{arcosh 2}^{2} 2 (cosh^2 u - 4)^(-1/2) du with u = arcosh 2 + s^2.
    u0 = math.acosh(2.0)

    def integrand(s):
        if s == 0.0:
            return 2.0 * 2.0 / math.sqrt(2.0 * math.cosh(u0) * math.sinh(u0))
        u = u0 + s * s
        return 2.0 * s * 2.0 / math.sqrt(math.cosh(u) ** 2 - 4.0)
    expected, _ = integrate.quad(integrand, 0.0, math.sqrt(2.0 - u0), epsabs=1e-13, epsrel=1e-13)
    assert md_profile_height(2.0, 2.0, 2, spec) == pytest.approx(expected, abs=1e-9)


@given(st.floats(min_value=0.01, max_value=6.0), st.floats(min_value=0.01, max_value=2.0))
@settings(max_examples=20, deadline=None)
def test_profile_height_increasing_and_bounded(offset, step):
    spec = QuadratureSpec(1e-10)
    d = 3.0
    lower = math.acosh(d)
    H = md_H(d, spec)
    h1 = md_profile_height(d, lower + offset, 2, spec, total=H)
    h2 = md_profile_height(d, lower + offset + step, 2, spec, total=H)
    assert 0 < h1 < h2 < H


def test_profile_height_higher_dimension(spec):
    d, n = 2.0, 3
    a = math.acosh(math.sqrt(d))
    assert md_profile_height(d, a, n, spec) == 0.0
    assert md_profile_height(d, 30.0, n, spec) == pytest.approx(md_S(d, n, spec), abs=1e-8)
    assert md_profile_height(d, a + 0.5, n, spec) < md_profile_height(d, a + 1.5, n, spec)
    with pytest.raises(DomainError):
        md_profile_height(d, a - 0.01, n, spec)


def test_asymptotic_curve_validation():
    p = IdealPoint([1.0, 0.0], 0.0)
    with pytest.raises(DomainError):
        AsymptoticCurve([p], closed=False)
    with pytest.raises(DomainError):
        AsymptoticCurve([p, IdealPoint([1.0, 0.0], 0.0)], closed=False)
    with pytest.raises(DomainError):
        AsymptoticCurve([p, IdealPoint([-1.0, 0.0], 0.0)], closed=False)
    with pytest.raises(DomainError):
        AsymptoticCurve([p, IdealPoint([0.0, 1.0])], closed=False)
    curve = AsymptoticCurve([p, IdealPoint([0.0, 1.0], 1.0), IdealPoint([-1.0, 0.0], 0.0)], closed=False)
    assert curve.edges() == [(0, 1), (1, 2)]
    assert curve.boundary_flags == [False, False, False]


def test_boundary_curve(spec):
    params = TranslationParams(2, 2.0)
    curve = md_boundary(params, spec, samples=16)
    H = md_H(2.0, spec)
    assert curve.closed
    assert len(curve.vertices) == 32
    assert set(np.round(curve.heights, 12)) == {round(H, 12), round(-H, 12)}
    # Upper arc runs from p = -e1 to q = e1 on the side of M_d.
    assert curve.directions[0] == pytest.approx([-1.0, 0.0], abs=1e-12)
    assert curve.directions[15] == pytest.approx([1.0, 0.0], abs=1e-12)
    assert np.all(curve.directions[:, 1] >= -1e-12)
    with pytest.raises(UnsupportedDimensionError):
        md_boundary(TranslationParams(3, 2.0), spec)


def test_mesh_properties(spec):
    params = TranslationParams(2, 2.0)
    mesh, curve = md_mesh(params, 1.5, 8, spec)
    H = md_H(2.0, spec)
    assert np.abs(mesh.heights).max() <= H + 1e-9
    seam = mesh.heights == 0.0
    assert seam.sum() == 8
    for x in mesh.points[seam]:
        assert dist_to_geodesic(x, params.base)[0] == pytest.approx(math.acosh(2.0), abs=1e-9)
    assert sorted(mesh.heights) == pytest.approx(sorted(-mesh.heights), abs=0.0)
    assert reflect_residual(mesh, 0.0) == 0.0
    assert reflect_residual(mesh, bisector_plane(params.base)) <= 1e-9
    clearance, _ = halfspace_clearance(mesh, md_halfspace(params))
    assert clearance >= math.acosh(2.0) - 1e-9
    assert curve.closed


def test_mesh_dimension_and_arguments(spec):
    with pytest.raises(UnsupportedDimensionError):
        md_mesh(TranslationParams(3, 2.0), 1.0, 8, spec)
    with pytest.raises(DomainError):
        md_mesh(TranslationParams(2, 2.0), 0.0, 8, spec)
    with pytest.raises(DomainError):
        md_mesh(TranslationParams(2, 2.0), 1.0, 2, spec)
