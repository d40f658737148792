# -*- coding:utf-8 -*-

import math

import numpy as np
import pytest

from hnrkit.configure import config
from hnrkit.quadrature import QuadratureSpec


@pytest.fixture(autouse=True)
def default_config(monkeypatch):
    """Every test starts from the built-in configuration, HNR_TOL unset."""
    monkeypatch.delenv("HNR_TOL", raising=False)
    config.loads(None)
    yield
    monkeypatch.delenv("HNR_TOL", raising=False)
    config.loads(None)


@pytest.fixture
def spec():
    return QuadratureSpec(1e-10)


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


def midpoint_rule(f, lo, hi, panels=200000):
    """Composite midpoint rule, vectorised."""
    h = (hi - lo) / panels
    x = lo + h * (np.arange(panels) + 0.5)
    return float(h * np.sum(f(x)))


def mobius_dist(p, q):
    """Distance by transporting p to the origin, dist(0, x) = 2 artanh |x|."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    pq, pp, qq = float(p @ q), float(p @ p), float(q @ q)
    num = (1.0 - 2.0 * pq + qq) * (-p) + (1.0 - pp) * q
    den = 1.0 - 2.0 * pq + pp * qq
    return 2.0 * math.atanh(float(np.linalg.norm(num / den)))
