# -*- coding:utf-8 -*-

import json

import numpy as np
import pytest

from hnrkit.error import DomainError
from hnrkit.geometry import BallPoint
from hnrkit.mesh import Mesh, uv_sphere, ring_faces, grid_faces


def triangle():
    return Mesh([[0.0, 0.0], [0.5, 0.0], [0.0, 0.5]], [0.0, 0.0, 1.0], [[0, 1, 2]], "triangle")


def test_mesh_basics():
    mesh = triangle()
    assert len(mesh) == 3
    assert mesh.n == 2
    assert mesh.coords.shape == (3, 3)
    assert mesh.vertices[2] == BallPoint([0.0, 0.5], 1.0)
    assert json.loads(str(mesh)) == {"label": "triangle", "n": 2, "vertices": 3, "faces": 1}


def test_mesh_is_immutable():
    mesh = triangle()
    with pytest.raises(ValueError):
        mesh.points[0, 0] = 0.1
    shifted = mesh.shifted(2.0)
    assert shifted.heights.tolist() == [2.0, 2.0, 3.0]
    assert mesh.heights.tolist() == [0.0, 0.0, 1.0]
    assert shifted.label == "triangle"


def test_mesh_validation():
    with pytest.raises(DomainError):
        Mesh([[0.0, 0.0], [1.0, 0.0], [0.0, 0.5]], [0.0, 0.0, 0.0], [[0, 1, 2]])
    with pytest.raises(DomainError):
        Mesh([[0.0, 0.0], [0.5, 0.0], [0.0, 0.5]], [0.0, 0.0], [[0, 1, 2]])
    with pytest.raises(DomainError):
        Mesh([[0.0, 0.0], [0.5, 0.0], [0.0, 0.5]], [0.0, 0.0, 0.0], [[0, 1, 3]])
    with pytest.raises(DomainError):
        Mesh([[0.0, 0.0], [0.5, 0.0], [0.25, 0.0]], [0.0, 0.0, 0.0], [[0, 1, 2]])
    with pytest.raises(DomainError):
        Mesh([[0.0, 0.0], [0.5, 0.0], [0.0, 0.5]], [0.0, float("nan"), 0.0], [[0, 1, 2]])


def test_from_vertices():
    mesh = Mesh.from_vertices([BallPoint([0.0, 0.0]), BallPoint([0.1, 0.0], 1.0), BallPoint([0.0, 0.1], 2.0)],
                              [[0, 1, 2]], "v")
    assert mesh.heights.tolist() == [0.0, 1.0, 2.0]


def test_uv_sphere():
    dirs, faces = uv_sphere(8, 4)
    assert dirs.shape == (2 + 3 * 8, 3)
    assert np.linalg.norm(dirs, axis=1) == pytest.approx(np.ones(dirs.shape[0]))
    assert dirs[0].tolist() == [0.0, 0.0, 1.0] and dirs[-1].tolist() == [0.0, 0.0, -1.0]
    # Euler characteristic of the sphere.
    edges = {tuple(sorted(e)) for f in faces for e in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0]))}
    assert dirs.shape[0] - len(edges) + faces.shape[0] == 2
    with pytest.raises(DomainError):
        uv_sphere(2, 4)


def test_ring_and_grid_faces():
    assert ring_faces(3, 5).shape == (2 * 5 * 2, 3)
    assert grid_faces(3, 4).shape == (2 * 3 * 2, 3)
    assert ring_faces(1, 5).shape == (0, 3)
    assert grid_faces(3, 4).max() == 11
