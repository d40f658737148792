# -*- coding:utf-8 -*-

"""
Triangle meshes of hypersurfaces of H^n x R.

A vertex is a ball coordinate `x` (|x| < 1) plus a height `t`; faces are vertex index
triples. Meshes are immutable: every transformation builds a new one.

Date:   2026/10/19
"""

import json

import numpy as np

from hnrkit import const
from hnrkit.geometry import BallPoint
from hnrkit.error import DomainError

__all__ = ("Mesh", "uv_sphere", "ring_faces", "grid_faces")


class Mesh:
    """Triangle mesh in H^n x R.

    Attributes:
        points: Ball coordinates, array `(V, n)`.
        heights: Heights, array `(V, )`.
        faces: Vertex index triples, array `(F, 3)`.
        label: Free text, e.g. `catenoid a=1 n=3`.
    """

    def __init__(self, points, heights, faces, label=""):
        points = np.array(points, dtype=float)
        heights = np.array(heights, dtype=float).reshape(-1)
        faces = np.array(faces, dtype=int).reshape(-1, 3)
        if points.ndim != 2 or points.shape[1] < 2:
            raise DomainError("mesh points must be an array (V, n) with n >= 2, got shape {}".format(points.shape))
        if heights.size != points.shape[0]:
            raise DomainError("mesh has {} points but {} heights".format(points.shape[0], heights.size))
        if not (np.all(np.isfinite(points)) and np.all(np.isfinite(heights))):
            raise DomainError("mesh {!r} has non-finite vertex coordinates".format(label))
        norms = np.einsum("ij,ij->i", points, points)
        if np.any(norms >= 1.0):
            bad = int(np.argmax(norms))
            raise DomainError("mesh vertex {} is outside the open unit ball".format(bad))
        if faces.size:
            if faces.min() < 0 or faces.max() >= points.shape[0]:
                raise DomainError("mesh face index out of range [0, {})".format(points.shape[0]))
            coords = np.column_stack([points, heights])
            areas = _face_areas(coords, faces)
            if np.any(areas <= const.MIN_FACE_AREA):
                bad = int(np.argmin(areas))
                raise DomainError("mesh face {} {} is degenerate, area {!r}".format(bad, faces[bad].tolist(),
                                                                                 float(areas[bad])))
        for a in (points, heights, faces):
            a.setflags(write=False)
        self._points = points
        self._heights = heights
        self._faces = faces
        self._label = label

    @classmethod
    def from_vertices(cls, vertices, faces, label=""):
        """Mesh from a list of BallPoints."""
        vertices = list(vertices)
        if not vertices:
            return cls(np.zeros((0, 2)), [], faces, label)
        return cls([v.x for v in vertices], [v.t for v in vertices], faces, label)

    @property
    def points(self):
        return self._points

    @property
    def heights(self):
        return self._heights

    @property
    def faces(self):
        return self._faces

    @property
    def label(self):
        return self._label

    @property
    def n(self):
        return self._points.shape[1]

    @property
    def vertices(self):
        return [BallPoint(x, t) for x, t in zip(self._points, self._heights)]

    @property
    def coords(self):
        """Vertices as rows `(x_1, ..., x_n, t)`."""
        return np.column_stack([self._points, self._heights])

    def __len__(self):
        return self._points.shape[0]

    def moved(self, points=None, heights=None, label=None):
        """Same faces, new vertex positions."""
        return Mesh(self._points if points is None else points,
                    self._heights if heights is None else heights,
                    self._faces, self._label if label is None else label)

    def shifted(self, dt):
        """Vertical translation by `dt`."""
        return self.moved(heights=self._heights + float(dt))

    @property
    def data(self):
        d = {
            "label": self._label,
            "n": self.n,
            "vertices": len(self),
            "faces": int(self._faces.shape[0]),
        }
        return d

    def __str__(self):
        info = json.dumps(self.data)
        return info

    def __repr__(self):
        return str(self)


def _face_areas(coords, faces):
    """Euclidean areas of triangles in coordinates of any dimension."""
    e1 = coords[faces[:, 1]] - coords[faces[:, 0]]
    e2 = coords[faces[:, 2]] - coords[faces[:, 0]]
    g11 = np.einsum("ij,ij->i", e1, e1)
    g22 = np.einsum("ij,ij->i", e2, e2)
    g12 = np.einsum("ij,ij->i", e1, e2)
    return 0.5 * np.sqrt(np.maximum(g11 * g22 - g12 * g12, 0.0))


def ring_faces(levels, ring):
    """Faces of `levels` stacked closed rings of `ring` vertices each, indexed level by level."""
    faces = []
    for k in range(levels - 1):
        base, up = k * ring, (k + 1) * ring
        for j in range(ring):
            jn = (j + 1) % ring
            faces.append((base + j, base + jn, up + jn))
            faces.append((base + j, up + jn, up + j))
    return np.array(faces, dtype=int).reshape(-1, 3)


def grid_faces(rows, cols):
    """Faces of an open `rows x cols` grid indexed row by row."""
    faces = []
    for i in range(rows - 1):
        for j in range(cols - 1):
            a = i * cols + j
            faces.append((a, a + 1, a + cols + 1))
            faces.append((a, a + cols + 1, a + cols))
    return np.array(faces, dtype=int).reshape(-1, 3)


def uv_sphere(res_lon, res_lat):
    """Unit-sphere triangulation in R^3 with poles on the z axis.

    Args:
        res_lon: Vertices per latitude ring, >= 3.
        res_lat: Latitude bands, >= 2.

    Returns:
        directions: Array `(V, 3)`, north pole first, south pole last.
        faces: Array `(F, 3)`.
    """
    if res_lon < 3 or res_lat < 2:
        raise DomainError("uv sphere needs res_lon >= 3 and res_lat >= 2, got {} {}".format(res_lon, res_lat))
    dirs = [(0.0, 0.0, 1.0)]
    for i in range(1, res_lat):
        phi = np.pi * i / res_lat
        for j in range(res_lon):
            theta = 2.0 * np.pi * j / res_lon
            dirs.append((np.sin(phi) * np.cos(theta), np.sin(phi) * np.sin(theta), np.cos(phi)))
    dirs.append((0.0, 0.0, -1.0))
    south = len(dirs) - 1
    faces = []
    for j in range(res_lon):
        faces.append((0, 1 + j, 1 + (j + 1) % res_lon))
    for i in range(res_lat - 2):
        base = 1 + i * res_lon
        for j in range(res_lon):
            jn = (j + 1) % res_lon
            faces.append((base + j, base + res_lon + j, base + res_lon + jn))
            faces.append((base + j, base + res_lon + jn, base + jn))
    last = 1 + (res_lat - 2) * res_lon
    for j in range(res_lon):
        faces.append((last + j, south, last + (j + 1) % res_lon))
    return np.array(dirs), np.array(faces, dtype=int)
