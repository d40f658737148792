# -*- coding:utf-8 -*-

"""
File formats.

    OBJ: `v x_1 ... x_n t` (ball coordinates, then height) and 1-based `f i j k`, `#` comments.
    CSV: header row, `.` decimals at 12 significant digits.
    Boundary JSON: `{"n": int, "closed": bool, "vertices": [{"u": [...], "t": real, "boundary": bool}]}`.

Date:   2026/10/19
"""

import csv
import json
import math

import numpy as np

from hnrkit import const
from hnrkit.mesh import Mesh
from hnrkit.utils import tools, logger
from hnrkit.geometry import IdealPoint
from hnrkit.error import DomainError, FormatError
from hnrkit.family.translation import AsymptoticCurve

__all__ = ("write_obj", "read_obj", "write_csv", "read_boundary_json", "write_boundary_json")


def write_obj(mesh, path, header=None):
    """Write a mesh as OBJ; coordinates are written exactly (shortest round-trip repr).

    Args:
        mesh: Mesh.
        path: Output file.
        header: Key-value pairs recorded as comments (family, parameters, tolerances).
    """
    lines = ["# hnrkit mesh", "# label: {}".format(mesh.label), "# n: {}".format(mesh.n)]
    for k, v in sorted((header or {}).items()):
        lines.append("# {}: {}".format(k, v))
    for x, t in zip(mesh.points, mesh.heights):
        lines.append("v " + " ".join(tools.exact_float_str(c) for c in list(x) + [t]))
    for face in mesh.faces:
        lines.append("f {} {} {}".format(*(int(i) + 1 for i in face)))
    with open(path, "w", newline="\n") as f:
        f.write("\n".join(lines) + "\n")
    logger.info("mesh written:", path, "vertices:", len(mesh))


def read_obj(path):
    """Read an OBJ written by `write_obj` (or any OBJ with `v x_1 ... x_n t` vertices).

    Raises:
        FormatError: Unreadable file, malformed lines, inconsistent vertex sizes.
    """
    points, faces, label = [], [], ""
    try:
        with open(path) as f:
            content = f.read().splitlines()
    except OSError as e:
        raise FormatError("cannot read OBJ {}: {}".format(path, e))
    size = None
    for number, line in enumerate(content, 1):
        fields = line.split()
        if not fields:
            continue
        if fields[0] == "#":
            if line.startswith("# label:"):
                label = line[len("# label:"):].strip()
            continue
        try:
            if fields[0] == "v":
                values = [float(v) for v in fields[1:]]
                if size is None:
                    size = len(values)
                if len(values) != size or size < 3:
                    raise ValueError("vertex of {} values".format(len(values)))
                points.append(values)
            elif fields[0] == "f":
                if len(fields) != 4:
                    raise ValueError("only triangles are supported")
                faces.append([int(v.split("/")[0]) - 1 for v in fields[1:]])
        except ValueError as e:
            raise FormatError("{}:{}: {}".format(path, number, e))
    if not points:
        raise FormatError("OBJ {} has no vertices".format(path))
    coords = np.array(points)
    try:
        return Mesh(coords[:, :-1], coords[:, -1], faces, label)
    except DomainError as e:
        raise FormatError("OBJ {}: {}".format(path, e.msg))


def write_csv(path, header, rows):
    """Write rows of numbers under `header`; floats at 12 significant digits."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([tools.float_to_str(v) if isinstance(v, float) else v for v in row])
    logger.info("table written:", path, "rows:", len(rows))


def read_boundary_json(path):
    """Read boundary data into an AsymptoticCurve; unit vectors are checked then renormalized.

    Raises:
        FormatError: Unreadable or malformed file, |u| not within 1e-9 of 1.
    """
    try:
        with open(path) as f:
            data = json.loads(f.read())
    except (OSError, ValueError) as e:
        raise FormatError("cannot read boundary JSON {}: {}".format(path, e))
    try:
        n = int(data["n"])
        closed = bool(data["closed"])
        vertices, flags = [], []
        for i, item in enumerate(data["vertices"]):
            u = np.array(item["u"], dtype=float)
            if u.size != n:
                raise FormatError("vertex {} has {} coordinates, expected {}".format(i, u.size, n))
            norm = float(np.linalg.norm(u))
            if not abs(norm - 1.0) <= const.UNIT_TOL:
                raise FormatError("vertex {} direction has norm {!r}, not a unit vector".format(i, norm))
            t = float(item["t"])
            if not math.isfinite(t):
                raise FormatError("vertex {} height is not finite".format(i))
            vertices.append(IdealPoint(u / norm, t))
            flags.append(bool(item.get("boundary", False)))
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError("malformed boundary JSON {}: {!r}".format(path, e))
    try:
        return AsymptoticCurve(vertices, closed, flags)
    except FormatError:
        raise
    except DomainError as e:
        raise FormatError("boundary JSON {}: {}".format(path, e.msg))


def write_boundary_json(curve, path):
    """Write an AsymptoticCurve as boundary JSON."""
    with open(path, "w") as f:
        f.write(json.dumps(curve.data, indent=1))
