# -*- coding:utf-8 -*-

import json
import math

import numpy as np
import pytest

from hnrkit.error import DomainError, FormatError
from hnrkit.geometry import IdealPoint
from hnrkit.mesh import Mesh
from hnrkit.utils import tools
from hnrkit.family.translation import AsymptoticCurve
from hnrkit.formats import write_obj, read_obj, write_csv, read_boundary_json, write_boundary_json


def awkward_mesh():
    points = [[0.1, 1.0 / 3.0], [-0.7071067811865476, 0.2], [math.tanh(0.5), -1e-17]]
    return Mesh(points, [0.0, math.pi, -2.0 / 3.0], [[0, 1, 2]], "awkward")


def test_obj_round_trip_is_exact(tmp_path):
    mesh = awkward_mesh()
    path = tmp_path / "mesh.obj"
    write_obj(mesh, str(path), {"family": "catenoid", "a": 1.0})
    text = path.read_text()
    assert text.startswith("# hnrkit mesh\n# label: awkward\n# n: 2\n# a: 1.0\n# family: catenoid\n")
    assert "\nf 1 2 3\n" in text
    back = read_obj(str(path))
    assert np.array_equal(back.points, mesh.points)
    assert np.array_equal(back.heights, mesh.heights)
    assert np.array_equal(back.faces, mesh.faces)
    assert back.label == "awkward"


def test_read_obj_accepts_slashed_faces(tmp_path):
    path = tmp_path / "slashed.obj"
    path.write_text("v 0 0 0\nv 0.5 0 0\nv 0 0.5 1\nf 1/1 2/2 3/3\n")
    mesh = read_obj(str(path))
    assert mesh.faces.tolist() == [[0, 1, 2]]
    assert mesh.label == ""


@pytest.mark.parametrize("content", [
    "",
    "v 0 0 0\nv 0.5 0 0 0\n",
    "v 0 0\n",
    "v 0 0 x\n",
    "v 0 0 0\nv 0.5 0 0\nv 0 0.5 0\nf 1 2 3 1\n",
    "v 0 0 0\nv 0.5 0 0\nv 0 0.5 0\nf 1 2 4\n",
    "v 1.5 0 0\nv 0.5 0 0\nv 0 0.5 0\nf 1 2 3\n",
])
def test_read_obj_errors(tmp_path, content):
    path = tmp_path / "bad.obj"
    path.write_text(content)
    with pytest.raises(FormatError):
        read_obj(str(path))


def test_read_obj_missing_file(tmp_path):
    with pytest.raises(FormatError):
        read_obj(str(tmp_path / "nowhere.obj"))


def test_csv(tmp_path):
    path = tmp_path / "table.csv"
    write_csv(str(path), ["a", "h_R", "gap"], [(0.5, math.pi / 3.0, -0.0), (1, 2.0e-9, float("nan"))])
    lines = path.read_text().splitlines()
    assert lines == ["a,h_R,gap", "0.5,1.0471975512,0", "1,2e-09,nan"]


def test_float_format():
    assert tools.float_to_str(math.pi) == "3.14159265359"
    assert tools.float_to_str("2.5") == "2.5"
    assert tools.float_to_str(-math.inf) == "-inf"
    assert tools.exact_float_str(0.1) == "0.1"
    assert float(tools.exact_float_str(1.0 / 3.0)) == 1.0 / 3.0


def test_parse_range_and_interval():
    values = tools.parse_range("1.1:1.5:0.1")
    assert values == [1.1, 1.2, 1.3, 1.4, 1.5]
    assert tools.parse_range("2:2:1") == [2.0]
    for text in ("1:2", "a:b:c", "1:2:0", "2:1:0.5"):
        with pytest.raises(DomainError):
            tools.parse_range(text)
    assert tools.parse_interval("-1:2.5") == (-1.0, 2.5)
    for text in ("1", "1:x", "2:2"):
        with pytest.raises(DomainError):
            tools.parse_interval(text)


def boundary_payload(**overrides):
    data = {
        "n": 2,
        "closed": False,
        "vertices": [{"u": [1.0, 0.0], "t": 0.0, "boundary": True},
                     {"u": [0.0, 1.0], "t": 0.5},
                     {"u": [-1.0, 0.0], "t": 1.0, "boundary": True}]
    }
    data.update(overrides)
    return data


def test_boundary_json(tmp_path):
    path = tmp_path / "boundary.json"
    path.write_text(json.dumps(boundary_payload()))
    curve = read_boundary_json(str(path))
    assert curve.n == 2 and not curve.closed
    assert curve.boundary_flags == [True, False, True]
    assert curve.heights.tolist() == [0.0, 0.5, 1.0]

    written = tmp_path / "written.json"
    write_boundary_json(curve, str(written))
    again = read_boundary_json(str(written))
    assert again.data == curve.data


def test_boundary_json_renormalizes_near_unit_vectors(tmp_path):
    path = tmp_path / "boundary.json"
    payload = boundary_payload()
    payload["vertices"][1]["u"] = [0.0, 1.0 + 5e-10]
    path.write_text(json.dumps(payload))
    curve = read_boundary_json(str(path))
    assert np.linalg.norm(curve.directions[1]) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("mutate", [
    lambda d: d["vertices"][1].update(u=[0.0, 1.001]),
    lambda d: d["vertices"][1].update(u=[0.0, 0.0, 1.0]),
    lambda d: d["vertices"][1].update(t=float("inf")),
    lambda d: d["vertices"][1].pop("t"),
    lambda d: d.pop("closed"),
    lambda d: d.update(vertices=d["vertices"][:1]),
])
def test_boundary_json_errors(tmp_path, mutate):
    payload = boundary_payload()
    mutate(payload)
    path = tmp_path / "boundary.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(FormatError):
        read_boundary_json(str(path))


def test_boundary_json_unreadable(tmp_path):
    path = tmp_path / "boundary.json"
    path.write_text("{not json")
    with pytest.raises(FormatError):
        read_boundary_json(str(path))
    with pytest.raises(FormatError):
        read_boundary_json(str(tmp_path / "missing.json"))


def test_curve_data_round_trip_through_json(tmp_path):
    curve = AsymptoticCurve([IdealPoint.from_angle(0.0, 0.0), IdealPoint.from_angle(1.0, 0.3),
                             IdealPoint.from_angle(2.0, 0.1)], closed=True)
    path = tmp_path / "closed.json"
    write_boundary_json(curve, str(path))
    assert json.loads(path.read_text())["closed"] is True
    assert read_boundary_json(str(path)).directions == pytest.approx(curve.directions, abs=1e-15)
