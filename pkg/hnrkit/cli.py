# -*- coding:utf-8 -*-

"""
Command line entrance.

    hnrkit [--config FILE] height-table --family {catenoid|md} --n N --param-range LO:HI:STEP [--tol T] --out FILE.csv
    hnrkit [--config FILE] profile --a A --n N --out FILE.csv
    hnrkit [--config FILE] intersect --a A --b B --n N
    hnrkit [--config FILE] mesh --family {catenoid|md} (--a A | --d D) --n N --res R --out FILE.obj
    hnrkit [--config FILE] sweep --moving FILE.obj --fixed FILE.obj --geodesic "u1,u2" --range LO:HI --step S
    hnrkit [--config FILE] obstruct --in FILE.json --n N
    hnrkit [--config FILE] verify [--quick]

Exit status: 0 success, 1 error raised by the toolkit (or a failed verify), 2 usage error.
Tables, verdicts and reports go to stdout or to files, log lines to stderr.

Date:   2026/10/19
"""

import sys
import json
import math
import argparse
import functools

from hnrkit import const, kit
from hnrkit.tasks import GridTask
from hnrkit.utils import tools, logger
from hnrkit.error import Error, DomainError
from hnrkit.geometry import Geodesic
from hnrkit.quadrature import QuadratureSpec
from hnrkit.family.catenoid import CatenoidParams, cat_height, cat_T, cat_f, cat_profile_ode, cat_intersection, \
    cat_mesh
from hnrkit.family.translation import TranslationParams, md_H, md_S, md_mesh
from hnrkit.barriers import sweep_contact
from hnrkit.obstruction import check_all
from hnrkit.report import verify
from hnrkit import formats

__all__ = ("main", "build_parser")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2

DEFAULT_MD_EXTENT = 3.0


def _height_row(value, family, n, spec):
    if family == const.FAMILY_CATENOID:
        h = cat_height(CatenoidParams(n, value), spec)
        return value, h, const.critical_height(n) - h
    if n == 2:
        h = md_H(value, spec)
        return value, h, h - math.pi / 2.0
    h = 2.0 * md_S(value, n, spec)
    return value, h, h - const.critical_height(n)


def _quadrature_f(t, params, spec, total):
    return cat_f(params, t, spec, total)


def _spec(args):
    return QuadratureSpec(args.tol) if getattr(args, "tol", None) is not None else QuadratureSpec.default()


def height_table(args):
    spec = _spec(args)
    values = tools.parse_range(args.param_range)
    if args.family == const.FAMILY_CATENOID:
        header = ["a", "h_R", "gap"]
    elif args.n == 2:
        header = ["d", "H", "gap"]
    else:
        header = ["d", "2S", "gap"]
    rows = GridTask.run(_height_row, values, name="height-table", family=args.family, n=args.n, spec=spec)
    formats.write_csv(args.out, header, rows)
    return EXIT_OK


def profile(args):
    spec = _spec(args)
    params = CatenoidParams(args.n, args.a)
    T = cat_T(params, spec)[0]
    ode = cat_profile_ode(params, spec=spec)
    ts = [t for t in ode.t if t < T]
    quadrature = GridTask.run(_quadrature_f, ts, name="profile", params=params, spec=spec, total=T)
    rows = [(float(t), float(fq), float(fo), abs(float(fq) - float(fo)))
            for t, fq, fo in zip(ts, quadrature, ode.f)]
    formats.write_csv(args.out, ["t", "f_quadrature", "f_ode", "abs_diff"], rows)
    return EXIT_OK


def intersect(args):
    spec = _spec(args)
    root = cat_intersection(args.a, args.b, args.n, spec)
    f = cat_f(CatenoidParams(args.n, args.a), root, spec)
    print("t_star,f_a_t_star")
    print("{},{}".format(tools.float_to_str(root), tools.float_to_str(f)))
    return EXIT_OK


def mesh(args):
    spec = _spec(args)
    header = {"family": args.family, "n": args.n, "res": args.res, "tol": spec.tol}
    if args.family == const.FAMILY_CATENOID:
        if args.a is None:
            raise DomainError("catenoid mesh needs --a")
        params = CatenoidParams(args.n, args.a)
        header["a"] = args.a
        result = cat_mesh(params, args.res, 2 * args.res, spec)
    else:
        if args.d is None:
            raise DomainError("md mesh needs --d")
        params = TranslationParams(args.n, args.d)
        header["d"] = args.d
        header["extent"] = args.extent
        result, curve = md_mesh(params, args.extent, args.res, spec)
        if args.boundary:
            formats.write_boundary_json(curve, args.boundary)
    formats.write_obj(result, args.out, header)
    return EXIT_OK


def sweep(args):
    moving = formats.read_obj(args.moving)
    fixed = formats.read_obj(args.fixed)
    try:
        theta1, theta2 = (float(v) for v in args.geodesic.split(","))
    except ValueError:
        raise DomainError("geodesic must be two angles \"u1,u2\", got {!r}".format(args.geodesic))
    g = Geodesic.from_angles(theta1, theta2)
    lo, hi = tools.parse_interval(args.range)
    result = sweep_contact(moving, fixed, g, (lo, hi), args.step, args.contact_tol)
    if args.out:
        formats.write_csv(args.out, ["s", "clearance"], result.clearance_profile)
    print(json.dumps({
        "status": result.status,
        "contact": result.contact,
        "contact_distance": result.contact_distance
    }, sort_keys=True))
    return EXIT_OK


def obstruct(args):
    curve = formats.read_boundary_json(getattr(args, "in"))
    verdicts = check_all(curve, args.n)
    print(json.dumps({
        "obstructed": any(v.obstructed for v in verdicts),
        "verdicts": [v.data for v in verdicts]
    }, indent=1, sort_keys=True))
    return EXIT_OK


def run_verify(args):
    report = verify(quick=args.quick, spec=_spec(args))
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_ERROR


def build_parser():
    """Argument parser of every subcommand."""
    parser = argparse.ArgumentParser(prog="hnrkit", description="Barrier geometry of minimal hypersurfaces "
                                                                "in H^n x R.")
    parser.add_argument("--config", default=None, help="JSON config file")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--tol", type=float, default=None, help="Quadrature tolerance, default QUADRATURE.tol")

    p = sub.add_parser("height-table", parents=[tol], help="Height law on a parameter grid")
    p.add_argument("--family", required=True, choices=[const.FAMILY_CATENOID, const.FAMILY_MD])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param-range", required=True, help="LO:HI:STEP")
    p.add_argument("--out", required=True)
    p.set_defaults(func=height_table)

    p = sub.add_parser("profile", parents=[tol], help="Catenoid profile by quadrature and by ODE")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=profile)

    p = sub.add_parser("intersect", parents=[tol], help="Crossing of two catenoid profiles")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=intersect)

    p = sub.add_parser("mesh", parents=[tol], help="OBJ mesh of a barrier")
    p.add_argument("--family", required=True, choices=[const.FAMILY_CATENOID, const.FAMILY_MD])
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--a", type=float, default=None)
    group.add_argument("--d", type=float, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--res", type=int, required=True)
    p.add_argument("--extent", type=float, default=DEFAULT_MD_EXTENT, help="md: distance beyond the seam")
    p.add_argument("--boundary", default=None, help="md: also write the asymptotic boundary JSON")
    p.add_argument("--out", required=True)
    p.set_defaults(func=mesh)

    p = sub.add_parser("sweep", help="Translate one mesh toward another until contact")
    p.add_argument("--moving", required=True)
    p.add_argument("--fixed", required=True)
    p.add_argument("--geodesic", required=True, help="Endpoint angles \"u1,u2\" in radians")
    p.add_argument("--range", required=True, help="LO:HI")
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--contact-tol", type=float, default=None)
    p.add_argument("--out", default=None, help="Clearance profile CSV")
    p.set_defaults(func=sweep)

    p = sub.add_parser("obstruct", help="Non-existence checks of boundary data")
    p.add_argument("--in", required=True, metavar="FILE.json")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=obstruct)

    p = sub.add_parser("verify", parents=[tol], help="Run the acceptance checks")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=run_verify)
    return parser


def _entrance(args):
    try:
        return args.func(args)
    except Error as e:
        logger.debug(args.command, "failed:", repr(e))
        sys.stderr.write("hnrkit {}: {}\n".format(args.command, e.msg))
        return EXIT_ERROR


def main(argv=None):
    """Parse the command line and run one subcommand; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return kit.start(args.config, functools.partial(_entrance, args))
    except Error as e:
        sys.stderr.write("hnrkit: {}\n".format(e.msg))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
