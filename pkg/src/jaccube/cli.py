"""Command-line front end.

Subcommands wire the library end to end: curve validation with canonical
echo, class enumeration, lifting to the cube model, the census, the
square-model demo, the symbolic identity suite, sparse Segre export, and the
full acceptance run.  Output is deterministic; `--format json-lines` emits
one JSON object per line instead of text.

The environment variable JACCUBE_THREADS is accepted as a parallelism hint
and has no semantic effect on results.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cube, segre, verify
from .curve import dump_curve_config, load_curve_config, parse_scalar
from .field import RationalField
from .mumford import divisor_from_point, make_divisor, zero_divisor
from .unipoly import UniPoly

USAGE_ERROR = 2
CHECK_FAILED = 1


def _emit(records, fmt: str):
    for rec in records:
        if fmt == "json-lines":
            payload = {k: v for k, v in rec.items() if k != "_text"}
            print(json.dumps(payload, sort_keys=True))
        else:
            print(rec.pop("_text"))


def _coeff_list(poly: UniPoly):
    return [str(c) for c in poly.coeffs]


def _load(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return load_curve_config(handle.read())


def _divisor_record(d, extra=None):
    rec = {"u": _coeff_list(d.u), "v": _coeff_list(d.v), "_text": str(d)}
    if extra:
        rec.update(extra)
        rec["_text"] = rec["_text"] + " | " + " | ".join(str(v) for v in extra.values())
    return rec


def _check_records(report):
    for item in report.items:
        yield {
            "check": item.name,
            "pass": item.passed,
            "detail": item.detail,
            "_text": item.line(),
        }


def _point_text(coords):
    return "(" + " : ".join(str(c) for c in coords) + ")"


def _class_from_args(curve, args) -> object:
    chosen = [bool(args.zero), args.theta is not None, args.u0 is not None]
    if sum(chosen) != 1:
        raise SystemExit("choose exactly one of --zero, --theta, or --u0/--u1/--v0/--v1")
    if args.zero:
        return zero_divisor(curve)
    if args.theta is not None:
        x, y = (parse_scalar(v) for v in args.theta)
        return divisor_from_point(curve, x, y)
    coords = [args.u0, args.u1, args.v0, args.v1]
    if any(c is None for c in coords):
        raise SystemExit("--u0/--u1/--v0/--v1 must be given together")
    u0, u1, v0, v1 = (curve.field(parse_scalar(v)) for v in coords)
    return make_divisor(
        curve,
        UniPoly(curve.field, (u0, u1, 1)),
        UniPoly(curve.field, (v0, v1)),
    )


def _add_class_flags(sub):
    sub.add_argument("--zero", action="store_true", help="the zero class")
    sub.add_argument("--theta", nargs=2, metavar=("X", "Y"),
                     help="the class of (X, Y) - P_inf")
    sub.add_argument("--u0")
    sub.add_argument("--u1")
    sub.add_argument("--v0")
    sub.add_argument("--v1")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="jaccube",
        description="Exact multi-projective cube models for genus-2 Jacobians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, with_config=True, with_class=False):
        p = sub.add_parser(name, help=help_text)
        if with_config:
            p.add_argument("config", help="curve config file")
        if with_class:
            _add_class_flags(p)
        p.add_argument("--format", choices=("text", "json-lines"), default="text")
        return p

    add("check-curve", "validate a curve config and echo its canonical form")
    add("enumerate", "list every divisor class over a small prime field")
    add("lift", "lift one class to the cube model and verify it", with_class=True)
    add("census", "lift and verify every class; tally infinity types")
    add("quad-demo", "square-model solution counts and the extraneous pair")
    add("identities", "run the symbolic identity suite", with_config=False)
    add("segre", "sparse Segre coordinates of a lifted class", with_class=True)
    add("accept", "run the full acceptance suite on a curve")
    return parser


def _cmd_check_curve(args) -> int:
    curve = _load(args.config)
    if args.format == "json-lines":
        print(json.dumps({
            "field": "Q" if isinstance(curve.field, RationalField) else f"Fp:{curve.field.p}",
            "a": [str(c) for c in curve.a],
            "roots": [str(r) for r in curve.marked_roots],
        }, sort_keys=True))
    else:
        sys.stdout.write(dump_curve_config(curve))
    return 0


def _cmd_enumerate(args) -> int:
    curve = _load(args.config)
    from .mumford import enumerate_classes

    _emit([_divisor_record(d) for d in enumerate_classes(curve)], args.format)
    return 0


def _cmd_lift(args) -> int:
    curve = _load(args.config)
    x = _class_from_args(curve, args)
    model = cube.build_model(curve)
    point = cube.lift(model, x)
    bad = cube.verify_cube_point(model, point)
    bits = point.bit_string()
    tc = cube.classify_bits(point.infinity_bits())
    records = []
    for c in cube.INDICES:
        coords = point.charts[c]
        records.append({
            "corner": cube.index_label(c),
            "S": [str(v) for v in coords],
            "_text": f"S_{cube.index_label(c)} = {_point_text(coords)}",
        })
    records.append({
        "bits": bits,
        "type": str(tc),
        "residual_failures": len(bad),
        "_text": f"bits = {bits} | type = {tc} | residual-failures = {len(bad)}",
    })
    for label, value in bad:
        records.append({"residual": label, "value": str(value),
                        "_text": f"residual {label} = {value}"})
    _emit(records, args.format)
    return 0 if not bad else CHECK_FAILED


def _cmd_census(args) -> int:
    curve = _load(args.config)
    result = cube.census(curve)
    records = []
    for row in result.rows:
        records.append({
            "u": _coeff_list(row.divisor.u),
            "v": _coeff_list(row.divisor.v),
            "bits": row.bits,
            "type": str(row.type_class),
            "status": "ok" if row.residual_failures == 0 else f"FAIL:{row.residual_failures}",
            "_text": row.line(),
        })
    tally_text = " ".join(f"{k}={v}" for k, v in sorted(result.tally.items()))
    records.append({
        "tally": dict(sorted(result.tally.items())),
        "classes": result.group_order,
        "_text": f"classes = {result.group_order} | tally {tally_text}",
    })
    ok = True
    for name, passed, detail in result.checks():
        ok = ok and passed
        records.append({
            "check": name, "pass": passed, "detail": detail,
            "_text": f"{'PASS' if passed else 'FAIL'} {name} {detail}".rstrip(),
        })
    _emit(records, args.format)
    return 0 if ok else CHECK_FAILED


def _cmd_quad_demo(args) -> int:
    curve = _load(args.config)
    report = verify.quad_negative_report(curve)
    records = []
    extraneous = cube.quad_extraneous_points(curve)
    for tag, point in zip("ab", extraneous):
        for qc in cube.QUAD_INDICES:
            records.append({
                "point": tag,
                "corner": cube.index_label(qc),
                "S": [str(v) for v in point[qc]],
                "_text": f"extraneous[{tag}] S_{cube.index_label(qc)} = {_point_text(point[qc])}",
            })
    records.append({"extraneous": len(extraneous), "_text": f"extraneous = {len(extraneous)}"})
    eliminated = all(
        not cube.quad_point_extends_to_cube(curve, point) for point in extraneous
    )
    records.append({
        "eliminated_in_octo": eliminated,
        "_text": f"eliminated-in-octo = {'true' if eliminated else 'false'}",
    })
    records.extend(_check_records(report))
    _emit(records, args.format)
    return 0 if report.ok and eliminated else CHECK_FAILED


def _cmd_identities(args) -> int:
    report = verify.check_identities()
    _emit(list(_check_records(report)), args.format)
    return 0 if report.ok else CHECK_FAILED


def _cmd_segre(args) -> int:
    curve = _load(args.config)
    x = _class_from_args(curve, args)
    model = cube.build_model(curve)
    point = cube.lift(model, x)
    image = segre.segre_cube(point)
    records = [
        {"index": list(k), "value": str(v), "_text": " ".join(map(str, k)) + " : " + str(v)}
        for k, v in sorted(image.entries.items())
    ]
    _emit(records, args.format)
    return 0


def _cmd_accept(args) -> int:
    curve = _load(args.config)
    report = verify.full_acceptance(curve)
    _emit(list(_check_records(report)), args.format)
    return 0 if report.ok else CHECK_FAILED


_COMMANDS = {
    "check-curve": _cmd_check_curve,
    "enumerate": _cmd_enumerate,
    "lift": _cmd_lift,
    "census": _cmd_census,
    "quad-demo": _cmd_quad_demo,
    "identities": _cmd_identities,
    "segre": _cmd_segre,
    "accept": _cmd_accept,
}


def main(argv=None) -> int:
    threads = os.environ.get("JACCUBE_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"invalid JACCUBE_THREADS value {threads!r}", file=sys.stderr)
            return USAGE_ERROR
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except BrokenPipeError:
        # Downstream consumer (e.g. `| head`) closed the pipe; not an error.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except SystemExit as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
