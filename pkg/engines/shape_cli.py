#!/usr/bin/env python3
"""trishape CLI — convert, classify, solve, export, sample, orbit.

Exit codes: 0 ok, 2 usage, 3 invalid triangle or point, 4 solver or
certificate failure, 5 I/O.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import CertificateFailure, ShapeSpaceError, SolverFailure

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_SOLVER = 4
EXIT_IO = 5


def _open_shape(config_dir: str):
    try:
        import trishape
    except ImportError:
        sys.path.insert(0, str(Path(__file__).parent.parent / "sdk"))
        import trishape
    return trishape.open(config_dir)


def _round(value):
    """Round every float in a JSON-able structure to 15 significant digits."""
    if isinstance(value, float):
        return float(f"{value:.15g}")
    if isinstance(value, dict):
        return {k: _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v) for v in value]
    return value


def _fmt(values) -> str:
    return " ".join(f"{v:.15g}" for v in values)


def _emit(args, inputs: dict, results) -> None:
    doc = {"command": args.command, "inputs": inputs, "results": _round(results)}
    print(json.dumps(doc))


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _samples(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError(f"need at least 2 samples, got {n}")
    return n


def cmd_convert(args):
    shape = _open_shape(args.config_dir)
    if args.sides is not None:
        record = shape.convert(sides=args.sides, tol=args.tol)
        inputs = {"sides": args.sides}
    else:
        record = shape.convert(point=args.point, tol=args.tol)
        inputs = {"point": args.point}
    if args.json:
        _emit(args, inputs, record)
        return
    for key in ("sides", "s_coords", "point", "angles"):
        print(f"{key}: {_fmt(record[key])}")
    print(f"flags: {' '.join(record['flags'])}")


def cmd_classify(args):
    shape = _open_shape(args.config_dir)
    shape_class = shape.classify(args.sides, tol=args.tol)
    if args.json:
        _emit(args, {"sides": args.sides, "tol": args.tol}, {"flags": shape_class.labels()})
        return
    print(shape_class)


def cmd_solve(args):
    shape = _open_shape(args.config_dir)
    results = shape.solve(args.constraint)
    _emit(args, {"constraint": args.constraint}, [r.to_dict() for r in results])


def cmd_export(args):
    shape = _open_shape(args.config_dir)
    fmt = args.format
    if args.out:
        with open(args.out, "w", newline="") as f:
            shape.export(args.what, samples=args.samples, fmt=fmt, out=f)
        print(f"Wrote {args.what} to {args.out}", file=sys.stderr)
    else:
        shape.export(args.what, samples=args.samples, fmt=fmt, out=sys.stdout)


def cmd_sample(args):
    shape = _open_shape(args.config_dir)
    report = shape.sample(n=args.n, seed=args.seed, workers=args.workers, tol=args.tol)
    if args.json:
        _emit(args, {"n": report.n, "seed": report.seed}, report.to_dict())
        return
    print(f"n: {report.n}  seed: {report.seed}")
    for flag, frac in report.fractions.items():
        print(f"{flag}: {frac:.15g}")
    print(f"mean_symmetry_distance: {report.mean_symmetry_distance:.15g}")


def cmd_orbit(args):
    shape = _open_shape(args.config_dir)
    images = shape.orbit(args.point, unique=args.unique)
    if args.json:
        _emit(args, {"point": args.point, "unique": args.unique}, [list(p) for p in images])
        return
    for p in images:
        print(_fmt(p))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true")
    common.add_argument("--config-dir", default=".")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="trishape", description="trishape shape-space CLI")
    subparsers = parser.add_subparsers(dest="command")

    p = subparsers.add_parser("convert", parents=[common])
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sides", type=float, nargs=3, metavar=("A", "B", "C"))
    group.add_argument("--point", type=float, nargs=3, metavar=("X", "Y", "Z"))
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_convert)

    p = subparsers.add_parser("classify", parents=[common])
    p.add_argument("sides", type=float, nargs=3, metavar="SIDE")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_classify)

    p = subparsers.add_parser("solve", parents=[common])
    p.add_argument("constraint", choices=["none", "ordered", "obtuse", "acute", "extremes"])
    p.set_defaults(func=cmd_solve)

    p = subparsers.add_parser("export", parents=[common])
    p.add_argument("what", choices=["tiling", "right-curve", "figure"])
    p.add_argument("--samples", type=_samples, default=None)
    p.add_argument("--format", choices=["csv", "json", "svg"], default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)

    p = subparsers.add_parser("sample", parents=[common])
    p.add_argument("n", type=_positive_int, nargs="?", default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=_positive_int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_sample)

    p = subparsers.add_parser("orbit", parents=[common])
    p.add_argument("point", type=float, nargs=3, metavar="COORD")
    p.add_argument("--unique", action="store_true")
    p.set_defaults(func=cmd_orbit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        args.func(args)
    except (SolverFailure, CertificateFailure) as e:
        print(f"Solver failed: {e}", file=sys.stderr)
        return EXIT_SOLVER
    except ShapeSpaceError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
