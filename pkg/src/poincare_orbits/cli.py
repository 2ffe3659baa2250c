"""Command line interface: ``poincare-orbits {verify,transform,orbit,contract}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import wire
from .coadjoint import OrbitInvariants, casimir, coadjoint_action, orbit_point
from .contraction import contraction_rate
from .exceptions import PoincareError
from .group import KinematicParams, compose, extended_compose
from .realization import darboux_from_dual, phase_action, spacetime_action
from .sampling import contraction_sample
from .verification import RunConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_C_GRID = "1e2,1e3,1e4,1e5,1e6"


class UsageError(Exception):
    pass


def _add_global_flags(parser, suppress: bool):
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--c", default=default("1"),
                        help="speed of light: a positive float or 'inf' (default 1)")
    parser.add_argument("--seed", type=int, default=default(42), help="sampler seed (default 42)")
    parser.add_argument("--cases", type=int, default=default(1000),
                        help="random cases per property (default 1000)")
    parser.add_argument("--rel-tol", type=float, default=default(1e-9),
                        help="relative tolerance (default 1e-9)")
    parser.add_argument("--abs-tol", type=float, default=default(1e-12),
                        help="absolute tolerance (default 1e-12)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poincare-orbits",
        description="Verify and evaluate the 1+1 Poincare group, its coadjoint orbits "
                    "and the Galilei limit.",
    )
    _add_global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify", parents=[common],
                   help="run every property suite and print one JSON line per property")

    p = sub.add_parser("transform", parents=[common], help="apply a group element to a point")
    p.add_argument("--kind", required=True, choices=["group", "coadjoint", "phase", "spacetime"])
    p.add_argument("--element", required=True,
                   help='group element JSON, e.g. \'{"v":0,"tau":0,"x":1}\'')
    p.add_argument("--point", required=True, help="point JSON matching --kind")
    p.add_argument("--f", type=float, default=None, help="orbit force (required for --kind phase)")

    p = sub.add_parser("orbit", parents=[common], help="sample an orbit on a (p, q) grid as CSV")
    p.add_argument("--f", type=float, required=True)
    p.add_argument("--casimir", type=float, required=True)
    p.add_argument("--p-range", required=True, help="VALUE or START:STOP:NUM")
    p.add_argument("--q-range", required=True, help="VALUE or START:STOP:NUM")
    p.add_argument("--output", default="-", help="CSV path, '-' for stdout")

    p = sub.add_parser("contract", parents=[common], help="measure the Galilei contraction rate")
    p.add_argument("--op", required=True, choices=["compose", "spacetime", "phase"])
    p.add_argument("--c-grid", default=DEFAULT_C_GRID, help="comma separated increasing c values")
    p.add_argument("--sample-size", type=int, default=32)
    p.add_argument("--zero-boosts", action="store_true",
                   help="use a sample without boosts (degenerate; slope undefined)")
    return parser


def _params(args) -> KinematicParams:
    try:
        return KinematicParams.parse(args.c)
    except ValueError as exc:
        raise UsageError(f"--c: {exc}") from exc


def parse_grid(text: str) -> np.ndarray:
    """``"3"`` -> one node; ``"start:stop:num"`` -> ``num`` evenly spaced nodes."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return np.array([float(parts[0])])
        if len(parts) == 3:
            start, stop, num = float(parts[0]), float(parts[1]), int(parts[2])
            if num < 1:
                raise ValueError
            return np.linspace(start, stop, num)
    except ValueError:
        pass
    raise UsageError(f"malformed grid {text!r}; expected VALUE or START:STOP:NUM")


def cmd_verify(args, out) -> int:
    try:
        config = RunConfig(seed=args.seed, cases=args.cases, rel_tol=args.rel_tol,
                           abs_tol=args.abs_tol, c=args.c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    results = run_suite(config)
    for result in results:
        print(result.to_json(), file=out)
    failed = [r.name for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} properties passed"
          + (f"; failed: {', '.join(failed)}" if failed else ""), file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _load(schema, text):
    try:
        return wire.loads(schema, text)
    except wire.SchemaError as exc:
        raise UsageError(str(exc)) from exc


def cmd_transform(args, out) -> int:
    params = _params(args)
    extended = args.kind == "group" and '"zeta"' in args.element
    if extended:
        result = extended_compose(_load("extended", args.element),
                                  _load("extended", args.point), params)
    else:
        g = _load("group", args.element)
        if args.kind == "group":
            result = compose(g, _load("group", args.point), params)
        elif args.kind == "coadjoint":
            result = coadjoint_action(g, _load("dual", args.point), params)
        elif args.kind == "spacetime":
            result = spacetime_action(g, _load("spacetime", args.point), params)
        else:
            if args.f is None:
                raise UsageError("--kind phase requires --f")
            result = phase_action(g, _load("phase", args.point), args.f, params)
    print(wire.dumps(result), file=out)
    return EXIT_OK


def cmd_orbit(args, out) -> int:
    params = _params(args)
    inv = OrbitInvariants(args.f, args.casimir)
    p_grid, q_grid = parse_grid(args.p_range), parse_grid(args.q_range)
    P, Q = np.meshgrid(p_grid, q_grid, indexing="ij")
    mu = orbit_point(inv, P.ravel(), Q.ravel(), params)
    t, q, _ = darboux_from_dual(mu)
    check = casimir(mu, params).casimir
    worst = float(np.max(np.abs(check - args.casimir)))
    lines = [",".join(wire.ORBIT_CSV_HEADER)]
    rows = np.stack([mu.k, mu.e, mu.p, np.broadcast_to(mu.f, mu.p.shape), t, q], axis=-1)
    lines.extend(wire.csv_row(row) for row in rows)
    text = "\n".join(lines) + "\n"
    if args.output == "-":
        out.write(text)
    else:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    if worst > args.abs_tol:
        print(f"orbit rows violate the Casimir by {worst:.3g} > abs-tol {args.abs_tol:g}",
              file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_contract(args, out) -> int:
    try:
        grid = [float(c) for c in args.c_grid.split(",") if c.strip()]
    except ValueError as exc:
        raise UsageError(f"--c-grid: {exc}") from exc
    if args.seed < 0 or args.sample_size < 1:
        raise UsageError("--seed must be >= 0 and --sample-size >= 1")
    sample = contraction_sample(args.op, seed=args.seed, n=args.sample_size,
                                zero_boosts=args.zero_boosts)
    report = contraction_rate(args.op, sample, grid)
    print(json.dumps(report.to_dict()), file=out)
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "transform": cmd_transform,
    "orbit": cmd_orbit,
    "contract": cmd_contract,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse: --help exits 0, usage errors exit 2
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, PoincareError, wire.SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
