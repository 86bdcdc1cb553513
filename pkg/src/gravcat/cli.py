"""Command-line front end: point evaluation, sweeps, grids, thresholds, geometry.

Every subcommand is a thin adapter around the library; no numerics live
here.  Parameters may come from flags or from a JSON config file (the same
flat schema the emitted metadata echoes, so a previous output's meta.spec
block re-runs verbatim); explicit flags override the file.

Point, threshold and geometry results go to stdout; sweep and grid tables
are written to --out.  Exit status 0 on success, 2 on usage or validation
errors (diagnostic on stderr).  $GRAVCAT_MAX_WORKERS caps the evaluation
worker count.
"""

import argparse
import json
import sys

from ._version import __version__
from .correlations import evaluate
from .model import ModelParams, PhysicalGeometry, gamma_from_geometry
from .sweep import (
    QUANTITIES,
    Axis,
    SweepSpec,
    ThresholdQuery,
    emit,
    find_threshold,
    run_sweep,
)

_AXIS_CHOICES = ("temp", "T", "gamma", "omega")


def _add_fixed_flags(parser, names=("temp", "gamma", "omega")):
    flags = {"temp": "temperature T", "gamma": "coupling energy", "omega": "excitation energy"}
    for name in names:
        parser.add_argument(f"--{name}", type=float, default=None, help=flags[name])


def _add_output_flags(parser):
    parser.add_argument("--out", default=None, help="output file path")
    parser.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default csv)")
    parser.add_argument("--workers", type=int, default=None,
                        help="evaluation workers (default: machine parallelism)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gravcat",
        description="Thermal quantum correlations of two gravitationally coupled qubits.",
    )
    parser.add_argument("--version", action="version", version=f"gravcat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="evaluate all correlation measures at one (omega, gamma, T)")
    _add_fixed_flags(p)
    p.add_argument("--config", default=None, help="JSON file with parameter defaults")

    p = sub.add_parser("sweep", help="1-D scan along T, gamma or omega")
    p.add_argument("--axis", choices=_AXIS_CHOICES, default=None, help="swept parameter")
    p.add_argument("--min", type=float, default=None)
    p.add_argument("--max", type=float, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--scale", choices=("linear", "log"), default=None)
    p.add_argument("--quantities", default=None,
                   help=f"comma-separated subset of {','.join(QUANTITIES)}")
    _add_fixed_flags(p)
    _add_output_flags(p)
    p.add_argument("--config", default=None, help="JSON file with parameter defaults")

    p = sub.add_parser("grid", help="2-D scan (heatmap data)")
    for suffix in ("", "2"):
        p.add_argument(f"--axis{suffix}", choices=_AXIS_CHOICES, default=None)
        p.add_argument(f"--min{suffix}", type=float, default=None)
        p.add_argument(f"--max{suffix}", type=float, default=None)
        p.add_argument(f"--count{suffix}", type=int, default=None)
        p.add_argument(f"--scale{suffix}", choices=("linear", "log"), default=None)
    p.add_argument("--quantities", default=None,
                   help=f"comma-separated subset of {','.join(QUANTITIES)}")
    _add_fixed_flags(p)
    _add_output_flags(p)
    p.add_argument("--config", default=None, help="JSON file with parameter defaults")

    p = sub.add_parser("threshold", help="bisect the zero boundary of a quantity")
    p.add_argument("--quantity", choices=("s_ab", "s_ba", "concurrence", "gqd"), default=None)
    p.add_argument("--axis", choices=_AXIS_CHOICES, default=None)
    p.add_argument("--lo", type=float, default=None)
    p.add_argument("--hi", type=float, default=None)
    p.add_argument("--tol", type=float, default=None, help="bracket width target (default 1e-4)")
    p.add_argument("--direction", choices=("onset", "vanishing"), default=None,
                   help="descriptive label; the search only needs a valid bracket")
    _add_fixed_flags(p)
    p.add_argument("--config", default=None, help="JSON file with parameter defaults")

    p = sub.add_parser("geometry", help="coupling energy from a double-well layout")
    p.add_argument("--G", type=float, default=None, help="gravitational constant")
    p.add_argument("--m", type=float, default=None, help="particle mass")
    p.add_argument("--d1", type=float, default=None, help="near inter-well separation")
    p.add_argument("--d", type=float, default=None, help="transverse well spacing")
    p.add_argument("--config", default=None, help="JSON file with parameter defaults")

    return parser


class UsageError(Exception):
    pass


def _merge_config(args):
    """Fill unset flags from the JSON config file; flags win."""
    if getattr(args, "config", None) is None:
        return
    try:
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"--config {args.config}: {exc}") from exc
    if not isinstance(cfg, dict):
        raise UsageError(f"--config {args.config}: expected a JSON object")
    for key, value in cfg.items():
        if key in ("command", "columns"):
            continue
        dest = key.replace("-", "_")
        if not hasattr(args, dest):
            raise UsageError(f"--config {args.config}: unknown key {key!r}")
        if getattr(args, dest) is None:
            if key == "quantities" and isinstance(value, list):
                value = ",".join(value)
            setattr(args, dest, value)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"missing required flag --{name.replace('_', '-')}")


def _fixed_params(args, axis_names):
    """Fixed {T, gamma, omega} values left over after removing swept axes."""
    canon = {"temp": "T", "T": "T", "gamma": "gamma", "omega": "omega"}
    swept = {canon[a] for a in axis_names}
    fixed = {}
    for flag, name in (("temp", "T"), ("gamma", "gamma"), ("omega", "omega")):
        value = getattr(args, flag)
        if name in swept:
            if value is not None:
                raise UsageError(f"--{flag} conflicts with swept axis {name}")
        else:
            if value is None:
                raise UsageError(f"missing required flag --{flag}")
            fixed[name] = value
    return fixed


def _parse_quantities(args):
    if args.quantities is None:
        return QUANTITIES
    names = tuple(q.strip() for q in str(args.quantities).split(",") if q.strip())
    for q in names:
        if q not in QUANTITIES:
            raise UsageError(f"--quantities: unknown quantity {q!r}")
    return names


def _cmd_point(args):
    _require(args, "omega", "gamma", "temp")
    report = evaluate(ModelParams(args.omega, args.gamma), args.temp)
    fields = ("T", "gamma", "omega", "s_ab", "s_ba", "delta12", "concurrence", "gqd")
    print(" ".join(f"{name}={getattr(report, name):.12g}" for name in fields))
    return 0


def _cmd_sweep(args):
    _require(args, "axis", "min", "max", "count", "out")
    axis = Axis(args.axis, args.min, args.max, args.count, args.scale or "linear")
    spec = SweepSpec(
        axis1=axis,
        fixed=_fixed_params(args, (args.axis,)),
        quantities=_parse_quantities(args),
    )
    table = run_sweep(spec, workers=args.workers)
    emit(table, args.format or "csv", args.out)
    return 0


def _cmd_grid(args):
    _require(args, "axis", "min", "max", "count", "axis2", "min2", "max2", "count2", "out")
    axis1 = Axis(args.axis, args.min, args.max, args.count, args.scale or "linear")
    axis2 = Axis(args.axis2, args.min2, args.max2, args.count2, args.scale2 or "linear")
    spec = SweepSpec(
        axis1=axis1,
        axis2=axis2,
        fixed=_fixed_params(args, (args.axis, args.axis2)),
        quantities=_parse_quantities(args),
    )
    table = run_sweep(spec, workers=args.workers)
    emit(table, args.format or "csv", args.out)
    return 0


def _cmd_threshold(args):
    _require(args, "quantity", "axis", "lo", "hi")
    query = ThresholdQuery(
        quantity=args.quantity,
        axis=args.axis,
        lo=args.lo,
        hi=args.hi,
        fixed=_fixed_params(args, (args.axis,)),
        tolerance=args.tol if args.tol is not None else 1e-4,
        direction=args.direction,
    )
    print(f"{find_threshold(query):.12g}")
    return 0


def _cmd_geometry(args):
    _require(args, "G", "m", "d1", "d")
    value = gamma_from_geometry(PhysicalGeometry(args.G, args.m, args.d1, args.d))
    print(f"{value:.12g}")
    return 0


_COMMANDS = {
    "point": _cmd_point,
    "sweep": _cmd_sweep,
    "grid": _cmd_grid,
    "threshold": _cmd_threshold,
    "geometry": _cmd_geometry,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        _merge_config(args)
        return _COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"gravcat {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"gravcat {args.command}: error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
