"""Command line front end writing deterministic CSV.

Subcommands: ``point``, ``sweep``, ``figure``, ``esd``, ``validate-closedform``.
Every output starts with one ``#`` metadata line followed by a CSV header.
Exit codes: 0 success, 1 usage error, 2 numerical validation failure.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import math
import re
import shlex
import sys

import numpy as np

from . import __version__
from .closedform import validation_grid
from .errors import DomainError, NumericalError
from .esd import DEFAULT_GRID, DEFAULT_TOL, ZERO_TOL, find_esd
from .scenarios import (FIGURES, PRESET_R_GRID, DEFAULT_SAMPLES, ScenarioConfig, SweepRecord,
                        figure_data, get_preset, sweep)

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2
RECORD_FIELDS = ("scenario", "coupling", "r", "p1", "p2", "p3", "concurrence")
_PI_EXPR = re.compile(r"^(?:(\d+(?:\.\d*)?)\*?)?pi(?:/(\d+(?:\.\d*)?))?$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x) -> str:
    """12 significant digits; scientific notation below 1e-4."""
    if isinstance(x, str):
        return x
    return format(float(x) + 0.0, ".12g")


def parse_real(text: str) -> float:
    """A float, or a multiple of pi such as ``pi/8`` or ``3*pi/16``."""
    s = text.strip().replace(" ", "")
    m = _PI_EXPR.match(s)
    if m:
        return float(m.group(1) or 1) * math.pi / float(m.group(2) or 1)
    try:
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None


def parse_real_list(text: str) -> list[float]:
    return [parse_real(t) for t in text.split(",") if t.strip()]


def parse_fix(items) -> dict:
    fixed = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep or key not in ("p1", "p2", "p3"):
            raise UsageError(f"--fix expects p1=, p2= or p3= assignments, got {item!r}")
        if key in fixed:
            raise UsageError(f"{key} fixed twice")
        fixed[key] = parse_real(val)
    return fixed


def parse_sweep(text: str):
    parts = text.split(":")
    if len(parts) != 4 or parts[0] not in ("p1", "p2", "p3", "p"):
        raise UsageError(f"--sweep expects VAR:LO:HI:N with VAR in p1,p2,p3,p, got {text!r}")
    lo, hi = parse_real(parts[1]), parse_real(parts[2])
    try:
        n = int(parts[3])
    except ValueError:
        raise UsageError(f"sweep point count must be an integer, got {parts[3]!r}") from None
    if not (0.0 <= lo <= hi <= 1.0) or n < 2:
        raise UsageError("--sweep needs 0 <= LO <= HI <= 1 and N >= 2")
    return parts[0], lo, hi, n


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _emit(path: str, meta: str, header, rows) -> None:
    with _open_out(path) as fh:
        fh.write(f"# unruh_esd {__version__} {meta}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])


def _record_rows(records: list[SweepRecord]):
    return ([getattr(rec, f) for f in RECORD_FIELDS] for rec in records)


def _cmd_point(args, meta):
    cfg = ScenarioConfig(args.scenario, args.coupling, args.r, args.p1, args.p2, args.p3)
    _emit("-", meta, RECORD_FIELDS, _record_rows([SweepRecord.evaluate(cfg)]))
    return EXIT_OK


def _cmd_sweep(args, meta):
    var, lo, hi, n = parse_sweep(args.sweep)
    fixed = parse_fix(args.fix)
    if var in fixed or (var == "p" and fixed):
        raise UsageError(f"sweep variable {var} is also fixed")
    base = ScenarioConfig(args.scenario, args.coupling, args.r[0], **fixed)
    records = sweep(base, var, np.linspace(lo, hi, n), args.r)
    _emit(args.out, meta, RECORD_FIELDS, _record_rows(records))
    return EXIT_OK


def _cmd_figure(args, meta):
    try:
        preset = get_preset(args.id)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    fixed = ",".join(f"{k}={fmt(v)}" for k, v in preset.fixed.items()) or "none"
    meta += (f" | scenario={preset.scenario.value} coupling={preset.coupling.value}"
             f" fixed={fixed} sweep={preset.sweep}"
             f" r={';'.join(fmt(r) for r in preset.r_values)}")
    _emit(args.out, meta, RECORD_FIELDS, _record_rows(figure_data(preset, args.samples)))
    return EXIT_OK


def _cmd_esd(args, meta):
    fixed = parse_fix(args.fix)
    if args.sweep_var in fixed:
        raise UsageError(f"sweep variable {args.sweep_var} is also fixed")
    if args.grid < 16 or not 0 < args.tol <= 1e-6:
        raise UsageError("--grid must be >= 16 and --tol in (0, 1e-6]")
    rows = []
    for r in sorted(args.r):
        cfg = ScenarioConfig(args.scenario, args.coupling, r, **fixed)
        res = find_esd(cfg, args.sweep_var, grid=args.grid, tol=args.tol)
        thr = "" if res.threshold is None else res.threshold
        rows.append((cfg.scenario.value, cfg.coupling.value, r, args.sweep_var,
                     res.status.value, thr, res.bracket[0], res.bracket[1]))
    meta += f" | zero_tol={fmt(ZERO_TOL)}"
    header = ("scenario", "coupling", "r", "sweep_var", "status", "threshold",
              "bracket_lo", "bracket_hi")
    _emit(args.out, meta, header, rows)
    return EXIT_OK


def _cmd_validate(args, meta):
    if args.grid < 1:
        raise UsageError("--grid must be at least 1")
    reports = validation_grid(args.grid, args.seed)
    rows = [(rep.formula, *rep.point, rep.max_abs_deviation,
             "validated" if rep.validated else "unvalidated",
             ";".join(fmt(v) for v in rep.pipeline_values),
             ";".join(fmt(v) for v in rep.printed_values),
             "; ".join(rep.corrected))
            for rep in reports]
    header = ("formula", "r", "p1", "p2", "p3", "max_abs_deviation", "status",
              "pipeline_values", "printed_values", "corrections")
    _emit(args.out, meta, header, rows)
    return EXIT_OK if all(rep.validated for rep in reports) else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unruh-esd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def scenario_flags(p, with_coupling=True):
        p.add_argument("--scenario", required=True, choices=("S1", "S2", "S3"))
        if with_coupling:
            p.add_argument("--coupling", required=True, choices=("multilocal", "global"))

    p = sub.add_parser("point", help="concurrence at one parameter point")
    scenario_flags(p)
    p.add_argument("--r", type=parse_real, required=True)
    for name in ("p1", "p2", "p3"):
        p.add_argument(f"--{name}", type=parse_real, default=0.0)
    p.set_defaults(func=_cmd_point)

    p = sub.add_parser("sweep", help="concurrence along one decoherence parameter")
    scenario_flags(p)
    p.add_argument("--r", type=parse_real_list, default=[0.0], help="comma separated r values")
    p.add_argument("--fix", nargs="*", default=[], metavar="K=V")
    p.add_argument("--sweep", required=True, metavar="VAR:LO:HI:N")
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("figure", help="data behind one of the preset figures")
    p.add_argument("--id", required=True, help=f"one of {', '.join(FIGURES)}")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("esd", help="sudden-death thresholds per r value")
    scenario_flags(p)
    p.add_argument("--fix", nargs="*", default=[], metavar="K=V")
    p.add_argument("--sweep-var", required=True, choices=("p1", "p2", "p3"))
    p.add_argument("--r", type=parse_real_list, default=list(PRESET_R_GRID))
    p.add_argument("--tol", type=parse_real, default=DEFAULT_TOL)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_esd)

    p = sub.add_parser("validate-closedform", help="closed forms against the Kraus pipeline")
    p.add_argument("--grid", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_validate)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    meta = shlex.join(argv)
    try:
        return args.func(args, meta)
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"unruh-esd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"unruh-esd: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
