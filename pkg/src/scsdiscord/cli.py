"""Command-line front end: ``point``, ``sweep``, ``figure`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import oracle
from ._backend import BACKEND
from .errors import SCSError
from .minimizer import correlation_report
from .states import CoherentParams, Parity, quasi_werner_density

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

COLUMNS = ["parity", "a", "alpha_sq", "beta_sq", "theta", "discord", "delta", "theta_opt",
           "mutual_info", "classical_corr", "concurrence", "eof", "delta_minus_eof", "error"]
REPORT_COLUMNS = COLUMNS[5:-1]

FIGURES = {
    "fig1": ("plus", "theta"),
    "fig2": ("minus", "theta"),
    "fig3": ("plus", "alpha_sq"),
    "fig4": ("minus", "alpha_sq"),
    "fig5": ("plus", "alpha_sq"),
    "fig6": ("minus", "alpha_sq"),
}
DEFAULT_PHOTON_SETTINGS = "0.5,1.5,3.0"
FIGURE_ALPHA_RANGE = (0.05, 5.0)
FIGURE_THETA_RANGE = (0.0, math.pi)


class UsageError(Exception):
    """Bad flag value; reported as ``{"error": "UsageError"}`` with exit code 2."""


def round12(x: float) -> float:
    """Round to 12 significant digits; ``repr`` of the result is the cell text."""
    y = float(f"{float(x):.12g}")
    return 0.0 if y == 0.0 else y


def format_number(x) -> str:
    if x is None:
        return ""
    return repr(round12(x))


def parse_float(text: str, flag: str) -> float:
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise UsageError(f"{flag}: cannot parse {text!r} as a number") from None
    if not math.isfinite(value):
        raise UsageError(f"{flag}: value must be finite, got {text!r}")
    return value


def parse_range(text: str, flag: str) -> list[float]:
    """``start:stop:step`` (inclusive of ``stop`` when reachable) or a single scalar."""
    parts = text.split(":")
    if len(parts) == 1:
        return [parse_float(parts[0], flag)]
    if len(parts) != 3:
        raise UsageError(f"{flag}: expected a scalar or start:stop:step, got {text!r}")
    start, stop, step = (parse_float(p, flag) for p in parts)
    if step <= 0.0:
        raise UsageError(f"{flag}: step must be > 0")
    if start > stop:
        raise UsageError(f"{flag}: start must be <= stop")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round12(start + i * step) for i in range(count)]


def parse_photon_settings(text: str) -> list[tuple[float, float | None]]:
    settings = []
    for item in text.split(","):
        if ":" in item:
            first, second = item.split(":", 1)
            settings.append((parse_float(first, "--photon-settings"), parse_float(second, "--photon-settings")))
        else:
            settings.append((parse_float(item, "--photon-settings"), None))
    if not settings:
        raise UsageError("--photon-settings: at least one value required")
    return settings


def evaluate_point(job):
    """One output row (list of cell strings) for ``(parity, a, alpha_sq, beta_sq, theta)``."""
    parity, a, alpha_sq, beta_sq, theta = job
    head = [parity, format_number(a), format_number(alpha_sq), format_number(beta_sq)]
    try:
        rep = correlation_report(CoherentParams(alpha_sq, beta_sq), parity, a, theta)
    except SCSError as err:
        return head + [format_number(theta)] + [""] * len(REPORT_COLUMNS) + [type(err).__name__]
    used_theta = rep.theta_opt if theta is None else theta
    values = rep.as_dict()
    return head + [format_number(used_theta)] + [format_number(values[c]) for c in REPORT_COLUMNS] + [""]


def evaluate_all(jobs: list, workers: int) -> list[list[str]]:
    if workers <= 1 or len(jobs) < 2:
        return [evaluate_point(j) for j in jobs]
    chunk = max(1, len(jobs) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate_point, jobs, chunksize=chunk))


def render(rows: list[list[str]], fmt: str) -> str:
    if fmt == "json":
        records = []
        for row in rows:
            record = {}
            for col, cell in zip(COLUMNS, row):
                if col in ("parity", "error"):
                    record[col] = cell or None
                else:
                    record[col] = float(cell) if cell else None
            records.append(record)
        return json.dumps(records, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()


def write_output(text: str, out):
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    path = Path(out)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def emit_error(kind: str, message: str):
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def cmd_point(args) -> int:
    parity = Parity.parse(args.parity).value
    alpha_sq = parse_float(args.alpha_sq, "--alpha-sq")
    beta_sq = parse_float(args.beta_sq, "--beta-sq")
    a = parse_float(args.a, "--a")
    theta = None if args.theta is None else parse_float(args.theta, "--theta")
    phi = None if args.phi is None else parse_float(args.phi, "--phi")
    params = CoherentParams(alpha_sq, beta_sq)
    rep = correlation_report(params, parity, a, theta)
    out = {
        "parity": parity,
        "a": round12(a),
        "alpha_sq": round12(alpha_sq),
        "beta_sq": round12(beta_sq),
        "theta": round12(rep.theta_opt if theta is None else theta),
    }
    out.update({k: round12(v) for k, v in rep.as_dict().items()})
    if phi is not None:
        rho = quasi_werner_density(params, parity, a).rho
        out["phi"] = round12(phi)
        out["discord_oracle"] = round12(oracle.discord_by_definition(rho, out["theta"], phi))
    sys.stdout.write(json.dumps(out) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    parity = Parity.parse(args.parity).value
    a_values = parse_range(args.a, "--a")
    alpha_values = parse_range(args.alpha_sq, "--alpha-sq")
    beta_values = parse_range(args.beta_sq, "--beta-sq")
    theta_values = [None] if args.theta is None else parse_range(args.theta, "--theta")
    jobs = [(parity, a, al, be, th)
            for a in a_values for al in alpha_values for be in beta_values for th in theta_values]
    rows = evaluate_all(jobs, args.jobs)
    write_output(render(rows, args.format), args.out)
    return EXIT_OK


def figure_panels(fig_id: str, grid: int, settings) -> list[tuple[str, list]]:
    """``(suffix, jobs)`` per sub-panel, in loop-nest order a, alpha_sq, beta_sq, theta."""
    parity, axis = FIGURES[fig_id]
    a_axis = [round12(v) for v in np.linspace(0.0, 1.0, grid)]
    panels = []
    for k, (first, second) in enumerate(settings):
        suffix = chr(ord("a") + k)
        if axis == "theta":
            alpha_sq = first
            beta_sq = first if second is None else second
            thetas = [round12(v) for v in np.linspace(*FIGURE_THETA_RANGE, grid)]
            jobs = [(parity, a, alpha_sq, beta_sq, th) for a in a_axis for th in thetas]
        else:
            if second is not None:
                raise UsageError(f"{fig_id}: sub-panel settings are single beta_sq values")
            alphas = [round12(v) for v in np.linspace(*FIGURE_ALPHA_RANGE, grid)]
            jobs = [(parity, a, al, first, None) for a in a_axis for al in alphas]
        panels.append((suffix, jobs))
    return panels


def cmd_figure(args) -> int:
    if args.grid < 2:
        raise UsageError("--grid must be >= 2")
    settings = parse_photon_settings(args.photon_settings)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for suffix, jobs in figure_panels(args.id, args.grid, settings):
        rows = evaluate_all(jobs, args.jobs)
        path = out_dir / f"{args.id}{suffix}.csv"
        path.write_text(render(rows, "csv"))
        print(path)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verification import run_verification

    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    tol = args.tol
    start = time.perf_counter()
    checks = run_verification(args.samples, args.seed, tol, use_printed_eq23=args.use_printed_eq23)
    elapsed = time.perf_counter() - start
    variant = "printed" if args.use_printed_eq23 else "corrected"
    print(f"verify: samples={args.samples} seed={args.seed} tol={tol:g} "
          f"eq23={variant} backend={BACKEND}")
    ok = True
    for check in checks:
        status = ("PASS" if check.passed else "FAIL") if check.gating else "reference only"
        print(f"  {check.name:<28s} max_dev={check.max_dev:.3e}  {status}")
        if not check.passed:
            ok = False
            dev, sample = max(check.failures, key=lambda f: f[0])
            print(f"    worst offender ({len(check.failures)} failing): dev={dev:.3e} {sample.describe()}")
    print(f"result: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s)")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        emit_error("UsageError", message)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scsdiscord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_state_flags(p, ranged):
        kind = "value or start:stop:step" if ranged else "value"
        p.add_argument("--parity", choices=["plus", "minus"], required=True)
        p.add_argument("--alpha-sq", required=True, help=f"mean photon number of mode X ({kind})")
        p.add_argument("--beta-sq", required=True, help=f"mean photon number of mode Y ({kind})")
        p.add_argument("--a", required=True, help=f"mixing parameter in [0, 1] ({kind})")
        p.add_argument("--theta", help=f"measurement angle in radians ({kind}); default: optimal angle")

    p = sub.add_parser("point", help="all correlation measures at one point, as JSON")
    add_state_flags(p, ranged=False)
    p.add_argument("--phi", help="measurement azimuth; adds the brute-force discord at (theta, phi)")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("sweep", help="grid of points to CSV or JSON")
    add_state_flags(p, ranged=True)
    p.add_argument("--out", help="output path (default: standard output)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure", help="surface data for one figure, one CSV per sub-panel")
    p.add_argument("id", choices=sorted(FIGURES))
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--grid", type=int, default=101, help="points per axis")
    p.add_argument("--photon-settings", default=DEFAULT_PHOTON_SETTINGS,
                   help="comma-separated sub-panel settings; fig1/fig2 accept alpha_sq:beta_sq pairs")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="closed forms vs brute-force oracle on seeded samples")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--use-printed-eq23", action="store_true",
                   help="gate on the odd-parity outcome probability exactly as misprinted")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as err:
        emit_error("UsageError", str(err))
        return EXIT_USAGE
    except SCSError as err:
        emit_error(type(err).__name__, str(err))
        return EXIT_USAGE
    except OSError as err:
        emit_error("IOError", str(err))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
