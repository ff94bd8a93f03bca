"""Command-line front end: ``fracfermi <command> [options]``.

Data goes to standard output (or ``--out``), warnings to standard error.
Exit status is 0 on success, 1 on a solver or verification failure and 2
on a usage or domain error.
"""

import argparse
import csv
import io
import json
import math
import sys
import warnings
from dataclasses import asdict, dataclass, field

import numpy as np

from .dimension import DEFAULT_EPS_GUARD, EVEN_D_TOL
from .errors import DomainError, FracFermiError, PoleSignal
from .identities import run_identities
from .pseudopot import (
    UnitSystem,
    a1_from_abar,
    abar_from_a1,
    check_near_pole,
    frobenius_build,
    psi_eval,
    t_function,
)
from .trap import TrapProblem, energy_2d, perturbative_energy, solve_energy, spectrum_scan

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def fmt(x):
    """Fixed 15-significant-digit rendering used for every number written."""
    if x is None or not math.isfinite(x):
        return "nan" if x is None or math.isnan(x) else ("inf" if x > 0 else "-inf")
    return format(x, ".15g")


def _json_value(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return float(fmt(x)) if math.isfinite(x) else None
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def to_json(self):
        return _json_value(asdict(self))


class UsageError(Exception):
    pass


def _capture(func, *args, **kwargs):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = func(*args, **kwargs)
    return result, [f"{w.category.__name__}: {w.message}" for w in caught]


def _dump_json(obj):
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def cmd_tfun(args):
    rec = OutputRecord("tfun", {"d": args.d, "ka": args.ka})

    def compute():
        first = check_near_pole(args.d, args.ka)
        try:
            value = t_function(args.d, args.ka)
        except PoleSignal as exc:
            lo, hi = exc.bracket
            warnings.warn(f"PoleSignal: T diverges in [{fmt(lo)}, {fmt(hi)}]")
            value = math.nan
        return value, first

    (value, first), rec.warnings = _capture(compute)
    rec.outputs = {"T": value, "first_pole": first}
    return _dump_json(rec.to_json()), rec.warnings, EXIT_OK


def cmd_series(args):
    if args.points < 2 or not args.r_max > args.abar / 10.0:
        raise UsageError("series needs --points >= 2 and --r-max > abar/10")
    series, warns = _capture(
        frobenius_build, args.d, args.k, args.abar, args.n_terms, eps_guard=args.eps_guard
    )
    grid = np.linspace(args.abar / 10.0, args.r_max, args.points)
    if args.abar <= args.r_max and not np.any(grid == args.abar):
        grid = np.sort(np.append(grid, args.abar))
    rows = []
    for r in grid:
        psi, caught = _capture(psi_eval, series, float(r))
        rows.append((float(r), psi, int(bool(caught))))
        warns += caught
    return _csv_text(["r", "psi", "warn"], rows), sorted(set(warns)), EXIT_OK


def _is_two(d):
    return abs(d - 2.0) < EVEN_D_TOL


def cmd_energy(args):
    rec = OutputRecord(
        "energy", {"d": args.d, "a0": args.a0, "n_max": args.n_max, "method": args.method}
    )

    def compute():
        if _is_two(args.d):
            if args.method == "perturbative":
                raise DomainError("no perturbative energy at d = 2; use --method exact")
            return [(0, energy_2d(args.a0), "digamma", "")]
        problem = TrapProblem(args.d, args.a0, eps_guard=args.eps_guard)
        rows = []
        if args.method in ("exact", "both"):
            rows += [
                (b.n, b.E, "exact", "bound" if b.bound else "")
                for b in solve_energy(problem, args.n_max)
            ]
        if args.method in ("perturbative", "both"):
            rows += [
                (n, perturbative_energy(n, problem), "perturbative", "")
                for n in range(args.n_max + 1)
            ]
        return rows

    rows, rec.warnings = _capture(compute)
    code = EXIT_OK if rows else EXIT_FAIL
    if args.format == "csv":
        return _csv_text(["n", "E", "method", "flag"], rows), rec.warnings, code
    rec.outputs = {
        "branches": [{"n": n, "E": e, "method": m, "flag": f} for n, e, m, f in rows]
    }
    return _dump_json(rec.to_json()), rec.warnings, code


def cmd_convert(args):
    units = UnitSystem(args.hbar, args.mass)
    inputs = {"d": args.d, "hbar": args.hbar, "mass": args.mass}
    if args.a1 is not None:
        inputs["a1"] = args.a1
        abar = abar_from_a1(args.d, args.a1, units)
        outputs = {"abar": abar, "a1": a1_from_abar(args.d, abar, units)}
    else:
        inputs["abar"] = args.abar
        a1 = a1_from_abar(args.d, args.abar, units)
        outputs = {"a1": a1, "abar": abar_from_a1(args.d, a1, units)}
    rec = OutputRecord("convert", inputs, outputs)
    return _dump_json(rec.to_json()), [], EXIT_OK


def _d_grid(d_min, d_max, d_step):
    if d_step <= 0 or d_max < d_min:
        raise UsageError("spectrum needs --d-step > 0 and --d-max >= --d-min")
    count = int(math.floor((d_max - d_min) / d_step + 1e-9)) + 1
    return [round(d_min + j * d_step, 12) for j in range(count)]


def cmd_spectrum(args):
    grid = _d_grid(args.d_min, args.d_max, args.d_step)
    rows, warns = _capture(spectrum_scan, grid, args.a0, args.n_max, args.eps_guard)
    if args.format == "csv":
        return _csv_text(["d", "n", "E_exact", "E_pert", "flag"], rows), warns, EXIT_OK
    records = [
        OutputRecord(
            "spectrum",
            {"d": row.d, "a0": args.a0, "n": row.n},
            {"E_exact": row.E_exact, "E_pert": row.E_pert},
            [row.flag] if row.flag else [],
        ).to_json()
        for row in rows
    ]
    return _dump_json(records), warns, EXIT_OK


def cmd_verify(args):
    results = run_identities(args.tol_scale)
    failed = [r.name for r in results if not r.passed]
    code = EXIT_FAIL if failed else EXIT_OK
    warns = [f"identity failed: {name}" for name in failed]
    if args.json:
        records = [
            {"name": r.name, "error": r.error, "tol": r.tol, "passed": r.passed} for r in results
        ]
        return _dump_json(_json_value(records)), warns, code
    lines = [f"{'identity':<20} {'error':>12} {'tol':>10}  status"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<20} {r.error:>12.3e} {r.tol:>10.1e}  {status}")
    return "\n".join(lines) + "\n", warns, code


def _common(parser):
    parser.add_argument("--out", help="write data to this path instead of standard output")
    parser.add_argument(
        "--eps-guard",
        type=float,
        default=DEFAULT_EPS_GUARD,
        help="offset applied to even dimensions (default %(default)g)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fracfermi", description="Generalized Fermi pseudopotential in non-integer dimension."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tfun", help="evaluate the phase-shift function T(d, ka)")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--ka", type=float, required=True)
    p.set_defaults(func=cmd_tfun)

    p = sub.add_parser("series", help="tabulate the Frobenius wave function as CSV")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--abar", type=float, required=True)
    p.add_argument("--r-max", type=float, required=True)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--n-terms", type=int, default=40)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("energy", help="trap energies for two atoms")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--a0", type=float, required=True)
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--method", choices=("exact", "perturbative", "both"), default="exact")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("convert", help="convert between a1 and abar (odd d)")
    p.add_argument("--d", type=float, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--a1", type=float)
    group.add_argument("--abar", type=float)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--mass", type=float, default=1.0)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("spectrum", help="scan trap energies over a dimension grid")
    p.add_argument("--d-min", type=float, required=True)
    p.add_argument("--d-max", type=float, required=True)
    p.add_argument("--d-step", type=float, required=True)
    p.add_argument("--a0", type=float, required=True)
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--json", action="store_true", help="emit pass/fail records as JSON")
    p.add_argument(
        "--tol-scale", type=float, default=1.0, help="multiply every tolerance by this factor"
    )
    p.set_defaults(func=cmd_verify)

    for p in sub.choices.values():
        _common(p)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "n_max") and args.n_max < 0:
        parser.error("--n-max must be non-negative")
    try:
        text, warns, code = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FracFermiError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    for w in warns:
        print(f"warning: {w}", file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
