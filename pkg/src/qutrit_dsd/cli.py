"""Command-line front end.

Subcommands:

* ``scan``     time scan of negativity / CCNR / lambda_min, CSV output
* ``surface``  lambda_min over an (alpha, t) grid, CSV output
* ``events``   DSD/DSB crossings and CCNR windows, JSON output
* ``validate`` built-in invariant suite

Every data file is written together with a ``<stem>.manifest.json``
containing the fully resolved parameters, the library version, the output
schema and a SHA-256 of the output bytes; re-running the same command
reproduces the output bit-exactly.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 domain error.
CSV files are RFC-4180 with LF line endings, a mandatory header row, and
floats rendered as their shortest round-trip decimal.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .channel import Variant
from .dynamics import ScanConfig, detect_events, scan, sweep_surface
from .errors import DomainError
from .selfcheck import run_all

SCAN_COLUMNS = ["t", "p", "negativity", "ccnr", "lambda_min"]
SURFACE_COLUMNS = ["alpha", "t", "p", "lambda_min"]
SCHEMA_VERSION = 1


def _fmt(value: float) -> str:
    """Shortest decimal that round-trips to the same float."""
    return repr(float(value))


def _render_csv(columns: list[str], rows) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(x) for x in row])
    return buf.getvalue().encode("utf-8")


def _write_with_manifest(
    out: Path, data: bytes, command: str, parameters: dict, schema: dict
) -> None:
    out.write_bytes(data)
    manifest = {
        "command": command,
        "parameters": parameters,
        "library_version": __version__,
        "schema": schema,
        "output": out.name,
        "output_sha256": hashlib.sha256(data).hexdigest(),
    }
    manifest_path = out.with_name(out.stem + ".manifest.json")
    manifest_path.write_text(
        json.dumps(manifest, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )


def _scan_config(args: argparse.Namespace) -> ScanConfig:
    return ScanConfig(
        alpha=args.alpha,
        r=args.r,
        variant=Variant(args.variant),
        t_start=args.t_start,
        t_end=args.t_end,
        steps=args.steps,
        refine_tol=getattr(args, "refine_tol", 1e-5),
    )


def _scan_parameters(config: ScanConfig) -> dict:
    return {
        "alpha": config.alpha,
        "r": config.r,
        "variant": config.variant.value,
        "t_start": config.t_start,
        "t_end": config.t_end,
        "steps": config.steps,
        "refine_tol": config.refine_tol,
    }


def _cmd_scan(args: argparse.Namespace) -> int:
    config = _scan_config(args)
    series = scan(config)
    rows = zip(series.t, series.p, series.negativity, series.ccnr, series.lambda_min)
    data = _render_csv(SCAN_COLUMNS, rows)
    _write_with_manifest(
        Path(args.out),
        data,
        command="scan",
        parameters=_scan_parameters(config),
        schema={"kind": "scan", "version": SCHEMA_VERSION, "columns": SCAN_COLUMNS},
    )
    return 0


def _cmd_surface(args: argparse.Namespace) -> int:
    if args.alpha_steps < 1 or args.t_steps < 1:
        raise DomainError("alpha-steps and t-steps must be >= 1")
    alpha_grid = np.linspace(args.alpha_min, args.alpha_max, args.alpha_steps)
    t_grid = np.linspace(args.t_min, args.t_max, args.t_steps)
    rows = sweep_surface(alpha_grid, args.r, Variant(args.variant), t_grid)
    data = _render_csv(SURFACE_COLUMNS, rows)
    _write_with_manifest(
        Path(args.out),
        data,
        command="surface",
        parameters={
            "alpha_min": args.alpha_min,
            "alpha_max": args.alpha_max,
            "alpha_steps": args.alpha_steps,
            "r": args.r,
            "t_min": args.t_min,
            "t_max": args.t_max,
            "t_steps": args.t_steps,
            "variant": Variant(args.variant).value,
        },
        schema={"kind": "surface", "version": SCHEMA_VERSION, "columns": SURFACE_COLUMNS},
    )
    return 0


def _cmd_events(args: argparse.Namespace) -> int:
    config = _scan_config(args)
    series = scan(config)
    events = detect_events(series, config)
    payload = [
        {"kind": e.kind.value, "t_start": e.t_start, "t_end": e.t_end} for e in events
    ]
    data = (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode("utf-8")
    _write_with_manifest(
        Path(args.out),
        data,
        command="events",
        parameters=_scan_parameters(config),
        schema={"kind": "events", "version": SCHEMA_VERSION, "columns": None},
    )
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    results = run_all()
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        detail = f"  ({result.detail})" if result.detail else ""
        print(f"[{status}] {result.name}{detail}")
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


def _add_scan_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, required=True, help="initial-state parameter in [2, 5]")
    parser.add_argument("--r", type=float, required=True, help="excitation-loss weight in [0, 1]")
    parser.add_argument(
        "--variant",
        choices=[v.value for v in Variant],
        default=Variant.AS_WRITTEN.value,
        help="channel closure (default: %(default)s)",
    )
    parser.add_argument("--t-start", type=float, default=0.0, help="scan start time (default: 0)")
    parser.add_argument("--t-end", type=float, required=True, help="scan end time")
    parser.add_argument("--steps", type=int, required=True, help="number of grid points (>= 2)")
    parser.add_argument("--out", type=Path, required=True, help="output file path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qutrit-dsd",
        description="Two-qutrit entanglement dynamics under local amplitude damping.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="witness time scan to CSV")
    _add_scan_flags(p_scan)
    p_scan.set_defaults(func=_cmd_scan)

    p_surface = sub.add_parser("surface", help="lambda_min over an (alpha, t) grid to CSV")
    p_surface.add_argument("--alpha-min", type=float, required=True)
    p_surface.add_argument("--alpha-max", type=float, required=True)
    p_surface.add_argument("--alpha-steps", type=int, required=True)
    p_surface.add_argument("--r", type=float, required=True)
    p_surface.add_argument("--t-min", type=float, required=True)
    p_surface.add_argument("--t-max", type=float, required=True)
    p_surface.add_argument("--t-steps", type=int, required=True)
    p_surface.add_argument(
        "--variant",
        choices=[v.value for v in Variant],
        default=Variant.AS_WRITTEN.value,
    )
    p_surface.add_argument("--out", type=Path, required=True)
    p_surface.set_defaults(func=_cmd_surface)

    p_events = sub.add_parser("events", help="DSD/DSB event detection to JSON")
    _add_scan_flags(p_events)
    p_events.add_argument(
        "--refine-tol", type=float, default=1e-5, help="bisection time tolerance (default: 1e-5)"
    )
    p_events.set_defaults(func=_cmd_events)

    p_validate = sub.add_parser("validate", help="run the built-in invariant suite")
    p_validate.set_defaults(func=_cmd_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
