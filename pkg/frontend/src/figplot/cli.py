"""figplot command line: render a scan or surface CSV to PNG/SVG."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import PlotSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figplot",
        description="Render qutrit-dsd CSV outputs to figures.",
    )
    parser.add_argument("--csv", type=Path, required=True, help="input CSV path")
    parser.add_argument(
        "--kind", choices=["scan", "surface"], required=True,
        help="figure kind matching the CSV schema",
    )
    parser.add_argument("--out", type=Path, required=True, help="output .png or .svg path")
    parser.add_argument("--xlabel", default=None)
    parser.add_argument("--ylabel", default=None)
    parser.add_argument("--title", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(
        csv_path=args.csv,
        kind=args.kind,
        out_path=args.out,
        xlabel=args.xlabel,
        ylabel=args.ylabel,
        title=args.title,
    )
    try:
        out = render(spec)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
