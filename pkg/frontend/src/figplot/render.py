"""Figure rendering from qutrit-dsd CSV outputs.

Two figure kinds are supported, matching the two CSV schemas:

* ``scan``: columns t,p,negativity,ccnr,lambda_min; drawn as two labeled
  curves (negativity and CCNR) against t with a horizontal zero line.
* ``surface``: columns alpha,t,p,lambda_min; drawn as a heatmap of
  lambda_min over (p, alpha). A heatmap carries the same information as a
  3D surface and renders robustly.

Rendering is deterministic: fixed figure size, dpi, color map and SVG hash
salt, and no timestamps in the output metadata.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

SCAN_COLUMNS = ("t", "p", "negativity", "ccnr", "lambda_min")
SURFACE_COLUMNS = ("alpha", "t", "p", "lambda_min")

FIGSIZE = (6.4, 4.8)
DPI = 120
COLORMAP = "viridis"
SVG_HASH_SALT = "figplot"


class SchemaError(ValueError):
    """CSV header or contents do not match the requested figure kind."""


@dataclass(frozen=True)
class PlotSpec:
    csv_path: Path
    kind: str  # "scan" or "surface"
    out_path: Path
    xlabel: str | None = None
    ylabel: str | None = None
    title: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("scan", "surface"):
            raise SchemaError(f"unknown figure kind {self.kind!r}, expected 'scan' or 'surface'")


def required_columns(kind: str) -> tuple[str, ...]:
    return SCAN_COLUMNS if kind == "scan" else SURFACE_COLUMNS


def load_table(csv_path: Path, kind: str) -> dict[str, np.ndarray]:
    """Read the CSV and return one float array per required column.

    Raises SchemaError naming any missing columns, or if there are no data
    rows.
    """
    with open(csv_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in required_columns(kind) if c not in header]
        if missing:
            raise SchemaError(
                f"{csv_path} is missing required column(s) for kind '{kind}': "
                + ", ".join(missing)
            )
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{csv_path} has a header but no data rows")
    return {
        c: np.array([float(row[c]) for row in rows]) for c in required_columns(kind)
    }


def build_scan_figure(table: dict[str, np.ndarray], spec: PlotSpec):
    fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI)
    ax.plot(table["t"], table["negativity"], label="negativity", color="tab:blue")
    ax.plot(table["t"], table["ccnr"], label="ccnr", color="tab:red")
    ax.axhline(0.0, color="black", linewidth=0.8)
    ax.set_xlim(float(table["t"].min()), float(table["t"].max()))
    ax.set_xlabel(spec.xlabel or "t")
    ax.set_ylabel(spec.ylabel or "witness value")
    if spec.title:
        ax.set_title(spec.title)
    ax.legend()
    return fig, ax


def build_surface_figure(table: dict[str, np.ndarray], spec: PlotSpec):
    alphas = np.unique(table["alpha"])
    ts = np.unique(table["t"])
    if alphas.size * ts.size != table["alpha"].size:
        raise SchemaError("surface CSV is not a full (alpha, t) grid")
    # Rows are alpha-major, t-minor; p is a function of t.
    order = np.lexsort((table["t"], table["alpha"]))
    lam = table["lambda_min"][order].reshape(alphas.size, ts.size)
    p_vals = table["p"][order][: ts.size]

    fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI)
    mesh = ax.pcolormesh(p_vals, alphas, lam, cmap=COLORMAP, shading="nearest")
    fig.colorbar(mesh, ax=ax, label="lambda_min")
    ax.set_xlim(float(p_vals.min()), float(p_vals.max()))
    ax.set_ylim(float(alphas.min()), float(alphas.max()))
    ax.set_xlabel(spec.xlabel or "p")
    ax.set_ylabel(spec.ylabel or "alpha")
    if spec.title:
        ax.set_title(spec.title)
    return fig, ax


def render(spec: PlotSpec) -> Path:
    """Render the figure to spec.out_path (.png or .svg) and return the path.

    Nothing is written if the CSV fails its schema check.
    """
    table = load_table(spec.csv_path, spec.kind)
    build = build_scan_figure if spec.kind == "scan" else build_surface_figure
    suffix = Path(spec.out_path).suffix.lower()
    if suffix not in (".png", ".svg"):
        raise SchemaError(f"output must end in .png or .svg, got {spec.out_path}")
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT}):
        fig, _ = build(table, spec)
        try:
            if suffix == ".svg":
                fig.savefig(spec.out_path, format="svg", metadata={"Date": None})
            else:
                fig.savefig(spec.out_path, format="png")
        finally:
            plt.close(fig)
    return Path(spec.out_path)
