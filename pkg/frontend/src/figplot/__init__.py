"""Figure rendering for qutrit-dsd CSV outputs."""

__version__ = "0.1.0"

from .render import PlotSpec, SchemaError, build_scan_figure, build_surface_figure, load_table, render

__all__ = [
    "PlotSpec",
    "SchemaError",
    "__version__",
    "build_scan_figure",
    "build_surface_figure",
    "load_table",
    "render",
]
