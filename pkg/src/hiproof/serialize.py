"""Canonical serialization shared by the CLI and the HTTP service.

Every piece of JSON the package emits flows through these helpers so a
given result always turns into the same bytes: fixed key order, full
double precision (shortest round-trip float form), no NaN or Infinity.
The service sends the compact form; the CLI pretty-prints the same dict,
so the two agree after whitespace-free canonicalization.

CSV output likewise carries full precision; rounding to two decimals is
purely a table-presentation concern and lives with the table renderers.
"""

from __future__ import annotations

import json
from typing import Any

from .geometry import CompactnessReport
from .optimize import KktDiagnostics, OptimalDesign
from .oracle import ContourGrid

__all__ = [
    "design_to_dict",
    "compactness_to_dict",
    "kkt_to_dict",
    "contour_to_dict",
    "dumps_compact",
    "dumps_pretty",
    "design_to_csv",
    "compactness_to_csv",
    "contour_to_csv",
    "format_fixed",
    "render_kv_table",
]


def kkt_to_dict(diag: KktDiagnostics) -> dict[str, Any]:
    return {
        "h_crit": diag.h_crit,
        "active": diag.active,
        "mu1": diag.mu1,
        "mu2": diag.mu2,
    }


def design_to_dict(design: OptimalDesign) -> dict[str, Any]:
    """OptimalDesign as a JSON-ready dict; kkt appears only when present."""
    out: dict[str, Any] = {
        "w_min": design.w_min,
        "l_min": design.l_min,
        "h_min": design.h_min,
        "s_min": design.s_min,
        "r_min": design.r_min,
        "k_min": design.k_min,
        "v": design.v,
    }
    if design.kkt is not None:
        out["kkt"] = kkt_to_dict(design.kkt)
    return out


def compactness_to_dict(report: CompactnessReport) -> dict[str, Any]:
    return {
        "surface": report.surface,
        "min_surface": report.min_surface,
        "ratio": report.ratio,
        "surplus": report.surplus,
    }


def contour_to_dict(grid: ContourGrid) -> dict[str, Any]:
    return {
        "r_axis": list(grid.r_axis),
        "k_axis": list(grid.k_axis),
        "surface": [list(row) for row in grid.surface],
        "min": {"r": grid.min_r, "k": grid.min_k, "s": grid.min_s},
    }


def dumps_compact(obj: Any) -> str:
    """Wire form: no whitespace, fixed key order, repr floats."""
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)


def dumps_pretty(obj: Any) -> str:
    """Human form for CLI output; newline-terminated."""
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _csv_line(values) -> str:
    return ",".join(_cell(v) for v in values)


def design_to_csv(design: OptimalDesign) -> str:
    """One header line plus one row; kkt columns only when diagnosed."""
    d = design_to_dict(design)
    kkt = d.pop("kkt", None)
    header = list(d.keys())
    row = [d[k] for k in header]
    if kkt is not None:
        header += ["h_crit", "active", "mu1", "mu2"]
        row += [kkt["h_crit"], kkt["active"], kkt["mu1"], kkt["mu2"]]
    return _csv_line(header) + "\n" + _csv_line(row) + "\n"


def compactness_to_csv(report: CompactnessReport) -> str:
    d = compactness_to_dict(report)
    return _csv_line(d.keys()) + "\n" + _csv_line(d.values()) + "\n"


def contour_to_csv(grid: ContourGrid) -> str:
    """Matrix as CSV: header row carries the r axis, first column the k axis."""
    lines = [_csv_line([""] + list(grid.r_axis))]
    for k, row in zip(grid.k_axis, grid.surface):
        lines.append(_csv_line([k] + list(row)))
    return "\n".join(lines) + "\n"


def format_fixed(value: Any, precision: int = 2) -> str:
    """Presentation form of one value: floats rounded, rest unchanged."""
    if isinstance(value, float):
        return f"{value:.{precision}f}"
    return str(value)


def render_kv_table(pairs: list[tuple[str, Any]], precision: int = 2) -> str:
    """Two aligned columns of name and value, one pair per line."""
    width = max(len(name) for name, _ in pairs)
    lines = [f"{name:<{width}}  {format_fixed(value, precision)}" for name, value in pairs]
    return "\n".join(lines) + "\n"
