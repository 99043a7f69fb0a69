"""Minimal-surface design of hip-roof houses.

A house is modeled as a heated box under a hip roof pitched at angle
alpha; the heat-exchanging envelope is the four walls plus the roof. This
package evaluates that geometry, solves five constrained scenarios for the
design with the smallest envelope in closed form, cross-checks every
closed form against brute-force grid search, scores real houses against
their optimum, and serves it all over a CLI and a small HTTP API.

Quick taste:

    >>> from hiproof import FixedVolume, solve, alpha_from_degrees
    >>> design = solve(FixedVolume(volume=400.0, alpha=alpha_from_degrees(30.0)))
    >>> round(design.s_min, 2), round(design.w_min, 2)
    (271.23, 8.85)

Angles are radians everywhere inside the library; the CLI and HTTP layers
speak degrees and convert at the boundary (`alpha_from_degrees` does the
same for library callers).
"""

from .errors import DomainError, ParseError
from .geometry import (
    AspectRatios,
    CompactnessReport,
    EnvelopeQuantities,
    HouseParams,
    alpha_from_degrees,
    compactness,
    envelope_of,
    external_surface,
    gamma,
    ratios_of,
    surface_from_ratios,
    volume,
)
from .optimize import (
    SCENARIO_NAMES,
    FixedFloorArea,
    FixedFootprintRatio,
    FixedSlenderness,
    FixedVolume,
    HeightRange,
    KktDiagnostics,
    OptimalDesign,
    ScenarioSpec,
    h_crit,
    optimize_fixed_floor,
    optimize_fixed_k,
    optimize_fixed_r,
    optimize_fixed_volume,
    optimize_height_range,
    solve,
)
from .oracle import (
    DEFAULT_GRID,
    ContourGrid,
    GridSpec,
    PlanGridMin,
    RatioGridMin,
    contour_grid,
    grid_min_gamma,
    grid_min_gamma_fixed_k,
    grid_min_gamma_fixed_r,
    grid_min_surface_W,
    grid_min_surface_WH,
)
from .casestudy import (
    AuditRow,
    CaseStudyRecord,
    audit,
    audit_records,
    parse_records,
    parse_report_json,
    render_report,
)
from .verify import ScenarioCheck, verify_all, verify_scenario

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "DomainError",
    "ParseError",
    # geometry
    "HouseParams",
    "AspectRatios",
    "EnvelopeQuantities",
    "CompactnessReport",
    "volume",
    "external_surface",
    "gamma",
    "surface_from_ratios",
    "ratios_of",
    "envelope_of",
    "compactness",
    "alpha_from_degrees",
    # optimizers
    "FixedVolume",
    "FixedFootprintRatio",
    "FixedSlenderness",
    "FixedFloorArea",
    "HeightRange",
    "ScenarioSpec",
    "SCENARIO_NAMES",
    "OptimalDesign",
    "KktDiagnostics",
    "optimize_fixed_volume",
    "optimize_fixed_r",
    "optimize_fixed_k",
    "optimize_fixed_floor",
    "optimize_height_range",
    "h_crit",
    "solve",
    # oracle
    "GridSpec",
    "DEFAULT_GRID",
    "ContourGrid",
    "RatioGridMin",
    "PlanGridMin",
    "grid_min_gamma",
    "grid_min_gamma_fixed_r",
    "grid_min_gamma_fixed_k",
    "grid_min_surface_W",
    "grid_min_surface_WH",
    "contour_grid",
    # case studies
    "CaseStudyRecord",
    "AuditRow",
    "parse_records",
    "audit",
    "audit_records",
    "render_report",
    "parse_report_json",
    # verification
    "ScenarioCheck",
    "verify_scenario",
    "verify_all",
]
