"""Brute-force grid checks and contour data for the closed-form solvers.

Nothing here is clever on purpose. A dense grid of candidate shapes is
evaluated and the smallest sample wins; agreement between that sample and a
closed-form optimum, to within the grid resolution, is the evidence that
both are right. The same machinery produces the contour matrices the UI
renders as a heatmap.

Conventions shared by every function in this module:

  * grids are linear with both endpoints included;
  * tied minima resolve to the smallest first coordinate, then the
    smallest second coordinate, scanning r (or W) before k (or H);
  * identical inputs produce bit-identical outputs, there is no randomness
    and no parallel reduction.

Contour matrices are filled one entry at a time through the same scalar
kernel behind surface_from_ratios, so independently recomputing any entry
reproduces the stored value exactly. The min-search paths are vectorized
with numpy instead; they only promise agreement within grid resolution,
not bit equality with the scalar route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .geometry import (
    _reduced_surface_value,
    check_alpha,
    check_area,
    check_dimension,
    check_ratio,
    check_volume,
)

__all__ = [
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
]


def _check_range(field: str, pair) -> tuple[float, float]:
    try:
        lo, hi = pair
    except (TypeError, ValueError):
        raise DomainError(field, "must be a (lower, upper) pair") from None
    lo = check_ratio(field, lo)
    hi = check_ratio(field, hi)
    if not lo < hi:
        raise DomainError(field, "lower bound must be below upper bound")
    return lo, hi


@dataclass(frozen=True)
class GridSpec:
    """Rectangular sampling grid over the shape plane (r, k).

    Linear spacing, endpoints included, at least two samples per axis.
    """

    r_range: tuple[float, float] = (0.2, 5.0)
    k_range: tuple[float, float] = (0.1, 3.0)
    n_r: int = 201
    n_k: int = 201

    def __post_init__(self):
        object.__setattr__(self, "r_range", _check_range("r_range", self.r_range))
        object.__setattr__(self, "k_range", _check_range("k_range", self.k_range))
        for field in ("n_r", "n_k"):
            n = getattr(self, field)
            if isinstance(n, bool) or not isinstance(n, int):
                raise DomainError(field, "must be an integer")
            if n < 2:
                raise DomainError(field, "needs at least 2 samples per axis")

    def r_axis(self) -> np.ndarray:
        return np.linspace(self.r_range[0], self.r_range[1], self.n_r)

    def k_axis(self) -> np.ndarray:
        return np.linspace(self.k_range[0], self.k_range[1], self.n_k)


DEFAULT_GRID = GridSpec()


class RatioGridMin(NamedTuple):
    """Smallest sampled shape coefficient and where it was found."""

    r: float
    k: float
    gamma: float


class PlanGridMin(NamedTuple):
    """Smallest sampled surface over plan variables (W, H)."""

    w: float
    h: float
    surface: float


@dataclass(frozen=True)
class ContourGrid:
    """Sampled surface landscape over (r, k) for one volume and pitch.

    surface is a matrix of n_k rows by n_r columns: surface[j][i] is the
    external surface at r_axis[i], k_axis[j]. min_r, min_k, min_s locate
    the smallest sampled entry (ties resolved toward small r, then small k).
    """

    r_axis: tuple[float, ...]
    k_axis: tuple[float, ...]
    surface: tuple[tuple[float, ...], ...]
    min_r: float
    min_k: float
    min_s: float


def _gamma_grid(r: np.ndarray, k: np.ndarray, cos_alpha: float) -> np.ndarray:
    return (2.0 * k + 2.0 * r * k + r / cos_alpha) / (r * k) ** (2.0 / 3.0)


def grid_min_gamma(alpha: float, grid: GridSpec = DEFAULT_GRID) -> RatioGridMin:
    """Smallest shape coefficient on a (r, k) grid.

    Scans r-major, so ties resolve to the smallest r, then the smallest k.
    """
    alpha = check_alpha(alpha)
    r = grid.r_axis()
    k = grid.k_axis()
    g = _gamma_grid(r[:, None], k[None, :], math.cos(alpha))
    flat = int(np.argmin(g))  # first occurrence wins, row-major = r-major
    i, j = divmod(flat, grid.n_k)
    return RatioGridMin(float(r[i]), float(k[j]), float(g[i, j]))


def _check_line(lo: float, hi: float, n: int, field: str) -> None:
    if not 0 < lo < hi:
        raise DomainError(field, "lower bound must be positive and below upper bound")
    if n < 2:
        raise DomainError(field, "needs at least 2 samples")


def grid_min_gamma_fixed_r(
    alpha: float, r: float, k_lo: float = 0.05, k_hi: float = 8.0, n: int = 4001
) -> RatioGridMin:
    """Smallest shape coefficient along the line of one footprint ratio."""
    alpha = check_alpha(alpha)
    r = check_ratio("r", r)
    n = int(n)
    _check_line(k_lo, k_hi, n, "k_range")
    k = np.linspace(k_lo, k_hi, n)
    g = _gamma_grid(np.float64(r), k, math.cos(alpha))
    j = int(np.argmin(g))
    return RatioGridMin(r, float(k[j]), float(g[j]))


def grid_min_gamma_fixed_k(
    alpha: float, k: float, r_lo: float = 0.05, r_hi: float = 8.0, n: int = 4001
) -> RatioGridMin:
    """Smallest shape coefficient along the line of one slenderness."""
    alpha = check_alpha(alpha)
    k = check_ratio("k", k)
    n = int(n)
    _check_line(r_lo, r_hi, n, "r_range")
    r = np.linspace(r_lo, r_hi, n)
    g = _gamma_grid(r, np.float64(k), math.cos(alpha))
    i = int(np.argmin(g))
    return RatioGridMin(float(r[i]), k, float(g[i]))


def grid_min_surface_W(
    floor_area: float,
    height: float,
    alpha: float,
    w_lo: float | None = None,
    w_hi: float | None = None,
    n: int = 4001,
) -> PlanGridMin:
    """Smallest surface over the footprint split W at fixed F = W*L and H."""
    floor_area = check_area("floor_area", floor_area)
    height = check_dimension("height", height)
    alpha = check_alpha(alpha)
    root = math.sqrt(floor_area)
    if w_lo is None:
        w_lo = root / 4.0
    if w_hi is None:
        w_hi = root * 4.0
    if not 0 < w_lo < w_hi:
        raise DomainError("w_range", "lower bound must be positive and below upper bound")
    w = np.linspace(w_lo, w_hi, max(int(n), 2))
    ca = math.cos(alpha)
    s = 2.0 * w * height + 2.0 * floor_area * height / w + floor_area / ca
    i = int(np.argmin(s))
    return PlanGridMin(float(w[i]), height, float(s[i]))


def grid_min_surface_WH(
    volume: float,
    alpha: float,
    hmin: float,
    hmax: float,
    n: int = 201,
    *,
    w_lo: float | None = None,
    w_hi: float | None = None,
    n_w: int | None = None,
    n_h: int | None = None,
) -> PlanGridMin:
    """Smallest surface over (W, H) with the height boxed to [hmin, hmax].

    The length is eliminated through L = V / (W*H), giving
    S = 2*W*H + 2*V/W + V/(H*cos(alpha)). n sets the samples per axis;
    n_w and n_h override it per axis. The default W bracket spans the
    stationary widths of both height bounds with margin, so the boxed
    optimum always lies strictly inside it. Ties resolve to the smallest
    W, then the smallest H.
    """
    volume = check_volume("volume", volume)
    alpha = check_alpha(alpha)
    hmin = check_dimension("hmin", hmin)
    hmax = check_dimension("hmax", hmax)
    if not hmin < hmax:
        raise DomainError("height_range", "hmin must be strictly less than hmax")
    if w_lo is None:
        w_lo = 0.9 * math.sqrt(volume / hmax)
    if w_hi is None:
        w_hi = 1.1 * math.sqrt(volume / hmin)
    if not 0 < w_lo < w_hi:
        raise DomainError("w_range", "lower bound must be positive and below upper bound")
    w = np.linspace(w_lo, w_hi, max(int(n_w if n_w is not None else n), 2))
    h = np.linspace(hmin, hmax, max(int(n_h if n_h is not None else n), 2))
    ca = math.cos(alpha)
    s = 2.0 * w[:, None] * h[None, :] + 2.0 * volume / w[:, None] + volume / (h[None, :] * ca)
    flat = int(np.argmin(s))  # first occurrence wins, row-major = W-major
    i, j = divmod(flat, h.size)
    return PlanGridMin(float(w[i]), float(h[j]), float(s[i, j]))


def contour_grid(volume: float, alpha: float, grid: GridSpec = DEFAULT_GRID) -> ContourGrid:
    """Surface landscape over (r, k) for a fixed volume and pitch.

    Entries are computed one by one with the scalar kernel behind
    surface_from_ratios, so recomputing surface[j][i] from the axes always
    reproduces the stored value bit for bit.
    """
    volume = check_volume("volume", volume)
    alpha = check_alpha(alpha)
    ca = math.cos(alpha)
    r_axis = [float(x) for x in grid.r_axis()]
    k_axis = [float(x) for x in grid.k_axis()]

    rows = [
        tuple(_reduced_surface_value(volume, r, k, ca) for r in r_axis)
        for k in k_axis
    ]

    best_i = best_j = 0
    best = rows[0][0]
    for i in range(grid.n_r):  # r-major scan fixes the tie order
        for j in range(grid.n_k):
            s = rows[j][i]
            if s < best:
                best = s
                best_i, best_j = i, j
    return ContourGrid(
        r_axis=tuple(r_axis),
        k_axis=tuple(k_axis),
        surface=tuple(rows),
        min_r=r_axis[best_i],
        min_k=k_axis[best_j],
        min_s=best,
    )
