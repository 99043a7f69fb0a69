"""Randomized cross-checks of the closed-form solvers against grid oracles.

For each scenario a seeded stream of random problem instances is solved
twice: once with the closed form and once by brute-force grid search. Three
things must hold for every instance:

  * dominance: the closed-form surface is never above the grid minimum
    (plus 1e-9 for rounding), because every grid sample is a feasible
    candidate;
  * resolution: the gap between grid minimum and closed form stays within
    twice the largest per-axis relative grid step;
  * convergence: doubling the grid density at least halves the median gap,
    the signature of a true smooth minimum rather than a lucky value.

Scan windows are jittered per instance (from the same seed) so the optimum
cannot sit on a lattice point systematically, which would fake perfect
agreement and break the convergence check. Identical (samples, seed) input
reproduces identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .optimize import (
    optimize_fixed_floor,
    optimize_fixed_k,
    optimize_fixed_r,
    optimize_fixed_volume,
    optimize_height_range,
)
from .oracle import (
    GridSpec,
    grid_min_gamma,
    grid_min_gamma_fixed_k,
    grid_min_gamma_fixed_r,
    grid_min_surface_W,
    grid_min_surface_WH,
)

__all__ = ["ScenarioCheck", "verify_scenario", "verify_all", "DOMINANCE_SLACK"]

# closed form may exceed the grid minimum by at most this much (rounding)
DOMINANCE_SLACK = 1e-9

_SCENARIOS = ("fixed-volume", "fixed-r", "fixed-k", "fixed-floor", "height-range")


@dataclass(frozen=True)
class ScenarioCheck:
    """Outcome of one scenario's randomized cross-check.

    Gaps are relative: (grid minimum - closed form) / closed form.
    """

    scenario: str
    samples: int
    max_rel_gap: float
    median_rel_gap: float
    median_rel_gap_refined: float
    dominance_ok: bool
    within_bound: bool
    converges: bool

    @property
    def passed(self) -> bool:
        return self.dominance_ok and self.within_bound and self.converges


def _draw(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(rng.uniform(lo, hi))


def _gap_and_bound(scenario: str, rng: np.random.Generator, refine: int) -> tuple[float, float, float]:
    """One random instance: absolute gap, relative gap, allowed resolution bound."""
    alpha = math.radians(_draw(rng, 15.0, 75.0))
    volume = _draw(rng, 50.0, 5000.0)

    def n_of(base: int) -> int:
        # doubling density keeps old lattice points and halves the step
        return (base - 1) * refine + 1

    if scenario == "fixed-volume":
        closed = optimize_fixed_volume(volume, alpha)
        grid = GridSpec(
            r_range=(_draw(rng, 0.2, 0.3), _draw(rng, 3.8, 4.2)),
            k_range=(_draw(rng, 0.08, 0.12), _draw(rng, 3.6, 4.4)),
            n_r=n_of(161), n_k=n_of(161),
        )
        found = grid_min_gamma(alpha, grid)
        oracle_s = volume ** (2.0 / 3.0) * found.gamma
        steps = (
            (grid.r_range[1] - grid.r_range[0]) / (grid.n_r - 1) / found.r,
            (grid.k_range[1] - grid.k_range[0]) / (grid.n_k - 1) / found.k,
        )
    elif scenario == "fixed-r":
        r = _draw(rng, 0.3, 3.5)
        closed = optimize_fixed_r(volume, alpha, r)
        k_lo, k_hi, n = _draw(rng, 0.04, 0.06), _draw(rng, 7.0, 9.0), n_of(4001)
        found = grid_min_gamma_fixed_r(alpha, r, k_lo, k_hi, n)
        oracle_s = volume ** (2.0 / 3.0) * found.gamma
        steps = ((k_hi - k_lo) / (n - 1) / found.k,)
    elif scenario == "fixed-k":
        k = _draw(rng, 0.2, 2.5)
        closed = optimize_fixed_k(volume, alpha, k)
        r_lo, r_hi, n = _draw(rng, 0.03, 0.06), _draw(rng, 3.5, 4.5), n_of(4001)
        found = grid_min_gamma_fixed_k(alpha, k, r_lo, r_hi, n)
        oracle_s = volume ** (2.0 / 3.0) * found.gamma
        steps = ((r_hi - r_lo) / (n - 1) / found.r,)
    elif scenario == "fixed-floor":
        floor_area = _draw(rng, 20.0, 2000.0)
        height = _draw(rng, 2.5, 6.0)
        closed = optimize_fixed_floor(floor_area, height, alpha)
        root = math.sqrt(floor_area)
        w_lo, w_hi = root * _draw(rng, 0.2, 0.3), root * _draw(rng, 3.5, 4.5)
        n = n_of(4001)
        found = grid_min_surface_W(floor_area, height, alpha, w_lo, w_hi, n)
        oracle_s = found.surface
        steps = ((w_hi - w_lo) / (n - 1) / found.w,)
    elif scenario == "height-range":
        hmin = _draw(rng, 2.0, 8.0)
        hmax = hmin + _draw(rng, 0.5, 4.0)
        closed = optimize_height_range(volume, alpha, hmin, hmax)
        w_lo = math.sqrt(volume / hmax) * _draw(rng, 0.8, 0.9)
        w_hi = math.sqrt(volume / hmin) * _draw(rng, 1.1, 1.2)
        n_w = n_h = n_of(201)
        found = grid_min_surface_WH(volume, alpha, hmin, hmax, w_lo=w_lo, w_hi=w_hi, n_w=n_w, n_h=n_h)
        oracle_s = found.surface
        steps = (
            (w_hi - w_lo) / (n_w - 1) / found.w,
            (hmax - hmin) / (n_h - 1) / found.h,
        )
    else:
        raise ValueError(f"unknown scenario {scenario!r}")

    gap_abs = oracle_s - closed.s_min
    bound = 2.0 * max(steps)
    return gap_abs, gap_abs / closed.s_min, bound


def verify_scenario(scenario: str, samples: int = 200, seed: int = 7) -> ScenarioCheck:
    """Cross-check one scenario on `samples` seeded random instances."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    gaps_abs = []
    gaps = []
    bounds = []
    gaps_refined = []
    rng = np.random.default_rng(seed)
    rng_refined = np.random.default_rng(seed)  # identical instances, denser grid
    for _ in range(samples):
        gap_abs, gap, bound = _gap_and_bound(scenario, rng, refine=1)
        _, gap2, _ = _gap_and_bound(scenario, rng_refined, refine=2)
        gaps_abs.append(gap_abs)
        gaps.append(gap)
        bounds.append(bound)
        gaps_refined.append(gap2)

    gaps_arr = np.array(gaps)
    dominance_ok = bool(np.all(np.array(gaps_abs) >= -DOMINANCE_SLACK))
    within_bound = bool(np.all(gaps_arr <= np.array(bounds)))
    median = float(np.median(gaps_arr))
    median_refined = float(np.median(np.array(gaps_refined)))
    converges = median_refined <= 0.5 * median or median_refined < 1e-12
    return ScenarioCheck(
        scenario=scenario,
        samples=samples,
        max_rel_gap=float(np.max(gaps_arr)),
        median_rel_gap=median,
        median_rel_gap_refined=median_refined,
        dominance_ok=dominance_ok,
        within_bound=within_bound,
        converges=bool(converges),
    )


def verify_all(samples: int = 200, seed: int = 7) -> list[ScenarioCheck]:
    """Cross-check every scenario; same seed means bit-identical results."""
    return [verify_scenario(name, samples, seed) for name in _SCENARIOS]
