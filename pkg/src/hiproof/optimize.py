"""Closed-form minimal-surface designs for five scenarios.

Every scenario fixes part of the design and asks for the house with the
smallest heat-exchanging envelope:

    fixed-volume   given V and pitch alpha, both ratios free
    fixed-r        given V, alpha and the footprint ratio r = L/W
    fixed-k        given V, alpha and the slenderness k = H/W
    fixed-floor    given floor area F = W*L and wall height H
    height-range   given V, alpha, with H confined to [hmin, hmax]

The unconstrained problems have closed-form stationary points of the shape
coefficient gamma(r, k); the height-range scenario adds bound constraints
and is solved through its first-order (KKT) conditions, which here reduce
to clamping the wall height at the nearer bound whenever the free optimum
falls outside the interval. Solving any scenario is a handful of
arithmetic operations, so a solve costs microseconds.

A solved design always satisfies, up to floating-point rounding:

    l_min = r_min * w_min        h_min = k_min * w_min
    w_min * l_min * h_min = v    s_min = external_surface(reconstruction)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar, Union

from . import limits
from .errors import DomainError
from .geometry import (
    _surface_value,
    check_alpha,
    check_area,
    check_dimension,
    check_ratio,
    check_volume,
)

__all__ = [
    "KktDiagnostics",
    "OptimalDesign",
    "FixedVolume",
    "FixedFootprintRatio",
    "FixedSlenderness",
    "FixedFloorArea",
    "HeightRange",
    "ScenarioSpec",
    "SCENARIO_NAMES",
    "optimize_fixed_volume",
    "optimize_fixed_r",
    "optimize_fixed_k",
    "optimize_fixed_floor",
    "optimize_height_range",
    "h_crit",
    "solve",
]


@dataclass(frozen=True)
class KktDiagnostics:
    """First-order certificate for a height-range solve.

    Attributes:
        h_crit: wall height the unconstrained optimum would pick for the
            same volume and pitch.
        active: which height bound binds: "lower", "interior" or "upper".
        mu1: multiplier of the constraint H >= hmin; nonnegative, zero
            unless the lower bound is active.
        mu2: multiplier of the constraint H <= hmax; nonnegative, zero
            unless the upper bound is active.
    """

    h_crit: float
    active: str
    mu1: float
    mu2: float


@dataclass(frozen=True)
class OptimalDesign:
    """Surface-minimal house for one scenario.

    Attributes:
        w_min, l_min, h_min: optimal width, length and wall height in m.
        s_min: minimal external surface in m^2.
        r_min, k_min: shape ratios of the optimum (k_min echoes H/W even
            when the height was given rather than optimized).
        v: heated volume of the design in m^3.
        kkt: bound diagnostics, present only for height-range solves.
    """

    w_min: float
    l_min: float
    h_min: float
    s_min: float
    r_min: float
    k_min: float
    v: float
    kkt: KktDiagnostics | None = None


# ---------------------------------------------------------------------------
# scenario specs, the tagged union used by the CLI and the HTTP service


@dataclass(frozen=True)
class FixedVolume:
    """Scenario input: volume and pitch fixed, shape free."""

    volume: float
    alpha: float
    scenario: ClassVar[str] = "fixed-volume"

    def __post_init__(self):
        object.__setattr__(self, "volume", check_volume("volume", self.volume))
        object.__setattr__(self, "alpha", check_alpha(self.alpha))


@dataclass(frozen=True)
class FixedFootprintRatio:
    """Scenario input: volume, pitch and footprint ratio r = L/W fixed."""

    volume: float
    alpha: float
    r: float
    scenario: ClassVar[str] = "fixed-r"

    def __post_init__(self):
        object.__setattr__(self, "volume", check_volume("volume", self.volume))
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        object.__setattr__(self, "r", check_ratio("r", self.r))


@dataclass(frozen=True)
class FixedSlenderness:
    """Scenario input: volume, pitch and slenderness k = H/W fixed."""

    volume: float
    alpha: float
    k: float
    scenario: ClassVar[str] = "fixed-k"

    def __post_init__(self):
        object.__setattr__(self, "volume", check_volume("volume", self.volume))
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        object.__setattr__(self, "k", check_ratio("k", self.k))


@dataclass(frozen=True)
class FixedFloorArea:
    """Scenario input: floor area and wall height fixed, footprint free."""

    floor_area: float
    height: float
    alpha: float
    scenario: ClassVar[str] = "fixed-floor"

    def __post_init__(self):
        object.__setattr__(self, "floor_area", check_area("floor_area", self.floor_area))
        object.__setattr__(self, "height", check_dimension("height", self.height))
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        implied = self.floor_area * self.height
        if implied > limits.MAX_VOLUME:
            raise DomainError(
                "volume", f"implied volume {implied:g} exceeds {limits.MAX_VOLUME:g} m^3"
            )


@dataclass(frozen=True)
class HeightRange:
    """Scenario input: volume and pitch fixed, wall height boxed."""

    volume: float
    alpha: float
    hmin: float
    hmax: float
    scenario: ClassVar[str] = "height-range"

    def __post_init__(self):
        object.__setattr__(self, "volume", check_volume("volume", self.volume))
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        object.__setattr__(self, "hmin", check_dimension("hmin", self.hmin))
        object.__setattr__(self, "hmax", check_dimension("hmax", self.hmax))
        if not self.hmin < self.hmax:
            raise DomainError("height_range", "hmin must be strictly less than hmax")


ScenarioSpec = Union[FixedVolume, FixedFootprintRatio, FixedSlenderness, FixedFloorArea, HeightRange]

SCENARIO_NAMES = ("fixed-volume", "fixed-r", "fixed-k", "fixed-floor", "height-range")


# ---------------------------------------------------------------------------
# solvers


def optimize_fixed_volume(volume: float, alpha: float) -> OptimalDesign:
    """Minimal-surface house of a given heated volume and roof pitch.

    The optimum is always a square footprint (r = 1) with slenderness
    k = 1 / (2 cos alpha): flatter roofs ask for squatter houses, steeper
    roofs for taller ones.
    """
    volume = check_volume("volume", volume)
    alpha = check_alpha(alpha)
    ca = math.cos(alpha)
    w = (2.0 * volume * ca) ** (1.0 / 3.0)
    h = (volume / (4.0 * ca * ca)) ** (1.0 / 3.0)
    s = 3.0 * (2.0 * volume) ** (2.0 / 3.0) / ca ** (1.0 / 3.0)
    return OptimalDesign(
        w_min=w, l_min=w, h_min=h, s_min=s, r_min=1.0, k_min=1.0 / (2.0 * ca), v=volume
    )


def optimize_fixed_r(volume: float, alpha: float, r: float) -> OptimalDesign:
    """Minimal-surface house when the footprint ratio r = L/W is imposed.

    The free slenderness settles at k = r / ((r + 1) cos alpha). With r = 1
    this reduces to the fixed-volume optimum.
    """
    volume = check_volume("volume", volume)
    alpha = check_alpha(alpha)
    r = check_ratio("r", r)
    ca = math.cos(alpha)
    k = r / ((r + 1.0) * ca)
    w = (volume * ca * (r + 1.0) / (r * r)) ** (1.0 / 3.0)
    s = 3.0 * r * volume ** (2.0 / 3.0) / (ca * (r * r / (ca * (r + 1.0))) ** (2.0 / 3.0))
    return OptimalDesign(
        w_min=w, l_min=r * w, h_min=k * w, s_min=s, r_min=r, k_min=k, v=volume
    )


def optimize_fixed_k(volume: float, alpha: float, k: float) -> OptimalDesign:
    """Minimal-surface house when the slenderness k = H/W is imposed.

    The free footprint ratio settles at r = 4k cos(alpha) / (2k cos(alpha) + 1),
    which is always below 2; only for k = 1 / (2 cos alpha) does it reach 1.
    """
    volume = check_volume("volume", volume)
    alpha = check_alpha(alpha)
    k = check_ratio("k", k)
    ca = math.cos(alpha)
    r = 4.0 * k * ca / (2.0 * k * ca + 1.0)
    q = (2.0 * k * ca + 1.0) / (4.0 * k * k * ca)  # = 1 / (r * k) at the optimum
    w = volume ** (1.0 / 3.0) * q ** (1.0 / 3.0)
    s = 6.0 * k * volume ** (2.0 / 3.0) * q ** (2.0 / 3.0)
    return OptimalDesign(
        w_min=w, l_min=r * w, h_min=k * w, s_min=s, r_min=r, k_min=k, v=volume
    )


def optimize_fixed_floor(floor_area: float, height: float, alpha: float) -> OptimalDesign:
    """Minimal-surface footprint for a given floor area and wall height.

    Only the walls depend on the footprint split once F = W*L is fixed, so
    the optimum is the square W = L = sqrt(F) regardless of height or pitch.
    """
    floor_area = check_area("floor_area", floor_area)
    height = check_dimension("height", height)
    alpha = check_alpha(alpha)
    implied = floor_area * height
    if implied > limits.MAX_VOLUME:
        raise DomainError(
            "volume", f"implied volume {implied:g} exceeds {limits.MAX_VOLUME:g} m^3"
        )
    ca = math.cos(alpha)
    w = math.sqrt(floor_area)
    s = 4.0 * w * height + floor_area / ca
    return OptimalDesign(
        w_min=w, l_min=w, h_min=height, s_min=s, r_min=1.0, k_min=height / w, v=implied
    )


def h_crit(volume: float, alpha: float) -> float:
    """Wall height of the unconstrained optimum, (V / (4 cos^2 alpha))**(1/3).

    This is the pivot of the height-range scenario: bounds only matter when
    they exclude this height.
    """
    volume = check_volume("volume", volume)
    alpha = check_alpha(alpha)
    ca = math.cos(alpha)
    return (volume / (4.0 * ca * ca)) ** (1.0 / 3.0)


def optimize_height_range(volume: float, alpha: float, hmin: float, hmax: float) -> OptimalDesign:
    """Minimal-surface house with the wall height confined to [hmin, hmax].

    Three first-order cases, decided by where the free optimum h_crit sits:

      h_crit <= hmin   lower bound active, H = hmin, W = sqrt(V / hmin)
      hmin < h_crit < hmax   interior, the fixed-volume optimum
      h_crit >= hmax   upper bound active, H = hmax, W = sqrt(V / hmax)

    Both bounds can never be active at once since hmin < hmax is enforced.
    Exact ties (h_crit equal to a bound) report the bound as active with a
    vanishing multiplier; the design coincides with the interior one there.
    The returned kkt diagnostics carry h_crit, the active case and the
    multipliers of H >= hmin and H <= hmax.
    """
    volume = check_volume("volume", volume)
    alpha = check_alpha(alpha)
    hmin = check_dimension("hmin", hmin)
    hmax = check_dimension("hmax", hmax)
    if not hmin < hmax:
        raise DomainError("height_range", "hmin must be strictly less than hmax")
    ca = math.cos(alpha)
    hc = (volume / (4.0 * ca * ca)) ** (1.0 / 3.0)

    if hc <= hmin:
        h = hmin
        w = math.sqrt(volume / h)
        # stationarity in W leaves dS/dH = 2W - V/(H^2 cos a) as the multiplier
        mu1 = 2.0 * w - volume / (h * h * ca)
        diag = KktDiagnostics(h_crit=hc, active="lower", mu1=max(mu1, 0.0), mu2=0.0)
    elif hc >= hmax:
        h = hmax
        w = math.sqrt(volume / h)
        mu2 = volume / (h * h * ca) - 2.0 * w
        diag = KktDiagnostics(h_crit=hc, active="upper", mu1=0.0, mu2=max(mu2, 0.0))
    else:
        base = optimize_fixed_volume(volume, alpha)
        diag = KktDiagnostics(h_crit=hc, active="interior", mu1=0.0, mu2=0.0)
        return OptimalDesign(
            w_min=base.w_min, l_min=base.l_min, h_min=base.h_min, s_min=base.s_min,
            r_min=base.r_min, k_min=base.k_min, v=base.v, kkt=diag,
        )

    length = volume / (w * h)
    s = _surface_value(w, length, h, ca)
    return OptimalDesign(
        w_min=w, l_min=length, h_min=h, s_min=s,
        r_min=length / w, k_min=h / w, v=volume, kkt=diag,
    )


def solve(spec: ScenarioSpec) -> OptimalDesign:
    """Solve any scenario spec. The dispatch point for the CLI and service."""
    if isinstance(spec, FixedVolume):
        return optimize_fixed_volume(spec.volume, spec.alpha)
    if isinstance(spec, FixedFootprintRatio):
        return optimize_fixed_r(spec.volume, spec.alpha, spec.r)
    if isinstance(spec, FixedSlenderness):
        return optimize_fixed_k(spec.volume, spec.alpha, spec.k)
    if isinstance(spec, FixedFloorArea):
        return optimize_fixed_floor(spec.floor_area, spec.height, spec.alpha)
    if isinstance(spec, HeightRange):
        return optimize_height_range(spec.volume, spec.alpha, spec.hmin, spec.hmax)
    raise TypeError(f"not a scenario spec: {type(spec).__name__}")
