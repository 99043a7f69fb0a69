"""Envelope geometry of a hip-roof rectangular house.

The model is a heated box of width W, length L and wall height H under a
hip roof pitched at angle alpha. Heat leaves through the four walls and the
roof; the ground slab is excluded. Projecting the pitched roof onto the
footprint shows its area is the footprint divided by cos(alpha), so the
heat-exchanging surface is

    S = 2*W*H + 2*L*H + L*W / cos(alpha)

The attic under the roof is unconditioned space: the heated volume is the
box volume V = W*L*H only.

Shape is captured by two dimensionless ratios, the footprint ratio r = L/W
and the slenderness k = H/W. At fixed volume the surface factors into a
scale term V**(2/3) times a pure shape coefficient gamma(r, k), which is
what the optimizers minimize.

Units are meters, square meters and cubic meters throughout. Angles are
radians inside the package; the command-line and HTTP layers accept degrees
and convert at the boundary.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

from . import limits
from .errors import DomainError

__all__ = [
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
    "check_dimension",
    "check_volume",
    "check_area",
    "check_ratio",
    "check_alpha",
    "alpha_from_degrees",
]


# ---------------------------------------------------------------------------
# validation helpers, shared with the optimizer and boundary layers


def _as_float(field: str, value) -> float:
    # bool is an int subclass; strings would coerce via float().  Both are
    # caller bugs, not measurements, so neither is accepted.
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise DomainError(field, "must be a number")
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(field, "must be finite")
    return value


def check_dimension(field: str, value) -> float:
    """Validate a linear dimension in meters: finite, positive, plausible."""
    value = _as_float(field, value)
    if value <= 0.0:
        raise DomainError(field, "must be positive")
    if value > limits.MAX_DIMENSION:
        raise DomainError(field, f"must not exceed {limits.MAX_DIMENSION:g} m")
    return value


def check_volume(field: str, value) -> float:
    """Validate a volume in cubic meters."""
    value = _as_float(field, value)
    if value <= 0.0:
        raise DomainError(field, "must be positive")
    if value > limits.MAX_VOLUME:
        raise DomainError(field, f"must not exceed {limits.MAX_VOLUME:g} m^3")
    return value


def check_area(field: str, value) -> float:
    """Validate an area in square meters."""
    value = _as_float(field, value)
    if value <= 0.0:
        raise DomainError(field, "must be positive")
    if value > limits.MAX_FLOOR_AREA:
        raise DomainError(field, f"must not exceed {limits.MAX_FLOOR_AREA:g} m^2")
    return value


def check_ratio(field: str, value) -> float:
    """Validate a dimensionless shape ratio: finite and positive."""
    value = _as_float(field, value)
    if value <= 0.0:
        raise DomainError(field, "must be positive")
    return value


def check_alpha(value) -> float:
    """Validate a roof pitch in radians, strictly inside (0, pi/2)."""
    value = _as_float("alpha", value)
    if not (limits.MIN_ALPHA < value < limits.MAX_ALPHA):
        raise DomainError("alpha", "roof pitch must lie strictly between 0 and 90 degrees")
    return value


def alpha_from_degrees(alpha_deg) -> float:
    """Convert a pitch given in degrees to validated radians."""
    return check_alpha(math.radians(_as_float("alpha", alpha_deg)))


# ---------------------------------------------------------------------------
# value objects


@dataclass(frozen=True)
class HouseParams:
    """Validated dimensions of one house.

    Attributes:
        width: footprint width W in m.
        length: footprint length L in m.
        height: wall height H in m, ground to eaves.
        alpha: roof pitch in radians, strictly between 0 and pi/2.
    """

    width: float
    length: float
    height: float
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "width", check_dimension("width", self.width))
        object.__setattr__(self, "length", check_dimension("length", self.length))
        object.__setattr__(self, "height", check_dimension("height", self.height))
        object.__setattr__(self, "alpha", check_alpha(self.alpha))

    @classmethod
    def from_degrees(cls, width, length, height, alpha_deg) -> "HouseParams":
        """Build params with the roof pitch given in degrees."""
        return cls(width, length, height, math.radians(_as_float("alpha", alpha_deg)))


@dataclass(frozen=True)
class AspectRatios:
    """Dimensionless shape of a house: r = L/W and k = H/W."""

    r: float
    k: float

    def __post_init__(self):
        object.__setattr__(self, "r", check_ratio("r", self.r))
        object.__setattr__(self, "k", check_ratio("k", self.k))


@dataclass(frozen=True)
class EnvelopeQuantities:
    """Heated volume, external surface and floor area of one house."""

    volume: float
    surface: float
    floor_area: float

    def __post_init__(self):
        for field in ("volume", "surface", "floor_area"):
            value = _as_float(field, getattr(self, field))
            if value <= 0.0:
                raise DomainError(field, "must be positive")
            object.__setattr__(self, field, value)


@dataclass(frozen=True)
class CompactnessReport:
    """How close a house comes to the minimal envelope for its constraints.

    ratio = surface / min_surface is dimensionless and scale-invariant;
    1.0 means the house is as compact as the constraints allow. surplus is
    the excess area in square meters, surface - min_surface.
    """

    surface: float
    min_surface: float
    ratio: float
    surplus: float

    def __post_init__(self):
        object.__setattr__(self, "surface", _as_float("surface", self.surface))
        object.__setattr__(self, "min_surface", _as_float("min_surface", self.min_surface))
        object.__setattr__(self, "ratio", _as_float("ratio", self.ratio))
        object.__setattr__(self, "surplus", _as_float("surplus", self.surplus))
        if self.surface <= 0.0:
            raise DomainError("surface", "must be positive")
        if self.min_surface <= 0.0:
            raise DomainError("min_surface", "must be positive")


# ---------------------------------------------------------------------------
# kernels
#
# The unvalidated kernels below are the single source of truth for the two
# formulas. Everything that must agree bit-for-bit (scalar ops, contour
# grids) goes through them with identical argument forms.


def _surface_value(width: float, length: float, height: float, cos_alpha: float) -> float:
    return 2.0 * width * height + 2.0 * length * height + length * width / cos_alpha


def _gamma_value(r: float, k: float, cos_alpha: float) -> float:
    return (2.0 * k + 2.0 * r * k + r / cos_alpha) / (r * k) ** (2.0 / 3.0)


def _reduced_surface_value(vol: float, r: float, k: float, cos_alpha: float) -> float:
    return vol ** (2.0 / 3.0) * _gamma_value(r, k, cos_alpha)


# ---------------------------------------------------------------------------
# operations


def volume(p: HouseParams) -> float:
    """Heated box volume W*L*H in cubic meters. The attic does not count."""
    return p.width * p.length * p.height


def external_surface(p: HouseParams) -> float:
    """Heat-exchanging envelope area: four walls plus the pitched roof.

    The roof contributes footprint / cos(alpha); the ground face is excluded.
    """
    return _surface_value(p.width, p.length, p.height, math.cos(p.alpha))


def gamma(r: float, k: float, alpha: float) -> float:
    """Shape coefficient of the envelope: surface per unit of V**(2/3).

    gamma(r, k) = (2k + 2rk + r/cos(alpha)) / (rk)**(2/3). Any house with
    footprint ratio r and slenderness k has external surface
    V**(2/3) * gamma(r, k), so minimizing gamma at fixed constraints
    minimizes the surface for every volume at once.
    """
    r = check_ratio("r", r)
    k = check_ratio("k", k)
    alpha = check_alpha(alpha)
    return _gamma_value(r, k, math.cos(alpha))


def surface_from_ratios(vol: float, r: float, k: float, alpha: float) -> float:
    """External surface of the house with volume vol and shape (r, k).

    Equals external_surface of the reconstructed house with
    W = (vol / (r*k))**(1/3), L = r*W, H = k*W.
    """
    vol = check_volume("volume", vol)
    r = check_ratio("r", r)
    k = check_ratio("k", k)
    alpha = check_alpha(alpha)
    return _reduced_surface_value(vol, r, k, math.cos(alpha))


def ratios_of(p: HouseParams) -> AspectRatios:
    """Footprint ratio r = L/W and slenderness k = H/W of a house."""
    return AspectRatios(r=p.length / p.width, k=p.height / p.width)


def envelope_of(p: HouseParams) -> EnvelopeQuantities:
    """Volume, external surface and floor area of a house in one call."""
    return EnvelopeQuantities(
        volume=volume(p),
        surface=external_surface(p),
        floor_area=p.width * p.length,
    )


def compactness(p: HouseParams, min_surface: float) -> CompactnessReport:
    """Rate a house against the minimal surface for the same constraints.

    Args:
        p: the house as built or drafted.
        min_surface: the optimal surface the relevant scenario allows,
            typically OptimalDesign.s_min for the same volume and pitch.

    Returns:
        CompactnessReport with ratio = S / min_surface and the surplus
        area S - min_surface. Scaling every length by a factor c leaves the
        ratio unchanged (S and min_surface both scale by c**2).
    """
    min_surface = _as_float("min_surface", min_surface)
    if min_surface <= 0.0:
        raise DomainError("min_surface", "must be positive")
    s = external_surface(p)
    return CompactnessReport(
        surface=s,
        min_surface=min_surface,
        ratio=s / min_surface,
        surplus=s - min_surface,
    )
