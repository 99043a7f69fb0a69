"""
Scoring real houses against their theoretical minimum
======================================================

A house is compact when its external surface is close to the smallest
surface any house of the same volume and roof pitch could have.  The
ratio S / S_min is 1.0 for a perfectly proportioned house and grows as
the shape drifts from the optimum.
"""

from hiproof.geometry import HouseParams, compactness, envelope_of
from hiproof.optimize import optimize_fixed_volume

HOUSES = [
    ("long bungalow", HouseParams.from_degrees(9.5, 16.7, 2.6, 30.0)),
    ("steep two-storey", HouseParams.from_degrees(10.9, 26.7, 7.2, 50.0)),
    ("square and balanced", HouseParams.from_degrees(12.5, 12.5, 7.9, 35.0)),
]

print(f"{'house':<22} {'S':>8} {'S_min':>8} {'ratio':>6} {'surplus':>8}")
for name, p in HOUSES:
    env = envelope_of(p)
    best = optimize_fixed_volume(env.volume, p.alpha)
    score = compactness(p, best.s_min)
    print(
        f"{name:<22} {score.surface:8.1f} {score.min_surface:8.1f}"
        f" {score.ratio:6.2f} {score.surplus:8.1f}"
    )

print()
print("surplus is wasted envelope in m^2: material and heat-loss area the")
print("same interior volume did not have to spend.")
