"""
The five design scenarios, solved for one house family
=======================================================

Every scenario below asks for the smallest external envelope of a
hip-roofed house holding 400 cubic metres under a 30 degree roof, each
time with a different quantity pinned by the client.
"""

import math

from hiproof.optimize import (
    optimize_fixed_floor,
    optimize_fixed_k,
    optimize_fixed_r,
    optimize_fixed_volume,
    optimize_height_range,
)

ALPHA = math.radians(30.0)


def show(label, design):
    print(f"{label}")
    print(f"  plan   {design.w_min:.2f} m x {design.l_min:.2f} m")
    print(f"  walls  {design.h_min:.2f} m")
    print(f"  shape  r = {design.r_min:.3f}, k = {design.k_min:.3f}")
    print(f"  envelope {design.s_min:.2f} m^2")
    if design.kkt is not None:
        print(f"  height bound: {design.kkt.active}")
    print()


# nothing pinned: the optimizer picks a square plan on its own
show("free optimum", optimize_fixed_volume(400.0, ALPHA))

# the lot forces an elongated footprint, L = 1.5 W
show("footprint ratio pinned at r = 1.5", optimize_fixed_r(400.0, ALPHA, 1.5))

# single-storey proportions, walls at half the house width
show("slenderness pinned at k = 0.5", optimize_fixed_k(400.0, ALPHA, 0.5))

# planning permission fixes floor area and wall height instead of volume
show("floor area 100 m^2, walls 3 m", optimize_fixed_floor(100.0, 3.0, ALPHA))

# zoning allows walls between 3 m and 4 m; the free optimum wants 5.11 m,
# so the upper bound binds and the plan widens to compensate
show("wall height boxed to [3 m, 4 m]", optimize_height_range(400.0, ALPHA, 3.0, 4.0))
