"""Sanity caps on user-supplied quantities.

The math below these limits is exact either way; the caps exist so that a
public endpoint fed absurd numbers fails fast with a clear message instead
of producing kilometer-scale houses. Override the module attributes before
building inputs if a deployment genuinely needs more headroom, e.g.::

    from hiproof import limits
    limits.MAX_VOLUME = 1e12
"""

import math

# Largest accepted heated volume, cubic meters.
MAX_VOLUME = 1e9

# Largest accepted linear dimension (width, length, wall height, bounds), meters.
MAX_DIMENSION = 1e4

# Largest accepted floor area, square meters (a MAX_DIMENSION square).
MAX_FLOOR_AREA = 1e8

# Roof pitch must lie strictly inside (0, 90) degrees; these are the radian
# guard bands applied after conversion.
MIN_ALPHA = 1e-9
MAX_ALPHA = math.pi / 2 - 1e-9
