# %% [markdown]
# # The SU(3) slice
#
# A diagonal matrix diag(z1, z2, z3) with z1 z2 z3 = 1 maps to the first
# two coefficients of its characteristic polynomial.  The compact torus
# fills a region bounded by a three-cusped curve.

# %%
import math
from fractions import Fraction

import numpy as np

from adjquot.torusq import (
    TorusPoint, alcove_sample, bottom_stratum_points, chi, deltoid_coefficients,
    hypersurface_sample, region_membership, slice_discriminant,
)

# %%
print(chi(TorusPoint.from_sl([2, 3])))
print(chi(TorusPoint((1, 1, 1), True), "paper-display"))

# %% [markdown]
# Rational points on the boundary curve are exact zeros of the slice
# discriminant.

# %%
for s in (Fraction(0), Fraction(1, 2), Fraction(2), Fraction(-5, 3)):
    u, v = hypersurface_sample(s)
    print(s, (u, v), slice_discriminant(3, deltoid_coefficients(u, v)))

# %% [markdown]
# Cusps: images of the centre.

# %%
for p in bottom_stratum_points(3, "paper-display"):
    print(p.zeta, np.round(np.array(p.coords, dtype=complex), 12))

# %% [markdown]
# Sweep the alcove and count how many samples land inside, on the boundary
# or outside.

# %%
rng = np.random.default_rng(0)
counts = {"interior": 0, "boundary": 0, "exterior": 0}
for _ in range(300):
    x, y = rng.uniform(-2, 2, size=2)
    th = sorted([x, y, -x - y], reverse=True)
    if th[0] - th[2] >= 2 * math.pi:
        continue
    counts[region_membership(alcove_sample(3, th), 3)] += 1
counts["boundary"] += sum(region_membership(alcove_sample(3, (a, a, -2 * a)), 3) == "boundary"
                          for a in np.linspace(0.1, 2, 10))
print(counts)
print(region_membership([10, 10], 3, convention="paper-display"))
