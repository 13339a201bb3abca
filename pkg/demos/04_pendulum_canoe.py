# %% [markdown]
# # Zero angular momentum and the canoe
#
# The cylinder e^t e^{i phi} embeds into the zero level of the momentum
# map.  Its quotient by the half-turn is the canoe w(1 - u^2) = v^2.

# %%
import cmath
import math
from fractions import Fraction

import numpy as np

from adjquot.curves import emit_curve
from adjquot.pendulum import alpha, canoe_membership, embed, momentum, phi, theta

# %%
e = embed(Fraction(3, 2), s=Fraction(1, 3))
print(e, momentum(e))
print(theta(Fraction(3, 2), s=Fraction(1, 3)), canoe_membership(theta(Fraction(3, 2), s=Fraction(1, 3))))

# %% [markdown]
# Flattening the canoe back onto the plane recovers 2 cosh(t + i phi).

# %%
ts = np.linspace(-3, 3, 61)
ps = np.linspace(0, 2 * math.pi, 64, endpoint=False)
err = max(abs(phi(theta(t, p)) - 2 * cmath.cosh(complex(t, p))) for t in ts for p in ps)
print(f"max error {err:.2e}")
print(alpha(1.0), math.cosh(1.0))

# %% [markdown]
# A mesh of exact canoe points, ready for plotting elsewhere.

# %%
print(emit_curve("canoe", {"t_max": 2}, 8).to_csv())
