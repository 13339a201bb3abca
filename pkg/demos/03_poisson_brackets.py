# %% [markdown]
# # Brackets of invariants on the torus
#
# On each factor C* the bracket {x, y} = x^2 + y^2 becomes
# {z, zb} = -2i z zb.  Power sums tau_(r,s) = sum z_j^r zb_j^s close under it.

# %%
from fractions import Fraction

from adjquot.exactnum import GaussianRational
from adjquot.poissonk import (
    base_bracket, power_sum_generators, rank_at, rewrite_in_generators, su2_chart,
    su3_relation_harness, tau, verify_tau_bracket,
)

# %%
z = tau(1, 1, 0)
print(base_bracket(z, tau(1, 0, 1)))
print(verify_tau_bracket(3, (1, 1), (2, 1)).as_dict())

# %%
idx = power_sum_generators(3)
ok = sum(verify_tau_bracket(3, p, q).status == "identity" for p in idx for q in idx)
print(f"{ok} of {len(idx) ** 2} pairs match the closed formula")

# %% [markdown]
# Newton's identities come out of a linear solve.

# %%
print(rewrite_in_generators(tau(3, 3, 0), [tau(3, 1, 0), tau(3, 2, 0)]))

# %% [markdown]
# The SU(2) chart (X, Y, tau) with its quadratic relation.

# %%
c = su2_chart()
w = GaussianRational(0, 2)
print([f.evaluate([w]) for f in (c.X, c.Y, c.tau)])
print(c.relation_residual().is_zero(), [r.is_zero() for r in c.bracket_residuals().values()])

# %% [markdown]
# Rank on the three SU(3) strata.

# %%
for pt in [(2, 3, Fraction(1, 6)), (2, 2, Fraction(1, 4)), (1, 1, 1)]:
    print(pt, rank_at(3, pt))

# %% [markdown]
# The seven-generator relations for SU(3), checked exactly.

# %%
for v in su3_relation_harness("distinct"):
    print(v.relation_id, v.status, v.lhs, v.rhs, v.details.get("ansatz"))
