# %% [markdown]
# # Discriminants and multiplicity strata
#
# Monic polynomials of degree n are points of C^n via their coefficients.
# The discriminant vanishes when two roots collide; higher collisions are
# detected by discriminants of derivatives.

# %%
from fractions import Fraction

from adjquot.discres import disc_chain, discriminant, symbolic_discriminant
from adjquot.poly import UniPoly, format_unipoly
from adjquot.strata import classify_exact, membership, partitions, sample_stratum

# %%
print(symbolic_discriminant(3, monic=True))
print(discriminant(UniPoly.from_roots([1, 2, 3])))

# %% [markdown]
# The chain for a triple root in degree 3: D(P) and D(P').

# %%
chain = disc_chain(3, 2)
for label, value in zip(chain.labels, chain.evaluate([-3, 3, -1])):
    print(label, "=", value)

# %% [markdown]
# Every partition of 4 labels a stratum.  Sample one polynomial per stratum
# and classify it back.

# %%
for nu in partitions(4):
    p = sample_stratum(nu, seed=1)
    print(nu, format_unipoly(p), "->", classify_exact(p))

# %% [markdown]
# The chain equations are necessary but not sufficient.  Here P' has a
# double root at 0 and D(P) vanishes through a different double root.

# %%
p = [Fraction(-4, 3), 0, 0, Fraction(1, 3)]
r = membership(p, "D3")
print(r.verdict, r.partition, r.equations_vanish)
print(r.notes)

# %% [markdown]
# Two double roots: the expansion of (z^2 - 3z + 2)^2 against both
# equation pairs for that stratum.

# %%
print(membership([-6, 13, -12, 4], "(2,2)").as_dict())
