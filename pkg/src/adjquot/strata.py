"""Root-multiplicity strata of normalized polynomials.

A normalized degree-n polynomial ``z^n + a1 z^(n-1) + ... + an`` is labelled
by the partition of n formed by its root multiplicities.  Closures of strata
are ordered by merging parts.  Membership in the discriminant varieties D_k
and in D_(2,2) (n = 4) also reports the residuals of their defining
equations.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .discres import disc_chain
from .exactnum import ONE, GaussianRational, as_gr
from .poly import MultiPoly, UniPoly, squarefree_decomposition

__all__ = [
    "IllConditionedWarning",
    "MembershipResult",
    "Partition",
    "StratumLabel",
    "classify_exact",
    "classify_numeric",
    "cluster_roots",
    "d22_equations",
    "dn_curve",
    "membership",
    "partition_leq",
    "partitions",
    "sample_stratum",
    "slice_constant",
]


class IllConditionedWarning(UserWarning):
    pass


class Partition(tuple):
    """Non-increasing tuple of positive parts."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"invalid partition {parts}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(int(t) for t in text.strip().strip("()").split(",") if t.strip())

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self):
        return f"Partition{tuple(self)}"


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    """All partitions of n, lexicographically decreasing."""
    return [Partition(p) for p in _partitions(n, n)]


def partition_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` arises from ``b`` by merging parts (a is coarser or equal)."""
    a, b = Partition(a), Partition(b)
    if a.n != b.n:
        raise ValueError(f"partitions of different integers: {a} vs {b}")
    if len(a) > len(b):
        return False
    # Pack the parts of b into bins of sizes a, largest parts first.
    bins = list(a)
    parts = list(b)

    def place(i: int) -> bool:
        if i == len(parts):
            return all(x == 0 for x in bins)
        seen = set()
        for j in range(len(bins)):
            if bins[j] >= parts[i] and bins[j] not in seen:
                seen.add(bins[j])
                bins[j] -= parts[i]
                if place(i + 1):
                    return True
                bins[j] += parts[i]
        return False

    return place(0)


@dataclass(frozen=True)
class StratumLabel:
    """A stratum (open) or its closure, in A^n_coef or in the SU(n) slice."""

    partition: Partition
    su_slice: bool = False
    closure: bool = True

    def __str__(self):
        amb = "SU" if self.su_slice else ""
        return f"{amb}D{self.partition}" if self.closure else f"{amb}D°{self.partition}"


def dk_partition(n: int, k: int) -> Partition:
    """D_k is the closure of the stratum (k, 1, ..., 1)."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    return Partition([k] + [1] * (n - k))


# --- classification ---------------------------------------------------------


def _as_unipoly(p) -> UniPoly:
    if isinstance(p, UniPoly):
        return p
    return UniPoly.monic_from([as_gr(c) for c in p])


def classify_exact(p, n: int | None = None) -> Partition:
    """Multiplicity partition of a monic polynomial via square-free decomposition."""
    p = _as_unipoly(p)
    if p.is_zero() or p.lc != 1:
        raise ValueError("classify_exact expects a monic polynomial")
    if n is not None and p.degree != n:
        raise ValueError(f"degree {p.degree} does not match n={n}")
    parts = []
    for f, m in squarefree_decomposition(p):
        parts.extend([m] * f.degree)
    return Partition(parts)


def cluster_roots(roots, tol: float, coeffs=None):
    """Group numerically computed roots into clusters.

    Single linkage at radius ``tol``; then clusters are merged further while
    the merged spread is explained by the floating-point sensitivity of an
    m-fold root, ``(c * eps * scale / |Q(center)|)^(1/m)`` with ``Q`` the
    product over the remaining roots.  Returns ``[(center, size)]`` sorted by
    size (descending) then real part of the center.
    """
    roots = [complex(r) for r in roots]
    clusters = [[r] for r in roots]
    # single linkage at tol
    merged = True
    while merged:
        merged = False
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                if min(abs(x - y) for x in clusters[i] for y in clusters[j]) <= tol:
                    clusters[i] += clusters.pop(j)
                    merged = True
                    break
            if merged:
                break
    if coeffs is not None:
        cs = [complex(c) for c in coeffs]
        eps = np.finfo(float).eps
        while len(clusters) > 1:
            best = None
            for i in range(len(clusters)):
                for j in range(i + 1, len(clusters)):
                    cand = clusters[i] + clusters[j]
                    c = sum(cand) / len(cand)
                    spread = max(abs(x - c) for x in cand)
                    others = [x for k, cl in enumerate(clusters) if k not in (i, j) for x in cl]
                    # a centroid sitting on another root is not a multiple root
                    if others and min(abs(c - x) for x in others) <= spread:
                        continue
                    q = abs(np.prod([c - x for x in others])) if others else 1.0
                    scale = sum(abs(a) * abs(c) ** k for k, a in enumerate(reversed(cs)))
                    if q == 0.0:
                        continue
                    radius = (1e3 * eps * scale / q) ** (1.0 / len(cand))
                    if spread <= radius and (best is None or spread < best[0]):
                        best = (spread, i, j)
            if best is None:
                break
            _, i, j = best
            clusters[i] += clusters.pop(j)
    out = [(sum(cl) / len(cl), len(cl)) for cl in clusters]
    out.sort(key=lambda t: (-t[1], t[0].real, t[0].imag))
    return out


def classify_numeric(coeffs, n: int | None = None, tol: float = 1e-8) -> Partition:
    """Multiplicity partition from floating coefficients ``(a1, ..., an)``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    cs = [complex(c) for c in coeffs]
    if n is not None and len(cs) != n:
        raise ValueError(f"expected {n} coefficients, got {len(cs)}")
    full = [1.0 + 0j] + cs
    roots = np.roots(full) if len(cs) else np.array([])
    clusters = cluster_roots(roots, tol, full)
    centers = [c for c, _ in clusters]
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            if abs(centers[i] - centers[j]) < 10 * tol:
                warnings.warn(
                    f"clusters at {centers[i]:.3g} and {centers[j]:.3g} are within 10*tol",
                    IllConditionedWarning,
                    stacklevel=2,
                )
    return Partition(size for _, size in clusters)


# --- distinguished families -------------------------------------------------------


def dn_curve(n: int, w) -> list:
    """Coefficients (a1, ..., an) of (z - w)^n, a point of the bottom variety D_n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    from math import comb

    exact = isinstance(w, (int, Fraction, GaussianRational, str))
    w = as_gr(w) if exact else complex(w)
    return [comb(n, k) * (-w) ** k for k in range(1, n + 1)]


def sample_stratum(nu: Sequence[int], seed=None, roots=None, exclude=()) -> UniPoly:
    """Monic polynomial prod (z - u_j)^(n_j) with pairwise distinct roots.

    Roots are random Gaussian rationals (small height) unless given.
    """
    nu = Partition(nu)
    if roots is None:
        rng = random.Random(seed)
        roots = []
        taken = {as_gr(x) for x in exclude}
        while len(roots) < len(nu):
            u = GaussianRational(
                Fraction(rng.randint(-12, 12), rng.randint(1, 4)),
                Fraction(rng.randint(-12, 12), rng.randint(1, 4)) if rng.random() < 0.5 else 0,
            )
            if u not in taken:
                taken.add(u)
                roots.append(u)
    roots = [as_gr(r) for r in roots]
    if len(roots) != len(nu) or len(set(roots)) != len(roots):
        raise ValueError("need one distinct root per part")
    p = UniPoly([ONE])
    for u, m in zip(roots, nu):
        p = p * UniPoly.from_roots([u] * m)
    return p


# --- membership -------------------------------------------------------------------


def slice_constant(n: int, convention: str = "char-poly") -> GaussianRational:
    """Constant coefficient of the SU(n) slice: (-1)^n (char-poly) or 1 (paper-display)."""
    if convention == "char-poly":
        return as_gr((-1) ** n)
    if convention == "paper-display":
        return ONE
    raise ValueError(f"unknown convention {convention!r}")


def d22_equations(variant: str = "oracle") -> list[MultiPoly]:
    """Equations for D_(2,2) in A^4_coef.

    ``oracle`` is the pair obtained by expanding (z^2 - s z + p)^2;
    ``printed`` is the printed pair (coefficients 4 and 16).
    """
    gens = ("a1", "a2", "a3", "a4")
    a1, a2, a3, a4 = (MultiPoly.var(g, gens) for g in gens)
    if variant == "oracle":
        return [(a1**2 - 4 * a2) * a1 + 8 * a3, (a1**2 - 4 * a2) ** 2 - 64 * a4]
    if variant == "printed":
        return [(a1**2 - 4 * a2) * a1 + 4 * a3, (a1**2 - 4 * a2) ** 2 - 16 * a4]
    raise ValueError(f"unknown variant {variant!r}")


def d4_in_d22_equation() -> MultiPoly:
    """3 a1^2 - 8 a2, cutting D_4 out of D_(2,2) in the (a1, a2) chart."""
    gens = ("a1", "a2", "a3", "a4")
    a1, a2 = MultiPoly.var("a1", gens), MultiPoly.var("a2", gens)
    return 3 * a1**2 - 8 * a2


@dataclass
class MembershipResult:
    target: str
    verdict: str  # member | boundary-of | not-member
    partition: Partition | None
    residuals: dict = field(default_factory=dict)
    equations_vanish: bool | None = None
    notes: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "variety": self.target,
            "verdict": self.verdict,
            "partition": str(self.partition) if self.partition else None,
            "residuals": self.residuals,
            "equations_vanish": self.equations_vanish,
            "notes": list(self.notes),
        }


def _target_partition(target, n: int) -> tuple[Partition, str, bool]:
    """Normalize targets: int k or "D3" -> D_k; Partition/"(2,2)"; "SU:" prefix for slices."""
    su = False
    if isinstance(target, StratumLabel):
        return target.partition, str(target), target.su_slice
    if isinstance(target, str):
        t = target.strip()
        if t.upper().startswith("SU:"):
            su, t = True, t[3:]
        if t.upper().startswith("D") and t[1:].isdigit():
            k = int(t[1:])
            return dk_partition(n, k), f"{'SU' if su else ''}D{k}", su
        nu = Partition.parse(t.lstrip("Dd"))
        return nu, f"{'SU' if su else ''}D{nu}", su
    if isinstance(target, int):
        return dk_partition(n, target), f"D{target}", False
    nu = Partition(target)
    return nu, f"D{nu}", False


def _residual_repr(v):
    if isinstance(v, GaussianRational):
        return str(v)
    return abs(complex(v))


def membership(
    coeffs,
    target,
    mode: str = "exact",
    tol: float = 1e-8,
    convention: str = "char-poly",
) -> MembershipResult:
    """Decide whether normalized coefficients ``(a1..an)`` lie in a stratum closure.

    ``target`` is D_k (``"D3"`` or an int), a partition (closure of its
    stratum) or either prefixed with ``"SU:"`` for the SU(n) slice.  The verdict
    is ``member`` (the open stratum itself), ``boundary-of`` (a lower stratum
    of the closure) or ``not-member``.  For D_k the derivative-discriminant
    chain is evaluated, for D_(2,2) with n = 4 both the oracle and printed
    equation pairs; their residuals are reported alongside.
    """
    cs = list(coeffs)
    n = len(cs)
    nu, name, su = _target_partition(target, n)
    if nu.n != n:
        raise ValueError(f"target {name} is for n={nu.n}, coefficients have n={n}")
    exact = mode == "exact"
    if mode not in ("exact", "numeric"):
        raise ValueError(f"unknown mode {mode!r}")
    if exact:
        cs = [as_gr(c) for c in cs]
        point = {f"a{k}": c for k, c in enumerate(cs, 1)}
    else:
        cs = [complex(c) for c in cs]
        point = {f"a{k}": c for k, c in enumerate(cs, 1)}

    def vanishes(v) -> bool:
        return v == 0 if exact else abs(v) < tol

    result = MembershipResult(name, "not-member", None)
    equations: list[tuple[str, MultiPoly]] = []
    is_dk = len(nu) == 1 or nu[1] == 1
    if is_dk and nu[0] >= 2:
        chain = disc_chain(n, nu[0] - 1)
        equations += list(zip(chain.labels, chain.equations))
    if n == 4 and tuple(nu) == (2, 2):
        for lab, eq in zip(("oracle_cubic", "oracle_quartic"), d22_equations("oracle")):
            equations.append((lab, eq))
        printed = d22_equations("printed")
        result.residuals["printed_cubic"] = _residual_repr(printed[0].evaluate(point))
        result.residuals["printed_quartic"] = _residual_repr(printed[1].evaluate(point))
    values = []
    for lab, eq in equations:
        v = eq.evaluate(point)
        values.append(v)
        result.residuals[lab] = _residual_repr(v)
    if equations:
        result.equations_vanish = all(vanishes(v) for v in values)

    if su:
        c = slice_constant(n, convention)
        off = cs[-1] - c if exact else abs(cs[-1] - complex(c))
        result.residuals["slice_constant"] = _residual_repr(off)
        if not vanishes(off):
            result.notes.append(f"constant coefficient is not {c} ({convention} slice)")
            return result

    actual = classify_exact(cs) if exact else classify_numeric(cs, tol=tol)
    result.partition = actual
    if actual == nu:
        result.verdict = "member"
    elif partition_leq(actual, nu):
        result.verdict = "boundary-of"
    if result.equations_vanish is not None:
        inside = result.verdict != "not-member"
        if inside and not result.equations_vanish:
            result.notes.append("defining equations fail on a member (should not happen)")
        if result.equations_vanish and not inside:
            result.notes.append(
                "defining equations vanish but the root structure is outside the closure"
            )
    return result
