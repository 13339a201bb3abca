"""Sylvester resultants, discriminants and the derivative-discriminant chains.

Coefficient vectors are handled in descending order ``a0, a1, ..., an`` (the
Sylvester layout).  Entries may be exact scalars (Bareiss elimination) or
MultiPolys in symbolic coefficients (memoized Laplace expansion, which never
divides and so stays inside the polynomial ring).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .exactla import det_bareiss
from .exactnum import ONE, ZERO, GaussianRational, as_gr
from .poly import MultiPoly, UniPoly

__all__ = [
    "DegreeError",
    "DiscChain",
    "PRINTED_D4",
    "SylvesterMatrix",
    "derivative_coefficients",
    "disc_chain",
    "discriminant",
    "resultant",
    "symbolic_discriminant",
    "sylvester_matrix",
]


class DegreeError(ValueError):
    pass


@dataclass
class SylvesterMatrix:
    entries: list
    m: int  # degree of the second input = number of shifted rows of f
    n: int  # degree of the first input


def _descending(p) -> list:
    if isinstance(p, UniPoly):
        return p.descending()
    return list(p)


def _is_symbolic(cs) -> bool:
    return any(isinstance(c, MultiPoly) for c in cs)


def sylvester_matrix(f, h) -> SylvesterMatrix:
    """m shifted rows of f's coefficients followed by n shifted rows of h's."""
    fa = _descending(f)
    hb = _descending(h)
    n, m = len(fa) - 1, len(hb) - 1
    if n < 1 or m < 1:
        raise DegreeError("resultant needs both degrees >= 1")
    zero = MultiPoly.const(0) if _is_symbolic(fa + hb) else ZERO
    size = m + n
    rows = []
    for i in range(m):
        rows.append([zero] * i + fa + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + hb + [zero] * (size - m - 1 - i))
    return SylvesterMatrix(rows, m, n)


def _det_laplace(rows) -> MultiPoly:
    n = len(rows)

    @lru_cache(maxsize=None)
    def minor(r: int, cols: tuple) -> MultiPoly:
        if r == n:
            return MultiPoly.const(1)
        acc = MultiPoly.const(0)
        for idx, c in enumerate(cols):
            entry = rows[r][c]
            if isinstance(entry, MultiPoly):
                if entry.is_zero():
                    continue
            elif not entry:
                continue
            sub = minor(r + 1, cols[:idx] + cols[idx + 1:])
            if sub.is_zero():
                continue
            term = sub * entry
            acc = acc + term if idx % 2 == 0 else acc - term
        return acc

    return minor(0, tuple(range(n)))


def resultant(f, h):
    """Sylvester resultant R(f, h); exact scalar or MultiPoly."""
    S = sylvester_matrix(f, h)
    flat = [x for row in S.entries for x in row]
    if _is_symbolic(flat):
        return _det_laplace(S.entries)
    return det_bareiss(S.entries)


def _derivative_desc(cs: list) -> list:
    n = len(cs) - 1
    return [cs[k] * (n - k) for k in range(n)]


def discriminant(p):
    """D = (-1)^(n(n-1)/2) R(p, p') / a0, equal to a0^(2n-2) prod_{j<k} (z_j - z_k)^2."""
    cs = _descending(p)
    n = len(cs) - 1
    if n < 2:
        raise DegreeError("discriminant needs degree >= 2")
    a0 = cs[0]
    r = resultant(cs, _derivative_desc(cs))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    if isinstance(r, MultiPoly):
        if isinstance(a0, MultiPoly):
            if not a0.is_monomial():
                raise ValueError("symbolic leading coefficient must be a monomial")
            return r.exact_div(a0) * sign
        return r * (as_gr(a0).inverse() * sign)
    if not a0:
        raise DegreeError("leading coefficient a0 must be nonzero")
    return r / a0 * sign


def coefficient_symbols(n: int, prefix: str = "a", start: int = 0) -> list[MultiPoly]:
    gens = tuple(f"{prefix}{k}" for k in range(start, n + 1))
    return [MultiPoly.var(g, gens) for g in gens]


@lru_cache(maxsize=None)
def symbolic_discriminant(n: int, monic: bool = False) -> MultiPoly:
    """D_n(a0, ..., an) as a polynomial (or D_n(1, a1, ..., an) when ``monic``)."""
    if monic:
        syms = [MultiPoly.const(1, tuple(f"a{k}" for k in range(1, n + 1)))]
        syms += coefficient_symbols(n, start=1)
    else:
        syms = coefficient_symbols(n)
    return discriminant(syms)


def derivative_coefficients(cs: list, j: int) -> list:
    """Descending coefficients of the j-th derivative of the polynomial ``cs``."""
    n = len(cs) - 1
    return [cs[k] * (factorial(n - k) // factorial(n - k - j)) for k in range(n - j + 1)]


def evaluate_discriminant(n: int, args) -> object:
    """D_n evaluated at explicit (possibly non-monic) arguments ``a0..an``."""
    D = symbolic_discriminant(n)
    point = {f"a{k}": v for k, v in enumerate(args)}
    if any(isinstance(v, MultiPoly) for v in args):
        return D.subs(point)
    return D.evaluate(point)


@dataclass
class DiscChain:
    n: int
    level: int
    equations: list = field(default_factory=list)
    labels: list = field(default_factory=list)

    def evaluate(self, coeffs) -> list:
        """Values of every equation at normalized coefficients ``(a1, ..., an)``."""
        coeffs = list(coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        exact = all(isinstance(c, (GaussianRational, int)) for c in coeffs)
        point = {f"a{k}": (as_gr(c) if exact else complex(c)) for k, c in enumerate(coeffs, 1)}
        return [eq.evaluate(point) for eq in self.equations]

    def vanishes(self, coeffs) -> bool:
        return all(v == 0 for v in self.evaluate(coeffs))


def disc_chain(n: int, k: int) -> DiscChain:
    """The k equations D(P) = D(P') = ... = D(P^(k-1)) = 0 for D_{k+1} in A^n_coef."""
    if not (2 <= k + 1 <= n):
        raise ValueError(f"level k={k} out of range for degree n={n}")
    gens = tuple(f"a{j}" for j in range(1, n + 1))
    syms = [MultiPoly.const(1, gens)] + [MultiPoly.var(g, gens) for g in gens]
    chain = DiscChain(n, k)
    for j in range(k):
        dc = derivative_coefficients(syms, j)
        deg = n - j
        D = symbolic_discriminant(deg)
        chain.equations.append(D.subs({f"a{i}": c for i, c in enumerate(dc)}))
        args = ", ".join(str(c) for c in dc)
        chain.labels.append(f"D_{deg}({args})")
    return chain


def _printed_d4() -> MultiPoly:
    a0, a1, a2, a3, a4 = coefficient_symbols(4)
    return (
        (a1**2 * a2**2 * a3**2 - 4 * a1**3 * a3**3 - 4 * a0 * a2**3 * a3**2
         + 18 * a0 * a1 * a2 * a3**3 - 27 * a0**2 * a3**4 + 256 * a0**3 * a4**3)
        + (-4 * a1**2 * a2**3 + 18 * a1**3 * a2 * a3 + 16 * a0 * a2**4
           - 80 * a0 * a1 * a2**2 * a3 - 6 * a0 * a1**2 * a3**2 + 144 * a0**2 * a2 * a3**2) * a4
        + (-27 * a1**4 + 144 * a0 * a1**2 * a2 - 128 * a0**2 * a2**2 - 192 * a0**2 * a1 * a3) * a4**2
    )


# Quartic discriminant transcribed term by term from the printed display.
PRINTED_D4 = _printed_d4()


def printed_d2() -> MultiPoly:
    a0, a1, a2 = coefficient_symbols(2)
    return a1**2 - 4 * a0 * a2


def printed_d3() -> MultiPoly:
    a0, a1, a2, a3 = coefficient_symbols(3)
    return (a1**2 * a2**2 - 4 * a0 * a2**3 - 4 * a1**3 * a3
            - 27 * a0**2 * a3**2 + 18 * a0 * a1 * a2 * a3)


def root_difference_discriminant(roots, a0=ONE) -> GaussianRational:
    """Oracle: a0^(2n-2) prod_{j<k} (z_j - z_k)^2 from an explicit root list."""
    roots = [as_gr(r) for r in roots]
    n = len(roots)
    acc = as_gr(a0) ** (2 * n - 2)
    for j in range(n):
        for k in range(j + 1, n):
            d = roots[j] - roots[k]
            acc = acc * d * d
    return acc
