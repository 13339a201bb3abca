"""Symbolic Poisson calculus on the complex torus (C*)^n.

Functions are Laurent polynomials in the Wirtinger variables
``z1..zn, zb1..zbn`` (``zb = conj(z)`` on the real slice).  For the real
structure ``{x_j, y_j} = x_j^2 + y_j^2`` the bracket of monomials is

    {z^a zb^b, z^c zb^d} = -2i (a.d - b.c) z^(a+c) zb^(b+d),

so brackets of Laurent polynomials stay Laurent and are computed term by
term.  On the determinant-1 torus the induced bracket adds the correction
``(2i/n)(|a| |d| - |b| |c|)`` to that coefficient; it is the unique
extension for which ``z1...zn`` and its conjugate are Casimirs.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

import numpy as np

from .exactla import nullspace, solve
from .exactnum import ONE, ZERO, GaussianRational, I, as_gr
from .poly import MultiPoly, PoleError, RatFn, var_key

__all__ = [
    "BracketTable",
    "JacobiVerdict",
    "NonClosingError",
    "RelationVerdict",
    "RewriteResult",
    "SU2Chart",
    "TorusFunction",
    "base_bracket",
    "bracket_matrix",
    "dirac_bracket",
    "elementary_generators",
    "jacobi_check",
    "power_sum_generators",
    "rank_at",
    "rewrite_in_generators",
    "sigma_orbit",
    "su2_chart",
    "su3_relation_harness",
    "tau",
    "verify_tau_bracket",
]

_MINUS_2I = GaussianRational(0, -2)


# --- Laurent torus functions ------------------------------------------------


def _zname(j: int, n: int) -> str:
    return "z" if n == 1 else f"z{j + 1}"


def _zbname(j: int, n: int) -> str:
    return "zb" if n == 1 else f"zb{j + 1}"


class TorusFunction:
    """Laurent polynomial on (C*)^n in z_j and zb_j.

    ``terms`` maps exponent tuples ``(a_1..a_n, b_1..b_n)`` to Gaussian
    rationals.  ``sl`` marks functions already restricted to the
    determinant-1 torus (no dependence on z_n, zb_n).
    """

    __slots__ = ("n", "terms", "sl", "name", "bidegree")

    def __init__(self, n: int, terms: Mapping | None = None, sl: bool = False,
                 name: str | None = None, bidegree: tuple | None = None):
        self.n = n
        self.terms = {tuple(e): as_gr(c) for e, c in (terms or {}).items() if c}
        self.sl = sl
        self.name = name
        self.bidegree = bidegree

    @classmethod
    def _make(cls, n, terms, sl, name=None, bidegree=None):
        obj = object.__new__(cls)
        obj.n, obj.terms, obj.sl, obj.name, obj.bidegree = n, terms, sl, name, bidegree
        return obj

    @classmethod
    def const(cls, n: int, c=1, sl: bool = False) -> "TorusFunction":
        c = as_gr(c)
        return cls._make(n, {(0,) * (2 * n): c} if c else {}, sl)

    @classmethod
    def monomial(cls, n: int, zexp: Sequence[int], zbexp: Sequence[int], coeff=1) -> "TorusFunction":
        return cls(n, {tuple(zexp) + tuple(zbexp): coeff})

    @classmethod
    def z(cls, j: int, n: int) -> "TorusFunction":
        e = [0] * (2 * n)
        e[j] = 1
        return cls._make(n, {tuple(e): ONE}, False)

    @classmethod
    def zb(cls, j: int, n: int) -> "TorusFunction":
        e = [0] * (2 * n)
        e[n + j] = 1
        return cls._make(n, {tuple(e): ONE}, False)

    def named(self, name: str, bidegree: tuple | None = None) -> "TorusFunction":
        return TorusFunction._make(self.n, self.terms, self.sl, name, bidegree or self.bidegree)

    # algebra
    def _other(self, other):
        if isinstance(other, TorusFunction):
            if other.n != self.n:
                raise ValueError("torus functions on different tori")
            return other
        return TorusFunction.const(self.n, as_gr(other), self.sl)

    def __add__(self, other):
        other = self._other(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return TorusFunction._make(self.n, out, self.sl or other.sl)

    __radd__ = __add__

    def __neg__(self):
        return TorusFunction._make(self.n, {e: -c for e, c in self.terms.items()}, self.sl)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, TorusFunction):
            c = as_gr(other)
            if not c:
                return TorusFunction._make(self.n, {}, self.sl)
            return TorusFunction._make(self.n, {e: v * c for e, v in self.terms.items()}, self.sl)
        other = self._other(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return TorusFunction._make(self.n, {e: c for e, c in out.items() if c}, self.sl or other.sl)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * as_gr(other).inverse()

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return TorusFunction._make(self.n, {tuple(-x * -k for x in e): c.inverse() ** -k}, self.sl)
        result = TorusFunction.const(self.n, 1, self.sl)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, TorusFunction):
            return (self - other).is_zero()
        try:
            return (self - as_gr(other)).is_zero()
        except TypeError:
            return NotImplemented

    __hash__ = None

    def conj(self) -> "TorusFunction":
        """Complex conjugate as a function on the real slice (swap z and zb)."""
        n = self.n
        return TorusFunction._make(
            n, {e[n:] + e[:n]: c.conj() for e, c in self.terms.items()}, self.sl,
            None, self.bidegree[::-1] if self.bidegree else None)

    def permuted(self, perm: Sequence[int]) -> "TorusFunction":
        """Substitute z_j -> z_perm[j] (and likewise zb)."""
        n = self.n
        out = {}
        for e, c in self.terms.items():
            ne = [0] * (2 * n)
            for j in range(n):
                ne[perm[j]] = e[j]
                ne[n + perm[j]] = e[n + j]
            out[tuple(ne)] = c
        return TorusFunction._make(n, out, self.sl)

    def restrict_sl(self) -> "TorusFunction":
        """Substitute z_n = 1/(z_1...z_{n-1}) and zb_n likewise."""
        if self.sl:
            return self
        n = self.n
        out: dict = {}
        for e, c in self.terms.items():
            a, b = e[:n], e[n:]
            ne = tuple(x - a[-1] for x in a[:-1]) + (0,) + tuple(x - b[-1] for x in b[:-1]) + (0,)
            v = out.get(ne)
            out[ne] = c if v is None else v + c
        return TorusFunction._make(n, {e: c for e, c in out.items() if c}, True, self.name, self.bidegree)

    # evaluation
    def evaluate(self, point, conj_point=None):
        """Value at z = point (zb = conj(point) unless ``conj_point`` is given).

        For an ``sl`` function the last coordinate may be omitted.
        """
        z = list(point.coords) if hasattr(point, "coords") else list(point)
        if len(z) == self.n - 1 and self.sl:
            z.append(0)  # unused: sl functions do not involve z_n
        if len(z) != self.n:
            raise ValueError(f"expected {self.n} coordinates")
        exact = all(isinstance(v, (int, Fraction, GaussianRational)) for v in z)
        if exact:
            z = [as_gr(v) for v in z]
            zb = [as_gr(v) for v in conj_point] if conj_point is not None else [v.conj() for v in z]
            acc = ZERO
        else:
            z = [complex(v) for v in z]
            zb = [complex(v) for v in conj_point] if conj_point is not None else [v.conjugate() for v in z]
            acc = 0j
        vals = z + zb
        for k, v in enumerate(vals):
            if v == 0 and any(e[k] < 0 for e in self.terms):
                raise PoleError({f"coord{k}": v})
        for e, c in self.terms.items():
            t = c if exact else complex(c)
            for k, x in enumerate(e):
                if x:
                    t = t * vals[k] ** x
            acc = acc + t
        return acc

    # conversions
    def gens(self) -> tuple:
        n = self.n
        return tuple(_zname(j, n) for j in range(n)) + tuple(_zbname(j, n) for j in range(n))

    def ratfn(self) -> RatFn:
        return RatFn.from_laurent(self.gens(), self.terms)

    def to_real(self) -> RatFn:
        """Rewrite with z_j = x_j + i y_j, zb_j = x_j - i y_j."""
        n = self.n
        xs = [f"x{j + 1}" if n > 1 else "x" for j in range(n)]
        ys = [f"y{j + 1}" if n > 1 else "y" for j in range(n)]
        gens = tuple(sorted(xs + ys, key=var_key))
        mapping = {}
        for j in range(n):
            x = MultiPoly.var(xs[j], gens)
            y = MultiPoly.var(ys[j], gens)
            mapping[_zname(j, n)] = RatFn(x + y * I)
            mapping[_zbname(j, n)] = RatFn(x - y * I)
        return self.ratfn().subs(mapping)

    def __str__(self):
        return str(self.ratfn())

    def __repr__(self):
        label = f"{self.name}=" if self.name else ""
        return f"TorusFunction({label}{self})"


# --- invariants -------------------------------------------------------------


def tau(n: int, r: int, s: int) -> TorusFunction:
    """Bisymmetric power sum sum_j z_j^r zb_j^s."""
    if r < 0 or s < 0 or r + s < 1:
        raise ValueError("need r, s >= 0 and r + s >= 1")
    terms = {}
    for j in range(n):
        e = [0] * (2 * n)
        e[j], e[n + j] = r, s
        terms[tuple(e)] = ONE
    return TorusFunction._make(n, terms, False, f"tau({r},{s})", (r, s))


ORBIT_SUMS = ("distinct", "full")


def sigma_orbit(n: int, r: int, s: int, orbit_sum: str = "distinct") -> TorusFunction:
    """Orbit sum of z_1...z_r zb_{r+1}...zb_{r+s} under S_n.

    ``distinct`` counts each monomial of the orbit once; ``full`` sums over
    all n! permutations, which multiplies by r! s! (n-r-s)!.
    """
    if r < 0 or s < 0 or not 1 <= r + s <= n:
        raise ValueError("need r, s >= 0 and 1 <= r + s <= n")
    if orbit_sum not in ORBIT_SUMS:
        raise ValueError(f"unknown orbit-sum convention {orbit_sum!r}")
    mult = 1 if orbit_sum == "distinct" else factorial(r) * factorial(s) * factorial(n - r - s)
    c = as_gr(mult)
    terms = {}
    for A in itertools.combinations(range(n), r):
        rest = [j for j in range(n) if j not in A]
        for B in itertools.combinations(rest, s):
            e = [0] * (2 * n)
            for j in A:
                e[j] = 1
            for j in B:
                e[n + j] = 1
            terms[tuple(e)] = c
    return TorusFunction._make(n, terms, False, f"sigma({r},{s})", (r, s))


def elementary_generators(n: int) -> list[tuple[int, int]]:
    """Index set of the elementary bisymmetric generators on the determinant-1 torus."""
    return [(r, s) for m in range(1, n + 1) for r in range(m, -1, -1)
            for s in [m - r] if (r, s) not in ((n, 0), (0, n))]


def power_sum_generators(n: int) -> list[tuple[int, int]]:
    """Index set (r, s), 1 <= r + s <= n, of the bisymmetric power sums."""
    return [(r, m - r) for m in range(1, n + 1) for r in range(m, -1, -1)]


# --- brackets ---------------------------------------------------------------


def _laurent_bracket(f: TorusFunction, g: TorusFunction, dirac: bool) -> TorusFunction:
    n = f.n
    if g.n != n:
        raise ValueError("torus functions on different tori")
    out: dict = {}
    corr = Fraction(2, n)
    for e1, c1 in f.terms.items():
        a, b = e1[:n], e1[n:]
        for e2, c2 in g.terms.items():
            c, d = e2[:n], e2[n:]
            s = sum(a[j] * d[j] - b[j] * c[j] for j in range(n))
            coef = _MINUS_2I * s
            if dirac:
                coef = coef + GaussianRational(0, corr * (sum(a) * sum(d) - sum(b) * sum(c)))
            if not coef:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            v = c1 * c2 * coef
            w = out.get(e)
            out[e] = v if w is None else w + v
    return TorusFunction._make(n, {e: c for e, c in out.items() if c}, f.sl or g.sl)


_VAR = re.compile(r"^(x|y|z|zb)(\d*)$")


def _classify_gens(gens) -> str:
    kinds = set()
    for g in gens:
        m = _VAR.match(g)
        if not m:
            raise ValueError(f"variable {g!r} is not a torus coordinate")
        kinds.add("real" if m.group(1) in ("x", "y") else "wirtinger")
    if len(kinds) > 1:
        raise ValueError("mixed real and Wirtinger variables")
    return kinds.pop() if kinds else "wirtinger"


def _pairs(gens, kind):
    """Index -> (first variable, second variable) for each torus coordinate."""
    idx = {}
    for g in gens:
        m = _VAR.match(g)
        idx.setdefault(m.group(2), {})[m.group(1)] = g
    a, b = ("x", "y") if kind == "real" else ("z", "zb")
    return [(k, v.get(a, a + k), v.get(b, b + k)) for k, v in idx.items()]


def base_bracket(f, g):
    """The product Poisson bracket with {x_j, y_j} = x_j^2 + y_j^2.

    TorusFunctions use the Laurent formula.  RatFn/MultiPoly inputs in real
    variables ``x_j, y_j`` use the defining formula directly; in Wirtinger
    variables ``z_j, zb_j`` they use ``-2i z zb (f_z g_zb - f_zb g_z)``.
    """
    if isinstance(f, TorusFunction) and isinstance(g, TorusFunction):
        return _laurent_bracket(f, g, False)
    f = f if isinstance(f, RatFn) else RatFn(f)
    g = g if isinstance(g, RatFn) else RatFn(g)
    gens = tuple(sorted(set(f.gens) | set(g.gens), key=var_key))
    kind = _classify_gens(gens)
    total = RatFn(MultiPoly.const(0, gens))
    for _, u, v in _pairs(gens, kind):
        U = MultiPoly.var(u, gens)
        V = MultiPoly.var(v, gens)
        term = f.diff(u) * g.diff(v) - f.diff(v) * g.diff(u)
        weight = U * U + V * V if kind == "real" else U * V * _MINUS_2I
        total = total + term * RatFn(weight)
    return total


def dirac_bracket(f: TorusFunction, g: TorusFunction) -> TorusFunction:
    """Bracket induced on the determinant-1 torus, restricted there."""
    return _laurent_bracket(f.restrict_sl(), g.restrict_sl(), True)


@dataclass
class RelationVerdict:
    relation_id: str
    status: str  # identity | counterexample
    convention: str = ""
    witness: tuple | None = None
    residual: str | None = None
    lhs: str | None = None
    rhs: str | None = None
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"id": self.relation_id, "status": self.status, "convention": self.convention}
        if self.witness is not None:
            out["witness"] = [str(w) for w in self.witness]
            out["residual"] = self.residual
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        out.update(self.details)
        return out


_WITNESS_VALUES = [ONE, -ONE, I, as_gr(2), as_gr(Fraction(1, 2)), GaussianRational(1, 1)]


def _witness_points(n: int):
    """Determinant-1 points with leading coordinates from a fixed list, lexicographically."""
    for head in itertools.product(_WITNESS_VALUES, repeat=n - 1):
        prod = ONE
        for h in head:
            prod = prod * h
        yield tuple(head) + (prod.inverse(),)


def _find_witness(diff: TorusFunction, n: int):
    for pt in _witness_points(n):
        v = diff.evaluate(pt)
        if v:
            return pt, v
    return None, None


def verify_tau_bracket(n: int, p1: tuple, p2: tuple) -> RelationVerdict:
    """Check (i/2){tau_p1, tau_p2} = (j1 k2 - j2 k1) tau_(p1+p2) on (C*)^n."""
    (j1, k1), (j2, k2) = p1, p2
    t1, t2 = tau(n, j1, k1), tau(n, j2, k2)
    lhs = base_bracket(t1, t2) * GaussianRational(0, Fraction(1, 2))
    coef = j1 * k2 - j2 * k1
    rhs = tau(n, j1 + j2, k1 + k2) * coef
    diff = lhs - rhs
    rid = f"tau-bracket n={n} ({j1},{k1}),({j2},{k2})"
    details = {"coefficient": coef, "result": f"{coef}*tau({j1 + j2},{k1 + k2})"}
    if diff.is_zero():
        return RelationVerdict(rid, "identity", details=details)
    for pt in itertools.product(_WITNESS_VALUES, repeat=n):
        v = diff.evaluate(pt)
        if v:
            break
    return RelationVerdict(rid, "counterexample", witness=pt, residual=str(v),
                           lhs=str(lhs.evaluate(pt)), rhs=str(rhs.evaluate(pt)), details=details)


# --- ansatz solving -----------------------------------------------------------


def _random_sl_point(n: int, rng: random.Random):
    head = []
    for _ in range(n - 1):
        while True:
            q = GaussianRational(Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                                 Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
            if q:
                head.append(q)
                break
    prod = ONE
    for h in head:
        prod = prod * h
    return tuple(head) + (prod.inverse(),)


def _monomials(weights: list[int], bound: int):
    """Exponent vectors with sum(e_i * w_i) <= bound, by weight then lexicographically."""
    out = []

    def rec(i, rem, cur):
        if i == len(weights):
            out.append(tuple(cur))
            return
        for k in range(rem // weights[i] + 1):
            cur.append(k)
            rec(i + 1, rem - k * weights[i], cur)
            cur.pop()

    rec(0, bound, [])
    out.sort(key=lambda e: (sum(x * w for x, w in zip(e, weights)), tuple(-x for x in e)))
    return out


def _product_of_powers(funcs, exps, cache):
    acc = None
    for k, e in enumerate(exps):
        if not e:
            continue
        key = (k, e)
        p = cache.get(key)
        if p is None:
            p = funcs[k] ** e
            cache[key] = p
        acc = p if acc is None else acc * p
    return acc


@dataclass
class RewriteResult:
    status: str  # rewritten | no-solution-within-bound
    expression: MultiPoly | None = None
    weight_bound: int = 0
    verified: bool = False

    def __str__(self):
        return str(self.expression) if self.expression is not None else self.status


def rewrite_in_generators(target: TorusFunction, generators: Sequence[TorusFunction],
                          weight_bound: int = 6, seed: int = 0, retries: int = 3) -> RewriteResult:
    """Express an invariant on the determinant-1 torus as a polynomial in generators.

    Candidate monomials have weight (sum of r + s) at most ``weight_bound`` and
    bidegree congruent to the target's modulo n.  Coefficients come from an
    exact linear solve on evaluations at random determinant-1 points; the
    answer is then checked symbolically.  Weights are tried in increasing
    order so the lowest-weight expression wins.
    """
    n = target.n
    names = [g.name or f"g{k}" for k, g in enumerate(generators)]
    if any(g.bidegree is None for g in generators) or target.bidegree is None:
        raise ValueError("target and generators need bidegrees")
    weights = [max(1, sum(g.bidegree)) for g in generators]
    tr, ts = target.bidegree
    funcs = [g.restrict_sl() for g in generators]
    tgt = target.restrict_sl()
    rng = random.Random(seed)
    cache: dict = {}
    all_monos = [e for e in _monomials(weights, weight_bound)
                 if (sum(x * g.bidegree[0] for x, g in zip(e, generators)) - tr) % n == 0
                 and (sum(x * g.bidegree[1] for x, g in zip(e, generators)) - ts) % n == 0]
    gens_syms = tuple(names)
    tried = set()
    for bound in range(0, weight_bound + 1):
        monos = [e for e in all_monos if sum(x * w for x, w in zip(e, weights)) <= bound]
        if not monos or len(monos) in tried:
            continue
        tried.add(len(monos))
        for attempt in range(retries):
            pts = [_random_sl_point(n, rng) for _ in range(len(monos) + 4 + 4 * attempt)]
            rows, rhs = [], []
            for pt in pts:
                gv = [f.evaluate(pt) for f in funcs]
                row = []
                for e in monos:
                    v = ONE
                    for x, k in zip(gv, e):
                        if k:
                            v = v * x**k
                    row.append(v)
                rows.append(row)
                rhs.append(tgt.evaluate(pt))
            sol = solve(rows, rhs)
            if sol is None:
                break  # inconsistent: need more monomials
            combo = TorusFunction.const(n, 0, True)
            expr_terms = {}
            for e, c in zip(monos, sol):
                if not c:
                    continue
                expr_terms[e] = c
                p = _product_of_powers(funcs, e, cache)
                combo = combo + (TorusFunction.const(n, c, True) if p is None else p * c)
            if (combo - tgt).is_zero():
                return RewriteResult("rewritten", MultiPoly(gens_syms, expr_terms), bound, True)
    return RewriteResult("no-solution-within-bound", None, weight_bound, False)


# --- the SU(2) chart --------------------------------------------------------------


@dataclass
class SU2Chart:
    X: TorusFunction
    Y: TorusFunction
    tau: TorusFunction
    sigma: TorusFunction

    def claimed_brackets(self) -> dict:
        X, Y, t = self.X, self.Y, self.tau
        return {
            ("X", "Y"): X * X + Y * Y + (t * 2 - 1) * 4,
            ("X", "tau"): (1 - t) * Y * 2,
            ("Y", "tau"): t * X * 2,
        }

    def functions(self) -> dict:
        return {"X": self.X, "Y": self.Y, "tau": self.tau}

    def relation_residual(self) -> TorusFunction:
        X, Y, t = self.X, self.Y, self.tau
        return Y * Y - (X * X + Y * Y + (t - 1) * 4) * t

    def bracket_residuals(self) -> dict:
        f = self.functions()
        return {k: base_bracket(f[k[0]], f[k[1]]) - v for k, v in self.claimed_brackets().items()}

    def poisson_matrix(self, z) -> list:
        """3x3 matrix of brackets among X, Y, tau at z (exact for exact z)."""
        f = self.functions()
        keys = ["X", "Y", "tau"]
        return [[base_bracket(f[a], f[b]).evaluate([z]) for b in keys] for a in keys]

    @staticmethod
    def closed_form_tau(X: float, Y: float) -> float:
        S = X * X + Y * Y - 4
        return 0.5 * np.sqrt(Y * Y + S * S / 16) - S / 8


def su2_chart() -> SU2Chart:
    """X + iY = z + 1/z, tau = (2 - sigma)/4 with sigma = z/zb + zb/z, in one variable z."""
    z = TorusFunction.z(0, 1)
    zb = TorusFunction.zb(0, 1)
    w = z + z**-1
    wb = zb + zb**-1
    X = ((w + wb) * Fraction(1, 2)).named("X")
    Y = ((w - wb) * GaussianRational(0, Fraction(-1, 2))).named("Y")
    sigma = (z * zb**-1 + zb * z**-1).named("sigma")
    t = ((2 - sigma) * Fraction(1, 4)).named("tau")
    return SU2Chart(X, Y, t, sigma)


# --- Jacobi checks on bracket tables ------------------------------------------------


class NonClosingError(ValueError):
    pass


@dataclass
class BracketTable:
    """Brackets among named generators as polynomials in them, plus relations."""

    generators: tuple
    brackets: dict  # (a, b) -> MultiPoly over generators
    relations: list = field(default_factory=list)

    def bracket_of(self, a: str, b: str) -> MultiPoly:
        if a == b:
            return MultiPoly.const(0, self.generators)
        if (a, b) in self.brackets:
            return self.brackets[(a, b)].with_gens(self.generators)
        if (b, a) in self.brackets:
            return -self.brackets[(b, a)].with_gens(self.generators)
        raise NonClosingError(f"no bracket given for ({a}, {b})")

    def bracket(self, P: MultiPoly, Q: MultiPoly) -> MultiPoly:
        """Formal bracket via the Leibniz rule on both arguments."""
        gens = self.generators
        P = P.with_gens(gens) if isinstance(P, MultiPoly) else MultiPoly.const(P, gens)
        Q = Q.with_gens(gens) if isinstance(Q, MultiPoly) else MultiPoly.const(Q, gens)
        total = MultiPoly.const(0, gens)
        for a in gens:
            dPa = P.diff(a)
            if dPa.is_zero():
                continue
            for b in gens:
                if a == b:
                    continue
                dQb = Q.diff(b)
                if dQb.is_zero():
                    continue
                total = total + dPa * dQb * self.bracket_of(a, b)
        return total

    def reduce(self, P: MultiPoly) -> MultiPoly:
        """Remainder modulo the relations (exact for a single relation)."""
        P = P.with_gens(self.generators)
        for R in self.relations:
            _, P = P.divmod(R.with_gens(self.generators))
        return P


@dataclass
class JacobiVerdict:
    status: str  # identity | failure
    failures: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"status": self.status, "failures": self.failures}


def jacobi_check(table: BracketTable) -> JacobiVerdict:
    """Cyclic sums {a,{b,c}} + {b,{c,a}} + {c,{a,b}} modulo the relations.

    Also checks that bracketing a relation with each generator lands back in
    the relation ideal, otherwise the table does not define a bracket on the
    quotient ring.
    """
    gens = table.generators
    failures = []
    for a, b, c in itertools.combinations(gens, 3):
        V = lambda s: MultiPoly.var(s, gens)  # noqa: E731
        J = (table.bracket(V(a), table.bracket_of(b, c))
             + table.bracket(V(b), table.bracket_of(c, a))
             + table.bracket(V(c), table.bracket_of(a, b)))
        r = table.reduce(J)
        if not r.is_zero():
            failures.append({"kind": "cyclic-sum", "triple": [a, b, c], "remainder": str(r)})
    for k, R in enumerate(table.relations):
        for g in gens:
            r = table.reduce(table.bracket(R, MultiPoly.var(g, gens)))
            if not r.is_zero():
                failures.append({"kind": "relation-compatibility", "relation": k, "generator": g,
                                 "remainder": str(r)})
    return JacobiVerdict("identity" if not failures else "failure", failures)


def exotic_plane_table(corrupt: bool = False) -> BracketTable:
    gens = ("r", "x", "y")
    x, y, r = (MultiPoly.var(s, gens) for s in ("x", "y", "r"))
    xy = r * 2 + 1 if corrupt else r * 2
    return BracketTable(gens, {("x", "y"): xy, ("x", "r"): y * 2, ("y", "r"): x * -2},
                        [x * x + y * y - r * r])


def su2_chart_table() -> BracketTable:
    gens = ("X", "Y", "tau")
    X, Y, t = (MultiPoly.var(s, gens) for s in gens)
    return BracketTable(
        gens,
        {("X", "Y"): X * X + Y * Y + (t * 2 - 1) * 4, ("X", "tau"): (1 - t) * Y * 2,
         ("Y", "tau"): t * X * 2},
        [Y * Y - (X * X + Y * Y + (t - 1) * 4) * t],
    )


# --- rank of the induced structure ---------------------------------------------------


def bracket_matrix(funcs: Sequence[TorusFunction], point, bracket=dirac_bracket) -> np.ndarray:
    """Complex matrix of pairwise brackets evaluated at ``point``."""
    m = len(funcs)
    B = np.zeros((m, m), dtype=complex)
    for a in range(m):
        for b in range(a + 1, m):
            v = complex(bracket(funcs[a], funcs[b]).evaluate(point))
            B[a, b], B[b, a] = v, -v
    return B


def rank_at(n: int, point, tol: float = 1e-9, generators: Sequence[tuple] | None = None) -> int:
    """Rank of the induced Poisson structure at a determinant-1 point.

    The generators default to the power sums tau_(j,k), 1 <= j + k <= n,
    split into real and imaginary parts.  A singular value counts when it
    exceeds ``tol * (largest + 1)``.
    """
    coords = list(point.coords) if hasattr(point, "coords") else list(point)
    if len(coords) == n - 1:
        prod = ONE
        for c in coords:
            prod = prod * as_gr(c) if not isinstance(c, complex) else prod * c
        coords.append(1 / prod)
    exact = all(isinstance(c, (int, Fraction, GaussianRational)) for c in coords)
    prod = ONE if exact else 1 + 0j
    for c in coords:
        prod = prod * (as_gr(c) if exact else complex(c))
    if (exact and prod != 1) or (not exact and abs(prod - 1) > 1e-12):
        raise ValueError("point is not on the determinant-1 torus")
    if any((as_gr(c) if exact else complex(c)) == 0 for c in coords):
        raise PoleError({"point": coords})
    idx = list(generators) if generators is not None else power_sum_generators(n)
    funcs = [tau(n, r, s).restrict_sl() for r, s in idx]
    B = bracket_matrix(funcs, coords)
    # Realify: Re and Im of each conjugate pair, one real function for r == s.
    pos = {p: k for k, p in enumerate(idx)}
    T = []
    done = set()
    for (r, s), k in pos.items():
        if (r, s) in done:
            continue
        kc = pos.get((s, r))
        done.update({(r, s), (s, r)})
        if kc is None:
            raise ValueError("generator set must be closed under conjugation")
        if kc == k:
            row = np.zeros(len(idx), dtype=complex)
            row[k] = 1
            T.append(row)
        else:
            re = np.zeros(len(idx), dtype=complex)
            im = np.zeros(len(idx), dtype=complex)
            re[k], re[kc] = 0.5, 0.5
            im[k], im[kc] = -0.5j, 0.5j
            T += [re, im]
    T = np.array(T)
    M = T @ B @ T.T
    sv = np.linalg.svd(M.real, compute_uv=False)
    if not len(sv):
        return 0
    return int(np.sum(sv > tol * (sv[0] + 1)))


# --- SU(3) relations -----------------------------------------------------------------

SU3_NAMES = ("s1", "sb1", "s2", "sb2", "sig", "rho", "rhob")
_SU3_INDEX = {"s1": (1, 0), "sb1": (0, 1), "s2": (2, 0), "sb2": (0, 2),
              "sig": (1, 1), "rho": (2, 1), "rhob": (1, 2)}


def su3_generators(orbit_sum: str = "distinct") -> dict:
    return {k: sigma_orbit(3, r, s, orbit_sum).restrict_sl().named(k, (r, s))
            for k, (r, s) in _SU3_INDEX.items()}


def su3_relations() -> list[tuple[str, MultiPoly, MultiPoly]]:
    """The three printed SU(3) relations as (id, lhs, rhs) over the seven generators."""
    g = {k: MultiPoly.var(k, SU3_NAMES) for k in SU3_NAMES}
    s1, sb1, s2, sb2, sig, rho, rhob = (g[k] for k in SU3_NAMES)
    # D_3(1, -s1, s2, -1) from the cubic discriminant
    D = s1**2 * s2**2 - 4 * s2**3 - 4 * s1**3 - 27 + 18 * s1 * s2
    rel1 = ((s1**2 - 4 * s2) * (sb1**2 - 4 * sb2),
            (s1 * sb1 - 2 * sig) ** 2 + 2 * rho * sb1 + 2 * rhob * s1)
    rel2 = (D * sb2,
            (9 + s2**3 - 4 * s1 * s2) * sb1**2
            + (4 * s1**2 - 3 * s2 - s1 * s2**2) * sb1 * sig
            + (6 * s1 - s2**2) * sb1 * rho + (s2**2 - 3 * s1) * sig**2
            + (9 - s1 * s2) * sig * rho + (s1**2 - 3 * s2) * rho**2)
    rel3 = (D,
            sb1**3 - s2 * sb1**2 * sig + (s2**2 - 2 * s1) * sb1**2 * rho
            + s1 * sb1 * sig**2
            - ((s1**2 - 2 * s2) * s1 - s1**3 + 3 * s1 * s2 - 3) * sb1 * sig * rho
            - sig**3 + (s1**2 - 2 * s2) * sb1 * rho**2
            + s2 * sig**2 * rho - s1 * sig * rho**2 + rho**3)
    return [("su3-relation-1", *rel1), ("su3-relation-2", *rel2), ("su3-relation-3", *rel3)]


def _substitute(P: MultiPoly, funcs: dict, n: int, cache: dict) -> TorusFunction:
    order = [funcs[g] for g in P.gens]
    acc = TorusFunction.const(n, 0, True)
    for e, c in P.terms.items():
        p = _product_of_powers(order, e, cache)
        acc = acc + (TorusFunction.const(n, c, True) if p is None else p * c)
    return acc


def _evaluate_poly(P: MultiPoly, values: dict):
    return P.evaluate(values)


def _support_ansatz(R: MultiPoly, funcs: dict, n: int, seed: int, cache: dict,
                    retries: int = 3) -> dict:
    """Search coefficient vectors on the monomial support of ``R`` giving an identity."""
    monos = sorted(R.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
    printed = [R.terms[e] for e in monos]
    rng = random.Random(seed)
    gens = R.gens
    funcs_in_order = [funcs[g] for g in gens]
    for attempt in range(retries):
        pts = [_random_sl_point(n, rng) for _ in range(2 * len(monos) + 4 * attempt)]
        rows = []
        for pt in pts:
            gv = [f.evaluate(pt) for f in funcs_in_order]
            row = []
            for e in monos:
                v = ONE
                for x, k in zip(gv, e):
                    if k:
                        v = v * x**k
                row.append(v)
            rows.append(row)
        basis = nullspace(rows)
        if not basis:
            return {"ansatz": "no-solution-within-support", "support_size": len(monos)}
        # Prefer the basis vector agreeing with the printed leading coefficient.
        vec = basis[0]
        for k, c in enumerate(vec):
            if c:
                vec = [x * (printed[k] / c) for x in vec]
                break
        candidate = MultiPoly(gens, {e: c for e, c in zip(monos, vec) if c})
        if _substitute(candidate, funcs, n, cache).is_zero():
            changed = [
                {"monomial": str(MultiPoly(gens, {e: ONE})), "printed": str(p), "corrected": str(c)}
                for e, p, c in zip(monos, printed, vec) if p != c
            ]
            return {"ansatz": "corrected", "support_size": len(monos),
                    "nullspace_dimension": len(basis), "corrected_relation": str(candidate),
                    "changed_coefficients": changed}
    return {"ansatz": "no-solution-within-support", "support_size": len(monos),
            "note": "sampled nullspace did not verify symbolically"}


def su3_relation_harness(orbit_sum: str = "distinct", seed: int = 0) -> list[RelationVerdict]:
    """Check the three printed SU(3) relations under one orbit-sum convention."""
    n = 3
    funcs = su3_generators(orbit_sum)
    cache: dict = {}
    out = []
    for rid, lhs, rhs in su3_relations():
        R = lhs - rhs
        diff = _substitute(R, funcs, n, cache)
        if diff.is_zero():
            out.append(RelationVerdict(rid, "identity", orbit_sum))
            continue
        pt, v = _find_witness(diff, n)
        vals = {k: f.evaluate(pt) for k, f in funcs.items()}
        lv, rv = lhs.evaluate(vals), rhs.evaluate(vals)
        verdict = RelationVerdict(rid, "counterexample", orbit_sum, witness=pt, residual=str(lv - rv),
                                  lhs=str(lv), rhs=str(rv))
        verdict.details.update(_support_ansatz(R, funcs, n, seed, cache))
        out.append(verdict)
    return out


def su3_relation_values(pt, orbit_sum: str = "distinct") -> list[tuple]:
    """(lhs, rhs) of each relation evaluated exactly at a determinant-1 point."""
    funcs = su3_generators(orbit_sum)
    vals = {k: f.evaluate(pt) for k, f in funcs.items()}
    return [(lhs.evaluate(vals), rhs.evaluate(vals)) for _, lhs, rhs in su3_relations()]
