"""Polynomials and rational functions over Q(i).

* :class:`UniPoly` -- dense univariate, coefficients lowest degree first.
* :class:`MultiPoly` -- sparse multivariate over an explicit, ordered tuple of
  variable names; terms map exponent tuples to nonzero coefficients.
* :class:`RatFn` -- numerator / denominator pair of MultiPolys.  No
  multivariate gcd: only common monomial content is cancelled, and equality is
  decided by cross-multiplication.  Laurent polynomials (torus functions with
  negative powers) are RatFns with a monomial denominator.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .exactnum import ONE, ZERO, GaussianRational, ParseError, as_gr, parse_gaussian

__all__ = [
    "MultiPoly",
    "PoleError",
    "RatFn",
    "UniPoly",
    "ZeroPolynomialError",
    "eval_ratfn",
    "parse_coefficients",
    "squarefree_decomposition",
    "var_key",
]


class ZeroPolynomialError(ValueError):
    pass


class PoleError(ZeroDivisionError):
    def __init__(self, point):
        super().__init__(f"denominator vanishes at {point}")
        self.point = point


_VAR_RE = re.compile(r"^([^\d]*)(\d*)$")


def var_key(name: str):
    """Sort key: alphabetic prefix, then numeric suffix (so a2 < a10)."""
    m = _VAR_RE.match(name)
    if m is None:
        return (name, -1)
    prefix, digits = m.groups()
    return (prefix, int(digits) if digits else -1)


# --- univariate -------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``z**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_gr(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs: Iterable) -> "UniPoly":
        """From ``a0, a1, ..., an`` with ``a0`` the leading coefficient."""
        return cls(reversed(list(coeffs)))

    @classmethod
    def monic_from(cls, a: Iterable) -> "UniPoly":
        """``z^n + a1 z^(n-1) + ... + an`` from ``(a1, ..., an)``."""
        a = list(a)
        return cls.from_descending([ONE] + a)

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([ONE])
        for r in roots:
            p = p * cls([-as_gr(r), ONE])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> GaussianRational:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def descending(self) -> list[GaussianRational]:
        return list(reversed(self.coeffs))

    def normalized_coefficients(self) -> list[GaussianRational]:
        """``(a1, ..., an)`` of the monic polynomial (requires lc == 1)."""
        if self.lc != 1:
            raise ValueError("polynomial is not monic")
        return self.descending()[1:]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_uni(other))

    def __rsub__(self, other):
        return _uni(other) - self

    def __mul__(self, other):
        other = _uni(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniPoly([ONE])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _uni(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = other.lc.inverse()
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if not c:
                continue
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        inv = self.lc.inverse()
        return UniPoly(c * inv for c in self.coeffs)

    def derivative(self, k: int = 1) -> "UniPoly":
        if k < 0:
            raise ValueError("derivative order must be non-negative")
        cs = self.coeffs
        return UniPoly(
            cs[j] * (factorial(j) // factorial(j - k)) for j in range(k, len(cs))
        )

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            x = as_gr(x)
        exact = isinstance(x, GaussianRational)
        acc = ZERO if exact else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + (c if exact else complex(c))
        return acc

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd (zero if both are zero)."""
        a, b = self, _uni(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def __str__(self):
        return format_unipoly(self)

    def __repr__(self):
        return f"UniPoly({self})"


def _uni(x) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly([x])


def format_unipoly(p: UniPoly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c:
            parts.append(_term_str(c, f"{var}^{k}" if k > 1 else (var if k == 1 else "")))
    return _join_terms(parts)


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: ``p = lc * prod f_i^m_i``, monic squarefree coprime f_i.

    Returned in increasing multiplicity; constant factors are dropped.
    """
    if p.is_zero():
        raise ZeroPolynomialError("square-free decomposition of the zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = p.gcd(dp)
    b = p // a
    c = dp // a
    out = []
    m = 1
    while b.degree > 0:
        d = c - b.derivative()
        f = b.gcd(d)
        if f.degree > 0:
            out.append((f, m))
        b = b // f
        c = d // f
        m += 1
    return out


# --- multivariate -------------------------------------------------------------


class MultiPoly:
    """Sparse polynomial in the named variables ``gens``."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: Iterable[str], terms: Mapping | None = None):
        self.gens = tuple(gens)
        if terms is None:
            self.terms = {}
        else:
            self.terms = {tuple(e): as_gr(c) for e, c in terms.items() if c}

    # construction
    @classmethod
    def _make(cls, gens, terms):
        obj = object.__new__(cls)
        obj.gens = gens
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c, gens: Iterable[str] = ()) -> "MultiPoly":
        gens = tuple(gens)
        c = as_gr(c)
        return cls._make(gens, {(0,) * len(gens): c} if c else {})

    @classmethod
    def var(cls, name: str, gens: Iterable[str] | None = None) -> "MultiPoly":
        gens = tuple(gens) if gens is not None else (name,)
        e = tuple(1 if g == name else 0 for g in gens)
        return cls._make(gens, {e: ONE})

    @classmethod
    def monomial(cls, gens, exps, coeff=1) -> "MultiPoly":
        c = as_gr(coeff)
        return cls._make(tuple(gens), {tuple(exps): c} if c else {})

    # basic properties
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values())) if self.terms else ZERO

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self.gens:
            return 0 if self.terms else -1
        k = self.gens.index(name)
        return max((e[k] for e in self.terms), default=-1)

    def free_vars(self) -> tuple[str, ...]:
        used = [False] * len(self.gens)
        for e in self.terms:
            for k, x in enumerate(e):
                if x:
                    used[k] = True
        return tuple(g for g, u in zip(self.gens, used) if u)

    def leading_term(self):
        """Lex-largest exponent (in gens order) and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    # variable bookkeeping
    def with_gens(self, gens: tuple[str, ...]) -> "MultiPoly":
        if gens == self.gens:
            return self
        idx = []
        for g in self.gens:
            try:
                idx.append(gens.index(g))
            except ValueError:
                raise ValueError(f"variable {g} missing from target generators") from None
        n = len(gens)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for k, x in zip(idx, e):
                ne[k] = x
            out[tuple(ne)] = c
        return MultiPoly._make(gens, out)

    def _unify(self, other: "MultiPoly"):
        if self.gens == other.gens:
            return self, other
        gens = tuple(sorted(set(self.gens) | set(other.gens), key=var_key))
        return self.with_gens(gens), other.with_gens(gens)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return self._unify(other)
        if isinstance(other, RatFn):
            return NotImplemented
        try:
            c = as_gr(other)
        except TypeError:
            return NotImplemented
        return self, MultiPoly.const(c, self.gens)

    # arithmetic
    def __add__(self, other):
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        a, b = lifted
        out = dict(a.terms)
        for e, c in b.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MultiPoly._make(a.gens, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._make(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        a, b = lifted
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (MultiPoly, RatFn)):
            try:
                c = as_gr(other)
            except TypeError:
                return NotImplemented
            if not c:
                return MultiPoly._make(self.gens, {})
            return MultiPoly._make(self.gens, {e: v * c for e, v in self.terms.items()})
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        a, b = lifted
        out: dict = {}
        get = out.get
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                v = get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly._make(a.gens, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (MultiPoly, RatFn)):
            return RatFn(self) / other
        c = as_gr(other)
        return self * c.inverse()

    def __rtruediv__(self, other):
        return RatFn(MultiPoly.const(as_gr(other), self.gens)) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFn(self) ** k
        result = MultiPoly.const(ONE, self.gens)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            a, b = self._unify(other)
            return a.terms == b.terms
        if isinstance(other, RatFn):
            return RatFn(self) == other
        try:
            c = as_gr(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self):
        return hash(frozenset(self.with_gens(tuple(sorted(self.free_vars(), key=var_key))).terms.items()))

    # calculus / evaluation
    def diff(self, name: str) -> "MultiPoly":
        if name not in self.gens:
            return MultiPoly._make(self.gens, {})
        k = self.gens.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = list(e)
                ne[k] -= 1
                out[tuple(ne)] = c * e[k]
        return MultiPoly._make(self.gens, out)

    def evaluate(self, point: Mapping[str, object]):
        """Substitute values for every variable; returns a scalar."""
        vals = []
        for g in self.gens:
            if g not in point:
                if any(e[self.gens.index(g)] for e in self.terms):
                    raise KeyError(f"no value for variable {g}")
                vals.append(ZERO)
            else:
                vals.append(point[g])
        exact = all(isinstance(v, (GaussianRational, int, Fraction)) for v in vals)
        if exact:
            vals = [as_gr(v) for v in vals]
            acc = ZERO
        else:
            vals = [complex(v) for v in vals]
            acc = 0j
        cache: dict = {}
        for e, c in self.terms.items():
            t = c if exact else complex(c)
            for k, x in enumerate(e):
                if x:
                    key = (k, x)
                    p = cache.get(key)
                    if p is None:
                        p = vals[k] ** x
                        cache[key] = p
                    t = t * p
            acc = acc + t
        return acc

    def subs(self, mapping: Mapping[str, object]):
        """Replace variables by polynomials / rational functions / scalars."""
        remaining = tuple(g for g in self.gens if g not in mapping)
        result = None
        cache: dict = {}
        keep_idx = [self.gens.index(g) for g in remaining]
        for e, c in self.terms.items():
            t = MultiPoly.monomial(remaining, [e[k] for k in keep_idx], c)
            for k, x in enumerate(e):
                g = self.gens[k]
                if x and g in mapping:
                    key = (g, x)
                    p = cache.get(key)
                    if p is None:
                        v = mapping[g]
                        p = v ** x
                        cache[key] = p
                    t = t * p
            result = t if result is None else result + t
        if result is None:
            return MultiPoly._make(remaining, {})
        return result

    def monomial_content(self) -> tuple[int, ...]:
        """Componentwise minimum exponent over all terms."""
        if not self.terms:
            return (0,) * len(self.gens)
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            for k, x in enumerate(e):
                if x < m[k]:
                    m[k] = x
        return tuple(m)

    def shift(self, delta: Iterable[int]) -> "MultiPoly":
        """Multiply by the monomial ``x^delta`` (delta may be negative if divisible)."""
        delta = tuple(delta)
        out = {}
        for e, c in self.terms.items():
            ne = tuple(x + d for x, d in zip(e, delta))
            if min(ne, default=0) < 0:
                raise ValueError("monomial shift leaves the polynomial ring")
            out[ne] = c
        return MultiPoly._make(self.gens, out)

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def divmod(self, other: "MultiPoly"):
        """Lex division by a single divisor; remainder zero iff divisible."""
        a, b = self._unify(other)
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lt_e, lt_c = b.leading_term()
        inv = lt_c.inverse()
        rem = dict(a.terms)
        quot: dict = {}
        r_out: dict = {}
        while rem:
            e = max(rem)
            c = rem.pop(e)
            if all(x >= y for x, y in zip(e, lt_e)):
                qe = tuple(x - y for x, y in zip(e, lt_e))
                qc = c * inv
                quot[qe] = quot.get(qe, ZERO) + qc
                for be, bc in b.terms.items():
                    if be == lt_e:
                        continue
                    ne = tuple(x + y for x, y in zip(qe, be))
                    v = rem.get(ne, ZERO) - qc * bc
                    if v:
                        rem[ne] = v
                    else:
                        rem.pop(ne, None)
            else:
                r_out[e] = c
        return MultiPoly(a.gens, quot), MultiPoly(a.gens, r_out)

    def coefficient_real_parts(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def conj_coeffs(self) -> "MultiPoly":
        return MultiPoly._make(self.gens, {e: c.conj() for e, c in self.terms.items()})

    def sorted_terms(self):
        """Terms by descending total degree, then descending lex exponent."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (g if x == 1 else f"{g}^{x}") for g, x in zip(self.gens, e) if x
            )
            parts.append(_term_str(c, mono))
        return _join_terms(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


def _term_str(c: GaussianRational, mono: str) -> str:
    cs = str(c)
    if not mono:
        return cs if c.is_real() or c.re == 0 else f"({cs})"
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    if not c.is_real() and c.re != 0:
        return f"({cs})*{mono}"
    return f"{cs}*{mono}"


def _join_terms(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# --- rational functions ---------------------------------------------------


class RatFn:
    """Quotient of MultiPolys with monomial content cancelled."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, MultiPoly):
            num = MultiPoly.const(as_gr(num))
        if den is None:
            den = MultiPoly.const(ONE, num.gens)
        elif not isinstance(den, MultiPoly):
            den = MultiPoly.const(as_gr(den), num.gens)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = num._unify(den)
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _make(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = _normalize(num, den)
        return obj

    @classmethod
    def from_laurent(cls, gens, terms: Mapping) -> "RatFn":
        """Build from a dict of possibly negative exponent tuples."""
        gens = tuple(gens)
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls._make(MultiPoly._make(gens, {}), MultiPoly.const(ONE, gens))
        lo = [min(e[k] for e in terms) for k in range(len(gens))]
        shift = [-x if x < 0 else 0 for x in lo]
        num = {tuple(x + s for x, s in zip(e, shift)): c for e, c in terms.items()}
        return cls._make(MultiPoly._make(gens, num), MultiPoly.monomial(gens, shift, 1))

    @property
    def gens(self):
        return self.num.gens

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def laurent_terms(self) -> dict:
        """Exponent dict with negative powers; requires a monomial denominator."""
        if not self.den.is_monomial():
            raise ValueError("denominator is not a monomial")
        (de, dc), = self.den.terms.items()
        inv = dc.inverse()
        return {tuple(x - y for x, y in zip(e, de)): c * inv for e, c in self.num.terms.items()}

    def _lift(self, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, MultiPoly):
            return RatFn._make(*other._unify(MultiPoly.const(ONE, other.gens)))
        try:
            c = as_gr(other)
        except TypeError:
            return NotImplemented
        return RatFn._make(MultiPoly.const(c, self.gens), MultiPoly.const(ONE, self.gens))

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if d1.gens != d2.gens:
            n1, n2 = n1._unify(n2)
            d1, d2 = d1.with_gens(n1.gens), d2.with_gens(n1.gens)
        if d1.is_monomial() and d2.is_monomial():
            (e1, c1), = d1.terms.items()
            (e2, c2), = d2.terms.items()
            lcm = tuple(max(x, y) for x, y in zip(e1, e2))
            a = n1.shift([l - x for l, x in zip(lcm, e1)]) * c1.inverse()
            b = n2.shift([l - x for l, x in zip(lcm, e2)]) * c2.inverse()
            return RatFn._make(a + b, MultiPoly.monomial(n1.gens, lcm, 1))
        if d1 == d2:
            return RatFn._make(n1 + n2, d1)
        return RatFn._make(n1 * d2 + n2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatFn._make(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFn._make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn._make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int):
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFn._make(self.den ** (-k), self.num ** (-k))
        return RatFn._make(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._lift(other) if not isinstance(other, RatFn) else other
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        raise TypeError("RatFn is unhashable (equality is by cross-multiplication)")

    def diff(self, name: str) -> "RatFn":
        dn = self.num.diff(name)
        dd = self.den.diff(name)
        if dd.is_zero():
            return RatFn._make(dn, self.den)
        return RatFn._make(dn * self.den - self.num * dd, self.den * self.den)

    def evaluate(self, point: Mapping[str, object]):
        d = self.den.evaluate(point)
        if d == 0:
            raise PoleError(dict(point))
        return self.num.evaluate(point) / d

    def subs(self, mapping: Mapping[str, object]) -> "RatFn":
        n = self.num.subs(mapping)
        d = self.den.subs(mapping)
        if not isinstance(n, RatFn):
            n = RatFn(n)
        if not isinstance(d, RatFn):
            d = RatFn(d)
        return n / d

    def conj_coeffs(self) -> "RatFn":
        return RatFn._make(self.num.conj_coeffs(), self.den.conj_coeffs())

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFn({self})"


def _normalize(num: MultiPoly, den: MultiPoly):
    if num.gens != den.gens:
        num, den = num._unify(den)
    if num.is_zero():
        return num, MultiPoly.const(ONE, num.gens)
    mn = num.monomial_content()
    md = den.monomial_content()
    common = tuple(min(x, y) for x, y in zip(mn, md))
    if any(common):
        neg = [-x for x in common]
        num = num.shift(neg)
        den = den.shift(neg)
    _, lc = den.leading_term()
    if lc != 1:
        inv = lc.inverse()
        num = num * inv
        den = den * inv
    return num, den


def eval_ratfn(f, point: Mapping[str, object]):
    """Exact value of a RatFn / MultiPoly at ``point``; raises PoleError at poles."""
    if isinstance(f, MultiPoly):
        return f.evaluate(point)
    return f.evaluate(point)


# --- text format for coefficient vectors ----------------------------------


def parse_coefficients(text: str) -> UniPoly:
    """``"a1,...,an"`` (monic, normalized) or ``"a0;a1;...;an"`` (general)."""
    if ";" in text and "," in text:
        raise ParseError("mixes ',' and ';' separators", text, text.index(";"))
    sep = ";" if ";" in text else ","
    fields = text.split(sep)
    vals = []
    offset = 0
    for f in fields:
        try:
            vals.append(parse_gaussian(f))
        except ParseError as err:
            raise ParseError("bad coefficient", text, offset + err.position) from None
        offset += len(f) + 1
    if sep == ";":
        if not vals[0]:
            raise ParseError("leading coefficient a0 must be nonzero", text, 0)
        return UniPoly.from_descending(vals)
    return UniPoly.monic_from(vals)
