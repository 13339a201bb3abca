from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from adjquot.exactnum import GaussianRational, ParseError, as_gr
from adjquot.poly import (
    MultiPoly, PoleError, RatFn, UniPoly, ZeroPolynomialError, eval_ratfn, parse_coefficients,
    squarefree_decomposition,
)

small = st.integers(-5, 5)


def test_symbolic_cubic_derivative():
    gens = ("a1", "a2", "a3", "z")
    z = MultiPoly.var("z", gens)
    a1, a2, a3 = (MultiPoly.var(g, gens) for g in gens[:3])
    p = z**3 + a1 * z**2 + a2 * z + a3
    assert p.diff("z") == 3 * z**2 + 2 * a1 * z + a2


def test_derivatives():
    assert UniPoly([7]).derivative().is_zero()
    assert UniPoly([0, 0, 0, 0, 1]).derivative(3) == UniPoly([0, 24])


def test_squarefree_examples():
    p = UniPoly.from_roots([1, 1, 2])
    assert squarefree_decomposition(p) == [(UniPoly.from_roots([2]), 1), (UniPoly.from_roots([1]), 2)]
    assert squarefree_decomposition(UniPoly([0, 0, 0, 0, 1])) == [(UniPoly([0, 1]), 4)]
    q = UniPoly.from_roots([1, 2, 3]) * 5
    assert squarefree_decomposition(q) == [(q.monic(), 1)]
    with pytest.raises(ZeroPolynomialError):
        squarefree_decomposition(UniPoly())


def test_ratfn_evaluation():
    x, y = MultiPoly.var("x", ("x", "y")), MultiPoly.var("y", ("x", "y"))
    assert eval_ratfn(RatFn(x * x + y * y), {"x": 0, "y": 2}) == 4
    z, zb = MultiPoly.var("z", ("z", "zb")), MultiPoly.var("zb", ("z", "zb"))
    f = RatFn(z * zb, z)
    assert f.evaluate({"z": GaussianRational(0, 2), "zb": GaussianRational(0, -2)}) == GaussianRational(0, -2)


def test_tau11_value_at_2i():
    gens = ("z1", "z2", "zb1", "zb2")
    terms = {(1, 0, 1, 0): 1, (0, 1, 0, 1): 1}
    f = RatFn.from_laurent(gens, terms)
    w = GaussianRational(0, 2)
    pt = {"z1": w, "zb1": w.conj(), "z2": w.inverse(), "zb2": w.inverse().conj()}
    assert f.evaluate(pt) == Fraction(17, 4)


def test_pole():
    z = MultiPoly.var("z", ("z",))
    with pytest.raises(PoleError):
        RatFn(MultiPoly.const(1, ("z",)), z).evaluate({"z": 0})


def test_parse_coefficients():
    assert parse_coefficients("-6,11,-6") == UniPoly.from_roots([1, 2, 3])
    assert parse_coefficients("2;-2") == UniPoly([-2, 2])
    with pytest.raises(ParseError):
        parse_coefficients("1,2;3")
    with pytest.raises(ParseError):
        parse_coefficients("0;1")


@given(st.lists(small, min_size=1, max_size=4), st.lists(st.integers(1, 3), min_size=4, max_size=4))
def test_squarefree_reconstructs(roots, mults):
    roots = sorted(set(roots))
    p = UniPoly([1])
    for r, m in zip(roots, mults):
        p = p * UniPoly.from_roots([r] * m)
    prod = UniPoly([1])
    for f, m in squarefree_decomposition(p):
        prod = prod * f**m
    assert prod == p


@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=4))
def test_divmod_identity(a, b):
    A, B = UniPoly(a), UniPoly(b)
    if B.is_zero():
        return
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.is_zero() or r.degree < B.degree


@given(st.lists(small, min_size=2, max_size=4), st.lists(small, min_size=2, max_size=4), small)
def test_leibniz_rule(a, b, c):
    gens = ("u", "v")
    u, v = MultiPoly.var("u", gens), MultiPoly.var("v", gens)
    P = sum((k * u**i * v for i, k in enumerate(a)), MultiPoly.const(c, gens))
    Q = sum((k * v**i + u for i, k in enumerate(b)), MultiPoly.const(0, gens))
    assert (P * Q).diff("u") == P.diff("u") * Q + P * Q.diff("u")


def test_multipoly_divmod_exact():
    gens = ("a", "b")
    a, b = MultiPoly.var("a", gens), MultiPoly.var("b", gens)
    P = (a**2 - b) * (a + 3 * b)
    q, r = P.divmod(a**2 - b)
    assert r.is_zero() and q == a + 3 * b
    assert as_gr(1) == 1
