from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from adjquot.discres import (
    PRINTED_D4, DegreeError, coefficient_symbols, derivative_coefficients, disc_chain, discriminant,
    evaluate_discriminant, printed_d2, printed_d3, resultant, root_difference_discriminant,
    symbolic_discriminant, sylvester_matrix,
)
from adjquot.exactnum import ONE, GaussianRational, as_gr
from adjquot.poly import MultiPoly, UniPoly
from adjquot.strata import classify_exact, partition_leq, sample_stratum

roots_st = st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=2, max_size=5)


@pytest.mark.parametrize("f,h,value", [
    ([1, -1], [1, -2], -1),
    ([1, 0, -1], [1, -2], 3),
    ([1, -1], [1, -1], 0),
])
def test_resultant_examples(f, h, value):
    assert resultant(f, h) == value


def test_sylvester_shape():
    S = sylvester_matrix([1, 2, 3], [1, 5])
    assert len(S.entries) == 3 and all(len(r) == 3 for r in S.entries)


def test_low_degree_displays():
    a0, a1, a2, a3 = coefficient_symbols(3)
    assert symbolic_discriminant(2) == printed_d2()
    assert symbolic_discriminant(3) == (a1**2 * a2**2 - 4 * a0 * a2**3 - 4 * a1**3 * a3
                                        - 27 * a0**2 * a3**2 + 18 * a0 * a1 * a2 * a3)
    assert symbolic_discriminant(3) == printed_d3()


def test_quartic_display_matches():
    # transcribed term by term; a mismatch would be reported as an erratum
    assert symbolic_discriminant(4) == PRINTED_D4


def test_anchor_cubic():
    assert discriminant(UniPoly.from_roots([1, 2, 3])) == 4


def test_degree_errors():
    with pytest.raises(DegreeError):
        discriminant([1, 2])
    with pytest.raises(DegreeError):
        discriminant([0, 1, 2])


def test_chain_labels():
    assert disc_chain(2, 1).labels == ["D_2(1, a1, a2)"]
    assert disc_chain(3, 2).labels == ["D_3(1, a1, a2, a3)", "D_2(3, 2*a1, a2)"]
    assert disc_chain(4, 3).labels[-1] == "D_2(12, 6*a1, 2*a2)"
    gens = ("a1", "a2")
    a1, a2 = (MultiPoly.var(g, gens) for g in gens)
    assert disc_chain(2, 1).equations[0] == a1**2 - 4 * a2


def test_derivative_coefficients_are_true_derivatives():
    # the last chain entry uses n!/(n-k+1)!, not n!/(n-k)!
    for n in range(2, 7):
        cs = [as_gr(1)] * (n + 1)
        for j in range(n):
            assert derivative_coefficients(cs, j)[0] == factorial(n) // factorial(n - j)


def test_printed_chain_factor_misses_triple_root():
    cube = [as_gr(1), as_gr(-3), as_gr(3), as_gr(-1)]
    assert evaluate_discriminant(2, derivative_coefficients(cube, 1)) == 0
    printed = [as_gr(6), 2 * cube[1], cube[2]]
    assert evaluate_discriminant(2, printed) == -36


def test_chain_zero_set_is_larger_than_d3():
    # P' = 4z^2 (z - 1) has a double root that is not a root of P
    p = [Fraction(-4, 3), 0, 0, Fraction(1, 3)]
    assert disc_chain(4, 2).vanishes([as_gr(x) for x in p])
    part = classify_exact(p)
    assert part == (2, 1, 1) and not partition_leq(part, (3, 1))


def test_cubic_discriminant_singular_along_triple_roots():
    D = symbolic_discriminant(3, monic=True)
    w = MultiPoly.var("w", ("w",))
    curve = {"a1": -3 * w, "a2": 3 * w * w, "a3": -(w**3)}
    for v in ("a1", "a2", "a3"):
        assert D.diff(v).subs(curve).is_zero()
    # but not along the double-root stratum
    pt = {"a1": as_gr(-4), "a2": as_gr(5), "a3": as_gr(-2)}
    assert any(D.diff(v).evaluate(pt) != 0 for v in ("a1", "a2", "a3"))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_generic_member_distinct_root_count(n):
    for k in range(1, n + 1):
        p = sample_stratum((k,) + (1,) * (n - k), seed=n * 10 + k)
        assert len(classify_exact(p)) == n - k + 1
        if k < n:
            assert disc_chain(n, k - 1).vanishes(p.normalized_coefficients()) if k > 1 else True
            assert not disc_chain(n, k).vanishes(p.normalized_coefficients())


@given(roots_st)
def test_oracle_equivalence(roots):
    assert discriminant(UniPoly.from_roots(roots)) == root_difference_discriminant(roots)


@given(roots_st, st.integers(-4, 4).filter(bool))
def test_scaling(roots, c):
    p = UniPoly.from_roots(roots)
    n = p.degree
    assert discriminant(p * c) == discriminant(p) * as_gr(c) ** (2 * n - 2)


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4))
def test_vanishes_iff_repeated_root(roots):
    zero = discriminant(UniPoly.from_roots(roots)) == 0
    assert zero == (len(set(roots)) < len(roots))


def test_symbolic_matches_numeric_evaluation():
    for n in (2, 3, 4):
        roots = [GaussianRational(k, 1 - k) for k in range(n)]
        p = UniPoly.from_roots(roots)
        cs = [ONE] + p.normalized_coefficients()
        prod = ONE
        for a, b in combinations(roots, 2):
            prod = prod * (a - b) ** 2
        assert evaluate_discriminant(n, cs) == prod
