import warnings
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from adjquot.exactnum import GaussianRational, as_gr
from adjquot.poly import UniPoly
from adjquot.strata import (
    IllConditionedWarning, Partition, classify_exact, classify_numeric, d22_equations,
    d4_in_d22_equation, dk_partition, dn_curve, membership, partition_leq, partitions, sample_stratum,
)


def test_partitions_counts():
    assert [len(partitions(n)) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]


def test_partition_parse_and_str():
    assert str(Partition.parse("(2, 1,1)")) == "(2,1,1)"
    assert Partition([1, 3]) == (3, 1)


def test_merge_order_examples():
    assert partition_leq((2, 2), (2, 1, 1))
    assert partition_leq((3, 1), (2, 1, 1))
    assert partition_leq((4,), (2, 1, 1))
    assert partition_leq((2, 1), (2, 1))
    assert not partition_leq((2, 2), (3, 1))
    assert not partition_leq((3, 1), (2, 2))


def _merges(nu):
    out = set()
    for i in range(len(nu)):
        for j in range(i + 1, len(nu)):
            rest = [x for k, x in enumerate(nu) if k not in (i, j)]
            out.add(Partition(rest + [nu[i] + nu[j]]))
    return out


def _brute_closure(nu):
    seen, todo = {Partition(nu)}, [Partition(nu)]
    while todo:
        for m in _merges(todo.pop()):
            if m not in seen:
                seen.add(m)
                todo.append(m)
    return seen


@pytest.mark.parametrize("n", range(1, 7))
def test_merge_order_against_enumeration(n):
    for b in partitions(n):
        closure = _brute_closure(b)
        for a in partitions(n):
            assert partition_leq(a, b) == (a in closure)


def test_classify_exact_examples():
    assert classify_exact(UniPoly.from_roots([1, 1, 2])) == (2, 1)
    assert classify_exact(UniPoly([0, 0, 0, 0, 0, 1])) == (5,)
    assert classify_exact([-6, 11, -6]) == (1, 1, 1)


def test_classify_numeric_examples():
    assert classify_numeric([-4.0, 5.0, -2.0], tol=1e-6) == (2, 1)
    eps = 1e-9
    p = UniPoly.from_roots([1, 1 + Fraction(1, 10**9), 2])
    assert classify_numeric([complex(c) for c in p.normalized_coefficients()], tol=1e-6) == (2, 1)
    assert classify_numeric([0.0, 1.0]) == (1, 1)
    assert eps


def test_ill_conditioned_warning():
    p = UniPoly.from_roots([0, Fraction(1, 2 * 10**7)])
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        classify_numeric([complex(c) for c in p.normalized_coefficients()], tol=1e-8)
    assert any(issubclass(x.category, IllConditionedWarning) for x in w)


def test_membership_examples():
    r = membership(UniPoly.from_roots([1, 1, 1, 2]).normalized_coefficients(), "D3")
    assert r.verdict == "member" and r.equations_vanish
    r = membership([-6, 13, -12, 4], "(2,2)")
    assert r.verdict == "member"
    assert r.residuals["oracle_cubic"] == "0" and r.residuals["oracle_quartic"] == "0"
    assert r.residuals["printed_cubic"] == "48" and r.residuals["printed_quartic"] == "192"
    r = membership([-6, 11, -6], 2)
    assert r.verdict == "not-member" and r.residuals["D_3(1, a1, a2, a3)"] == "4"


def test_membership_boundary_and_su_slice():
    assert membership(dn_curve(4, 1), "D3").verdict == "boundary-of"
    assert membership([-3, 3, -1], "SU:D3").verdict == "member"
    r = membership([-3, 3, -1], "SU:D3", convention="paper-display")
    assert r.verdict == "not-member" and r.notes


def test_membership_flags_chain_false_positive():
    r = membership([Fraction(-4, 3), 0, 0, Fraction(1, 3)], "D3")
    assert r.equations_vanish and r.verdict == "not-member" and r.notes


def test_membership_numeric_mode():
    cs = [complex(c) for c in UniPoly.from_roots([1, 1, 1, 2]).normalized_coefficients()]
    assert membership(cs, "D3", mode="numeric").verdict == "member"


def test_dn_curve_examples():
    assert dn_curve(3, 1) == [-3, 3, -1]
    assert dn_curve(2, 0) == [0, 0]
    assert dn_curve(4, 2) == [-8, 24, -32, 16]


def test_sample_stratum_examples():
    assert sample_stratum((2, 1), roots=[1, 2]) == UniPoly.from_roots([1, 1, 2])
    assert classify_exact(sample_stratum((4,), seed=3)) == (4,)
    assert classify_exact(sample_stratum((1, 1, 1, 1), roots=[1, 2, 3, 4])) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        sample_stratum((2, 1), roots=[1, 1])


def test_dk_partition():
    assert dk_partition(5, 3) == (3, 1, 1)


@pytest.mark.parametrize("s,p", [(3, 2), (0, 1), (GaussianRational(1, 2), GaussianRational(-3, 1)), (Fraction(1, 3), 5)])
def test_d22_oracle_vanishes_on_squares(s, p):
    cs = (UniPoly([as_gr(p), -as_gr(s), 1]) ** 2).normalized_coefficients()
    pt = {f"a{k}": c for k, c in enumerate(cs, 1)}
    assert all(e.evaluate(pt) == 0 for e in d22_equations("oracle"))


def test_d4_inside_d22():
    eq = d4_in_d22_equation()
    for w in (1, -2, GaussianRational(1, 1)):
        cs = dn_curve(4, w)
        assert eq.evaluate({f"a{k}": c for k, c in enumerate(cs, 1)}) == 0
        assert membership(cs, "(2,2)").verdict == "boundary-of"


partition_st = st.integers(1, 6).flatmap(lambda n: st.sampled_from(partitions(n)))


@given(partition_st, st.integers(0, 10**6))
def test_round_trip(nu, seed):
    assert classify_exact(sample_stratum(nu, seed=seed)) == nu


@given(partition_st, st.integers(0, 10**6))
def test_numeric_agrees_with_exact(nu, seed):
    if nu.n > 4:
        return
    p = sample_stratum(nu, seed=seed)
    cs = [complex(c) for c in p.normalized_coefficients()]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IllConditionedWarning)
        assert classify_numeric(cs, tol=1e-8) == nu


@given(partition_st, st.integers(0, 10**6))
def test_dk_chain_nesting(nu, seed):
    cs = sample_stratum(nu, seed=seed).normalized_coefficients()
    n = nu.n
    inside = [membership(cs, f"D{k}").verdict != "not-member" for k in range(1, n + 1)]
    # once out, stays out
    assert inside == sorted(inside, reverse=True)
    assert sum(inside) == nu[0]
