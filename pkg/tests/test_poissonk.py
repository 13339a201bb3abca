from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from adjquot.exactnum import GaussianRational
from adjquot.poissonk import (
    TorusFunction, base_bracket, dirac_bracket, elementary_generators, exotic_plane_table,
    jacobi_check, power_sum_generators, rank_at, rewrite_in_generators, sigma_orbit, su2_chart,
    su2_chart_table, su3_generators, su3_relation_harness, su3_relation_values, tau,
    verify_tau_bracket,
)
from adjquot.poly import MultiPoly

TWO_I = GaussianRational(0, 2)


def test_real_bracket():
    gens = ("x", "y")
    x, y = MultiPoly.var("x", gens), MultiPoly.var("y", gens)
    br = base_bracket(x, y)
    assert br.num == x * x + y * y and br.evaluate({"x": 0, "y": 2}) == 4


def test_wirtinger_bracket():
    z, zb = TorusFunction.z(0, 1), TorusFunction.zb(0, 1)
    assert (base_bracket(z, zb) - z * zb * GaussianRational(0, -2)).is_zero()
    gens = ("z", "zb")
    Z, ZB = MultiPoly.var("z", gens), MultiPoly.var("zb", gens)
    assert base_bracket(Z, ZB).num == Z * ZB * GaussianRational(0, -2)


def test_real_and_wirtinger_agree():
    z = TorusFunction.z(0, 1)
    f = z * z + z.conj() * 3
    g = z * z.conj() + z ** -1
    lhs = base_bracket(f, g).to_real()
    rhs = base_bracket(f.to_real(), g.to_real())
    assert (lhs - rhs).is_zero()


def test_invariant_values():
    s = sigma_orbit(2, 1, 1).restrict_sl()
    assert s.evaluate([TWO_I]) == -2
    assert tau(3, 1, 0).evaluate([1, 1, 1]) == 3
    assert sigma_orbit(3, 2, 1).evaluate([1, 1, 1]) == 3
    assert sigma_orbit(3, 2, 1, "full").evaluate([1, 1, 1]) == 3 * 2 * 1 * 1


def test_generator_counts():
    for n in range(2, 7):
        assert len(elementary_generators(n)) == n * (n + 3) // 2 - 2
        assert len(power_sum_generators(n)) == n * (n + 3) // 2


def test_tau_bracket_examples():
    v = verify_tau_bracket(2, (1, 0), (0, 1))
    assert v.status == "identity" and v.details["result"] == "1*tau(1,1)"
    v = verify_tau_bracket(3, (1, 0), (2, 0))
    assert v.status == "identity" and v.details["coefficient"] == 0
    v = verify_tau_bracket(3, (1, 1), (2, 1))
    assert v.status == "identity" and v.details["coefficient"] == -1


@pytest.mark.parametrize("n", [2, 3])
def test_tau_bracket_exhaustive(n):
    idx = power_sum_generators(n)
    assert all(verify_tau_bracket(n, p, q).status == "identity" for p in idx for q in idx)


@pytest.mark.parametrize("n", [2, 3])
def test_determinant_one_bracket(n):
    idx = power_sum_generators(n)
    half_i = GaussianRational(0, Fraction(1, 2))
    for (a, b) in idx:
        for (c, d) in idx:
            ta, tb = tau(n, a, b).restrict_sl(), tau(n, c, d).restrict_sl()
            lhs = dirac_bracket(tau(n, a, b), tau(n, c, d)) * half_i
            rhs = (tau(n, a + c, b + d).restrict_sl() - ta * tb * Fraction(1, n)) * (a * d - b * c)
            assert (lhs - rhs).is_zero()


def test_newton_rewrites():
    assert str(rewrite_in_generators(tau(2, 2, 0), [tau(2, 1, 0)])) == "tau(1,0)^2 - 2"
    r = rewrite_in_generators(tau(3, 3, 0), [tau(3, 1, 0), tau(3, 2, 0)])
    assert r.verified and str(r) == "-1/2*tau(1,0)^3 + 3/2*tau(1,0)*tau(2,0) + 3"
    r = rewrite_in_generators(tau(2, 1, 1), [tau(2, *p) for p in power_sum_generators(2)])
    assert str(r) == "tau(1,1)"


def test_su2_chart():
    c = su2_chart()
    assert c.relation_residual().is_zero()
    assert all(r.is_zero() for r in c.bracket_residuals().values())
    assert [f.evaluate([TWO_I]) for f in (c.X, c.Y, c.tau)] == [0, Fraction(3, 2), 1]
    assert base_bracket(c.X, c.Y).evaluate([TWO_I]) == Fraction(25, 4)
    assert [f.evaluate([1]) for f in (c.X, c.Y, c.tau)] == [2, 0, 0]
    for z in (1, -1):
        assert all(v == 0 for row in c.poisson_matrix(z) for v in row)
    assert abs(c.closed_form_tau(0.0, 1.5) - 1) < 1e-15


def test_su2_sigma_relation():
    s1 = (TorusFunction.z(0, 2) + TorusFunction.z(1, 2)).restrict_sl()
    sb1 = s1.conj()
    sg = sigma_orbit(2, 1, 1).restrict_sl()
    lhs, rhs = (s1 * s1 - 4) * (sb1 * sb1 - 4), (s1 * sb1 - sg * 2) ** 2
    assert (lhs - rhs).is_zero()
    assert lhs.evaluate([TWO_I]) == Fraction(625, 16)


def test_rank_claims():
    assert rank_at(3, (2, 3, Fraction(1, 6))) == 4
    assert rank_at(3, (2, 2, Fraction(1, 4))) == 2
    assert rank_at(3, (1, 1, 1)) == 0
    assert rank_at(2, (2, Fraction(1, 2))) == 2
    assert rank_at(2, (-1, -1)) == 0
    with pytest.raises(ValueError):
        rank_at(3, (1, 2, 3))


def test_jacobi_tables():
    assert jacobi_check(exotic_plane_table()).status == "identity"
    assert jacobi_check(su2_chart_table()).status == "identity"
    bad = jacobi_check(exotic_plane_table(corrupt=True))
    assert bad.status == "failure"
    assert {"kind": "relation-compatibility", "relation": 0, "generator": "x", "remainder": "-2*y"} in bad.failures


def test_su3_relation_one_at_identity():
    funcs = su3_generators("distinct")
    vals = {k: f.evaluate([1, 1, 1]) for k, f in funcs.items()}
    assert vals == {"s1": 3, "sb1": 3, "s2": 3, "sb2": 3, "sig": 6, "rho": 3, "rhob": 3}
    lhs, rhs = su3_relation_values([1, 1, 1])[0]
    assert (lhs, rhs) == (9, 45)


@pytest.mark.parametrize("orbit_sum", ["distinct", "full"])
def test_su3_harness(orbit_sum):
    verdicts = su3_relation_harness(orbit_sum)
    assert len(verdicts) == 3
    funcs = su3_generators(orbit_sum)
    for v in verdicts:
        assert v.status in ("identity", "counterexample")
        if v.status == "counterexample":
            got = su3_relation_values(v.witness, orbit_sum)[int(v.relation_id[-1]) - 1]
            assert str(got[0] - got[1]) == v.residual
            assert v.details["ansatz"] in ("corrected", "no-solution-within-support")
    assert funcs["s1"].evaluate([1, 1, 1]) == (3 if orbit_sum == "distinct" else 6)


def test_su3_relation_one_has_no_fix_in_its_support():
    v = su3_relation_harness("distinct")[0]
    assert v.status == "counterexample" and v.lhs == "9" and v.rhs == "45"
    assert v.details["ansatz"] == "no-solution-within-support"


laurent = st.dictionaries(
    st.tuples(*[st.integers(-2, 2)] * 4),
    st.builds(GaussianRational, st.integers(-3, 3), st.integers(-3, 3)),
    max_size=3,
).map(lambda t: TorusFunction(2, t))


@given(laurent, laurent)
def test_antisymmetry(f, g):
    assert (base_bracket(f, g) + base_bracket(g, f)).is_zero()
    assert base_bracket(f, f).is_zero()
    assert (dirac_bracket(f, g) + dirac_bracket(g, f)).is_zero()


@given(laurent, laurent, laurent)
def test_leibniz_and_jacobi(f, g, h):
    assert (base_bracket(f, g * h) - base_bracket(f, g) * h - g * base_bracket(f, h)).is_zero()
    J = base_bracket(f, base_bracket(g, h)) + base_bracket(g, base_bracket(h, f)) + base_bracket(h, base_bracket(f, g))
    assert J.is_zero()


@given(laurent, laurent)
def test_brackets_of_invariants_are_invariant(f, g):
    # symmetrize over the swap, bracket, and compare with the swapped result
    fs, gs = f + f.permuted((1, 0)), g + g.permuted((1, 0))
    br = base_bracket(fs, gs)
    assert (br - br.permuted((1, 0))).is_zero()
