import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from adjquot.exactnum import GaussianRational, I, ONE
from adjquot.strata import membership
from adjquot.torusq import (
    TorusPoint, alcove_sample, bottom_stratum_points, central_point_characterization, chi, chi_su2,
    deltoid_coefficients, full_coefficients, hypersurface_sample, kaehler_potential,
    region_membership, slice_discriminant, su4_printed_bottom_verdict,
)

nonzero = st.builds(GaussianRational, st.integers(-4, 4), st.integers(-4, 4)).filter(bool)


def test_su2_scalar_chart():
    assert chi_su2(1) == 2
    assert chi_su2(2) == Fraction(5, 2)


def test_central_points_unsigned_convention():
    assert chi(TorusPoint((1, 1, 1), True), "paper-display") == [3, 3]
    eta = cmath.exp(2j * math.pi / 3)
    a1, a2 = chi(TorusPoint((eta,) * 3, True), "paper-display")
    assert abs(a1 - 3 * eta) < 1e-12 and abs(a2 - 3 * eta**2) < 1e-12


def test_char_poly_signs():
    assert chi(TorusPoint((1, 1, 1), True)) == [-3, 3]
    assert chi(TorusPoint.from_sl([2, 3])) == [-Fraction(31, 6), Fraction(41, 6)]
    assert full_coefficients([-3, 3], 3) == [-3, 3, -1]


def test_bottom_points():
    assert {p.coords for p in bottom_stratum_points(2)} == {(-2,), (2,)}
    got = {p.coords[:2] for p in bottom_stratum_points(4)}
    assert got == {(-4, 6), (-4 * I, -6), (4, 6), (4 * I, -6)}
    cusps = bottom_stratum_points(3, "paper-display")
    assert cusps[0].coords == (3, 3) and cusps[0].exact and not cusps[1].exact


def test_su4_printed_points_are_not_on_the_slice():
    v = su4_printed_bottom_verdict()
    assert v["verdict"] == "erratum"
    assert v["printed_constant_on_d4"] == "1/4" and v["slice_constant"] == "1"
    assert v["printed_quartic_residual"] == "0" and v["derived_quartic_residual"] == "-48"


def test_central_characterization():
    c = central_point_characterization()
    assert c["on_bottom"] and c["cube"] == "27"
    assert central_point_characterization("char-poly")["cube"] == "-27"


def test_hypersurface_examples():
    assert hypersurface_sample(0) == (3, 0)
    assert hypersurface_sample() == (-1, 0)
    assert hypersurface_sample(1) == (-1, 2)
    u, v = hypersurface_sample(alpha=math.pi / 2)
    assert abs(u + 1) < 1e-12 and abs(v - 2) < 1e-12


@pytest.mark.parametrize("conv", ["char-poly", "paper-display"])
def test_deltoid_is_on_discriminant(conv):
    for k in range(-20, 21):
        u, v = hypersurface_sample(Fraction(k, 3))
        assert slice_discriminant(3, deltoid_coefficients(u, v, conv), conv) == 0


def test_region_examples():
    pt = chi(TorusPoint((cmath.exp(1j), cmath.exp(-0.4j), cmath.exp(-0.6j)), True))
    assert region_membership(pt, 3) == "interior"
    assert region_membership([3, 3], 3, convention="paper-display") == "boundary"
    assert region_membership([10, 10], 3, convention="paper-display") == "exterior"
    with pytest.raises(ValueError):
        region_membership([1, 1, 5], 3)


def test_alcove_examples():
    # the n = 2 values are the scalar z + 1/z, i.e. the unsigned convention
    assert abs(alcove_sample(2, (0, 0), "paper-display")[0] - 2) < 1e-12
    assert abs(alcove_sample(2, (math.pi, -math.pi), "paper-display")[0] + 2) < 1e-12
    assert region_membership(alcove_sample(3, (0.5, 0, -0.5)), 3) == "interior"
    with pytest.raises(ValueError):
        alcove_sample(3, (0, 0.5, -0.5))


def test_potential_examples():
    assert kaehler_potential((1, I, -ONE)) == 0
    assert abs(kaehler_potential((math.e, 1 / math.e, 1)) - 2) < 1e-12
    assert abs(kaehler_potential((math.e**2, math.e**-2)) - 8) < 1e-12


def test_su2_diagonal_lands_on_su3_discriminant():
    for z in (2, GaussianRational(1, 1), Fraction(1, 3)):
        zz = GaussianRational(z) if not isinstance(z, GaussianRational) else z
        cs = chi(TorusPoint((zz, zz, (zz * zz).inverse()), True), "paper-display")
        assert cs == [2 * zz + (zz * zz).inverse(), zz * zz + 2 * zz.inverse()]
        assert membership(cs + [ONE], "SU:D2", convention="paper-display").verdict == "member"


@given(nonzero, nonzero, st.permutations(range(3)))
def test_chi_is_weyl_invariant(a, b, perm):
    pt = TorusPoint.from_sl([a, b])
    assert chi(pt) == chi(pt.permuted(perm))


@given(st.floats(-3, 3), st.floats(-3, 3))
def test_alcove_points_are_in_region(x, y):
    th = sorted([x, y, -x - y], reverse=True)
    if th[0] - th[2] >= 2 * math.pi - 1e-3:
        return
    gap = min(th[0] - th[1], th[1] - th[2])
    expected = "interior" if gap > 1e-3 else None
    got = region_membership(alcove_sample(3, th), 3)
    assert got in ("interior", "boundary")
    if expected:
        assert got == expected
