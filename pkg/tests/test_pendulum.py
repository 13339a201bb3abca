import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from adjquot.pendulum import (
    DivergenceBoundError, alpha, beta, canoe_membership, circle_invariants, embed, momentum, phi,
    rotate_half_turn, theta,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=20)


def test_embed_examples():
    assert embed(0, 0.0).as_tuple() == (0, 0, 1, 0, 0, 0)
    assert embed(1, s=1).as_tuple() == (0, 1, 0, 0, 0, 1)
    e = embed(1, math.pi / 2)
    assert max(abs(a - b) for a, b in zip(e.as_tuple(), (0, 1, 0, 0, 0, 1))) < 1e-15


def test_theta_examples():
    assert theta(0, 0.0) == (1, 0, 0)
    assert theta(1, 0.0) == (1, 0, 1)
    assert theta(1, s=Fraction(1, 2)) == (Fraction(3, 5), Fraction(4, 5), 1)


def test_canoe_examples():
    assert canoe_membership((0, 0, 1)) == "not-member"
    assert canoe_membership((1, 0, 0)) == "singular-point"
    assert canoe_membership((-1, 0, 0)) == "singular-point"
    assert canoe_membership((Fraction(3, 5), Fraction(4, 5), 1)) == "member"
    assert canoe_membership((0.6, 0.8, 1.0)) == "member"


def test_flattening_examples():
    assert phi((1, 0, 0)) == 2
    assert abs(phi(theta(1, 0.0)) - 2 * math.cosh(1)) < 1e-12
    # the uncorrected map gives half of that
    assert abs(phi(theta(1, 0.0), "paper") - math.cosh(1)) < 1e-12
    with pytest.raises(ValueError):
        phi((1, 0, 0), "other")


def test_series():
    assert abs(alpha(1) - math.cosh(1)) < 1e-15
    assert abs(beta(4) * 2 - math.sinh(2)) < 1e-14
    assert abs(alpha(-1) - math.cos(1)) < 1e-15
    with pytest.raises(DivergenceBoundError):
        alpha(1e6)


def test_flattening_grid():
    worst = 0.0
    for i in range(61):
        t = -3 + i / 10
        for j in range(32):
            ph = 2 * math.pi * j / 32
            worst = max(worst, abs(phi(theta(t, ph)) - 2 * cmath.cosh(complex(t, ph))))
    assert worst < 1e-12


@given(rationals, rationals)
def test_embedding_invariants_exact(t, s):
    e = embed(t, s=s)
    q, p = e.q, e.p
    assert momentum(e) == 0
    assert sum(x * x for x in q) == 1
    assert sum(a * b for a, b in zip(q, p)) == 0
    assert theta(t, s=s) == (q[2], p[2], sum(x * x for x in p))
    assert canoe_membership(theta(t, s=s)) != "not-member"


@given(rationals, rationals)
def test_inversion_symmetry(t, s):
    e = embed(t, s=s)
    assert embed(-t, s=-s) == rotate_half_turn(e)
    assert circle_invariants(embed(-t, s=-s)) == circle_invariants(e)
    assert theta(-t, s=-s) == theta(t, s=s)
