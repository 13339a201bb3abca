"""The spherical pendulum at zero angular momentum and the canoe.

Points of the cylinder are written ``e^t e^{i phi}``.  Angles may be floats
or exact: pass ``s = tan(phi/2)`` as a rational to get the rational circle
point, which keeps every identity exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import rational_circle

__all__ = [
    "DivergenceBoundError",
    "PhasePoint",
    "alpha",
    "beta",
    "canoe_membership",
    "embed",
    "momentum",
    "phi",
    "theta",
]

TERMS = 40
TAIL_LIMIT = 1e-15


class DivergenceBoundError(ValueError):
    pass


def _angle(phi_angle=None, s=None):
    """(cos, sin) from a float angle or exactly from a rational s = tan(phi/2)."""
    if s is not None:
        return rational_circle(s)
    if phi_angle is None:
        raise ValueError("give either an angle or a rational circle parameter")
    return math.cos(phi_angle), math.sin(phi_angle)


@dataclass(frozen=True)
class PhasePoint:
    q: tuple
    p: tuple

    def as_tuple(self) -> tuple:
        return self.q + self.p


def embed(t, phi_angle=None, s=None) -> PhasePoint:
    """(0, sin phi, cos phi; 0, -t cos phi, t sin phi) in T S^2."""
    c, sn = _angle(phi_angle, s)
    zero = Fraction(0) if s is not None else 0.0
    return PhasePoint((zero, sn, c), (zero, -t * c, t * sn))


def momentum(pp: PhasePoint):
    """Angular momentum about the third axis, q1 p2 - q2 p1."""
    return pp.q[0] * pp.p[1] - pp.q[1] * pp.p[0]


def rotate_half_turn(pp: PhasePoint) -> PhasePoint:
    """Rotation by pi about the third axis (the circle action at angle pi)."""
    (q1, q2, q3), (p1, p2, p3) = pp.q, pp.p
    return PhasePoint((-q1, -q2, q3), (-p1, -p2, p3))


def circle_invariants(pp: PhasePoint) -> tuple:
    """Invariants of rotation about the third axis."""
    (q1, q2, q3), (p1, p2, p3) = pp.q, pp.p
    return (q3, p3, q1 * q1 + q2 * q2, p1 * p1 + p2 * p2, q1 * p1 + q2 * p2, q1 * p2 - q2 * p1)


def theta(t, phi_angle=None, s=None) -> tuple:
    """(cos phi, t sin phi, t^2) on the canoe."""
    c, sn = _angle(phi_angle, s)
    return (c, t * sn, t * t)


def canoe_membership(pt, tol: float = 1e-12) -> str:
    """``member``, ``singular-point`` or ``not-member`` of w(1-u^2) = v^2, |u| <= 1, w >= v^2.

    Exact inputs (ints / Fractions) are decided exactly and ``tol`` is ignored.
    """
    u, v, w = pt
    if all(isinstance(x, (int, Fraction)) for x in pt):
        if u in (1, -1) and v == 0 and w == 0:
            return "singular-point"
        ok = w * (1 - u * u) - v * v == 0 and abs(u) <= 1 and w - v * v >= 0
        return "member" if ok else "not-member"
    u, v, w = float(u), float(v), float(w)
    if abs(abs(u) - 1) <= tol and abs(v) <= tol and abs(w) <= tol:
        return "singular-point"
    ok = (abs(w * (1 - u * u) - v * v) <= tol * max(1.0, abs(w))
          and abs(u) <= 1 + tol and w - v * v >= -tol)
    return "member" if ok else "not-member"


def _series(w, odd: bool):
    # coefficients 1/(2k)! (alpha) or 1/(2k+1)! (beta), summed by Horner
    w = complex(w) if isinstance(w, complex) else float(w)
    coeffs = [1.0 / math.factorial(2 * k + (1 if odd else 0)) for k in range(TERMS)]
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * w + c
    # tail: geometric bound on the first omitted term
    first = abs(w) ** TERMS / math.factorial(2 * TERMS + (1 if odd else 0))
    ratio = abs(w) / ((2 * TERMS + 1) * (2 * TERMS + 2))
    if ratio >= 1 or first / (1 - ratio) > TAIL_LIMIT * max(1.0, abs(acc)):
        raise DivergenceBoundError(f"|w| = {abs(w):.3g} is too large for the {TERMS}-term series")
    return acc


def alpha(w):
    """alpha(t^2) = cosh t."""
    return _series(w, False)


def beta(w):
    """t * beta(t^2) = sinh t."""
    return _series(w, True)


def phi(pt, factor: str = "corrected") -> complex:
    """u alpha(w) + i v beta(w), doubled in ``corrected`` mode so that phi(theta) = 2 cosh."""
    if factor not in ("paper", "corrected"):
        raise ValueError(f"unknown factor mode {factor!r}")
    u, v, w = (float(x) for x in pt)
    val = complex(u * alpha(w), v * beta(w))
    return 2 * val if factor == "corrected" else val
