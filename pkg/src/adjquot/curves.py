"""Sampled curves: foliation images in the SU(2) quotient, the deltoid,
the canoe, the bottom curve D_n and the SU(3) alcove boundary.

Every sample carries its own membership check.  CSV columns per family:

    ellipse          phi, x, y
    hyperbola        t, x, y
    deltoid          s, u, v
    canoe            t, s, u, v, w
    dn-curve         w_re, w_im, then a<k>_re, a<k>_im for k = 1..n
    alcove-boundary  edge, a, u, v
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import format_rational
from .pendulum import canoe_membership, theta
from .strata import dn_curve, membership
from .torusq import alcove_sample, deltoid_coefficients, hypersurface_sample, region_membership, slice_discriminant

__all__ = ["CurveSample", "FAMILIES", "emit_curve", "orthogonality_defects"]

FAMILIES = ("ellipse", "hyperbola", "deltoid", "canoe", "dn-curve", "alcove-boundary")

COLUMNS = {
    "ellipse": ["phi", "x", "y"],
    "hyperbola": ["t", "x", "y"],
    "deltoid": ["s", "u", "v"],
    "canoe": ["t", "s", "u", "v", "w"],
    "alcove-boundary": ["edge", "a", "u", "v"],
}


@dataclass
class CurveSample:
    family: str
    params: dict
    columns: list
    points: list
    degenerate: str | None = None
    valid: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"family": self.family, "params": self.params, "columns": self.columns,
                "degenerate": self.degenerate, "all_valid": all(self.valid),
                "points": [[_jsonable(x) for x in p] for p in self.points]}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for p in self.points:
            w.writerow([_jsonable(x) for x in p])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, float):
        return float(repr(x))
    return x


def _cosh_point(t: float, phi: float) -> complex:
    return 2 * cmath.cosh(complex(t, phi))


def _ellipse(t: float, count: int) -> CurveSample:
    pts, valid = [], []
    a, b = 2 * math.cosh(t), 2 * math.sinh(t)
    for k in range(count):
        ph = 2 * math.pi * k / count
        w = _cosh_point(t, ph)
        pts.append((ph, w.real, w.imag))
        if t == 0:
            valid.append(abs(w.imag) < 1e-12 and abs(w.real) <= 2 + 1e-12)
        else:
            valid.append(abs((w.real / a) ** 2 + (w.imag / b) ** 2 - 1) < 1e-9)
    degenerate = "double segment [-2, 2]" if t == 0 else None
    return CurveSample("ellipse", {"t": t}, COLUMNS["ellipse"], pts, degenerate, valid)


def _hyperbola(ph: float, count: int, t_max: float) -> CurveSample:
    pts, valid = [], []
    c, s = math.cos(ph), math.sin(ph)
    degenerate = None
    if abs(s) < 1e-15:
        degenerate = f"double ray from {2 if c > 0 else -2}"
    elif abs(c) < 1e-15:
        degenerate = "imaginary axis"
    for k in range(count):
        t = -t_max + 2 * t_max * k / (count - 1)
        w = _cosh_point(t, ph)
        pts.append((t, w.real, w.imag))
        if degenerate and degenerate.startswith("double ray"):
            valid.append(abs(w.imag) < 1e-12 and w.real * math.copysign(1, c) >= 2 - 1e-12)
        elif degenerate:
            valid.append(abs(w.real) < 1e-12)
        else:
            valid.append(abs((w.real / (2 * c)) ** 2 - (w.imag / (2 * s)) ** 2 - 1) < 1e-9)
    return CurveSample("hyperbola", {"phi": ph, "t_max": t_max}, COLUMNS["hyperbola"], pts, degenerate, valid)


def _rational_params(count: int):
    """Distinct rationals s = tan(alpha/2) spread over the circle."""
    out = []
    for k in range(count):
        a = -math.pi + 2 * math.pi * (k + 0.5) / count
        out.append(Fraction(math.tan(a / 2)).limit_denominator(64))
    return out


def _deltoid(count: int, convention: str) -> CurveSample:
    pts, valid = [], []
    for s in _rational_params(count):
        u, v = hypersurface_sample(s)
        pts.append((s, u, v))
        valid.append(slice_discriminant(3, deltoid_coefficients(u, v, convention), convention) == 0)
    return CurveSample("deltoid", {"convention": convention}, COLUMNS["deltoid"], pts, None, valid)


def _canoe(count: int, t_max: int) -> CurveSample:
    pts, valid = [], []
    ss = _rational_params(count)
    for k, s in enumerate(ss):
        t = Fraction(-t_max) + Fraction(2 * t_max * k, max(count - 1, 1))
        u, v, w = theta(t, s=s)
        pts.append((t, s, u, v, w))
        valid.append(canoe_membership((u, v, w)) != "not-member")
    return CurveSample("canoe", {"t_max": t_max}, COLUMNS["canoe"], pts, None, valid)


def _dn(n: int, count: int) -> CurveSample:
    pts, valid = [], []
    cols = ["w_re", "w_im"] + [f"a{k}_{p}" for k in range(1, n + 1) for p in ("re", "im")]
    for k in range(count):
        w = Fraction(2 * k - count + 1, 2)
        coeffs = dn_curve(n, w)
        row = [w, Fraction(0)]
        for c in coeffs:
            row += [c.re, c.im]
        pts.append(tuple(row))
        valid.append(membership(coeffs, f"D{n}").verdict == "member")
    return CurveSample("dn-curve", {"n": n}, cols, pts, None, valid)


def _alcove_boundary(count: int, convention: str) -> CurveSample:
    pts, valid = [], []
    per = max(count // 3, 1)
    lim = 2 * math.pi / 3
    for k in range(count):
        edge = k // per if k // per < 3 else 2
        a = lim * (k - edge * per) / per
        if edge == 0:
            th = (a, a, -2 * a)
        elif edge == 1:
            th = (2 * a, -a, -a)
        else:  # theta_1 - theta_3 = 2 pi
            th = (2 * math.pi / 3 + a, 2 * math.pi / 3 - 2 * a, -4 * math.pi / 3 + a)
            th = tuple(sorted(th, reverse=True))
        coeffs = alcove_sample(3, th, convention)
        s1 = coeffs[0] if convention == "paper-display" else -coeffs[0]
        pts.append((edge, a, s1.real, s1.imag))
        valid.append(region_membership(coeffs, 3, 1e-9, convention) == "boundary")
    return CurveSample("alcove-boundary", {"convention": convention}, COLUMNS["alcove-boundary"],
                       pts, None, valid)


def emit_curve(family: str, params: dict | None = None, count: int = 100) -> CurveSample:
    """Sample ``count`` points of a family; see the module docstring for columns."""
    params = dict(params or {})
    if count < 2:
        raise ValueError("count must be at least 2")
    if family == "ellipse":
        return _ellipse(float(params.get("t", 1.0)), count)
    if family == "hyperbola":
        return _hyperbola(float(params.get("phi", math.pi / 4)), count, float(params.get("t_max", 2.0)))
    if family == "deltoid":
        return _deltoid(count, params.get("convention", "char-poly"))
    if family == "canoe":
        return _canoe(count, int(params.get("t_max", 3)))
    if family == "dn-curve":
        return _dn(int(params.get("n", 3)), count)
    if family == "alcove-boundary":
        return _alcove_boundary(count, params.get("convention", "char-poly"))
    raise ValueError(f"unknown curve family {family!r}; expected one of {FAMILIES}")


def orthogonality_defects(points, h: float = 1e-5) -> list[float]:
    """|cos angle| between the ellipse and hyperbola through each (t, phi).

    Tangents come from central differences of 2 cosh(t + i phi); the
    focal points (t = 0, phi in {0, pi}) must be excluded by the caller.
    """
    out = []
    for t, ph in points:
        e = (_cosh_point(t, ph + h) - _cosh_point(t, ph - h)) / (2 * h)
        hy = (_cosh_point(t + h, ph) - _cosh_point(t - h, ph)) / (2 * h)
        dot = e.real * hy.real + e.imag * hy.imag
        out.append(abs(dot) / (abs(e) * abs(hy)))
    return out
