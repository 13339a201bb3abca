"""Verification suites and their JSON reports.

Each check is a dict with ``id``, ``status`` (``pass``, ``fail`` or
``erratum``) and ``locus`` (which printed statement it concerns).  Erratum
entries carry the printed form and the independently derived form side by
side.  Reports are deterministic for a fixed seed: checks are sorted by id
and floats are written with fixed precision.
"""

from __future__ import annotations

import cmath
import itertools
import json
import math
import random
from fractions import Fraction

from . import __version__
from .curves import emit_curve, orthogonality_defects
from .discres import (
    PRINTED_D4,
    derivative_coefficients,
    disc_chain,
    discriminant,
    evaluate_discriminant,
    printed_d2,
    printed_d3,
    root_difference_discriminant,
    symbolic_discriminant,
)
from .exactnum import ONE, GaussianRational, as_gr
from .pendulum import (
    alpha,
    canoe_membership,
    circle_invariants,
    embed,
    momentum,
    phi,
    rotate_half_turn,
    theta,
)
from .poissonk import (
    TorusFunction,
    base_bracket,
    dirac_bracket,
    elementary_generators,
    exotic_plane_table,
    jacobi_check,
    power_sum_generators,
    rank_at,
    rewrite_in_generators,
    sigma_orbit,
    su2_chart,
    su2_chart_table,
    su3_generators,
    su3_relation_harness,
    su3_relations,
    tau,
    verify_tau_bracket,
)
from .poly import MultiPoly, UniPoly
from .strata import (
    classify_exact,
    classify_numeric,
    d22_equations,
    d4_in_d22_equation,
    membership,
    partition_leq,
    partitions,
    sample_stratum,
)
from .torusq import (
    TorusPoint,
    alcove_sample,
    bottom_stratum_points,
    central_point_characterization,
    chi,
    deltoid_coefficients,
    hypersurface_sample,
    region_membership,
    slice_discriminant,
    su4_printed_bottom_verdict,
)

__all__ = ["SUITES", "UnknownSuiteError", "run_suite", "dumps_report"]

SUITES = ("discriminant", "strata", "tau", "su2", "su3", "jacobi", "pendulum")


class UnknownSuiteError(ValueError):
    pass


def _check(cid, status, locus, **extra) -> dict:
    out = {"id": cid, "status": status, "locus": locus}
    out.update({k: v for k, v in extra.items() if v is not None})
    return out


def _ok(cond) -> str:
    return "pass" if cond else "fail"


def _fmt(x: float) -> str:
    return f"{x:.3e}"


# --- discriminant -------------------------------------------------------------------


def _random_roots(rng: random.Random, n: int):
    return [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(n)]


def suite_discriminant(seed: int, **_) -> list[dict]:
    rng = random.Random(seed)
    checks = []
    bad = []
    for k in range(200):
        n = 2 + k % 4
        roots = _random_roots(rng, n)
        p = UniPoly.from_roots(roots)
        if discriminant(p) != root_difference_discriminant(roots):
            bad.append([str(r) for r in roots])
    checks.append(_check("discriminant.oracle-equivalence", _ok(not bad),
                         "discriminant as a resultant of P and P'",
                         samples=200, mismatches=len(bad), witness=bad[0] if bad else None))
    anchor = discriminant(UniPoly.from_descending([1, -6, 11, -6]))
    checks.append(_check("discriminant.anchor-cubic", _ok(anchor == 4),
                         "discriminant of z^3 - 6z^2 + 11z - 6", value=str(anchor)))
    checks.append(_check("discriminant.d2-display", _ok(symbolic_discriminant(2) == printed_d2()),
                         "quadratic discriminant display"))
    checks.append(_check("discriminant.d3-display", _ok(symbolic_discriminant(3) == printed_d3()),
                         "cubic discriminant display"))
    d4_ok = symbolic_discriminant(4) == PRINTED_D4
    checks.append(_check("discriminant.d4-display", "pass" if d4_ok else "erratum",
                         "quartic discriminant display",
                         printed=None if d4_ok else str(PRINTED_D4),
                         oracle=None if d4_ok else str(symbolic_discriminant(4))))
    # leading coefficient of the last chain equation: printed n!/(n-k)!
    n, k = 3, 2
    gens = ("a1", "a2", "a3")
    syms = [MultiPoly.const(1, gens)] + [MultiPoly.var(g, gens) for g in gens]
    derived = derivative_coefficients(syms, k - 1)
    printed = [MultiPoly.const(math.factorial(n) // math.factorial(n - k), gens)] + derived[1:]
    cube = {"a1": as_gr(-3), "a2": as_gr(3), "a3": as_gr(-1)}  # (z - 1)^3
    vd = evaluate_discriminant(n - k + 1, [c.evaluate(cube) for c in derived])
    vp = evaluate_discriminant(n - k + 1, [c.evaluate(cube) for c in printed])
    checks.append(_check(
        "discriminant.chain-leading-coefficient", "erratum" if vp != 0 and vd == 0 else "fail",
        "last equation of the derivative-discriminant chain",
        printed="D_{n-k+1}(n!/(n-k)!, (n-1)!/(n-k)! a1, ...)",
        oracle="D_{n-k+1}(n!/(n-k+1)!, (n-1)!/(n-k)! a1, ...), the coefficients of P^(k-1)",
        witness="(z-1)^3, n=3, k=2", residual=f"printed {vp}, derived {vd}"))
    # the chain equations cut out more than D_{k+1}
    p = [Fraction(-4, 3), 0, 0, Fraction(1, 3)]
    chain_vals = disc_chain(4, 2).evaluate([as_gr(x) for x in p])
    part = classify_exact(p)
    superset = all(v == 0 for v in chain_vals) and not partition_leq(part, (3, 1))
    checks.append(_check(
        "discriminant.chain-zero-set", "erratum" if superset else "pass",
        "derivative-discriminant chain as equations for D_{k+1}",
        printed="D_3 in A^4 is the common zero set of D_4(P) and D_3(P')",
        oracle="common zero set also contains polynomials whose derivative has the repeated root",
        witness="z^4 - 4/3 z^3 + 1/3", residual=f"partition {part}, chain values 0, 0"))
    # generic member of D_k minus D_(k+1) has n - k + 1 distinct roots
    good = True
    for n in range(2, 7):
        for k in range(1, n + 1):
            nu = (k,) + (1,) * (n - k)
            good &= len(classify_exact(sample_stratum(nu, seed=seed + n + k))) == n - k + 1
    checks.append(_check("discriminant.distinct-root-count", _ok(good),
                         "number of distinct roots on D_k minus D_(k+1)"))
    return checks


# --- strata and slices -------------------------------------------------------------------


def suite_strata(seed: int, convention: str = "char-poly", **_) -> list[dict]:
    checks = []
    rng = random.Random(seed)
    good = True
    for n in range(1, 7):
        for nu in partitions(n):
            p = sample_stratum(nu, seed=rng.randrange(10**6))
            good &= classify_exact(p) == nu
            nums = [complex(c) for c in p.normalized_coefficients()]
            good &= classify_numeric(nums, tol=1e-8) == nu if n <= 4 else True
    checks.append(_check("strata.round-trip", _ok(good), "multiplicity strata of A^n_coef"))

    good = True
    for n in range(2, 6):
        for a, b in itertools.product(partitions(n), repeat=2):
            p = sample_stratum(a, seed=rng.randrange(10**6))
            inside = membership(p.normalized_coefficients(), b).verdict != "not-member"
            good &= inside == partition_leq(a, b)
    incomparable = not partition_leq((2, 2), (3, 1)) and not partition_leq((3, 1), (2, 2))
    checks.append(_check("strata.closure-order", _ok(good and incomparable),
                         "closures as unions of lower strata"))

    good = True
    nest = True
    for _ in range(30):
        n = rng.randint(2, 5)
        nu = rng.choice(partitions(n))
        cs = sample_stratum(nu, seed=rng.randrange(10**6)).normalized_coefficients()
        for k in range(1, n):
            if membership(cs, f"D{k + 1}").verdict != "not-member":
                nest &= membership(cs, f"D{k}").verdict != "not-member"
    checks.append(_check("strata.dk-nesting", _ok(nest), "descending chain of discriminant varieties"))

    oracle = d22_equations("oracle")
    printed = d22_equations("printed")
    ok = True
    first_bad = None
    for _ in range(50):
        s = GaussianRational(rng.randint(-9, 9), rng.randint(-9, 9))
        q = GaussianRational(rng.randint(-9, 9), rng.randint(-9, 9))
        cs = (UniPoly([q, -s, ONE]) ** 2).normalized_coefficients()
        pt = {f"a{k}": c for k, c in enumerate(cs, 1)}
        ok &= all(e.evaluate(pt) == 0 for e in oracle)
        if first_bad is None and any(e.evaluate(pt) != 0 for e in printed):
            first_bad = (s, q, [str(e.evaluate(pt)) for e in printed])
    checks.append(_check("strata.d22-derived-equations", _ok(ok),
                         "equations for D_(2,2) from expanding (z^2 - s z + p)^2",
                         oracle="(a1^2-4a2)a1 + 8a3 = 0, (a1^2-4a2)^2 - 64a4 = 0"))
    pt = {"a1": as_gr(-6), "a2": as_gr(13), "a3": as_gr(-12), "a4": as_gr(4)}
    checks.append(_check("strata.d22-printed-equations", "erratum" if first_bad else "pass",
                         "printed equations for D_(2,2)",
                         printed="(a1^2-4a2)a1 + 4a3 = 0, (a1^2-4a2)^2 - 16a4 = 0",
                         oracle="(a1^2-4a2)a1 + 8a3 = 0, (a1^2-4a2)^2 - 64a4 = 0",
                         witness="(z^2 - 3z + 2)^2",
                         residual=[str(e.evaluate(pt)) for e in printed]))

    eq2 = d4_in_d22_equation()
    ok = True
    for _ in range(20):
        w = GaussianRational(rng.randint(-9, 9), rng.randint(-9, 9))
        cs = UniPoly.from_roots([w] * 4).normalized_coefficients()
        ok &= eq2.evaluate({f"a{k}": c for k, c in enumerate(cs, 1)}) == 0
        u = w + rng.randint(1, 5)
        cs = UniPoly.from_roots([w, w, u, u]).normalized_coefficients()
        ok &= eq2.evaluate({f"a{k}": c for k, c in enumerate(cs, 1)}) != 0
    checks.append(_check("strata.d4-inside-d22", _ok(ok), "3a1^2 - 8a2 = 0 cutting D_4 out of D_(2,2)"))

    # partials of D_3(1, a1, a2, a3) vanish along D_3
    D = symbolic_discriminant(3, monic=True)
    w = MultiPoly.var("w", ("w",))
    curve = {"a1": -3 * w, "a2": 3 * w * w, "a3": -(w**3)}
    ok = all(D.diff(v).subs(curve).is_zero() for v in ("a1", "a2", "a3"))
    checks.append(_check("strata.d2-singular-along-d3", _ok(ok),
                         "partial derivatives of the cubic discriminant along D_3"))

    two = {str(p.coords[0]) for p in bottom_stratum_points(2, convention)}
    checks.append(_check("strata.su2-bottom", _ok(two == {"2", "-2"}), "bottom stratum of SU(2)",
                         value=sorted(two)))
    cusps = bottom_stratum_points(3, "paper-display")
    eta = complex(-0.5, math.sqrt(3) / 2)
    expected = [(3, 3), (3 * eta, 3 * eta**2), (3 * eta**2, 3 * eta)]
    ok = all(max(abs(complex(a) - b) for a, b in zip(p.coords, e)) < 1e-12 for p, e in zip(cusps, expected))
    char = central_point_characterization("paper-display")
    checks.append(_check("strata.su3-cusps", _ok(ok and char["on_bottom"]),
                         "three cusp points of the SU(3) discriminant curve (paper-display coordinates)"))
    # printed companion equation for the cusps uses a2 = 1
    a1, a2 = as_gr(3), as_gr(3)
    printed_val = evaluate_discriminant(2, [as_gr(3), 2 * a1, ONE])
    derived_val = evaluate_discriminant(2, [as_gr(3), 2 * a1, a2])
    checks.append(_check("strata.su3-bottom-equation",
                         "erratum" if printed_val != 0 and derived_val == 0 else "fail",
                         "second equation for the SU(3) bottom stratum",
                         printed="D_2(3, 2a1, 1) = 0", oracle="D_2(3, 2a1, a2) = 0",
                         witness="(a1, a2) = (3, 3)",
                         residual=f"printed {printed_val}, derived {derived_val}"))
    v = su4_printed_bottom_verdict(convention)
    checks.append(_check("strata.su4-bottom", v["verdict"], "bottom stratum of SU(4)",
                         printed=v["printed"], oracle=v["oracle"],
                         residual=f"constant coefficient {v['printed_constant_on_d4']} on D_4, slice needs {v['slice_constant']}",
                         detail="printed points satisfy the printed D_(2,2) quartic "
                                f"(residual {v['printed_quartic_residual']}) but not the derived one "
                                f"(residual {v['derived_quartic_residual']})"))

    bad = 0
    for k in range(100):
        s = Fraction(k - 50, 7)
        u, vv = hypersurface_sample(s)
        bad += slice_discriminant(3, deltoid_coefficients(u, vv, convention), convention) != 0
    checks.append(_check("strata.deltoid-on-discriminant", _ok(bad == 0),
                         "hypocycloid on the SU(3) discriminant curve", samples=100))
    ok = True
    done = 0
    while done < 50:
        x1, x2 = rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)
        th = sorted([x1, x2, -x1 - x2], reverse=True)
        if min(th[0] - th[1], th[1] - th[2]) < 1e-2 or th[0] - th[2] > 2 * math.pi - 1e-2:
            continue
        done += 1
        ok &= region_membership(alcove_sample(3, th, convention), 3, 1e-9, convention) == "interior"
    for _ in range(20):
        a = rng.uniform(-2.0, 2.0)
        th = sorted([a, a, -2 * a], reverse=True)
        ok &= region_membership(alcove_sample(3, th, convention), 3, 1e-9, convention) == "boundary"
    checks.append(_check("strata.alcove-region", _ok(ok), "alcove image as the region R_3",
                         interior=50, boundary=20))

    ok = True
    for _ in range(20):
        z = GaussianRational(Fraction(rng.randint(1, 9), rng.randint(1, 5)), rng.randint(-4, 4))
        pt = TorusPoint((z, z, (z * z).inverse()), True)
        ok &= membership(chi(pt, convention) + [ONE if convention == "paper-display" else -ONE],
                         "SU:D2", convention=convention).verdict != "not-member"
    checks.append(_check("strata.su2-into-su3", _ok(ok),
                         "diagonal SU(2) curve landing on the SU(3) discriminant"))
    return checks


# --- tau brackets and rank ------------------------------------------------------------------


def suite_tau(seed: int, **_) -> list[dict]:
    checks = []
    for n in (2, 3):
        idx = power_sum_generators(n)
        failures = [v for p in idx for q in idx if (v := verify_tau_bracket(n, p, q)).status != "identity"]
        checks.append(_check(f"tau.bracket-formula-n{n}", _ok(not failures),
                             "brackets of bisymmetric power sums", pairs=len(idx) ** 2,
                             witness=failures[0].as_dict() if failures else None))
    ok = True
    for n in (2, 3):
        idx = power_sum_generators(n)
        half_i = GaussianRational(0, Fraction(1, 2))
        for (a, b), (c, d) in itertools.product(idx, repeat=2):
            lhs = dirac_bracket(tau(n, a, b), tau(n, c, d)) * half_i
            ta, tb = tau(n, a, b).restrict_sl(), tau(n, c, d).restrict_sl()
            rhs = (tau(n, a + c, b + d).restrict_sl() - ta * tb * Fraction(1, n)) * (a * d - b * c)
            ok &= (lhs - rhs).is_zero()
    checks.append(_check("tau.determinant-one-formula", _ok(ok),
                         "bracket induced on the determinant-1 torus"))
    pts = [(2, 3, Fraction(1, 6)), (2, 2, Fraction(1, 4)), (1, 1, 1)]
    ranks = [rank_at(3, p) for p in pts]
    checks.append(_check("tau.rank-claims", _ok(ranks == [4, 2, 0]), "rank on the SU(3) strata",
                         value=ranks))
    rng = random.Random(seed)
    ok = True
    for _ in range(3):
        z1 = GaussianRational(rng.randint(1, 5), rng.randint(-3, 3))
        z2 = GaussianRational(rng.randint(-5, -1), rng.randint(1, 3))
        pt = (z1, z2, (z1 * z2).inverse())
        r = rank_at(3, pt)
        ok &= all(rank_at(3, tuple(pt[i] for i in perm)) == r for perm in itertools.permutations(range(3)))
    checks.append(_check("tau.rank-permutation-invariance", _ok(ok), "rank under the Weyl group"))
    r2 = rewrite_in_generators(tau(2, 2, 0), [tau(2, 1, 0)])
    r3 = rewrite_in_generators(tau(3, 3, 0), [tau(3, 1, 0), tau(3, 2, 0)])
    ok = str(r2) == "tau(1,0)^2 - 2" and str(r3) == "-1/2*tau(1,0)^3 + 3/2*tau(1,0)*tau(2,0) + 3"
    checks.append(_check("tau.newton-rewrite", _ok(ok), "tau_(n,0) in terms of lower power sums",
                         value=[str(r2), str(r3)]))
    ok = all(len(elementary_generators(n)) == n * (n + 3) // 2 - 2 and
             len(power_sum_generators(n)) == n * (n + 3) // 2 for n in range(2, 7))
    checks.append(_check("tau.generator-counts", _ok(ok), "numbers of elementary and power-sum generators"))
    s = sigma_orbit(2, 1, 1).restrict_sl()
    z, zb = TorusFunction.z(0, 2), TorusFunction.zb(0, 2)
    target = (z * zb**-1 + zb * z**-1).restrict_sl()
    checks.append(_check("tau.su2-sigma", _ok((s - target).is_zero()),
                         "sigma_(1,1) for SU(2) as z/zb + zb/z"))
    return checks


# --- SU(2) chart -----------------------------------------------------------------------------------


def suite_su2(seed: int, **_) -> list[dict]:
    c = su2_chart()
    checks = [_check("su2.relation", _ok(c.relation_residual().is_zero()),
                     "relation Y^2 = (X^2 + Y^2 + 4(tau - 1)) tau")]
    for (a, b), r in c.bracket_residuals().items():
        checks.append(_check(f"su2.bracket-{a}-{b}", _ok(r.is_zero()), f"bracket {{{a},{b}}} of the SU(2) chart"))
    worst = 0.0
    for k in range(100):
        ang = 2 * math.pi * (k + 0.5) / 100
        rad = 0.3 + 2.5 * ((k * 37) % 100) / 100
        zz = rad * complex(math.cos(ang), math.sin(ang))
        X, Y, t = (f.evaluate([zz]).real for f in (c.X, c.Y, c.tau))
        worst = max(worst, abs(c.closed_form_tau(X, Y) - t))
    checks.append(_check("su2.closed-form-tau", _ok(worst < 1e-12), "tau solved from the relation",
                         residual=_fmt(worst)))
    zero = all(all(x == 0 for row in c.poisson_matrix(z) for x in row) for z in (1, -1))
    checks.append(_check("su2.vanishing-at-vertices", _ok(zero), "Poisson structure at the points +-2"))
    zz = GaussianRational(0, 2)
    vals = [str(f.evaluate([zz])) for f in (c.X, c.Y, c.tau)]
    xy = base_bracket(c.X, c.Y).evaluate([zz])
    checks.append(_check("su2.anchor-2i", _ok(vals == ["0", "3/2", "1"] and xy == Fraction(25, 4)),
                         "chart values at z = 2i", value=vals + [str(xy)]))
    n = 2
    s1 = (TorusFunction.z(0, n) + TorusFunction.z(1, n)).restrict_sl()
    sb1 = (TorusFunction.zb(0, n) + TorusFunction.zb(1, n)).restrict_sl()
    sg = sigma_orbit(2, 1, 1).restrict_sl()
    lhs = (s1 * s1 - 4) * (sb1 * sb1 - 4)
    rhs = (s1 * sb1 - sg * 2) ** 2
    checks.append(_check("su2.sigma-relation", _ok((lhs - rhs).is_zero()),
                         "defining relation among sigma_1, conj sigma_1, sigma for SU(2)"))
    ok = all(emit_curve("ellipse", {"t": t}, 40).valid and all(emit_curve("ellipse", {"t": t}, 40).valid)
             for t in (0.0, 0.5, 1.5))
    ok &= all(emit_curve("hyperbola", {"phi": p}, 40).valid for p in (0.0, 0.7, 2.0))
    ok &= emit_curve("ellipse", {"t": 0.0}, 10).degenerate is not None
    ok &= emit_curve("hyperbola", {"phi": 0.0}, 10).degenerate == "double ray from 2"
    rng = random.Random(seed)
    pts = [(rng.uniform(0.2, 2.0) * rng.choice((-1, 1)), rng.uniform(0.1, 3.0)) for _ in range(50)]
    defect = max(orthogonality_defects(pts))
    checks.append(_check("su2.foliation-images", _ok(ok and defect < 1e-8),
                         "ellipses and hyperbolas as images of the two foliations",
                         residual=_fmt(defect)))
    return checks


# --- SU(3) relations -----------------------------------------------------------------------


def suite_su3(seed: int, orbit_sum: str = "both", **_) -> list[dict]:
    checks = []
    conventions = ("distinct", "full") if orbit_sum == "both" else (orbit_sum,)
    reeval_ok = True
    for conv in conventions:
        funcs = su3_generators(conv)
        rels = {rid: (lhs, rhs) for rid, lhs, rhs in su3_relations()}
        for v in su3_relation_harness(conv, seed=seed):
            d = v.as_dict()
            if v.status == "identity":
                checks.append(_check(f"su3.{v.relation_id}.{conv}", "pass", "SU(3) relation among seven generators"))
                continue
            lhs, rhs = rels[v.relation_id]
            vals = {k: f.evaluate(v.witness) for k, f in funcs.items()}
            reeval_ok &= str(lhs.evaluate(vals) - rhs.evaluate(vals)) == v.residual
            extra = {k: d[k] for k in d if k not in ("id", "status", "convention")}
            checks.append(_check(f"su3.{v.relation_id}.{conv}", "erratum",
                                 "SU(3) relation among seven generators", orbit_sum=conv,
                                 printed=str(lhs - rhs) + " = 0", **extra))
    checks.append(_check("su3.witness-reevaluation", _ok(reeval_ok), "exact counterexample witnesses"))
    g = {k: MultiPoly.var(k, ("s1", "s2")) for k in ("s1", "s2")}
    D = evaluate_discriminant(3, [MultiPoly.const(1, ("s1", "s2")), -g["s1"], g["s2"],
                                  MultiPoly.const(-1, ("s1", "s2"))])
    s1, s2 = g["s1"], g["s2"]
    expected = s1**2 * s2**2 - 4 * s2**3 - 4 * s1**3 - 27 + 18 * s1 * s2
    checks.append(_check("su3.discriminant-expression", _ok(D == expected),
                         "D_3(1, -sigma_1, sigma_2, -1) from the cubic formula"))
    return checks


# --- Jacobi -------------------------------------------------------------------------------


def suite_jacobi(seed: int, **_) -> list[dict]:
    checks = []
    v = jacobi_check(exotic_plane_table())
    checks.append(_check("jacobi.exotic-plane", _ok(v.status == "identity"), "bracket table of the exotic plane"))
    v = jacobi_check(su2_chart_table())
    checks.append(_check("jacobi.su2-chart", _ok(v.status == "identity"), "bracket table of the SU(2) chart"))
    v = jacobi_check(exotic_plane_table(corrupt=True))
    checks.append(_check("jacobi.corrupted-table", _ok(v.status == "failure"),
                         "detection of a corrupted table", witness=v.failures[0] if v.failures else None))
    rng = random.Random(seed)

    def rand_fn(n):
        terms = {}
        for _ in range(3):
            e = tuple(rng.randint(-2, 2) for _ in range(2 * n))
            terms[e] = GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
        return TorusFunction(n, terms)

    ok = True
    for _ in range(5):
        f, g, h = rand_fn(2), rand_fn(2), rand_fn(2)
        J = (base_bracket(f, base_bracket(g, h)) + base_bracket(g, base_bracket(h, f))
             + base_bracket(h, base_bracket(f, g)))
        Jd = (dirac_bracket(f, dirac_bracket(g, h)) + dirac_bracket(g, dirac_bracket(h, f))
              + dirac_bracket(h, dirac_bracket(f, g)))
        ok &= J.is_zero() and Jd.is_zero()
    checks.append(_check("jacobi.torus-brackets", _ok(ok), "Jacobi identity on the torus"))
    return checks


# --- pendulum -------------------------------------------------------------------------------


def suite_pendulum(seed: int, **_) -> list[dict]:
    checks = []
    worst = 0.0
    for i in range(64):
        t = -3 + 6 * i / 63
        for j in range(64):
            ph = 2 * math.pi * j / 64
            target = 2 * cmath.cosh(complex(t, ph))
            pt = theta(t, ph)
            worst = max(worst, abs(phi(pt) - target))
    checks.append(_check("pendulum.flattening", _ok(worst < 1e-12),
                         "flattening map composed with the canoe map", residual=_fmt(worst)))
    undoubled = phi(theta(1, 0), "paper").real
    checks.append(_check("pendulum.flattening-factor",
                         "erratum" if abs(undoubled - 2 * math.cosh(1)) > 1e-12 else "pass",
                         "claimed agreement of the flattening map with 2 cosh",
                         printed="u alpha(w) + i v beta(w) composed with the canoe map equals 2 cosh",
                         oracle="the composite equals cosh; 2(u alpha(w) + i v beta(w)) gives 2 cosh",
                         witness="t = 1, phi = 0",
                         residual=f"{undoubled!r} vs {2 * math.cosh(1)!r}"))
    rng = random.Random(seed)
    ok_c = ok_e = ok_s = True
    for _ in range(200):
        s = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        t = Fraction(rng.randint(-30, 30), rng.randint(1, 10))
        u, v, w = theta(t, s=s)
        ok_c &= canoe_membership((u, v, w)) != "not-member"
        e = embed(t, s=s)
        ok_e &= (momentum(e) == 0 and sum(x * x for x in e.q) == 1
                 and sum(a * b for a, b in zip(e.q, e.p)) == 0)
        ok_e &= (u, v, w) == (e.q[2], e.p[2], sum(x * x for x in e.p))
        ok_s &= theta(-t, s=-s) == (u, v, w)
        ok_s &= circle_invariants(embed(-t, s=-s)) == circle_invariants(e)
        ok_s &= embed(-t, s=-s) == rotate_half_turn(e)
    checks.append(_check("pendulum.canoe-exact", _ok(ok_c), "canoe equations on rational samples", samples=200))
    checks.append(_check("pendulum.embedding-exact", _ok(ok_e), "embedding into the zero level set", samples=200))
    checks.append(_check("pendulum.inversion-symmetry", _ok(ok_s), "inversion z -> 1/z on the cylinder"))
    checks.append(_check("pendulum.alpha-anchor", _ok(abs(alpha(1) - math.cosh(1)) < 1e-15),
                         "alpha(1) = cosh 1"))
    sing = canoe_membership((1, 0, 0)) == "singular-point" and canoe_membership((-1, 0, 0)) == "singular-point"
    checks.append(_check("pendulum.singular-points", _ok(sing), "the two absolute equilibria"))
    return checks


_RUNNERS = {
    "discriminant": suite_discriminant,
    "strata": suite_strata,
    "tau": suite_tau,
    "su2": suite_su2,
    "su3": suite_su3,
    "jacobi": suite_jacobi,
    "pendulum": suite_pendulum,
}


def run_suite(name: str, convention: str = "char-poly", orbit_sum: str = "both", seed: int = 0) -> dict:
    """Run one suite (or ``all``) and return the report dict."""
    names = SUITES if name == "all" else (name,)
    for nm in names:
        if nm not in _RUNNERS:
            raise UnknownSuiteError(f"unknown suite {name!r}; expected one of {SUITES + ('all',)}")
    checks = []
    for nm in names:
        checks += _RUNNERS[nm](seed=seed, convention=convention, orbit_sum=orbit_sum)
    checks.sort(key=lambda c: c["id"])
    summary = {s: sum(c["status"] == s for c in checks) for s in ("pass", "fail", "erratum")}
    return {
        "schema": 1,
        "tool": "aq",
        "version": __version__,
        "suite": name,
        "seed": seed,
        "convention": convention,
        "orbit_sum": orbit_sum,
        "summary": summary,
        "checks": checks,
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"
