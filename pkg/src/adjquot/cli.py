"""The ``aq`` command line.

Every command prints JSON (or CSV where it makes sense) to stdout or to
``--out``.  Exit codes: 0 success, 1 a verification suite reported a
failure or the input is outside a map's domain, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .curves import FAMILIES, emit_curve
from .discres import disc_chain, discriminant, symbolic_discriminant
from .exactnum import GaussianRational, ParseError, format_complex, format_gaussian, parse_complex, parse_gaussian, parse_rational
from .pendulum import DivergenceBoundError, embed, phi, theta
from .poissonk import base_bracket, rank_at, tau, verify_tau_bracket
from .poly import MultiPoly, parse_coefficients
from .report import SUITES, UnknownSuiteError, dumps_report, run_suite
from .strata import classify_exact, classify_numeric, membership
from .torusq import TorusPoint, chi, kaehler_potential, region_membership

__all__ = ["main", "build_parser"]

QUOTIENT_CONVENTIONS = ("char-poly", "paper-display")
ORBIT_SUMS = ("distinct", "full")


class UsageError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, GaussianRational):
        return format_gaussian(x)
    if isinstance(x, Fraction):
        return format_gaussian(GaussianRational(x))
    if isinstance(x, complex):
        return format_complex(x)
    if isinstance(x, MultiPoly):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _dumps(obj) -> str:
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2) + "\n"


def _number(text: str):
    """Exact Gaussian rational when possible, otherwise a complex float."""
    text = text.strip()
    try:
        return parse_gaussian(text)
    except ParseError:
        return parse_complex(text)


def _numbers(text: str) -> list:
    return [_number(t) for t in text.split(",") if t.strip()]


def _quotient_convention(args) -> str:
    if args.convention in ORBIT_SUMS:
        raise UsageError(f"--convention {args.convention} is an orbit-sum choice; this command needs "
                         f"one of {QUOTIENT_CONVENTIONS}")
    return args.convention


def _orbit_sum(args) -> str:
    # verify accepts the orbit-sum choice through either flag
    if args.convention in ORBIT_SUMS:
        return args.convention
    return args.orbit_sum


# --- commands -------------------------------------------------------------------------


def cmd_classify(args):
    p = parse_coefficients(args.coeffs)
    n = p.degree
    if args.n is not None and args.n != n:
        raise UsageError(f"--n {args.n} does not match {n} coefficients")
    cs = p.normalized_coefficients()
    if args.numeric:
        part = classify_numeric([complex(c) for c in cs], tol=args.tol)
    else:
        part = classify_exact(p)
    mode = "numeric" if args.numeric else "exact"
    targets = [f"D{k}" for k in range(2, n + 1)]
    if n == 4:
        targets.append("(2,2)")
    mems = [membership(cs, t, mode=mode, tol=args.tol).as_dict() for t in targets]
    return {"degree": n, "partition": str(part), "mode": mode, "memberships": mems}


def cmd_disc(args):
    if args.symbolic:
        if args.n is None:
            raise UsageError("--symbolic needs --n")
        return {"degree": args.n, "discriminant": str(symbolic_discriminant(args.n, monic=args.monic))}
    if args.coeffs is None:
        raise UsageError("give --coeffs or --symbolic --n N")
    p = parse_coefficients(args.coeffs)
    out = {"degree": p.degree, "discriminant": discriminant(p)}
    if args.chain is not None:
        chain = disc_chain(p.degree, args.chain)
        out.update({"level": args.chain + 1, "equations": chain.labels,
                    "values": chain.evaluate(p.normalized_coefficients())})
    return out


def _torus_point(text: str, n: int | None) -> TorusPoint:
    coords = _numbers(text)
    if n is not None and len(coords) == n:
        return TorusPoint(tuple(coords), True)
    if n is not None and len(coords) != n - 1:
        raise UsageError(f"expected {n - 1} (or {n}) torus coordinates")
    return TorusPoint.from_sl(coords)


def cmd_chi(args):
    conv = _quotient_convention(args)
    pt = _torus_point(args.torus, args.n)
    return {"n": pt.n, "convention": conv, "torus": list(pt.coords), "chi": chi(pt, conv)}


def cmd_region(args):
    conv = _quotient_convention(args)
    point = _numbers(args.point)
    verdict = region_membership(point, args.n, args.tol, conv)
    return {"n": args.n, "convention": conv, "point": point, "region": verdict}


def cmd_potential(args):
    coords = _numbers(args.torus)
    return {"torus": coords, "scale": args.scale, "potential": kaehler_potential(coords, args.scale)}


_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def cmd_bracket(args):
    pairs = [(int(a), int(b)) for a, b in _PAIR.findall(args.pair)]
    if len(pairs) != 2:
        raise UsageError('--pair must look like "(j1,k1),(j2,k2)"')
    v = verify_tau_bracket(args.n, pairs[0], pairs[1])
    out = {"n": args.n, "pair": pairs, "verdict": v.as_dict()}
    if args.at:
        pt = _numbers(args.at)
        br = base_bracket(tau(args.n, *pairs[0]), tau(args.n, *pairs[1]))
        out["at"] = pt
        out["value"] = br.evaluate(pt)
    return out


def cmd_rank(args):
    pt = _numbers(args.point)
    return {"n": args.n, "point": pt, "tol": args.tol, "rank": rank_at(args.n, pt, args.tol)}


def cmd_verify(args):
    orbit = _orbit_sum(args)
    conv = "char-poly" if args.convention in ORBIT_SUMS else args.convention
    return run_suite(args.suite, convention=conv, orbit_sum=orbit, seed=args.seed)


def cmd_curve(args):
    params = {}
    for item in args.param or []:
        if "=" not in item:
            raise UsageError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        params[k] = v if k == "convention" else float(v)
    if args.family in ("deltoid", "alcove-boundary"):
        params.setdefault("convention", _quotient_convention(args))
    return emit_curve(args.family, params, args.count)


def cmd_pendulum(args):
    s = parse_rational(args.phi_rational)
    t = parse_rational(args.t)
    if args.map == "embed":
        e = embed(t, s=s)
        return {"map": "embed", "t": t, "s": s, "q": list(e.q), "p": list(e.p)}
    pt = theta(t, s=s)
    if args.map == "theta":
        return {"map": "theta", "t": t, "s": s, "uvw": list(pt)}
    return {"map": "phi", "t": t, "s": s, "factor": args.factor, "value": phi(pt, args.factor)}


# --- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--convention", default="char-poly", choices=QUOTIENT_CONVENTIONS + ORBIT_SUMS,
                        help="quotient sign convention, or for verify an orbit-sum convention")
    common.add_argument("--orbit-sum", default="both", choices=ORBIT_SUMS + ("both",))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", "--report", dest="out", help="write output to FILE instead of stdout")
    common.add_argument("--format", default="json", choices=("json", "csv"))

    ap = argparse.ArgumentParser(prog="aq", description="Adjoint quotient toolkit")
    ap.add_argument("--version", action="version", version=f"aq {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="multiplicity partition and memberships")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("disc", parents=[common], help="discriminants and derivative chains")
    p.add_argument("--coeffs")
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--monic", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--chain", type=int, help="K: print the K equations defining D_(K+1)")
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("chi", parents=[common], help="quotient coordinates of a torus point")
    p.add_argument("--n", type=int)
    p.add_argument("--torus", required=True, help="z1,...,z_(n-1); the last coordinate is inferred")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("region", parents=[common], help="membership in the real region R_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("potential", parents=[common], help="Kaehler potential on the torus")
    p.add_argument("--torus", required=True)
    p.add_argument("--scale", type=float, default=1.0)
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("bracket", parents=[common], help="bracket of two power sums tau_(j,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pair", required=True)
    p.add_argument("--at")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("rank", parents=[common], help="rank of the Poisson structure at a point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES + ('all',))}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curve", parents=[common], help="sample a curve family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--param", action="append", help="key=value, repeatable")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("pendulum", parents=[common], help="pendulum and canoe maps")
    p.add_argument("--map", required=True, choices=("embed", "theta", "phi"))
    p.add_argument("--t", required=True)
    p.add_argument("--phi-rational", required=True, help="s = tan(phi/2) as a rational")
    p.add_argument("--factor", default="corrected", choices=("corrected", "paper"))
    p.set_defaults(func=cmd_pendulum)
    return ap


def _render(result, fmt: str) -> str:
    if hasattr(result, "to_csv"):
        return result.to_csv() if fmt == "csv" else result.to_json() + "\n"
    if fmt == "csv":
        raise UsageError("csv output is only available for curve")
    if isinstance(result, dict) and result.get("schema") == 1:
        return dumps_report(result)
    return _dumps(result)


def _glue_negative_values(argv: list) -> list:
    # argparse reads "-6,11,-6" as an option; attach such values to their flag
    out = []
    for a in argv:
        if (out and out[-1].startswith("--") and "=" not in out[-1]
                and re.match(r"-[\d.(]", a)):
            out[-1] = f"{out[-1]}={a}"
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        result = args.func(args)
        text = _render(result, args.format)
    except (UsageError, ParseError, UnknownSuiteError) as err:
        print(f"aq: error: {err}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, DivergenceBoundError) as err:
        print(f"aq: {err}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and result["summary"]["fail"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
