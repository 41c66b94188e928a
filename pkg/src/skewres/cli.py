"""Command-line interface: ``skewres COMMAND [options] ARGS``.

Every command prints one JSON object.  Exit codes: 0 success, 2 the
expression could not be parsed, 3 a mathematical precondition failed,
4 a checked identity did not hold.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .checks import run_suite
from .commutative import INF, residue_at
from .errors import ExpressionError, MathPreconditionError, SkewresError
from .field import GF25, FieldConfig, get_field
from .parsing import (
    format_quotient_coeff,
    format_series,
    format_skew,
    parse_fraction,
    parse_polynomial,
)
from .rational import frac_section
from .residues import ZERO, chvar_check, residue_sum, sres
from .skew import central_right_multiple, euclid, left_divide, right_divide
from .taylor import expand

EXIT_OK, EXIT_PARSE, EXIT_MATH, EXIT_CHECK = 0, 2, 3, 4


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def _common(parser):
    sup = argparse.SUPPRESS
    parser.add_argument("--config", default=sup, help="JSON field configuration")
    parser.add_argument("--seed", type=int, default=sup)
    parser.add_argument("--prec", type=int, default=sup)
    parser.add_argument("--json", action="store_true", default=sup,
                        help="accepted for compatibility; output is always JSON")


def build_parser():
    p = argparse.ArgumentParser(prog="skewres", description="Skew polynomials and skew residues over finite fields.")
    _common(p)
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, **kw):
        s = sub.add_parser(name, **kw)
        _common(s)
        return s

    cmd("field-info", help="describe the configured field tower")

    s = cmd("div", help="right or left Euclidean division")
    s.add_argument("--mode", choices=["right", "left"], default="right")
    s.add_argument("A")
    s.add_argument("B")

    s = cmd("gcd", help="gcd or lcm of two skew polynomials")
    s.add_argument("--kind", choices=["rgcd", "lgcd", "llcm", "rlcm"], default="rgcd")
    s.add_argument("f")
    s.add_argument("g")

    s = cmd("bound", help="central multiple f*g = N = g*f")
    s.add_argument("f")

    s = cmd("taylor", help="Taylor expansion at Y = z")
    s.add_argument("--point", required=True, type=int)
    s.add_argument("--method", choices=["canonical", "hensel"], default="canonical")
    s.add_argument("expr")

    s = cmd("sres", help="skew residue at z, 0 or inf")
    s.add_argument("--point", required=True)
    s.add_argument("--j", type=int, default=None)
    s.add_argument("--method", choices=["canonical", "hensel"], default=None)
    s.add_argument("expr")

    s = cmd("cres", help="classical residue of sec_j(f) dY")
    s.add_argument("--point", required=True)
    s.add_argument("--j", type=int, default=0)
    s.add_argument("expr")

    s = cmd("check-residue-formula", help="sum of partial residues over all points")
    s.add_argument("--j", type=int, default=0)
    s.add_argument("expr")

    s = cmd("chvar", help="change of variables X -> C X")
    s.add_argument("--C", dest="C", required=True)
    s.add_argument("--point", required=True, type=int)
    s.add_argument("--method", choices=["canonical", "simple-pole"], default="canonical")
    s.add_argument("expr")

    s = cmd("selftest", help="run the randomized invariant suite")
    s.add_argument("--trials", type=int, default=5)
    return p


def _field(args):
    path = getattr(args, "config", None)
    config = FieldConfig.load(path) if path else GF25
    return get_field(config)


def _point(text, F):
    if text == "inf":
        return INF
    try:
        z = int(text)
    except ValueError:
        raise MathPreconditionError(f"bad point {text!r}") from None
    return ZERO if z % F.p == 0 else z % F.p


def _default_method(F):
    return "canonical" if F.r % F.p else "hensel"


def run(args):
    F = _field(args)
    c = args.command
    if c == "field-info":
        cfg = F.config
        return {"p": cfg.p, "s": cfg.s, "r": cfg.r, "modulus": list(cfg.modulus),
                "order": F.order, "trace_one": F.format(F.trace_one()),
                "backend": kernels.BACKEND}, EXIT_OK
    if c == "div":
        A, B = parse_polynomial(args.A, F), parse_polynomial(args.B, F)
        Q, R = (right_divide if args.mode == "right" else left_divide)(A, B)
        return {"Q": format_skew(Q), "R": format_skew(R)}, EXIT_OK
    if c == "gcd":
        f, g = parse_polynomial(args.f, F), parse_polynomial(args.g, F)
        res = euclid(args.kind, f, g)
        if args.kind in ("rgcd", "lgcd"):
            d, u, v = res
            return {"result": format_skew(d), "u": format_skew(u), "v": format_skew(v)}, EXIT_OK
        return {"result": format_skew(res)}, EXIT_OK
    if c == "bound":
        f = parse_polynomial(args.f, F)
        g, N = central_right_multiple(f)
        return {"g": format_skew(g), "N": str(N)}, EXIT_OK
    if c == "taylor":
        f = parse_fraction(args.expr, F)
        z = args.point % F.p
        if z == 0:
            from .errors import ZeroPoint

            raise ZeroPoint("the expansion point must be a nonzero element of F")
        k = f.den.root_multiplicity(z)
        prec = max(getattr(args, "prec", 0), k + 2)
        series = expand(f, z, prec, args.method)
        coeffs = {str(e): [F.format(x) for x in cf] for e, cf in series.terms().items()}
        return {"point": str(z), "method": args.method, "valuation": series.valuation,
                "prec": prec, "series": format_series(series), "coefficients": coeffs}, EXIT_OK
    if c == "sres":
        f = parse_fraction(args.expr, F)
        z = _point(args.point, F)
        rec = sres(f, z, args.method or _default_method(F))
        out = {"point": args.point,
               "full": None if rec.full is None else format_quotient_coeff(F, rec.partial),
               "partial": [F.format(x) for x in rec.partial]}
        if args.j is not None:
            out["j"] = args.j
            out["value"] = F.format(rec.partial[args.j % F.r])
        return out, EXIT_OK
    if c == "cres":
        f = parse_fraction(args.expr, F)
        z = _point(args.point, F)
        pt = 0 if z == ZERO else z
        return {"point": args.point, "j": args.j,
                "residue": F.format(residue_at(frac_section(f, args.j), pt))}, EXIT_OK
    if c == "check-residue-formula":
        f = parse_fraction(args.expr, F)
        total, breakdown = residue_sum(f, args.j)
        out = {"sum": F.format(total), "breakdown": {str(k): F.format(v) for k, v in breakdown.items()}}
        return out, EXIT_OK if total == 0 else EXIT_CHECK
    if c == "chvar":
        f = parse_fraction(args.expr, F)
        Cf = parse_fraction(args.C, F)
        if not Cf.num.is_central() and args.method == "canonical":
            from .errors import NonCentralCoefficient

            raise NonCentralCoefficient("--C must be central for the canonical method")
        C = _coefficient_function(Cf, F)
        cmp = chvar_check(C, args.point % F.p, f, args.method)
        out = {"point": str(args.point % F.p),
               "lhs": [F.format(x) for x in cmp.lhs.partial],
               "rhs": [F.format(x) for x in cmp.rhs.partial],
               "equal": cmp.equal}
        return out, EXIT_OK if cmp.equal else EXIT_CHECK
    if c == "selftest":
        seed = getattr(args, "seed", 0)
        report = run_suite(F.config, seed, args.trials)
        failed = sum(total - ok for ok, total in report.values())
        passed = sum(ok for ok, _ in report.values())
        out = {"passed": passed, "failed": failed, "checks": report}
        return out, EXIT_OK if failed == 0 else EXIT_CHECK
    raise AssertionError(c)  # pragma: no cover


def _coefficient_function(Cf, F):
    """Read C (given as an expression in Y, without X) as a rational function of Y."""
    from .errors import NonCentralDenominator
    from .skew import section
    from .ypoly import YRational

    if any(k % F.r for k in Cf.num.terms()):
        raise NonCentralDenominator("C must be a function of Y only")
    return YRational(section(Cf.num, 0), Cf.den)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = run(args)
    except ExpressionError as exc:
        print(_dump({"error": type(exc).__name__, "detail": str(exc)}))
        return EXIT_PARSE
    except (MathPreconditionError, ZeroDivisionError) as exc:
        print(_dump({"error": type(exc).__name__, "detail": str(exc)}))
        return EXIT_MATH
    except SkewresError as exc:  # pragma: no cover
        print(_dump({"error": type(exc).__name__, "detail": str(exc)}))
        return EXIT_MATH
    print(_dump(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
