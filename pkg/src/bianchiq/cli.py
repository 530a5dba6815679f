"""Command-line front end.

Subcommands:

    expand  NAME            print a named q-expansion (text or JSON)
    verify  [NAMES|--all]   run identity checks, exit 0 iff all pass
    point   OP [POINTS]     curve arithmetic over the complex numbers
    group   [NAME|--dot]    congruence-subgroup invariants and the lattice
    list                    catalog of series, identities, and groups

Exit codes: 0 success / all selected checks pass, 1 verification failure,
2 usage error (unknown name, malformed input).

Data goes to stdout, diagnostics (including timing) to stderr; `verify`
output for a fixed seed is byte-identical across runs.  The environment
variable BIANCHIQ_ORDER overrides the default series order; explicit flags
always win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import congruence, curve, identities, modular, theta

ORDER_ENV = "BIANCHIQ_ORDER"


def _default_order() -> int:
    try:
        return int(os.environ.get(ORDER_ENV, "30"))
    except ValueError:
        return 30


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' literals: '1.1i', '0.3+1.4i', '-2', 'i', '0.5-i'.

    Locale-independent ('.' decimal separator); the imaginary term, when
    present, is the final summand and ends in 'i'."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    try:
        if not s.endswith("i"):
            return complex(float(s), 0.0)
        body = s[:-1]
        split = None
        for i in range(len(body) - 1, 0, -1):
            if body[i] in "+-" and body[i - 1] not in "eE":
                split = i
                break
        re_txt, im_txt = ("", body) if split is None else (body[:split], body[split:])
        if im_txt in ("", "+"):
            im_part = 1.0
        elif im_txt == "-":
            im_part = -1.0
        else:
            im_part = float(im_txt)
        return complex(float(re_txt) if re_txt else 0.0, im_part)
    except ValueError as exc:
        raise ValueError(f"malformed complex literal {text!r}") from exc


def _parse_point(text: str):
    try:
        arr = json.loads(text)
        if not (isinstance(arr, list) and len(arr) == 5):
            raise ValueError
        pt = tuple(complex(float(c[0]), float(c[1])) for c in arr)
    except (ValueError, TypeError, IndexError) as exc:
        raise ValueError(f"point must be a JSON array of five [re, im] pairs: {text!r}") from exc
    return pt


def _point_json(p) -> list:
    return [[c.real, c.imag] for c in p]


def _resolve_phi(args) -> complex:
    if args.tau is not None:
        tau = parse_complex(args.tau)
        if tau.imag <= 0:
            raise ValueError("tau must lie in the upper half-plane")
        return theta.phi_numeric(tau)
    if args.phi is not None:
        return parse_complex(args.phi)
    raise ValueError("one of --tau or --phi is required")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bianchiq",
        description="Verification kernel for the Bianchi quintic and the level-10 modular function fields.",
        epilog=f"The environment variable {ORDER_ENV} sets the default series order (currently {_default_order()}); flags always win.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print a named q-expansion")
    p.add_argument("name", help=f"one of {', '.join(modular.NAMES)}")
    p.add_argument("--order", default=None, help="exponent bound (integer or fraction)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("names", nargs="*", help="check names (default: requires --all)")
    p.add_argument("--all", action="store_true", help="run the full registry")
    p.add_argument("--order", type=int, default=None, help="series order for exact checks")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("point", help="curve arithmetic over the complex numbers")
    p.add_argument("op", choices=("add", "double", "neg", "on-curve", "two-torsion", "five-torsion"))
    p.add_argument("points", nargs="*", help="points as JSON arrays of five [re, im] pairs")
    p.add_argument("--tau", default=None, help="tau in the upper half-plane, e.g. 1.1i or 0.3+1.4i")
    p.add_argument("--phi", default=None, help="curve parameter as a complex literal")

    p = sub.add_parser("group", help="congruence-subgroup invariants")
    p.add_argument("name", nargs="?", default=None,
                   help="e.g. Gamma(10), Gamma0(5), Gamma1(5), G1..G4")
    p.add_argument("--dot", action="store_true", help="emit the function-field lattice in DOT")
    p.add_argument("-N", type=int, default=10, help="working modulus (default 10)")

    sub.add_parser("list", help="print the catalogs of series, identities, and groups")
    return ap


def _cmd_expand(args) -> int:
    order = Fraction(args.order) if args.order is not None else Fraction(_default_order())
    try:
        series = modular.named_series(args.name, order)
    except modular.UnknownName:
        print(f"unknown series name {args.name!r}; known: {', '.join(modular.NAMES)}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(series.to_json()))
    else:
        for e, c in series.terms():
            print(f"{e}\t{c}")
    return 0


def _cmd_verify(args) -> int:
    if not args.names and not getattr(args, "all", False):
        print("verify: give check names or --all", file=sys.stderr)
        return 2
    cfg = identities.VerifyConfig(
        series_order=args.order if args.order is not None else _default_order(),
        tol=args.tol, samples=args.samples, seed=args.seed,
    )
    names = None if args.all else args.names
    try:
        report = identities.run_all(cfg, names)
    except identities.UnknownName as exc:
        print(f"unknown identity name: {exc}", file=sys.stderr)
        return 2
    if args.format == "text":
        print(report.to_text())
    else:
        print(json.dumps(report.to_json(with_elapsed=False)))
    print(f"elapsed {report.elapsed_ms:.0f} ms", file=sys.stderr)
    return 0 if report.all_passed() else 1


def _cmd_point(args) -> int:
    phi = _resolve_phi(args)
    pts = [_parse_point(s) for s in args.points]
    op = args.op
    if op in ("double", "neg", "on-curve") and len(pts) != 1:
        raise ValueError(f"{op} needs exactly one point argument")
    if op == "add" and len(pts) != 2:
        raise ValueError("add needs exactly two point arguments")
    if op == "add":
        out = curve.normalize_numeric(curve.add(pts[0], pts[1], phi))
        print(f"residual {curve.max_quadric_residual(out, phi):.3e}", file=sys.stderr)
        print(json.dumps(_point_json(out)))
    elif op == "double":
        out = curve.normalize_numeric(curve.double(pts[0], phi))
        print(f"residual {curve.max_quadric_residual(out, phi):.3e}", file=sys.stderr)
        print(json.dumps(_point_json(out)))
    elif op == "neg":
        out = curve.normalize_numeric(curve.negate(pts[0]))
        print(json.dumps(_point_json(out)))
    elif op == "on-curve":
        res = [abs(r) for r in curve.quadric_residuals(pts[0], phi)]
        print(json.dumps({"residuals": res, "max_relative": curve.max_quadric_residual(pts[0], phi)}))
    elif op == "two-torsion":
        points = [curve.normalize_numeric(p) for p in curve.two_torsion_points(phi)]
        print(json.dumps({
            "phi": [phi.real, phi.imag],
            "points": [_point_json(p) for p in points],
            "max_quadric_residuals": [curve.max_quadric_residual(p, phi) for p in points],
        }))
    elif op == "five-torsion":
        points = [curve.normalize_numeric(p) for p in curve.five_torsion_points(phi)]
        print(json.dumps({
            "phi": [phi.real, phi.imag],
            "points": [_point_json(p) for p in points],
            "max_quadric_residuals": [curve.max_quadric_residual(p, phi) for p in points],
        }))
    return 0


# Containments reported alongside a group, as (inner, outer) pairs.
_GROUP_RELATIONS = {
    "G1": [("G1", "Gamma1(5)"), ("Gamma(10)", "G1"), ("G1", "G2"), ("G1", "Gamma1(10)")],
    "G2": [("G2", "Gamma1(5)"), ("G1", "G2")],
    "G3": [("G3", "Gamma(5)"), ("Gamma(10)", "G3")],
    "G4": [("G4", "Gamma(5)"), ("Gamma(10)", "G4")],
    "Gamma(10)": [("Gamma(10)", "Gamma(5)"), ("Gamma(10)", "G1")],
    "Gamma(5)": [("Gamma(5)", "Gamma1(5)")],
    "Gamma1(10)": [("Gamma1(10)", "Gamma1(5)"), ("Gamma1(10)", "Gamma0(10)")],
    "Gamma1(5)": [("Gamma1(5)", "Gamma0(5)")],
    "Gamma0(10)": [("Gamma0(10)", "Gamma0(5)")],
}


def _cmd_group(args) -> int:
    if args.dot and args.name is None:
        print(congruence.lattice_dot(args.N))
        return 0
    if args.name is None:
        print("group: give a group name or --dot", file=sys.stderr)
        return 2
    try:
        spec = congruence.get_spec(args.name)
    except congruence.UnknownGroup as exc:
        print(str(exc), file=sys.stderr)
        return 2
    gd = congruence.genus_data(spec, args.N)
    out = {
        "name": spec.name,
        "mu": gd.mu, "eps2": gd.eps2, "eps3": gd.eps3,
        "cusps": gd.cusps, "genus": gd.genus,
        "relations": [],
    }
    for inner, outer in _GROUP_RELATIONS.get(args.name, []):
        rep = congruence.subgroup_report(
            congruence.get_spec(inner), congruence.get_spec(outer), args.N
        )
        out["relations"].append(rep)
    print(json.dumps(out))
    if args.dot:
        print(congruence.lattice_dot(args.N))
    return 0


def _cmd_list(args) -> int:
    print("series:")
    for n in modular.NAMES:
        print(f"  {n}")
    print("identities:")
    for c in identities.registry():
        print(f"  {c.name:36s} [{c.kind}] {c.description}")
    print("groups:")
    for n in sorted(congruence.builtin_specs()):
        print(f"  {n}")
    return 0


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors and 0 for --help
        return int(exc.code or 0)
    handler = {
        "expand": _cmd_expand,
        "verify": _cmd_verify,
        "point": _cmd_point,
        "group": _cmd_group,
        "list": _cmd_list,
    }[args.command]
    try:
        return handler(args)
    except curve.BothFormulasDegenerate as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
