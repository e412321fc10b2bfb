"""Command line front end.

Subcommands: expand (beta-expansion of a field element), srs (orbit
graph, Q/P sets, F membership), classify (property report), and
verify-family (batch checks of the cubic family x^3 - 2tx^2 + 2tx - t).
Flags can also come from a JSON config file; explicit flags win.
Exit status 0 means every requested assertion passed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .classify import classify
from .errors import BetaFinError
from .expansion import beta_expand, is_admissible, nu
from .field import BetaField, FieldElement, is_pisot, make_field
from .srs import (
    ShiftRadixSystem,
    export_graph,
    f1_certificate,
    in_f_beta,
    p_set,
    q_set,
)
from .words import Word, format_word, parse_word

_TERM_RE = re.compile(r"([+-]?)\s*(\d+)?\s*(x(?:\^(\d+))?)?")


def parse_poly(text: str) -> BetaField:
    """Accept "x^3-4x^2+4x-2" or comma-separated low-to-high coefficients."""
    text = text.strip()
    if "," in text:
        coeffs = [int(t) for t in text.split(",")]
        if coeffs[-1] != 1:
            raise ValueError("polynomial must be monic (last coefficient 1)")
        return make_field([-c for c in coeffs[:-1]])
    degree = 0
    terms: dict[int, int] = {}
    for m in _TERM_RE.finditer(text.replace(" ", "")):
        sign_s, coef_s, xpart, exp_s = m.groups()
        if not coef_s and not xpart:
            continue
        coef = int(coef_s) if coef_s else 1
        if sign_s == "-":
            coef = -coef
        exp = 0 if not xpart else (int(exp_s) if exp_s else 1)
        terms[exp] = terms.get(exp, 0) + coef
        degree = max(degree, exp)
    if degree < 2 or terms.get(degree) != 1:
        raise ValueError(f"cannot parse monic polynomial from {text!r}")
    return make_field([-terms.get(i, 0) for i in range(degree)])


def parse_element(field: BetaField, text: str) -> FieldElement:
    """Rational coordinates "q0,q1,..." (short lists are zero padded) or a
    digit-word literal "L:digits" in the shared word format."""
    text = text.strip()
    if ":" in text:
        exp_s, word_s = text.split(":", 1)
        w = parse_word(word_s)
        return field.beta_power(int(exp_s)) * nu(field, w)
    coords = [Fraction(t) for t in text.split(",")]
    if len(coords) > field.degree:
        raise ValueError(f"too many coordinates for degree {field.degree}")
    coords += [Fraction(0)] * (field.degree - len(coords))
    return field.from_coords(coords)


def _parse_vec(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(","))


def cmd_expand(args) -> int:
    field = parse_poly(args.poly)
    spec = args.x_coords if args.x_coords is not None else args.x
    if spec is None:
        print("expand needs --x or --x-coords", file=sys.stderr)
        return 2
    x = parse_element(field, spec)
    exp = beta_expand(x, cap=args.budget_orbit)
    reconstructed = exp.value(field)
    ok = reconstructed == x
    from .expansion import d_beta_one

    payload = {
        "poly": field.poly_str(),
        "L": exp.exponent,
        "word": format_word(exp.word),
        "finite": exp.is_finite(),
        "admissible": is_admissible(field, exp.word),
        "d_beta_1": format_word(d_beta_one(field)),
        "reconstruction_ok": ok,
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"poly          {payload['poly']}")
        print(f"L(x)          {payload['L']}")
        print(f"digits        {payload['word']}")
        print(f"finite        {payload['finite']}")
        print(f"d_beta(1)     {payload['d_beta_1']}")
        print(f"reconstructed {'exactly' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def cmd_srs(args) -> int:
    field = parse_poly(args.poly)
    srs = ShiftRadixSystem(field)
    if args.action == "fcheck":
        if not args.vec:
            print("fcheck needs --vec", file=sys.stderr)
            return 2
        vec = _parse_vec(args.vec)
        member = in_f_beta(srs, vec, cap=args.budget_orbit)
        print(f"{vec} {'in F_beta (reaches zero)' if member else 'not in F_beta (cycle)'}")
        return 0
    graph = q_set(srs, cap=args.budget_closure)
    if args.action == "qset":
        if args.format == "json":
            print(json.dumps({"count": graph.node_count(), "nodes": [list(v) for v in graph.nodes]}))
        else:
            print(f"#Q = {graph.node_count()}")
            for v in graph.nodes:
                print(" ", ",".join(map(str, v)))
        return 0
    if args.action == "pset":
        P = sorted(p_set(graph))
        if args.format == "json":
            print(json.dumps({"p_set": [list(v) for v in P]}))
        else:
            print(f"#P = {len(P)}")
            for v in P:
                print(" ", ",".join(map(str, v)))
        return 0
    if args.action == "graph":
        fmt = "dot" if args.format in ("text", "dot") else "json"
        print(export_graph(graph, fmt))
        return 0
    print(f"unknown srs action {args.action!r}", file=sys.stderr)
    return 2


def cmd_classify(args) -> int:
    field = parse_poly(args.poly)
    report = classify(
        field,
        orbit_cap=args.budget_orbit,
        closure_cap=args.budget_closure,
        n_sweep=args.n_sweep,
        box_pad=args.box_pad,
    )
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"poly   {report.poly}")
        print(f"pisot  {report.pisot}")
        print(f"F      {report.f}")
        print(f"PF     {report.pf}")
        print(f"F1     {report.f1}")
        d1 = format_word(report.d_beta_one) if report.d_beta_one else "(orbit budget exceeded)"
        print(f"d_beta(1) = {d1}")
        for ev in report.evidence:
            print(f"  [{ev.rule}] {ev.claim} :: {ev.cite}")
    return 0


def _family_checks(t: int, args) -> list[tuple[str, bool]]:
    from .classify import REFUTED

    field = make_field((t, -2 * t, 2 * t))
    srs = ShiftRadixSystem(field)
    checks: list[tuple[str, bool]] = []
    checks.append(("pisot", is_pisot(field)))
    expected_q = {(0, 0)}
    for v in [(3, 2), (1, 1), (2, 2), (2, 1), (1, 0), (3, 1), (0, 1),
              (2, 0), (1, -1), (3, 3), (1, 2), (2, 3), (0, 2)]:
        expected_q.add(v)
        expected_q.add((-v[0], -v[1]))
    graph = q_set(srs, cap=args.budget_closure)
    checks.append(("Q is the 27-vector set", set(graph.nodes) == expected_q))
    checks.append(("P = {(1,1)}", p_set(graph) == frozenset({(1, 1)})))
    from .srs import tau_preimages

    checks.append(("tau-preimage closure of (1,1)", tau_preimages(srs, (1, 1)) == {(1, 1)}))
    cert = f1_certificate(srs, args.budget_closure, args.budget_orbit, args.box_pad)
    checks.append(("R0 inside F", all(in_f_beta(srs, v) for v in cert.r0)))
    checks.append(("F1 certificate proven", cert.verdict == "proven"))
    report = classify(field, args.budget_orbit, args.budget_closure, args.n_sweep, args.box_pad)
    checks.append(("PF refuted", report.pf == REFUTED))
    from .expansion import d_beta_one

    expected_d1 = Word((2 * t - 2, 2 * t - 2, t - 1, 0, 0, t), ())
    checks.append(("d_beta(1) = (2t-2)(2t-2)(t-1)00t", d_beta_one(field) == expected_d1))
    checks.append(("floor(beta) = 2t-2", field.floor_beta() == 2 * t - 2))

    lam = srs.value
    one, two, three = field.one(), field.from_rational(2), field.from_rational(3)
    zero = field.zero()
    chains = [
        (zero, lam((2, 1)), lam((1, 0)), lam((3, 1)), one),
        (zero, lam((-3, -2)), lam((-1, -1)), lam((-2, -2)), one),
        (one, lam((0, -1)), lam((2, 0)), lam((1, -1)), two),
        (one, lam((-3, -3)), lam((-1, -2)), two),
        (two, lam((-2, -3)), lam((0, -2)), three),
    ]
    ok = all(
        all((b - a).sign() > 0 for a, b in zip(chain, chain[1:])) for chain in chains
    )
    checks.append(("value inequality chains", ok))
    return checks


def cmd_verify_family(args) -> int:
    if args.t_min < 2 or args.t_min > args.t_max:
        print("verify-family needs 2 <= t-min <= t-max", file=sys.stderr)
        return 2
    failures = 0
    rows = []
    for t in range(args.t_min, args.t_max + 1):
        checks = _family_checks(t, args)
        ok = all(flag for _, flag in checks)
        failures += 0 if ok else 1
        rows.append((t, checks, ok))
    if args.format == "json":
        print(json.dumps([
            {"t": t, "pass": ok, "checks": {name: flag for name, flag in checks}}
            for t, checks, ok in rows
        ]))
    else:
        for t, checks, ok in rows:
            print(f"t={t}: {'PASS' if ok else 'FAIL'}")
            if not ok:
                for name, flag in checks:
                    if not flag:
                        print(f"    failed: {name}")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="betafin", description=__doc__)
    parser.add_argument("--config", help="JSON file of default flag values")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--poly", help="polynomial: symbolic or comma separated low-to-high")
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.add_argument("--budget-orbit", type=int, default=100_000)
        p.add_argument("--budget-closure", type=int, default=1_000_000)
        p.add_argument("--box-pad", type=int, default=8)
        p.add_argument("--n-sweep", type=int, default=200)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("expand", help="beta-expansion of a field element")
    common(p)
    p.add_argument("--x", help="rational coordinates or 'L:digits' literal")
    p.add_argument("--x-coords", help="rational coordinates q0,q1,...")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("srs", help="shift radix system queries")
    p.add_argument("action", choices=("graph", "qset", "pset", "fcheck"))
    common(p)
    p.add_argument("--vec", help="integer vector l1,l2,...")
    p.set_defaults(func=cmd_srs)

    p = sub.add_parser("classify", help="finiteness property report")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-family", help="batch checks for x^3-2tx^2+2tx-t")
    common(p)
    p.add_argument("--t-min", type=int, default=2)
    p.add_argument("--t-max", type=int, default=10)
    p.set_defaults(func=cmd_verify_family)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--config" in argv:
        # lift config values into argv right after the subcommand, so any
        # explicit flags (parsed later) win
        idx = argv.index("--config")
        with open(argv[idx + 1]) as fh:
            defaults = json.load(fh)
        del argv[idx : idx + 2]
        sub_idx = next((i for i, a in enumerate(argv) if not a.startswith("-")), 0)
        injected: list[str] = []
        for key, value in defaults.items():
            injected += [f"--{key}", str(value)]
        argv = argv[: sub_idx + 1] + injected + argv[sub_idx + 1 :]
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "poly", None) is None and args.command != "verify-family":
        print("missing --poly", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except BetaFinError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
