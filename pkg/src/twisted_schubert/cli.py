"""
Command line front end.

    twisted-schubert twisted --n 3 --perm 123 --method both
    twisted-schubert localize --n 3 --perm 123 --at 213 --format json
    twisted-schubert verify --n 4

Exit codes: 0 success, 1 disagreement between methods (or failed suite),
2 usage error such as a malformed permutation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .operators import skew_naive, twisted_skew_naive, twisted_skew_positive
from .permutations import Permutation, all_permutations
from .pipedreams import pipe_dream_weight, reduced_pipe_dreams
from .polyring import MultiPoly, elementary, homogeneous, is_monomial_nonnegative, substitute_x_by_y
from .schubert import (
    billey, chain_weight, double_schubert, double_schubert_via_pipedreams,
    double_twisted_schubert, double_twisted_schubert_via_chains, enumerate_chains,
    expand_schubert, localize, localize_formula, schubert, schubert_via_pipedreams,
    tv_schubert, twisted_schubert, twisted_schubert_via_chains,
)
from .symchains import pieri_e, pieri_h
from .verify import VerifyConfig, run_suites

# (recursion, combinatorial, latex symbol)
POLY_KINDS = {
    "schubert": (schubert, schubert_via_pipedreams, r"\mathfrak{S}"),
    "double": (double_schubert, double_schubert_via_pipedreams, r"\mathfrak{S}"),
    "twisted": (twisted_schubert, twisted_schubert_via_chains, r"\widetilde{\mathfrak{S}}"),
    "double-twisted": (double_twisted_schubert, double_twisted_schubert_via_chains,
                       r"\widetilde{\mathfrak{S}}"),
}


class Mismatch(Exception):
    pass


def _perm(parser, text, n):
    try:
        w = Permutation.parse(text)
    except ValueError as exc:
        parser.error(f"malformed permutation {text!r}: {exc}")
    if n is not None:
        if w.n > n:
            parser.error(f"permutation {text} does not lie in S_{n}")
        w = w.embed(n)
    return w


def _first_difference(a: MultiPoly, b: MultiPoly) -> str:
    diff = a - b
    (m, c), = diff.sorted_terms()[:1]
    term = MultiPoly(diff.n, {m: c})
    return f"first differing term of (recursion - combinatorial): {term}"


def _both(label, rec, comb):
    if rec != comb:
        if isinstance(rec, MultiPoly):
            detail = _first_difference(rec, comb)
        else:
            fmt = lambda d: {str(w): c for w, c in sorted(d.items(), key=lambda t: t[0].images)}
            detail = f"symmetric difference {fmt({w: c for w, c in rec.items() if comb.get(w) != c})}"
        raise Mismatch(
            f"{label}: methods disagree\n  recursion:     {rec}\n  combinatorial: {comb}\n  " + detail
        )
    return rec


def _pick(method, label, rec_fn, comb_fn):
    if method == "recursion":
        return rec_fn()
    if method == "combinatorial":
        return comb_fn()
    return _both(label, rec_fn(), comb_fn())


def _emit_poly(args, P: MultiPoly, kind: str, latex_lhs: str, extra=None):
    if args.format == "json":
        data = {"kind": kind, "n": P.n}
        data.update(extra or {})
        data["poly"] = P.to_json()
        data["text"] = P.to_text()
        print(json.dumps(data, sort_keys=False))
    elif args.format == "latex":
        print(f"{latex_lhs} = {P.to_latex()}")
    else:
        print(P.to_text())


def cmd_poly(args, parser):
    w = _perm(parser, args.perm, args.n)
    rec, comb, sym = POLY_KINDS[args.command]
    P = _pick(args.method, f"{args.command} {w}", lambda: rec(w), lambda: comb(w))
    lhs = f"{sym}_{{{w}}}" + ("(x,y)" if "double" in args.command else "")
    _emit_poly(args, P, args.command, lhs, {"perm": w.to_json()})


def cmd_localize(args, parser):
    v = _perm(parser, args.perm, args.n)
    w = _perm(parser, args.at, args.n or v.n)
    if v.n != w.n:
        parser.error("--perm and --at must lie in the same S_n")
    P = _pick(args.method, f"localize {v} at {w}",
              lambda: localize(v, w), lambda: localize_formula(v, w).product())
    lhs = rf"\widetilde{{\mathfrak{{S}}}}_{{{v}}}(wy,y)\big|_{{w={w}}}"
    f = localize_formula(v, w)
    if args.format == "text":
        print(f.to_text())
        return
    extra = {"perm": v.to_json(), "at": w.to_json(), "factored": f.to_text(),
             "prefactor": f.prefactor.to_json(), "subset_sum": f.subset_sum.to_json()}
    _emit_poly(args, P, "localize", lhs, extra)


def cmd_billey(args, parser):
    v = _perm(parser, args.perm, args.n)
    w = _perm(parser, args.at, args.n or v.n)
    if v.n != w.n:
        parser.error("--perm and --at must lie in the same S_n")
    P = _pick(args.method, f"billey {v} at {w}",
              lambda: substitute_x_by_y(double_schubert(v), w), lambda: billey(v, w))
    lhs = rf"\mathfrak{{S}}_{{{v}}}(wy,y)\big|_{{w={w}}}"
    _emit_poly(args, P, "billey", lhs, {"perm": v.to_json(), "at": w.to_json()})


def cmd_pieri(args, parser):
    v = _perm(parser, args.perm, None)
    N = args.n or v.n
    if v.n > N:
        parser.error(f"permutation {v} does not lie in S_{N}")
    fn, sym = (pieri_e, elementary) if args.kind == "e" else (pieri_h, homogeneous)

    def rule():
        return {w: 1 for w in fn(v, args.m, args.k, N)}

    def expansion():
        prod = schubert(v.embed(N)) * sym(args.m, range(1, args.k + 1), N)
        return expand_schubert(prod, N)

    try:
        terms = _pick(args.method, f"pieri {args.kind} v={v} m={args.m} k={args.k}",
                      expansion, rule)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    ws = sorted(terms, key=lambda w: (w.length(), w.images))
    if args.format == "json":
        print(json.dumps({"kind": "pieri", "rule": args.kind, "perm": v.to_json(), "m": args.m,
                          "k": args.k, "N": N,
                          "terms": [{"perm": w.to_json(), "coeff": str(terms[w])} for w in ws]}))
    elif args.format == "latex":
        body = " + ".join(rf"\mathfrak{{S}}_{{{w}}}" for w in ws) or "0"
        print(rf"\mathfrak{{S}}_{{{v}}} \cdot {args.kind}_{{{args.m}}}^{{({args.k})}} = {body}")
    else:
        print(" + ".join(f"S[{w}]" for w in ws) or "0")
    return 0


def cmd_skew(args, parser):
    w = _perm(parser, args.perm, args.n)
    v = _perm(parser, args.perm2, args.n or w.n)
    fn = {"naive": skew_naive, "twisted": twisted_skew_naive, "positive": twisted_skew_positive}[args.kind]
    word = tuple(int(t) for t in args.word.split(",")) if args.word else None
    expr = fn(w, v, word)
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "w": w.to_json(), "v": v.to_json(), "op": expr.to_json()}))
    elif args.format == "latex":
        print(expr.to_text(latex=True))
    else:
        print(expr.to_text())


def cmd_chains(args, parser):
    w = _perm(parser, args.perm, args.n)
    chains = enumerate_chains(w)
    double = args.double
    if args.format == "json":
        print(json.dumps({"perm": w.to_json(), "count": len(chains),
                          "chains": [dict(c.to_json(), weight=chain_weight(c, double).to_json())
                                     for c in chains]}))
        return
    for c in chains:
        perms = " ".join(str(p) for p in c.perms)
        supp = " ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in c.supports)
        print(f"{perms}  A={supp}  weight={chain_weight(c, double)}")
    print(f"# {len(chains)} chains")


def cmd_pipedreams(args, parser):
    w = _perm(parser, args.perm, args.n)
    pds = reduced_pipe_dreams(w)
    if args.format == "json":
        print(json.dumps({"perm": w.to_json(), "count": len(pds),
                          "pipedreams": [pd.to_json() for pd in pds]}))
        return
    for pd in pds:
        print(pd.to_text())
        print(f"weight {pipe_dream_weight(pd)}")
        print()
    print(f"# {len(pds)} reduced pipe dreams")


def cmd_verify(args, parser):
    cfg = VerifyConfig(n=args.n, seed=args.seed)
    names = args.suite or None
    results = run_suites(cfg, names)
    failed = 0
    if args.format == "json":
        print(json.dumps({"n": args.n, "seed": args.seed, "suites": [
            {"name": name, "passed": ok, "checked": count, "detail": detail}
            for name, (ok, count, detail) in results]}))
    for name, (ok, count, detail) in results:
        failed += not ok
        if args.format != "json":
            status = "PASS" if ok else "FAIL"
            line = f"{status} {name} ({count} checks)"
            print(line + (f": {detail}" if detail else ""))
    if args.format != "json":
        print(f"{len(results) - failed}/{len(results)} suites passed for n={args.n}")
    return 1 if failed else 0


def cmd_tv(args, parser):
    """Check whether ``T_v S_w`` has nonnegative coefficients for all v, w in S_n."""
    perms = all_permutations(args.n)
    bad = []
    for v in perms:
        for w in perms:
            if not is_monomial_nonnegative(tv_schubert(v, w)):
                bad.append((v, w))
    if args.format == "json":
        print(json.dumps({"n": args.n, "pairs": len(perms) ** 2,
                          "negative": [[v.to_json(), w.to_json()] for v, w in bad]}))
    else:
        for v, w in bad[: args.limit]:
            print(f"T_{v} S_{w} = {tv_schubert(v, w)}")
        print(f"{len(perms) ** 2 - len(bad)}/{len(perms) ** 2} pairs monomial positive for n={args.n}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twisted-schubert", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, perm=True):
        p.add_argument("--n", type=int, default=None, help="ambient S_n (default: length of --perm)")
        if perm:
            p.add_argument("--perm", required=True, help="one-line permutation, e.g. 2431 or 2,4,3,1")
        p.add_argument("--format", choices=["text", "json", "latex"], default="text")

    for kind in POLY_KINDS:
        p = sub.add_parser(kind, help=f"{kind} Schubert polynomial")
        common(p)
        p.add_argument("--method", choices=["recursion", "combinatorial", "both"], default="recursion")
        p.set_defaults(func=cmd_poly)

    for name, func, doc in (("localize", cmd_localize, "localization of the double twisted polynomial"),
                            ("billey", cmd_billey, "localization of the double Schubert polynomial")):
        p = sub.add_parser(name, help=doc)
        common(p)
        p.add_argument("--at", "--perm2", dest="at", required=True, help="fixed point w")
        p.add_argument("--method", choices=["recursion", "combinatorial", "both"], default="recursion")
        p.set_defaults(func=func)

    p = sub.add_parser("pieri", help="Pieri rule for e_m^(k) or h_m^(k)")
    common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=["e", "h"], default="e")
    p.add_argument("--method", choices=["recursion", "combinatorial", "both"], default="combinatorial",
                   help="combinatorial: chain rule; recursion: Schubert expansion of the product")
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("skew-op", help="skew operator d_{w/v} or its twisted version")
    common(p)
    p.add_argument("--perm2", required=True, help="lower permutation v")
    p.add_argument("--kind", choices=["naive", "twisted", "positive"], default="positive")
    p.add_argument("--word", default=None, help="comma-separated reduced word (w, or w0*v for positive)")
    p.set_defaults(func=cmd_skew)

    p = sub.add_parser("chains", help="Bruhat chains contributing to the twisted polynomial")
    common(p)
    p.add_argument("--double", action="store_true", help="weights in x_i - y_j")
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("pipedreams", help="reduced pipe dreams")
    common(p)
    p.set_defaults(func=cmd_pipedreams)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment-tv-positivity", help="is T_v S_w monomial positive?")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int, default=10, help="counterexamples to print")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_tv)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.suite:
        from .verify import SUITES
        unknown = [s for s in args.suite if s not in SUITES]
        if unknown:
            parser.error(f"unknown suite(s) {unknown}; choose from {list(SUITES)}")
    try:
        code = args.func(args, parser)
    except Mismatch as exc:
        print(f"MISMATCH {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
