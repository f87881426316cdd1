"""
Command-line front end.

Exit codes: 0 success, 1 an identity failed, 2 usage or input error.
"""

import argparse
import csv
import json
import sys
from typing import List, Optional

from .coxeter import UnsupportedType, coxeter_group
from .grfunctor import (GammaTable, MalformedInput, MultTable, ParityViolation,
                        SymmetryViolation, beta_expansion, beta_from_gamma,
                        beta_twist_check)
from .klbasis import KLTable, expand_in_c
from .pgl2ring import DEFAULT_N, KindMismatch, RingElt, parse_class, structure_constants
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TYPE_HELP = "Coxeter type: A1..A4, B2, G2 or I2:m"


class UsageError(Exception):
    pass


def _word(text: str) -> tuple:
    text = text.strip().strip("[]")
    if text in ("", "e"):
        return ()
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise UsageError("cannot parse word %r (expected e.g. 1,2,1)" % text) from None


def _write_json(path: Optional[str], obj):
    if path:
        with open(path, "w") as fh:
            json.dump(obj, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput("cannot read %s: %s" % (path, exc)) from None


def _print_reports(reports, out) -> int:
    code = EXIT_OK
    for r in reports:
        print(r.summary(), file=out)
        for w in r.failures:
            print("  FAIL " + json.dumps(w, sort_keys=True), file=out)
        if not r.ok:
            code = EXIT_FAIL
    return code


# -- subcommands --------------------------------------------------------------

def cmd_klpoly(args, out) -> int:
    G = coxeter_group(args.type)
    table = KLTable.of(G)
    if args.all:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["y", "w", "P"])
        rows = []
        for w in G:
            for y in G:
                p = table.P(y.index, w.index)
                if p:
                    rows.append({"y": list(y.word), "w": list(w.word), "P": p.format("q")})
                    writer.writerow([" ".join(map(str, y.word)) or "e",
                                     " ".join(map(str, w.word)) or "e", p.format("q")])
        _write_json(args.json_out, {"type": G.label, "polynomials": rows})
        return EXIT_OK
    if args.y is None or args.w is None:
        raise UsageError("klpoly needs --y and --w, or --all")
    y, w = G.element(_word(args.y)), G.element(_word(args.w))
    p = table.P(y.index, w.index)
    print(p.format("q"), file=out)
    _write_json(args.json_out, {"type": G.label, "y": list(y.word), "w": list(w.word),
                                "P": p.to_json()})
    return EXIT_OK


def cmd_suite(args, out) -> int:
    names = SUITES if args.suite == "all" else [args.suite]
    reports = [run_suite(n, args.type, seed=args.seed) for n in names]
    _write_json(args.json_out, [r.to_json() for r in reports])
    return _print_reports(reports, out)


def cmd_dual_check(args, out) -> int:
    reports = [run_suite(n, args.type) for n in args.suite]
    _write_json(args.json_out, [r.to_json() for r in reports])
    return _print_reports(reports, out)


def cmd_beta(args, out) -> int:
    m = MultTable.from_json(_load_json(args.table))
    g = beta_expansion(m)
    print("gr(beta(A)) = %r" % g, file=out)
    result = {"beta": g.to_json()}
    code = EXIT_OK
    if args.check_twist:
        ok = beta_twist_check(m)
        print("twist identity: %s" % ("holds" if ok else "FAILS"), file=out)
        result["twist"] = ok
        code = EXIT_OK if ok else EXIT_FAIL
    if args.gamma:
        gt = GammaTable.from_json(_load_json(args.gamma))
        h = beta_from_gamma(gt, m.group, m.dprimeA)
        coords = expand_in_c(h)
        print("v^delta sum_E gamma_E c_E = %r" % h, file=out)
        print("c-coordinates: " + ", ".join(
            "%s: %s" % (list(w.word), c) for w, c in coords.items()), file=out)
        result["gamma"] = h.to_json()
    _write_json(args.json_out, result)
    return code


def cmd_centre(args, out) -> int:
    from .heckerep import c_prime_E, irreducibles

    G = coxeter_group(args.type)
    if not (args.list or args.verify):
        raise UsageError("centre needs --list or --verify")
    code = EXIT_OK
    payload = {}
    if args.list:
        entries = []
        for rep in irreducibles(G):
            h = c_prime_E(rep)
            print("%s (dim %d): c'_E = %r" % (rep.label, rep.dim, h), file=out)
            entries.append({"E": rep.label, "dim": rep.dim, "c_prime": h.to_json()})
        payload["irreducibles"] = entries
    if args.verify:
        reports = [run_suite(n, G.label) for n in ("centrality", "dagger-identity")]
        payload["suites"] = [r.to_json() for r in reports]
        code = _print_reports(reports, out)
    _write_json(args.json_out, payload)
    return code


def cmd_pgl2(args, out) -> int:
    N = args.char_order
    if args.verify:
        report = run_suite("pgl2-table")
        _write_json(args.json_out, report.to_json())
        return _print_reports([report], out)
    if args.action != "product":
        raise UsageError("pgl2 needs --verify or the 'product' action")
    if args.a is None or args.b is None:
        raise UsageError("pgl2 product needs --a and --b")
    try:
        a, b = parse_class(args.a, N), parse_class(args.b, N)
    except (ValueError, KindMismatch) as exc:
        raise UsageError(str(exc)) from None
    f = RingElt(structure_constants(a, b))
    print("Gr(%s) Gr(%s) = %s" % (a.gr_label(), b.gr_label(), f.format(gr=True)), file=out)
    _write_json(args.json_out, {"a": a.gr_label(), "b": b.gr_label(), "N": N,
                                "product": f.to_json(gr=True)})
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hecke-sheaves",
                                description="Exact Hecke-algebra identities and tables.")
    p.add_argument("--json-out", metavar="FILE", help="also write the result as JSON")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json-out", metavar="FILE", default=argparse.SUPPRESS,
                        help="also write the result as JSON")
        sp.set_defaults(func=func)
        return sp

    sp = add("klpoly", cmd_klpoly, "print Kazhdan-Lusztig polynomials")
    sp.add_argument("--type", required=True, help=TYPE_HELP)
    sp.add_argument("--y", help="word for y, e.g. 2 or 1,2")
    sp.add_argument("--w", help="word for w, e.g. 2,1,3,2")
    sp.add_argument("--all", action="store_true", help="CSV of all nonzero P_{y,w}")

    sp = add("suite", cmd_suite, "run an identity suite")
    sp.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    sp.add_argument("--type", help=TYPE_HELP)
    sp.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    sp = add("dual-check", cmd_dual_check, "check the dual-module identities")
    sp.add_argument("--type", required=True, help=TYPE_HELP)
    sp.add_argument("--suite", action="append", choices=["lambda", "ab-symmetry", "ts-rules"],
                    help="may be repeated; default runs lambda and ab-symmetry")

    sp = add("beta", cmd_beta, "beta expansion of a multiplicity table")
    sp.add_argument("--table", required=True, metavar="FILE")
    sp.add_argument("--check-twist", action="store_true")
    sp.add_argument("--gamma", metavar="FILE")

    sp = add("centre", cmd_centre, "central elements c_E, c'_E")
    sp.add_argument("--type", required=True, help=TYPE_HELP)
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--verify", action="store_true")

    sp = add("pgl2", cmd_pgl2, "the Grothendieck ring of PGL_2")
    sp.add_argument("--char-order", type=int, default=DEFAULT_N)
    sp.add_argument("--verify", action="store_true", help="check the golden table")
    sp.add_argument("action", nargs="?", choices=["product"])
    sp.add_argument("--a", help='e.g. "eps:1", "eps\':0", "ru", "one"')
    sp.add_argument("--b")
    return p


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "command", None) == "dual-check" and not args.suite:
        args.suite = ["lambda", "ab-symmetry"]
    try:
        return args.func(args, out)
    except (UsageError, UnsupportedType, MalformedInput, ParityViolation,
            SymmetryViolation, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
