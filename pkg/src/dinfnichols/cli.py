"""Command-line interface.

Subcommands:
  alambda   structure of A_lambda: products, idempotents, radicals, simples
  braiding  braiding table of one family (text or JSON)
  nichols   truncated Hilbert series (CSV) plus a growth verdict (JSON)
  classify  the full classification report against the five-entry list
  verify    run the property suites; exits nonzero on any failure
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import (
    ParamGrid,
    default_grid,
    report_csv,
    report_json,
    report_text,
    theorem_table,
)
from .field import DEFAULT_ORDER, Scalar
from .nichols import DEGREE_CAP, graded_dims, growth_fit
from .repn import alambda_report, simple_modules
from .tables import braiding_table_check
from .verify import SUITES, run_suites
from .ydmod import g_class, gh_class, h_class, one_class


def _build_module(args, order):
    family = args.family
    if family == "h-class":
        if args.a is None:
            raise SystemExit("h-class requires --a")
        return h_class(args.n, Scalar.parse(args.a, order))
    if family == "g-class":
        if args.rep not in ("sign", "eps"):
            raise SystemExit("g-class requires --rep sign|eps")
        return g_class(args.rep, order)
    if family == "gh-class":
        if args.rep not in ("sign", "eps"):
            raise SystemExit("gh-class requires --rep sign|eps")
        return gh_class(args.rep, order)
    if family == "one-class":
        if args.rep not in ("s0+", "s0-", "slam+", "slam-"):
            raise SystemExit("one-class requires --rep s0+|s0-|slam+|slam-")
        lam = Scalar.parse(args.lam, order) if args.lam is not None else None
        if args.rep in ("s0+", "s0-"):
            lam = Scalar.zero(order) if lam is None else lam
        elif lam is None:
            raise SystemExit("one-class slam+/slam- requires --lambda")
        for cand in simple_modules(lam):
            if cand.label == args.rep:
                if not cand.axiom.ok:
                    raise SystemExit(
                        f"candidate {args.rep} at lambda={lam} fails module "
                        f"axioms: {cand.axiom.witness}")
                return one_class(cand.rep, cand.label)
        raise SystemExit(f"no candidate {args.rep} at lambda={lam}")
    raise SystemExit(f"unknown family {family}")


def _cmd_alambda(args):
    lam = Scalar.parse(args.lam, args.zeta_order)
    report = alambda_report(lam)
    if args.report != "structure":
        keys = {"idempotents": ["lambda", "idempotents"],
                "radical": ["lambda", "corners"],
                "simples": ["lambda", "simple_modules"]}[args.report]
        report = {k: report[k] for k in keys}
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


def _cmd_braiding(args):
    order = args.zeta_order
    m = _build_module(args, order)
    basis = m.basis() if m.dim is not None else m.basis_window(args.window)
    entries = []
    for v in basis:
        for w in basis:
            t = m.braid(v, w)
            entries.append({"left": str(v), "right": str(w),
                            "coeff": str(t.coeff),
                            "out_left": str(t.left), "out_right": str(t.right)})
    if args.format == "json":
        print(json.dumps({"family": args.family, "window": args.window,
                          "entries": entries}, indent=2))
    else:
        for e in entries:
            print(f"c({e['left']} (x) {e['right']}) = "
                  f"({e['coeff']}) {e['out_left']} (x) {e['out_right']}")
    check = braiding_table_check(m, args.window)
    if not check.ok:
        print(f"closed-form table mismatch: {check.witness}", file=sys.stderr)
        return 1
    return 0


def _cmd_nichols(args):
    order = args.zeta_order
    m = _build_module(args, order)
    if m.dim is None:
        raise SystemExit("nichols requires a finite-dimensional family "
                         "(infinite support is classified by rule R1)")
    cap = max(DEGREE_CAP, args.max_degree)
    prefix = graded_dims(m, args.max_degree, cap=cap)
    print("degree,dim")
    for n, d in enumerate(prefix):
        print(f"{n},{d}")
    print(json.dumps({"growth": growth_fit(prefix).as_json()}))
    return 0


def _cmd_classify(args):
    order = args.zeta_order
    if args.grid:
        with open(args.grid) as fh:
            raw = json.load(fh)
        grid = ParamGrid.from_strings(raw["n"], raw["a"], raw["lambda"], order)
    else:
        grid = default_grid(order)
    report = theorem_table(grid, order)
    if args.format == "json":
        print(report_json(report))
    elif args.format == "csv":
        print(report_csv(report))
    else:
        print(report_text(report))
    return 0


def _cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    res = run_suites(names, window=args.window, seed=args.seed,
                     order=args.zeta_order)
    for line in res.lines:
        print(line)
    print(f"{len(res.lines) - res.failed}/{len(res.lines)} checks passed")
    return 1 if res.failed else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dinfnichols",
        description="Yetter-Drinfeld modules, braidings and truncated Nichols "
                    "algebras over the infinite dihedral group")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_zeta(p):
        p.add_argument("--zeta-order", type=int, default=DEFAULT_ORDER,
                       help="cyclotomic order N of the scalar field Q(zeta_N)")

    p = sub.add_parser("alambda", help="structure of A_lambda")
    add_zeta(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--report", default="structure",
                   choices=["structure", "idempotents", "radical", "simples"])
    p.set_defaults(func=_cmd_alambda)

    family_kw = dict(
        choices=["h-class", "g-class", "gh-class", "one-class"], required=True)

    p = sub.add_parser("braiding", help="braiding table of one family")
    add_zeta(p)
    p.add_argument("--family", **family_kw)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--a")
    p.add_argument("--rep")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--window", type=int, default=4)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=_cmd_braiding)

    p = sub.add_parser("nichols", help="truncated Hilbert series")
    add_zeta(p)
    p.add_argument("--family", **family_kw)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--a")
    p.add_argument("--rep")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(func=_cmd_nichols)

    p = sub.add_parser("classify", help="classification report")
    add_zeta(p)
    p.add_argument("--all", action="store_true",
                   help="classify every family on the grid (default behaviour)")
    p.add_argument("--grid", help="JSON file with keys n, a, lambda")
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run property suites")
    add_zeta(p)
    p.add_argument("--suite", default="all",
                   choices=sorted(SUITES) + ["all"])
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
