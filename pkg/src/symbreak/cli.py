"""``symbreak`` command line.

Exit status: 0 success, 1 a ``verify`` check failed, 2 input error,
3 capacity or budget exceeded, 4 internal invariant violated.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .automorphism import automorphisms
from .errors import CapacityError, DomainError, InputError, InvariantViolation
from .formats import parse_coloring, parse_graph_spec, parse_range
from .graph import ProductGraph
from .indices import (DEFAULT_SEED, index_report, is_distinguishing, distinguishing_number,
                      phi, preserving_automorphism, threshold, varphi_table)
from .product import (THETA_GENERAL_NOTE, Factorization, is_distinguishing_product, theta_general,
                      theta_power, theta_product_distinct)
from .verify import TARGETS


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--csv", action="store_true", help="emit CSV")
    p.add_argument("--budget", type=float, default=None,
                   help="max colorings to enumerate (default: $SYMBREAK_BUDGET or 2e7)")
    p.add_argument("--threads", type=int, default=None, help="cap on worker threads")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="symbreak", description="Symmetry-breaking indices of graphs.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add(name, help_, graph=True):
        sp = sub.add_parser(name, help=help_, parents=[common])
        if graph:
            sp.add_argument("graph", help="family spec, product expression, or file:PATH")
        return sp

    sp = add("aut", "automorphism group")
    sp.add_argument("--elements", action="store_true", help="list every element")
    add("indices", "full index report").add_argument("--k", default="1..3", help="k range, e.g. 2..4")
    add("dnum", "distinguishing number")
    add("theta", "distinguishing threshold (cycle-count maximum)")
    for verb in ("phi", "varphi"):
        sp = add(verb, f"{verb}_k for each requested k")
        sp.add_argument("--k", required=True, help="k value or range")
        sp.add_argument("--method", choices=["auto", "brute", "moebius"], default="auto")
    sp = add("check", "test whether a coloring is distinguishing")
    sp.add_argument("coloring", help="comma list in vertex order, or red=(i,j),(i,j)")
    sp.add_argument("--mode", choices=["direct", "full", "aut_f"], default="full")
    sp.add_argument("--equivalence", choices=["directed", "symmetric"], default="directed")
    add("product-theta", "threshold of a product from its factors")
    sp = add("verify", "check closed forms against oracles", graph=False)
    sp.add_argument("target", choices=sorted(TARGETS) + ["all"])
    sp.add_argument("--m", type=parse_range, default=None)
    sp.add_argument("--n", type=parse_range, default=None)
    sp.add_argument("--k", type=parse_range, default=[2, 3])
    return ap


def _emit_rows(args, header, rows):
    if args.json:
        print(json.dumps([dict(zip(header, r)) for r in rows]))
    elif args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        for r in [header, *rows]:
            print("  ".join(str(x).rjust(w) for x, w in zip(r, widths)))


def _budget(args):
    return None if args.budget is None else int(args.budget)


def cmd_aut(args, g):
    aut = automorphisms(g)
    if args.json:
        print(aut.to_json(include_elements=args.elements))
        return 0
    print(f"order {aut.order}")
    for p in aut.generators:
        print(f"gen {p}")
    if args.elements:
        for p in aut.elements:
            print(p)
    return 0


def cmd_indices(args, g):
    rep = index_report(g, parse_range(args.k), name=args.graph, budget=_budget(args),
                       threads=args.threads)
    if args.json:
        print(rep.to_json())
    elif args.csv:
        sys.stdout.write(rep.to_csv())
    else:
        _emit_rows(args, rep.header(), [rep.row()])
    return 0


def cmd_dnum(args, g):
    d, cert = distinguishing_number(g, budget=_budget(args))
    if args.json:
        print(json.dumps({"graph": args.graph, "D": d, "certificate": list(cert.colors)}))
    else:
        print(d)
    return 0


def cmd_theta(args, g):
    t = threshold(g)
    print(json.dumps({"graph": args.graph, "theta": t}) if args.json else t)
    return 0


def _cmd_counts(args, g, which):
    ks = parse_range(args.k)
    aut = automorphisms(g)
    kw = dict(budget=_budget(args), threads=args.threads)
    if which == "phi":
        vals = {k: phi(g, aut, k, args.method, **kw) for k in ks}
    else:
        table = varphi_table(g, aut, max(ks), args.method, **kw)
        vals = {k: table[k] for k in ks}
    if len(ks) == 1 and not (args.json or args.csv):
        print(vals[ks[0]])
    else:
        _emit_rows(args, ["k", which], [[k, v] for k, v in vals.items()])
    return 0


def cmd_check(args, g):
    cols = parse_coloring(args.coloring, g)
    if args.mode == "direct":
        aut = automorphisms(g)
        ok = is_distinguishing(g, aut, cols)
        p = None if ok else preserving_automorphism(aut, cols)
        witness = None if p is None else {"automorphism": p.to_cycles()}
    else:
        if not isinstance(g, ProductGraph):
            raise InputError("--mode full/aut_f needs a product graph")
        res = is_distinguishing_product(g, cols, args.mode, args.equivalence)
        ok, witness = res.distinguishing, res.witness
    if args.json:
        print(json.dumps({"distinguishing": ok, "witness": witness}))
    else:
        print("true" if ok else "false")
        if witness:
            print(json.dumps(witness))
    return 0


def cmd_product_theta(args, g):
    if not isinstance(g, ProductGraph) or len(g.factors) < 2:
        raise InputError("product-theta needs a product expression, grid or hypercube")
    fz = Factorization.from_factors(g.factors)
    note = None
    if len(fz.bases) == 1:
        value, rule = theta_power(fz.bases[0], fz.powers[0]), "power"
    elif all(t == 1 for t in fz.powers):
        value, rule = theta_product_distinct(g), "distinct"
    else:
        value, rule, note = theta_general(fz), "general", THETA_GENERAL_NOTE
    oracle = threshold(g)
    if args.json:
        print(json.dumps({"graph": args.graph, "theta": value, "rule": rule,
                          "cycle_count_oracle": oracle, "note": note}))
    else:
        print(value)
        if oracle != value:
            print(f"warning: cycle-count oracle gives {oracle}", file=sys.stderr)
    return 0


def cmd_verify(args):
    targets = sorted(TARGETS) if args.target == "all" else [args.target]
    args.budget = _budget(args)
    checks = []
    for t in targets:
        checks.extend(TARGETS[t](args))
    if args.json:
        print(json.dumps([c.__dict__ for c in checks]))
    else:
        for c in checks:
            print(c.line())
    failed = [c for c in checks if not c.ok]
    if failed:
        print(f"counterexample: {failed[0].line()}", file=sys.stderr)
        return 1
    return 0


COMMANDS = {
    "aut": cmd_aut, "indices": cmd_indices, "dnum": cmd_dnum, "theta": cmd_theta,
    "phi": lambda a, g: _cmd_counts(a, g, "phi"), "varphi": lambda a, g: _cmd_counts(a, g, "varphi"),
    "check": cmd_check, "product-theta": cmd_product_theta,
}


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is not None:
        os.environ["SYMBREAK_THREADS"] = str(max(1, args.threads))
    try:
        if args.verb == "verify":
            return cmd_verify(args)
        return COMMANDS[args.verb](args, parse_graph_spec(args.graph))
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 4


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
