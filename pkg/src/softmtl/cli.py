"""Command-line front door.

Exit codes: 0 = success / confirmed, 1 = counterexamples or failed
axioms, 2 = usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import algebra, filters, fixtures, fuzzy, soft, verifier

DEFAULT_BUDGET = int(os.environ.get("SOFTMTL_BUDGET", "1000000"))


class UsageError(Exception):
    pass


def _load(target):
    try:
        return fixtures.resolve_algebra(target)
    except (FileNotFoundError, algebra.AlgebraError, json.JSONDecodeError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def _default_den(alg, args):
    den = args.grid if args.grid else (2 if alg.n >= 6 else 4)
    if den <= 0 or den % 2:
        raise UsageError(f"grid denominator must be positive and even, got {den}")
    return den


def _parse_mu(alg, den, text):
    mapping = {}
    for item in text.split(","):
        if "=" not in item:
            raise UsageError(f"bad membership entry {item!r}; expected label=value")
        lab, val = item.split("=", 1)
        try:
            mapping[lab.strip()] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad membership value {val!r}")
    try:
        return fuzzy.FuzzySet.from_mapping(alg, den, mapping)
    except (ValueError, algebra.AlgebraError) as exc:
        raise UsageError(str(exc)) from exc


def _parse_interval(text):
    try:
        return soft.ParameterInterval.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, doc, text_lines):
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_check_algebra(args):
    alg = _load(args.target)
    axioms = algebra.validate_mtl(alg)
    laws = algebra.check_derived_laws(alg)
    doc = {"algebra": "/".join(alg.labels), "axioms": axioms.to_doc(), "laws": laws.to_doc()}
    lines = [f"algebra {'/'.join(alg.labels)}: "
             f"axioms {'PASS' if axioms.ok else 'FAIL'}, "
             f"derived laws {'PASS' if laws.ok else 'FAIL'}"]
    for name, rep in (("axiom", axioms), ("law", laws)):
        for ax in rep.failed_axioms:
            first = rep.violations[ax][0]
            lines.append(f"  {name} {ax}: {len(rep.violations[ax])} violation(s), "
                         f"first at ({', '.join(first)})")
    _emit(args, doc, lines)
    return 0 if axioms.ok and laws.ok else 1


def cmd_filters(args):
    alg = _load(args.target)
    masks = filters.enumerate_filters(alg)
    rows = []
    for m in masks:
        entry = {"elements": filters.labels_of(alg, m)}
        if args.classify:
            cls = filters.classify_filter(alg, m)
            entry.update(boolean=cls.boolean, g=cls.g, mv=cls.mv)
        rows.append(entry)
    lines = [f"{len(masks)} filter(s)"]
    for entry in rows:
        flags = ""
        if args.classify:
            flags = "  [" + " ".join(k for k in ("boolean", "g", "mv") if entry[k]) + "]"
        lines.append("  {" + ",".join(entry["elements"]) + "}" + flags)
    _emit(args, {"filters": rows}, lines)
    return 0


def cmd_classify(args):
    alg = _load(args.target)
    try:
        mask = filters.mask_of(alg, args.elements)
    except algebra.AlgebraError as exc:
        raise UsageError(str(exc)) from exc
    if mask == 0:
        raise UsageError("subset must be non-empty")
    cls = filters.classify_filter(alg, mask)
    doc = {"elements": filters.labels_of(alg, mask), "filter": cls.is_filter,
           "boolean": cls.boolean, "g": cls.g, "mv": cls.mv,
           "witnesses": {k: list(v) for k, v in cls.witnesses.items()}}
    lines = [f"{{{','.join(doc['elements'])}}}: filter={cls.is_filter} "
             f"boolean={cls.boolean} g={cls.g} mv={cls.mv}"]
    for key, wit in cls.witnesses.items():
        lines.append(f"  {key} fails at ({', '.join(wit)})")
    _emit(args, doc, lines)
    return 0


def cmd_fuzzy_check(args):
    alg = _load(args.target)
    den = _default_den(alg, args)
    mu = _parse_mu(alg, den, args.mu)
    alpha = beta = None
    if args.family == "thresholds":
        iv = _parse_interval(args.interval or "")
        alpha, beta = iv.lo, iv.hi
    try:
        witness = fuzzy.check_fuzzy_witness(mu, args.family, args.kind, args.route,
                                            alpha, beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = witness is None
    doc = {"mu": mu.to_doc(), "family": args.family, "kind": args.kind,
           "route": args.route, "holds": ok,
           "witness": None if ok else [str(w) for w in witness]}
    lines = [f"{args.family} {args.kind} ({args.route}): {'HOLDS' if ok else 'FAILS'}"]
    if not ok:
        lines.append(f"  violated at ({', '.join(map(str, witness))})")
    _emit(args, doc, lines)
    return 0 if ok else 1


def cmd_soft_build(args):
    alg = _load(args.target)
    den = _default_den(alg, args)
    mu = _parse_mu(alg, den, args.mu)
    iv = _parse_interval(args.interval) if args.interval else soft.FULL
    try:
        st = soft.build_soft(mu, iv, args.soft)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok, witness = soft.classify_soft(st, args.kind)
    doc = st.to_doc()
    doc.update(kind_checked=args.kind, holds=ok)
    lines = [f"{args.soft}-soft set over {iv}, grid 1/{den}:"]
    for t, mask in st.levels:
        lines.append(f"  t={t}: {{{','.join(filters.labels_of(alg, mask))}}}")
    lines.append(f"every level a {args.kind}: {ok}" +
                 ("" if ok else f" (fails at t={witness[0]})"))
    _emit(args, doc, lines)
    return 0 if ok else 1


def _theorem_spec(theorem):
    specs = verifier.catalog_by_id()
    if theorem not in specs:
        raise UsageError(f"unknown theorem id {theorem!r}; known: {', '.join(specs)}")
    return specs[theorem]


def cmd_verify(args):
    alg = _load(args.target)
    den = _default_den(alg, args)
    spec = _theorem_spec(args.theorem)
    iv = _parse_interval(args.interval) if args.interval else None
    rep = verifier.verify(alg, spec, den, budget=args.budget, seed=args.seed, interval=iv)
    doc = rep.to_doc()
    status = "confirmed" if rep.confirmed else f"{len(rep.counterexamples)} counterexample(s)"
    lines = [f"{rep.theorem} on {rep.algebra} at D={den} ({rep.mode}, "
             f"{rep.checked} fuzzy sets): {status}"]
    for ce in rep.counterexamples[:5]:
        lines.append(f"  {ce['direction']} fails for mu={ce['mu']} witness={ce['witness']}")
    _emit(args, doc, lines)
    return 0 if rep.confirmed else 1


def cmd_verify_all(args):
    alg = _load(args.target)
    den = _default_den(alg, args)
    reports = verifier.verify_all(alg, den, budget=args.budget, seed=args.seed)
    lines, bad = [], 0
    for rep in reports:
        status = "confirmed" if rep.confirmed else f"FAILED ({len(rep.counterexamples)})"
        bad += not rep.confirmed
        lines.append(f"{rep.theorem:9s} {rep.mode:10s} {rep.checked:6d} checked  {status}")
    lines.append(f"{len(reports)} theorems, {bad} with counterexamples")
    _emit(args, {"reports": [r.to_doc() for r in reports]}, lines)
    return 0 if bad == 0 else 1


def cmd_witness(args):
    alg = _load(args.target)
    den = _default_den(alg, args)
    try:
        mu = verifier.find_strictness_witness(alg, args.theorem, den,
                                              budget=args.budget, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if mu is None:
        _emit(args, {"theorem": args.theorem, "witness": None},
              [f"{args.theorem}: no strictness witness at this scale"])
        return 0
    st = soft.build_soft(mu, soft.FULL, "in")
    _emit(args, {"theorem": args.theorem, "witness": mu.to_doc(), "soft": st.to_doc()},
          [f"{args.theorem}: converse fails for mu={mu.to_doc()}"])
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="softmtl",
                                description="MTL-algebra finite-model verification workbench")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, grid=True, budget=False):
        sp.add_argument("target", help="fixture name (a1, a2, a3, b2) or JSON file path")
        sp.add_argument("--json", action="store_true", help="structured output")
        if grid:
            sp.add_argument("--grid", type=int, default=0, metavar="D",
                            help="grid denominator (even; default 4, or 2 for n >= 6)")
        if budget:
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                            help="max fuzzy sets before sampling kicks in")
            sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("check-algebra", help="validate axioms and derived laws")
    common(sp, grid=False)
    sp.set_defaults(fn=cmd_check_algebra)

    sp = sub.add_parser("filters", help="enumerate all filters")
    common(sp, grid=False)
    sp.add_argument("--classify", action="store_true")
    sp.set_defaults(fn=cmd_filters)

    sp = sub.add_parser("classify", help="classify one subset")
    common(sp, grid=False)
    sp.add_argument("elements", nargs="+", metavar="LABEL")
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("fuzzy-check", help="check a fuzzy-filter variant")
    common(sp)
    sp.add_argument("--mu", required=True, help="e.g. '0=0,a=1/2,b=3/4,1=1'")
    sp.add_argument("--family", choices=fuzzy.FAMILIES, default="plain")
    sp.add_argument("--kind", choices=fuzzy.KINDS, default="filter")
    sp.add_argument("--route", default="default")
    sp.add_argument("--interval", help="alpha,beta for the thresholds family")
    sp.set_defaults(fn=cmd_fuzzy_check)

    sp = sub.add_parser("soft-build", help="build and classify a level-cut soft set")
    common(sp)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--soft", choices=soft.SOFT_KINDS, default="in")
    sp.add_argument("--interval", help="lo,hi (default 0,1)")
    sp.add_argument("--kind", choices=fuzzy.KINDS, default="filter")
    sp.set_defaults(fn=cmd_soft_build)

    sp = sub.add_parser("verify", help="verify one catalog theorem")
    common(sp, budget=True)
    sp.add_argument("theorem")
    sp.add_argument("--interval", help="override (alpha,beta] for generic-interval theorems")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("verify-all", help="verify the whole catalog")
    common(sp, budget=True)
    sp.set_defaults(fn=cmd_verify_all)

    sp = sub.add_parser("witness", help="search a converse-failure witness")
    common(sp, budget=True)
    sp.add_argument("theorem", help="T4.2.13 or T4.3.12")
    sp.set_defaults(fn=cmd_witness)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except fuzzy.BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
