"""Command-line interface.

Subcommands: eval, check, corpus, counterfactual, stats (fisher | mc | holm).
Exit codes: 0 success, 1 input error, 2 incoherent premises (eval only).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .coherence import (
    ClassificationConfig,
    Coherent,
    IncoherentPremises,
    check_coherence,
    classify,
    propagate,
)
from .corpus import (
    CATEGORY_LABELS,
    agreement_report,
    report_structured,
    report_text,
)
from .dsl import ParseError, lower, parse
from .events import Interpretation, atoms_of
from .prevision import crq_of, nested_prevision
from .stats import ContingencyTable, fisher_exact_2x2, holm_bonferroni, monte_carlo_rxc

INTERP_NAMES = {i.value: i for i in Interpretation}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({err})")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="probarg",
        description=(
            "Coherent probability bounds for uncertain argument forms with "
            "conditionals."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate tasks from a .arg file")
    ev.add_argument("file")
    ev.add_argument(
        "--interp",
        choices=sorted(INTERP_NAMES) + ["all"],
        default="all",
    )
    ev.add_argument("--theta", type=_rational, default=Fraction(9, 10))
    ev.add_argument("--json", action="store_true")

    ck = sub.add_parser("check", help="coherence verdict for the premise sets")
    ck.add_argument("file")
    ck.add_argument(
        "--interp",
        choices=sorted(INTERP_NAMES),
        default=Interpretation.CONDITIONAL_EVENT.value,
    )
    ck.add_argument("--theta", type=_rational, default=Fraction(9, 10))

    co = sub.add_parser("corpus", help="agreement report for the built-in tasks")
    co.add_argument("--theta", type=_rational, default=Fraction(9, 10))
    co.add_argument("--json", action="store_true")

    cf = sub.add_parser("counterfactual", help="nested prevision demo")
    cf.add_argument("--c", required=True, help="consequent formula")
    cf.add_argument("--b", required=True, help="inner antecedent formula")
    cf.add_argument("--a", required=True, help="outer conditioning formula")
    cf.add_argument("--p", required=True, type=_rational, help="p(c|b)")

    st = sub.add_parser("stats", help="statistical methods")
    st_sub = st.add_subparsers(dest="stats_command", required=True)
    fi = st_sub.add_parser("fisher", help="exact 2x2 Fisher test")
    fi.add_argument("table", help="CSV file, integers, no header")
    mc = st_sub.add_parser("mc", help="Monte Carlo r x c test")
    mc.add_argument("table")
    mc.add_argument("--iters", type=int, default=10000)
    mc.add_argument("--seed", type=int, default=42)
    ho = st_sub.add_parser("holm", help="Holm-Bonferroni correction")
    ho.add_argument("pvals", help="comma-separated p-values")
    ho.add_argument("--alpha", type=_rational, default=Fraction(1, 20))
    return p


def _parse_file(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise SystemExit1(f"cannot read {path}: {err}")
    try:
        return parse(text)
    except ParseError as err:
        raise SystemExit1(f"{path}:{err}")


class SystemExit1(Exception):
    pass


def _parse_formula_arg(text: str):
    # reuse the DSL form grammar, treating every identifier as an atom
    import re

    from .dsl import _Parser

    idents = set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text))
    idents -= {"not", "and", "or", "implies"}
    parser = _Parser(text)
    form = parser.parse_form(idents)
    if parser.peek().kind != "eof":
        raise SystemExit1(f"trailing input in formula {text!r}")
    return form


def _interps(selector: str):
    if selector == "all":
        return list(Interpretation)
    return [INTERP_NAMES[selector]]


def _cmd_eval(args) -> int:
    specs = _parse_file(args.file)
    cfg = ClassificationConfig(theta=args.theta)
    results = []
    for spec in specs:
        for interp in _interps(args.interp):
            assessment, query = lower(spec, interp, cfg)
            try:
                bounds = propagate(assessment, query, spec.atoms)
            except IncoherentPremises as err:
                sys.stderr.write(
                    f"task {spec.name} [{interp.value}]: premises incoherent: "
                    f"{err.certificate.description}\n"
                )
                return 2
            category = classify(bounds, cfg)
            results.append(
                {
                    "task": spec.name,
                    "interpretation": interp.value,
                    "lo": str(bounds.lo),
                    "hi": str(bounds.hi),
                    "category": CATEGORY_LABELS[category],
                }
            )
    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
    else:
        for r in results:
            print(
                f"{r['task']:<8} [{r['interpretation']}] "
                f"bounds [{r['lo']}, {r['hi']}] -> {r['category']}"
            )
    return 0


def _cmd_check(args) -> int:
    specs = _parse_file(args.file)
    cfg = ClassificationConfig(theta=args.theta)
    interp = INTERP_NAMES[args.interp]
    for spec in specs:
        assessment, _ = lower(spec, interp, cfg)
        verdict = check_coherence(assessment, spec.atoms)
        if isinstance(verdict, Coherent):
            masses = ", ".join(str(m) for m in verdict.witness)
            print(f"{spec.name}: coherent; witness masses ({masses})")
        else:
            print(
                f"{spec.name}: incoherent at level {verdict.level}: "
                f"{verdict.description}"
            )
    return 0


def _cmd_corpus(args) -> int:
    cfg = ClassificationConfig(theta=args.theta)
    report = agreement_report(cfg)
    if args.json:
        print(json.dumps(report_structured(report), indent=2, sort_keys=True))
    else:
        sys.stdout.write(report_text(report))
    return 0


def _cmd_counterfactual(args) -> int:
    c = _parse_formula_arg(args.c)
    b = _parse_formula_arg(args.b)
    a = _parse_formula_arg(args.a)
    atoms = sorted(atoms_of(c) | atoms_of(b) | atoms_of(a))
    if not (0 <= args.p <= 1):
        raise SystemExit1(f"--p must be in [0, 1], got {args.p}")
    try:
        quantity = crq_of(c, b, args.p, atoms)
    except ValueError as err:
        raise SystemExit1(str(err))
    print(f"quantity ({c} | {b}) with void value {args.p} over atoms {', '.join(atoms)}:")
    from .events import constituents

    for v, val in zip(constituents(atoms), quantity.values):
        bits = " ".join(f"{k}={'T' if v[k] else 'F'}" for k in atoms)
        print(f"  {bits}: {val}")
    try:
        value = nested_prevision(c, b, a, args.p, atoms)
    except ValueError as err:
        raise SystemExit1(str(err))
    print(f"prevision of (({c} | {b}) | {a}) = {value}")
    return 0


def _read_table(path: str) -> ContingencyTable:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = [
                [int(cell) for cell in row]
                for row in csv.reader(fh)
                if row
            ]
    except OSError as err:
        raise SystemExit1(f"cannot read {path}: {err}")
    except ValueError as err:
        raise SystemExit1(f"{path}: malformed integer table: {err}")
    try:
        return ContingencyTable(tuple(tuple(r) for r in rows))
    except ValueError as err:
        raise SystemExit1(f"{path}: {err}")


def _cmd_stats(args) -> int:
    if args.stats_command == "fisher":
        table = _read_table(args.table)
        try:
            p = fisher_exact_2x2(table)
        except ValueError as err:
            raise SystemExit1(str(err))
        print(f"p = {p} (~{float(p):.6g})")
        return 0
    if args.stats_command == "mc":
        table = _read_table(args.table)
        try:
            res = monte_carlo_rxc(table, args.iters, args.seed)
        except ValueError as err:
            raise SystemExit1(str(err))
        print(
            f"p ~= {res.p_estimate:.6f} +/- {res.halfwidth_99:.6f} "
            f"(99% half-width, {res.iters} iterations, seed {res.seed})"
        )
        return 0
    try:
        pvals = [float(x) for x in args.pvals.split(",") if x.strip()]
        decisions = holm_bonferroni(pvals, args.alpha)
    except ValueError as err:
        raise SystemExit1(str(err))
    for p, rej in zip(pvals, decisions):
        print(f"p = {p:g}: {'reject' if rej else 'keep'}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        # argparse exits 2 on usage errors; the contract here is 1
        return 0 if err.code in (0, None) else 1
    handlers = {
        "eval": _cmd_eval,
        "check": _cmd_check,
        "corpus": _cmd_corpus,
        "counterfactual": _cmd_counterfactual,
        "stats": _cmd_stats,
    }
    try:
        return handlers[args.command](args)
    except SystemExit1 as err:
        sys.stderr.write(f"error: {err}\n")
        return 1
    except (ParseError, ValueError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
