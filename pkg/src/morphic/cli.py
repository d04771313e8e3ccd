"""Command-line front end: ``morphic gen | analyze | classify | taxonomy | corpus``."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from fractions import Fraction

from . import __version__
from . import analyze as an
from .core import Word, render
from .corpus import entries as corpus
from .dsl import SpecDocument, document_from_spec, load_spec, print_spec, to_spec
from .errors import ContradictionError, MorphicError, ParseError
from .generate import STREAM_BUDGET
from .taxonomy import (
    CLASS_CLAUSES,
    LABELS,
    PropertyAssignment,
    class_assignment,
    classify_evidence,
    closure,
    enumerate_classes,
    class_label,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, Fraction):
        return float(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if isinstance(x, Word):
        return render(x)
    return x


def stream_budget() -> int:
    return int(os.environ.get("MORPHIC_STREAM_BUDGET", STREAM_BUDGET))


def _read_spec(path: str) -> tuple[SpecDocument, object]:
    try:
        doc = load_spec(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return doc, to_spec(doc, stream_budget())


# ---------------------------------------------------------------------------
# commands; each returns (exit code, results, budgets, text lines)


def cmd_gen(args):
    _, spec = _read_spec(args.spec)
    w = spec.materialize(args.length)
    return EXIT_OK, {"prefix": render(w), "length": len(w)}, {"length": args.length}, [render(w)]


def _pair(text: str, what: str) -> tuple[int, int]:
    try:
        k, p = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"{what} expects K,P") from None
    return k, p


def cmd_analyze(args):
    doc, spec = _read_spec(args.spec)
    w = spec.materialize(args.length)
    res: dict = {"length": len(w), "alphabet": list(w.alphabet.letters)}
    lines = [f"prefix length {len(w)} over {' '.join(w.alphabet.letters)}"]
    if args.complexity is not None:
        prof = an.factor_complexity(w, args.complexity)
        res["complexity"] = list(prof.values)
        lines.append("p(n) for n=1.. : " + " ".join(map(str, prof.values)))
    if args.powers:
        k, p = _pair(args.powers, "--powers")
        hits = an.find_k_powers(w, k, p)
        res["powers"] = {"k": k, "max_period": p, "hits": hits[: args.limit], "count": len(hits)}
        lines.append(f"{k}-powers (period <= {p}): {len(hits)} found {hits[: args.limit]}")
    if args.overlaps is not None:
        hits = an.find_overlaps(w, args.overlaps)
        res["overlaps"] = {"max_period": args.overlaps, "hits": hits[: args.limit], "count": len(hits)}
        lines.append(f"overlaps (period <= {args.overlaps}): {len(hits)} found {hits[: args.limit]}")
    if args.cubes is not None:
        if doc.values is None:
            raise UsageError("--cubes needs a values: line in the spec file")
        hits = an.find_additive_cubes(w, doc.values, args.cubes)
        res["additive_cubes"] = {"max_block": args.cubes, "hits": hits[: args.limit], "count": len(hits)}
        lines.append(f"additive cubes (block <= {args.cubes}): {len(hits)} found {hits[: args.limit]}")
    if args.xxxr is not None:
        hits = an.find_xxxR(w, args.xxxr)
        res["xxxR"] = {"max_x": args.xxxr, "hits": hits[: args.limit], "count": len(hits)}
        lines.append(f"x x x^R (|x| <= {args.xxxr}): {len(hits)} found {hits[: args.limit]}")
    for x in args.gaps or []:
        rep = an.gap_report(w, Word.parse(w.alphabet, x))
        res.setdefault("gaps", {})[x] = {"count": rep.count, "max_gap": rep.max_gap, "first": rep.positions[:10]}
        lines.append(f"gaps of {x}: {rep.count} occurrences, max gap {rep.max_gap}")
    if args.recurrence is not None:
        rep = an.factor_recurrence(w, args.recurrence, head=len(w) // 2)
        res["recurrence"] = {
            "length": rep.length,
            "head": rep.head,
            "factors_checked": rep.factors_checked,
            "non_recurring": rep.non_recurring,
            "max_gap": rep.max_gap,
        }
        lines.append(f"length-{rep.length} factors of the first half: {rep.factors_checked}, non-recurring {rep.non_recurring}, max gap {rep.max_gap}")
    if args.freq:
        m = doc.morphism if not doc.pipeline and doc.generator is None else None
        coding = doc.coding_map if m is not None else None
        try:
            rep = an.letter_frequency(w, m, coding)
        except MorphicError as exc:
            rep = an.letter_frequency(w)
            rep.extra["theory"] = str(exc)
        res["frequency"] = {"empirical": rep.empirical, "theoretical": rep.theoretical, "residual": rep.residual, "iterations": rep.iterations}
        if rep.extra:
            res["frequency"]["note"] = rep.extra["theory"]
        for a, f in rep.empirical.items():
            theo = f" (Perron {rep.theoretical[a]:.12f})" if rep.theoretical else ""
            lines.append(f"freq {a}: {float(f):.6f}{theo}")
    if doc.morphism is not None:
        prim = an.primitivity(doc.morphism)
        res["primitivity"] = prim
        lines.append(f"primitivity exponent: {prim}")
    return EXIT_OK, res, {"length": args.length, "stream": stream_budget()}, lines


def cmd_classify(args):
    try:
        ev = PropertyAssignment.parse(args.evidence)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        closed = closure(ev)
    except ContradictionError as exc:
        res = {"consistent": False, "rule": str(exc.rule), "property": f"P{exc.prop}", "classes": []}
        return EXIT_FAIL, res, {}, [f"contradiction: {exc}"]
    labels = classify_evidence(ev)
    res = {"consistent": True, "closure": closed.as_dict(), "classes": labels}
    lines = [f"closure: {closed}", "classes: " + (" ".join(f"({x})" for x in labels) or "none")]
    return EXIT_OK, res, {}, lines


def cmd_taxonomy(args):
    found = enumerate_classes()
    out = []
    for a in found:
        lbl = class_label(a)
        out.append({"label": lbl, "description": CLASS_CLAUSES[lbl][0], "properties": a.as_dict()})
    out.sort(key=lambda d: LABELS.index(d["label"]))
    lines = [f"({d['label']}) {class_assignment(d['label'])}  {d['description']}" for d in out]
    lines.append(f"{len(out)} consistent classes out of 1024")
    return EXIT_OK, out, {}, lines


def _entry_summary(e):
    return {
        "key": e.key,
        "label": e.label,
        "title": e.title,
        "construction": e.spec.describe(),
        "evidence": {k: v for k, v in e.evidence.as_dict().items() if v is not None},
        "checks": [c.name for c in e.checks],
    }


def cmd_corpus(args):
    budget = args.budget if args.budget is not None else corpus.default_budget()
    if args.action == "list":
        rows = [_entry_summary(e) for e in corpus.list_entries()]
        lines = [f"{r['key']:<14} {('(' + r['label'] + ')') if r['label'] else '   '}  {r['title']}" for r in rows]
        return EXIT_OK, rows, {}, lines
    if args.action == "dump":
        if not args.key:
            raise UsageError("corpus dump needs an entry key")
        e = _lookup(args.key)
        texts = {"main": print_spec(document_from_spec(e.spec))}
        for name, alt in e.alternatives.items():
            try:
                texts[name] = print_spec(document_from_spec(alt))
            except ValueError:
                pass
        lines = []
        for name, t in texts.items():
            lines.append(f"# {e.key} ({name}): {e.title}")
            lines.extend(t.rstrip("\n").splitlines())
            lines.append("")
        return EXIT_OK, texts, {}, lines
    keys = [args.key] if args.key else None
    if keys:
        _lookup(args.key)
    t0 = time.perf_counter()
    reports = corpus.verify_all(budget, keys)
    elapsed = time.perf_counter() - t0
    rows, lines = [], []
    for rep in reports:
        rows.append(
            {
                "key": rep.key,
                "label": rep.label,
                "passed": rep.passed,
                "checks": [
                    {"name": r.name, "kind": r.kind, "passed": r.passed, "witness": r.witness, "seconds": round(r.seconds, 4)}
                    for r in rep.results
                ],
            }
        )
        lines.append(f"{'PASS' if rep.passed else 'FAIL'} {rep.key}")
        for r in rep.results:
            mark = "ok " if r.passed else "BAD"
            detail = "" if r.passed else f"  {r.witness}"
            if args.verbose or not r.passed:
                lines.append(f"    {mark} {r.name} [{r.seconds:.2f}s]{detail}")
    ok = all(r.passed for r in reports)
    lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} entries passed in {elapsed:.1f}s")
    return (EXIT_OK if ok else EXIT_FAIL), rows, {"verify": budget, "stream": stream_budget()}, lines


def _lookup(key):
    try:
        return corpus.get_entry(key)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS, help="output format")

    p = argparse.ArgumentParser(prog="morphic", description="Generate and analyze morphic words.")
    p.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[fmt], help="emit a prefix of the word defined by a spec file")
    g.add_argument("--spec", required=True)
    g.add_argument("--length", type=int, required=True)
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", parents=[fmt], help="run analyzers on a prefix")
    a.add_argument("--spec", required=True)
    a.add_argument("--length", type=int, required=True)
    a.add_argument("--complexity", type=int, metavar="M", help="factor complexity p(1..M)")
    a.add_argument("--powers", metavar="K,P", help="k-th powers with period <= P")
    a.add_argument("--overlaps", type=int, metavar="P", help="overlaps with period <= P")
    a.add_argument("--cubes", type=int, metavar="B", help="additive cubes with block <= B (needs values:)")
    a.add_argument("--xxxr", type=int, metavar="X", help="x x x^R with |x| <= X")
    a.add_argument("--gaps", action="append", metavar="X", help="occurrence gaps of factor X (repeatable)")
    a.add_argument("--recurrence", type=int, metavar="L", help="recurrence of length-L factors")
    a.add_argument("--freq", action="store_true", help="letter frequencies")
    a.add_argument("--limit", type=int, default=100, help="max hits listed per search")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", parents=[fmt], help="candidate classes for property evidence")
    c.add_argument("--evidence", required=True, metavar="P1=true,P10=false,...")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("taxonomy", parents=[fmt], help="taxonomy operations")
    t.add_argument("action", choices=("enumerate",))
    t.set_defaults(func=cmd_taxonomy)

    k = sub.add_parser("corpus", parents=[fmt], help="built-in example words")
    k.add_argument("action", choices=("list", "verify", "dump"))
    k.add_argument("key", nargs="?")
    k.add_argument("--budget", type=int, help="symbols per check (default: $MORPHIC_BUDGET or 100000)")
    k.add_argument("-v", "--verbose", action="store_true")
    k.set_defaults(func=cmd_corpus)
    return p


def _command_name(args) -> str:
    return f"{args.command} {args.action}" if hasattr(args, "action") else args.command


def run_command(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        code, results, budgets, lines = args.func(args)
    except ParseError as exc:
        print(f"{getattr(args, 'spec', '<spec>')}: {exc}", file=err)
        return EXIT_USAGE
    except (UsageError, MorphicError, ValueError) as exc:
        print(f"morphic: error: {exc}", file=err)
        return EXIT_USAGE
    if args.format == "json":
        inputs = {k: v for k, v in vars(args).items() if k not in ("func", "format", "command", "action")}
        doc = {
            "command": _command_name(args),
            "input": inputs,
            "results": _jsonable(results),
            "budgets": budgets,
            "version": __version__,
        }
        json.dump(doc, out, indent=2, sort_keys=False)
        out.write("\n")
    else:
        for line in lines:
            print(line, file=out)
    return code


def main(argv: list[str] | None = None) -> None:
    sys.exit(run_command(argv))
