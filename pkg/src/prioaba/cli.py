"""Command line interface: ``prioaba solve|translate|check|verify``.

Exit status is 0 on success, 1 when a checked property fails or a
counterexample is found, and 2 on usage, parse or precondition errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .deduction import EMPTY, FULL, ClosureMode
from .defeat import DefeatKind
from .framework import GuardrailError, Rule, is_flat, is_total_order, render, validate
from .preference import LIFTINGS, Lifting
from .semantics import Context, SemanticsKind
from .syntax import ParseError, _sentence, _statements, parse, serialize
from .translate import (PreconditionError, conjunction_closure, single_contrary_reduction,
                        translate_d2f_minbar, translate_d2f_total, translate_r2d)
from .verify import (THEOREMS, GeneratorConfig, check_consistency, check_contraposition,
                     demo_abaplus_admissible, find_d_r_divergence, verify_theorem)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _load(path: str):
    return parse(_read(path))


def _closure(f, spec: str) -> ClosureMode:
    if spec == "full":
        return FULL
    if spec == "empty":
        return EMPTY
    if spec.startswith("rules="):
        plain = {a for a in f.assumptions if isinstance(a, str)}
        chosen = set()
        for st in _statements(_read(spec[len("rules="):])):
            if st.keyword != "rule":
                raise UsageError(f"rule file may only contain rules (line {st.line})")
            r = Rule(_sentence(st.args[0].text, plain),
                     tuple(_sentence(t.text, plain) for t in st.args[1:]))
            if r not in f.rules:
                raise UsageError(f"rule {r} is not a rule of the framework")
            chosen.add(r)
        return ClosureMode.custom(chosen)
    raise UsageError(f"bad --closure value {spec!r}")


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _names(f, delta) -> List[str]:
    return [render(a) for a in f.assumptions if a in delta]


def _query_flags(p, semantics: bool = True):
    p.add_argument("--defeat", choices=[k.value for k in DefeatKind], default="d")
    p.add_argument("--lifting", choices=[l.value for l in LIFTINGS], default="emin")
    if semantics:
        p.add_argument("--semantics", choices=[k.value for k in SemanticsKind],
                       default="preferred")
    p.add_argument("--closure", default="full",
                   help="full, empty, or rules=<file> with a subset of the rules")


def run_solve(args) -> int:
    f = _load(args.file)
    mode = _closure(f, args.closure)
    ctx = Context(f, DefeatKind(args.defeat), Lifting(args.lifting), mode,
                  strict=args.strict_closure)
    exts = [_names(f, f.members(m)) for m in ctx.masks(SemanticsKind(args.semantics))]
    _dump({
        "query": {"defeat": args.defeat, "lifting": args.lifting,
                  "semantics": args.semantics, "closure": mode.label()},
        "extensions": exts,
        "flat": is_flat(f),
        "total_order": is_total_order(f),
    })
    return 0


def run_translate(args) -> int:
    f = _load(args.file)
    if args.mode == "d2f-total":
        res = translate_d2f_total(f)
    elif args.mode == "d2f-minbar":
        res = translate_d2f_minbar(f)
    elif args.mode == "conj":
        res = conjunction_closure(f)
    elif args.mode == "r2d":
        res = translate_r2d(f, Lifting(args.lifting))
    else:
        res = single_contrary_reduction(f)
    sys.stdout.write(serialize(res.target))
    return 0


def run_check(args) -> int:
    f = _load(args.file)
    prop = args.property
    out = {"property": prop}
    if prop == "contraposition":
        ok, bad = check_contraposition(f)
        out["witnesses"] = [{"delta": _names(f, d), "attacked": render(a), "blamed": render(b)}
                            for d, a, b in bad]
    elif prop == "consistency":
        ok, bad = check_consistency(f, DefeatKind(args.defeat), Lifting(args.lifting),
                                    _closure(f, args.closure))
        out["witnesses"] = [{"delta": _names(f, d), "assumption": render(a)} for d, a in bad]
    elif prop == "flat":
        ok = is_flat(f)
    elif prop == "total":
        ok = is_total_order(f)
    elif prop == "validate":
        out["problems"] = validate(f)
        ok = not out["problems"]
    else:
        report = demo_abaplus_admissible(f)
        out.update(report)
        ok = not report["plus_only"] and not report["admissible_only"]
    out["holds"] = ok
    _dump(out)
    return 0 if ok else 1


def run_verify(args) -> int:
    cfg = GeneratorConfig(trials=args.trials, seed=args.seed,
                          max_assumptions=args.max_assumptions, max_rules=args.max_rules,
                          max_body=args.max_body, max_values=args.max_values)
    if args.divergence:
        found = find_d_r_divergence(cfg)
        _dump(found)
        return 0
    names = THEOREMS if args.theorem == "all" else (args.theorem,)
    reports = [verify_theorem(t, cfg).to_dict() for t in names]
    _dump(reports[0] if len(reports) == 1 else reports)
    return 0 if all(not r["counterexamples"] for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="prioaba",
                                 description="Prioritized assumption-based argumentation")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="enumerate extensions")
    p.add_argument("file", help="framework source, or - for stdin")
    _query_flags(p)
    p.add_argument("--strict-closure", action="store_true",
                   help="closed sets must not derive any further sentence")
    p.set_defaults(run=run_solve)

    p = sub.add_parser("translate", help="print a translated framework")
    p.add_argument("file")
    p.add_argument("--mode", required=True,
                   choices=["d2f-total", "d2f-minbar", "conj", "r2d", "single-contrary"])
    p.add_argument("--lifting", choices=[l.value for l in LIFTINGS], default="emin",
                   help="lifting used to generate contrapositive rules (r2d)")
    p.set_defaults(run=run_translate)

    p = sub.add_parser("check", help="check a property of a framework")
    p.add_argument("file")
    p.add_argument("--property", required=True,
                   choices=["contraposition", "consistency", "flat", "total", "validate",
                            "abaplus"])
    _query_flags(p, semantics=False)
    p.set_defaults(run=run_check)

    p = sub.add_parser("verify", help="run the randomized theorem harness")
    p.add_argument("--theorem", choices=list(THEOREMS) + ["all"], default="all")
    p.add_argument("--divergence", action="store_true",
                   help="search for d/r divergences instead of checking a theorem")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-assumptions", type=int, default=5)
    p.add_argument("--max-rules", type=int, default=8)
    p.add_argument("--max-body", type=int, default=2)
    p.add_argument("--max-values", type=int, default=4)
    p.set_defaults(run=run_verify)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ParseError, PreconditionError, GuardrailError, UsageError, ValueError) as e:
        print(f"prioaba: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
