"""Postulate checks and a randomized theorem harness with shrinking.

Every theorem is checked as a set of *clauses* parametrized by a small
dictionary (lifting, closure mode, defeat kind).  A failing instance is
shrunk by dropping assumptions, rules and preference pairs while the same
clause keeps failing, and is reported together with its source text so
that it can be replayed.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field, replace
from typing import Dict, List, Optional, Tuple

from .deduction import EMPTY, FULL, ClosureMode, supports
from .defeat import DefeatKind
from .framework import (Framework, Rule, is_flat, is_total_order, is_trivial,
                        iter_bits, make_framework, preorder_closure, render)
from .preference import LIFTINGS, Lifting, _compare, minbar_values
from .semantics import REPORTED, Context, SemanticsKind
from .syntax import parse, serialize
from .translate import (conjunction_closure, translate_d2f_minbar, translate_d2f_total,
                        translate_r2d)

THEOREMS = ("T1", "T2a", "T2b", "T3", "T4", "T5", "T6", "T7",
            "Remark3", "LiftingChain", "LiftingExistsMinbar")
RULE_BUDGET = 60
CONJ_BASE_LIMIT = 3


@dataclass(frozen=True)
class GeneratorConfig:
    trials: int = 500
    max_assumptions: int = 5
    max_rules: int = 8
    max_body: int = 2
    max_values: int = 4
    order_shape: str = "random-preorder"
    flat_only: bool = False
    ensure_contraposition: bool = False
    seed: int = 0

    def __post_init__(self):
        for name in ("max_assumptions", "max_rules", "max_body", "max_values"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if self.order_shape not in ("chain", "random-preorder", "trivial"):
            raise ValueError(f"unknown order shape {self.order_shape!r}")


# -- postulates ------------------------------------------------------------------

def check_contraposition(f: Framework) -> Tuple[bool, List[Tuple[frozenset, object, object]]]:
    """Violations ``(delta, A, B)`` of closure under contraposition."""
    fam = supports(f)
    contra_masks = []
    for a in f.assumptions:
        ms = set()
        for c in f.contraries.get(a, ()):
            ms |= fam.masks(c)
        contra_masks.append(ms)
    bad = []
    for ai, a in enumerate(f.assumptions):
        for m in sorted(contra_masks[ai]):
            if not m:
                continue
            for bi in iter_bits(m):
                need = (m & ~(1 << bi)) | (1 << ai)
                if need not in contra_masks[bi]:
                    bad.append((f.members(m), a, f.assumptions[bi]))
    return (not bad, bad)


def check_consistency(f: Framework, kind=DefeatKind.D, lifting=Lifting.EXISTS_MIN,
                      closure: ClosureMode = FULL):
    """Conflict-free sets that entail a contrary of one of their members."""
    ctx = Context(f, kind, lifting, closure)
    fam = ctx.fam
    contra = []
    for a in f.assumptions:
        ms = set()
        for c in f.contraries.get(a, ()):
            ms |= fam.masks(c)
        contra.append(tuple(ms))
    bad = []
    for m in range(f.full_mask + 1):
        if not ctx.conflict_free(m):
            continue
        for i in iter_bits(m):
            if any(s & ~m == 0 for s in contra[i]):
                bad.append((f.members(m), f.assumptions[i]))
    return (not bad, bad)


# -- generation ------------------------------------------------------------------

def _order_pairs(rng: random.Random, values: List[str], shape: str) -> List[Tuple[str, str]]:
    if shape == "chain":
        return list(zip(values, values[1:]))
    pairs = []
    vs = values[:]
    rng.shuffle(vs)
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            x = rng.random()
            if x < 0.4:
                pairs.append((vs[i], vs[j]))
            elif x < 0.5:
                pairs += [(vs[i], vs[j]), (vs[j], vs[i])]
    return pairs


def _saturate(f: Framework) -> Optional[Framework]:
    """Add contrapositive rules until closed; ``None`` past the rule budget."""
    fresh: Dict[object, str] = {}
    while True:
        ok, bad = check_contraposition(f)
        if ok:
            return f
        rules = list(f.rules)
        contraries = {a: set(f.contraries.get(a, ())) for a in f.assumptions}
        for delta, a, b in bad:
            tgt = fresh.setdefault(b, f"k{f.index[b]}")
            contraries[b].add(tgt)
            body = tuple(f.ordered(f.mask((delta - {b}) | {a})))
            rules.append(Rule(tgt, body))
        if len(set(rules)) > RULE_BUDGET:
            return None
        f = make_framework(f.assumptions, rules, contraries, f.valuation,
                           sorted(f.leq, key=repr), sentences=f.sentences, values=f.values)


def generate(cfg: GeneratorConfig, i: int) -> Framework:
    """The ``i``-th instance of the stream fixed by ``cfg``."""
    rng = random.Random(f"{cfg.seed}-{i}")
    for _ in range(100):
        f = _draw(rng, cfg)
        if cfg.ensure_contraposition:
            f = _saturate(f)
            if f is None:
                continue
        return f
    raise RuntimeError("could not generate a contraposition-closed instance")


def _draw(rng: random.Random, cfg: GeneratorConfig) -> Framework:
    n = rng.randint(1, cfg.max_assumptions)
    ab = [f"a{i}" for i in range(n)]
    pool = [f"s{i}" for i in range(rng.randint(1, n + 1))]
    contraries = {}
    for a in ab:
        if rng.random() < 0.75:
            k = 1 if rng.random() < 0.8 else 2
            cands = pool + ([b for b in ab if b != a] if rng.random() < 0.15 else [])
            contraries[a] = rng.sample(cands, min(k, len(cands)))
    heads = pool + ([] if cfg.flat_only else ab)
    rules = []
    for _ in range(rng.randint(0, cfg.max_rules)):
        head = rng.choice(heads)
        size = 0 if rng.random() < 0.08 else rng.randint(1, cfg.max_body)
        cands = [s for s in ab + pool if s != head]
        body = tuple(sorted(rng.sample(cands, min(size, len(cands)))))
        rules.append(Rule(head, body))
    if cfg.order_shape == "trivial":
        values = ["v0"]
    else:
        values = [f"v{i}" for i in range(rng.randint(1, cfg.max_values))]
    valuation = {a: rng.choice(values) for a in ab}
    order = _order_pairs(rng, values, cfg.order_shape)
    return make_framework(ab, rules, contraries, valuation, order,
                          sentences=ab + pool, values=values)


# -- parameters ------------------------------------------------------------------

def _closure_params(f: Framework, rng: random.Random) -> List[dict]:
    custom = [str(r) for r in f.rules if rng.random() < 0.5]
    return [{"closure": "full"}, {"closure": "empty"},
            {"closure": "custom", "rules": custom}]


def _base_rules(f: Framework, p: dict) -> Tuple[Rule, ...]:
    if p["closure"] == "full":
        return f.rules
    if p["closure"] == "empty":
        return ()
    names = set(p.get("rules", ()))
    return tuple(r for r in f.rules if str(r) in names)


def _mode(f: Framework, p: dict) -> ClosureMode:
    if p["closure"] == "full":
        return FULL
    if p["closure"] == "empty":
        return EMPTY
    return ClosureMode.custom(_base_rules(f, p))


def theorem_config(theorem: str, cfg: GeneratorConfig) -> GeneratorConfig:
    """Theorem-specific restrictions on the generated instances."""
    if theorem in ("T1", "T2a", "T2b"):
        return replace(cfg, ensure_contraposition=True)
    if theorem == "T3":
        return replace(cfg, flat_only=True, order_shape="chain")
    if theorem == "T5":
        return replace(cfg, order_shape="trivial")
    if theorem == "Remark3":
        return replace(cfg, order_shape="chain")
    if theorem in ("T6", "T7"):
        return replace(cfg, max_assumptions=min(cfg.max_assumptions, CONJ_BASE_LIMIT))
    return cfg


def preconditions(theorem: str, f: Framework) -> bool:
    if theorem in ("T1", "T2a", "T2b"):
        return check_contraposition(f)[0]
    if theorem == "T3":
        return is_flat(f) and is_total_order(f)
    if theorem == "T5":
        return is_trivial(f)
    if theorem == "Remark3":
        return is_total_order(f)
    if theorem in ("T6", "T7"):
        return len(f.assumptions) <= CONJ_BASE_LIMIT
    return True


def param_space(theorem: str, f: Framework, rng: random.Random) -> List[dict]:
    closures = _closure_params(f, rng)
    if theorem in ("Remark3", "LiftingChain", "LiftingExistsMinbar"):
        return [{}]
    if theorem == "T4":
        return [dict(c, lifting=Lifting.FORALL_MINBAR.value) for c in closures]
    if theorem == "T6":
        return [dict(c, lifting=l.value, defeat=k) for k in ("d", "r")
                for l in LIFTINGS for c in closures]
    return [dict(c, lifting=l.value) for l in LIFTINGS for c in closures]


# -- clause evaluation -----------------------------------------------------------

def _names(f: Framework, delta) -> List[str]:
    return [render(a) for a in f.assumptions if a in delta]


def _ext(f, defeat, lifting, closure, kinds=REPORTED, fam=None):
    ctx = Context(f, defeat, lifting, closure, fam=fam)
    return {k: {f.members(m) for m in ctx.masks(k)} for k in kinds}


def _compare_sems(src: Dict, tgt: Dict, mapper) -> List[Tuple[frozenset, str]]:
    out = []
    for k in src:
        mapped = {mapper(d): d for d in src[k]}
        for img, d in mapped.items():
            if img not in tgt[k]:
                out.append((d, f"{k.value}: accepted in source only"))
        for d in tgt[k]:
            if d not in mapped:
                out.append((d, f"{k.value}: accepted in target only"))
    return out


def _lifting_pairs(f: Framework):
    for m in range(1, f.full_mask + 1):
        delta = f.members(m)
        for a in f.assumptions:
            yield delta, a


def evaluate(theorem: str, f: Framework, p: dict, cache: Optional[dict] = None) -> List[Tuple[frozenset, str]]:
    """Failing ``(delta, clause)`` pairs of one parametrized clause."""
    cache = {} if cache is None else cache
    lift = Lifting(p["lifting"]) if "lifting" in p else None
    if theorem == "T1":
        _, bad = check_consistency(f, DefeatKind.D, lift, _mode(f, p))
        return [(d, f"conflict-free set entails a contrary of {render(a)}") for d, a in bad]
    if theorem in ("T2a", "T2b"):
        mode = _mode(f, p)
        fam = cache.setdefault("fam", supports(f))
        dctx = Context(f, DefeatKind.D, lift, mode, fam=fam)
        rctx = Context(f, DefeatKind.R, lift, mode, fam=fam)
        if theorem == "T2a":
            radm = set(rctx.masks(SemanticsKind.ADMISSIBLE))
            return [(f.members(m), "d-admissible but not r-admissible")
                    for m in dctx.masks(SemanticsKind.ADMISSIBLE) if m not in radm]
        rcomp = rctx.masks(SemanticsKind.COMPLETE)
        return [(f.members(m), "d-complete set not inside any r-complete set")
                for m in dctx.masks(SemanticsKind.COMPLETE)
                if not any(m & ~r == 0 for r in rcomp)]
    if theorem in ("T3", "T4"):
        if "tau" not in cache:
            cache["tau"] = (translate_d2f_total(f) if theorem == "T3"
                            else translate_d2f_minbar(f))
        tr = cache["tau"]
        src = _ext(f, DefeatKind.D, lift, _mode(f, p))
        tmode = ClosureMode.custom(tr.rules_for(_base_rules(f, p)))
        tgt = _ext(tr.target, DefeatKind.F, Lifting.EXISTS_MIN, tmode)
        return _compare_sems(src, tgt, tr.set_map)
    if theorem == "T5":
        fam = cache.setdefault("fam", supports(f))
        mode = _mode(f, p)
        base = _ext(f, DefeatKind.F, lift, mode, fam=fam)
        out = []
        for k in (DefeatKind.D, DefeatKind.R):
            other = _ext(f, k, lift, mode, fam=fam)
            out += [(d, c.replace("source", "f").replace("target", k.value))
                    for d, c in _compare_sems(base, other, lambda d: d)]
        return out
    if theorem in ("T6", "T7"):
        if "conj" not in cache:
            cache["conj"] = conjunction_closure(f)
        cj = cache["conj"]
        fc = cj.target
        sc = cj.structural | set(_base_rules(f, p))
        if theorem == "T6":
            kind = DefeatKind(p["defeat"])
            src = _ext(f, kind, lift, _mode(f, p))
            tgt = _ext(fc, kind, lift, ClosureMode.custom(sc))
            return _compare_sems(src, tgt, cj.set_map)
        key = ("r2d", lift)
        if key not in cache:
            cache[key] = translate_r2d(fc, lift)
        rd = cache[key]
        src = _ext(fc, DefeatKind.R, lift, ClosureMode.custom(sc))
        tgt = _ext(rd.target, DefeatKind.D, lift, ClosureMode.custom(sc | rd.structural))
        return _compare_sems(src, tgt, lambda d: d)
    if theorem == "Remark3":
        out = []
        for delta, a in _lifting_pairs(f):
            got = {l: _compare(f, l, delta, a) for l in Lifting}
            if len(set(got.values())) > 1:
                out.append((delta, f"liftings disagree against {render(a)}"))
        return out
    if theorem == "LiftingChain":
        out = []
        for delta, a in _lifting_pairs(f):
            bar = _compare(f, Lifting.FORALL_MINBAR, delta, a)
            amin = _compare(f, Lifting.FORALL_MIN, delta, a)
            emin = _compare(f, Lifting.EXISTS_MIN, delta, a)
            if (bar and not amin) or (amin and not emin):
                out.append((delta, f"inclusion chain broken against {render(a)}"))
        return out
    if theorem == "LiftingExistsMinbar":
        out = []
        for delta, a in _lifting_pairs(f):
            va = f.valuation[a]
            alt = any(f.less(b, va) for b in minbar_values(f, delta))
            if alt != _compare(f, Lifting.EXISTS_MIN, delta, a):
                out.append((delta, f"minbar-exists differs from min-exists against {render(a)}"))
        return out
    raise ValueError(f"unknown theorem {theorem!r}")


# -- shrinking -------------------------------------------------------------------

def _rebuild(f: Framework, ab, rules, leq) -> Framework:
    keep = set(ab)
    dropped = set(f.assumptions) - keep
    rules = [r for r in rules if not (dropped & {r.head, *r.body})]
    contraries = {a: [c for c in f.contraries.get(a, ()) if c not in dropped] for a in ab}
    sentences = [s for s in f.sentences if s not in dropped]
    return make_framework(ab, rules, contraries, {a: f.valuation[a] for a in ab},
                          sorted(leq, key=repr), sentences=sentences, values=f.values)


def _fix_params(f: Framework, p: dict) -> dict:
    if p.get("closure") != "custom":
        return p
    names = {str(r) for r in f.rules}
    return dict(p, rules=[r for r in p.get("rules", ()) if r in names])


def _fails(theorem, f, p, clause) -> bool:
    if not preconditions(theorem, f):
        return False
    try:
        return any(c == clause for _, c in evaluate(theorem, f, _fix_params(f, p)))
    except Exception:
        return False


def shrink(theorem: str, f: Framework, p: dict, clause: str) -> Framework:
    """Greedy reduction keeping the given clause failing."""
    changed = True
    while changed:
        changed = False
        for a in f.assumptions:
            if len(f.assumptions) == 1:
                break
            g = _rebuild(f, [x for x in f.assumptions if x != a], f.rules, f.leq)
            if _fails(theorem, g, p, clause):
                f, changed = g, True
                break
        if changed:
            continue
        for r in f.rules:
            g = _rebuild(f, f.assumptions, [x for x in f.rules if x != r], f.leq)
            if _fails(theorem, g, p, clause):
                f, changed = g, True
                break
        if changed:
            continue
        for pair in sorted(f.leq - {(v, v) for v in f.values}, key=repr):
            leq = preorder_closure(f.values, f.leq - {pair})
            if leq == f.leq:
                continue
            g = _rebuild(f, f.assumptions, f.rules, leq)
            if _fails(theorem, g, p, clause):
                f, changed = g, True
                break
    return f


# -- reports -----------------------------------------------------------------------

@dataclass
class Counterexample:
    seed: str
    source: str
    params: dict
    delta: List[str]
    clause: str


@dataclass
class TheoremReport:
    theorem: str
    trials: int
    counterexamples: List[Counterexample] = field(default_factory=list)
    failed_trials: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def replay(theorem: str, cx: Counterexample) -> bool:
    """Whether a reported counterexample still fails from its source text."""
    f = parse(cx.source)
    return any(c == cx.clause and _names(f, d) == cx.delta
               for d, c in evaluate(theorem, f, _fix_params(f, cx.params)))


def verify_theorem(theorem: str, cfg: GeneratorConfig = GeneratorConfig(),
                   max_reported: int = 5) -> TheoremReport:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}")
    tcfg = theorem_config(theorem, cfg)
    report = TheoremReport(theorem, cfg.trials)
    for i in range(cfg.trials):
        f = generate(tcfg, i)
        if not preconditions(theorem, f):
            continue
        rng = random.Random(f"{cfg.seed}-{i}-params")
        cache: dict = {}
        for p in param_space(theorem, f, rng):
            bad = evaluate(theorem, f, p, cache)
            if not bad:
                continue
            report.failed_trials += 1
            if len(report.counterexamples) < max_reported:
                _, clause = bad[0]
                small = shrink(theorem, f, p, clause)
                # round-trip through text so the report replays exactly
                small = parse(serialize(small))
                sp = _fix_params(small, p)
                delta, clause = next((d, c) for d, c in evaluate(theorem, small, sp)
                                     if c == clause)
                report.counterexamples.append(Counterexample(
                    f"{cfg.seed}-{i}", serialize(small), sp, _names(small, delta), clause))
            break
    return report


# -- divergence search and the per-member defence demo ----------------------------

def find_d_r_divergence(cfg: GeneratorConfig = GeneratorConfig()) -> dict:
    """Search contraposition-closed instances for d/r divergences.

    Looks for a d-complete set that is not r-complete, and for an
    r-admissible set that is neither d-admissible nor inside one.
    """
    cfg = replace(cfg, ensure_contraposition=True)
    found: Dict[str, Optional[dict]] = {"complete": None, "admissible": None}
    for i in range(cfg.trials):
        f = generate(cfg, i)
        fam = supports(f)
        for lift in LIFTINGS:
            for mode in (FULL, EMPTY):
                d = Context(f, DefeatKind.D, lift, mode, fam=fam)
                r = Context(f, DefeatKind.R, lift, mode, fam=fam)
                base = {"seed": f"{cfg.seed}-{i}", "source": serialize(f),
                        "lifting": lift.value, "closure": mode.label()}
                if found["complete"] is None:
                    rc = set(r.masks(SemanticsKind.COMPLETE))
                    for m in d.masks(SemanticsKind.COMPLETE):
                        if m not in rc:
                            found["complete"] = dict(base, delta=_names(f, f.members(m)))
                            break
                if found["admissible"] is None:
                    dadm = d.masks(SemanticsKind.ADMISSIBLE)
                    for m in r.masks(SemanticsKind.ADMISSIBLE):
                        if not any(m & ~x == 0 for x in dadm):
                            found["admissible"] = dict(base, delta=_names(f, f.members(m)))
                            break
                if all(found.values()):
                    return found
    return found


def demo_abaplus_admissible(f: Framework) -> dict:
    """Per-member defence versus the set-based admissibility.

    A set is admissible under per-member defence when it is conflict-free
    and defeats every set that reverse-defeats one of its members on its
    own.  Both notions use reverse defeat with the existential min lifting.
    """
    if not is_flat(f):
        raise ValueError("per-member defence is only defined for flat frameworks")
    ctx = Context(f, DefeatKind.R, Lifting.EXISTS_MIN, FULL)
    every = range(f.full_mask + 1)
    attackers = [[t for t in every if ctx.defeats(t, 1 << i)] for i in range(len(f.assumptions))]
    plus = []
    for m in every:
        if not ctx.conflict_free(m):
            continue
        if all(ctx.defeats(m, t) for i in iter_bits(m) for t in attackers[i]):
            plus.append(m)
    std = ctx.masks(SemanticsKind.ADMISSIBLE)
    names = lambda ms: [_names(f, f.members(m)) for m in ms]
    return {
        "admissible_plus": names(plus),
        "admissible": names(std),
        "plus_only": names(m for m in plus if m not in std),
        "admissible_only": names(m for m in std if m not in plus),
    }
