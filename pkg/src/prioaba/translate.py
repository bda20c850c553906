"""Translations between prioritized and plain frameworks.

* ``translate_d2f_total``: value-tagged copy for flat, totally ordered input.
* ``translate_d2f_minbar``: paired-antecedent variant with value propagation.
* ``conjunction_closure``: adds canonical conjunctions of assumptions.
* ``translate_r2d``: contrapositive rules turning reverse defeat into defeat.
* ``single_contrary_reduction``: collapses contrary sets to one sentence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, Iterable, Mapping, Tuple

from .deduction import supports
from .framework import (OMEGA, Conj, Framework, Neg, Rule, Valued, is_flat,
                        is_total_order, make_framework, parts)
from .preference import Lifting, lifted_less


class PreconditionError(ValueError):
    """The input framework is outside the domain of a translation."""


@dataclass(frozen=True)
class TranslationResult:
    target: Framework
    assumption_map: Mapping
    set_map: Callable[[Iterable], FrozenSet]
    rule_map: Mapping[Rule, FrozenSet[Rule]]
    # rules that belong to every translated rule subset
    structural: FrozenSet[Rule] = field(default_factory=frozenset)

    def rules_for(self, source_rules: Iterable[Rule]) -> FrozenSet[Rule]:
        """Target counterpart of a subset of the source rules."""
        out = set(self.structural)
        for r in source_rules:
            out |= self.rule_map.get(r, frozenset())
        return frozenset(out)


def translate_rule_subset(result: TranslationResult, rules: Iterable[Rule]) -> FrozenSet[Rule]:
    return result.rules_for(rules)


# -- value-tagged translations -------------------------------------------------

def _extended_less(f: Framework):
    def less(a, b):
        if a is OMEGA:
            return False
        if b is OMEGA:
            return True
        return f.less(a, b)
    return less


def _min_of(vals, less):
    vs = tuple(dict.fromkeys(vals))
    return tuple(a for a in vs if not any(less(b, a) for b in vs))


def _tagged(f: Framework, rule_fn, extra_rules=()) -> TranslationResult:
    vals = tuple(f.values) + (OMEGA,)
    less = _extended_less(f)
    ab = tuple(Valued(a, f.valuation[a]) for a in f.assumptions)
    rule_map: Dict[Rule, FrozenSet[Rule]] = {}
    for r in f.rules:
        rule_map[r] = frozenset(rule_fn(r, vals, less))
    contraries = {}
    for b in f.assumptions:
        vb = f.valuation[b]
        contraries[Valued(b, vb)] = [Valued(a, al) for a in f.contrary_list(b)
                                     for al in vals if not less(al, vb)]
    structural = frozenset(extra_rules)
    all_rules = [r for rs in rule_map.values() for r in sorted(rs, key=str)]
    all_rules += sorted(structural, key=str)
    sentences = [Valued(s, v) for s in f.sentences for v in vals]
    target = make_framework(ab, all_rules, contraries, sentences=sentences)
    amap = {a: Valued(a, f.valuation[a]) for a in f.assumptions}
    return TranslationResult(target, amap, lambda d: frozenset(amap[a] for a in d),
                             rule_map, structural)


def translate_d2f_total(f: Framework, check: bool = True) -> TranslationResult:
    """Value-tagged translation for flat frameworks with a total order.

    ``check=False`` skips the precondition, which is only useful to show
    why the translation breaks on non-flat input.
    """
    if check:
        if not is_flat(f):
            raise PreconditionError("d2f-total requires a flat framework")
        if not is_total_order(f):
            raise PreconditionError("d2f-total requires a totally ordered value set")

    def rule_fn(r, vals, less):
        if r.strict:
            return [Rule(Valued(r.head, OMEGA))]
        out = []
        for tup in product(vals, repeat=len(r.body)):
            body = tuple(dict.fromkeys(Valued(b, a) for b, a in zip(r.body, tup)))
            for al in _min_of(tup, less):
                out.append(Rule(Valued(r.head, al), body))
        return out

    return _tagged(f, rule_fn)


def translate_d2f_minbar(f: Framework) -> TranslationResult:
    """Paired-antecedent translation, adequate for non-flat, non-total input.

    Every antecedent ``B`` tagged ``a`` is paired with ``B`` tagged ``g(B)``,
    its own value when ``B`` is an assumption.  The head takes a minimal
    value of the whole paired body, so a less preferred assumption used on
    the way still caps the conclusion.
    """
    def rule_fn(r, vals, less):
        if r.strict:
            return [Rule(Valued(r.head, OMEGA))]
        out = []
        for tup in product(vals, repeat=len(r.body)):
            gs = tuple(f.valuation[b] if b in f.index else a for b, a in zip(r.body, tup))
            body = [Valued(b, a) for b, a in zip(r.body, tup)]
            body += [Valued(b, g) for b, g in zip(r.body, gs)]
            body = tuple(dict.fromkeys(body))
            for al in _min_of(tup + gs, less):
                out.append(Rule(Valued(r.head, al), body))
        return out

    vals = tuple(f.values) + (OMEGA,)
    prop = [Rule(Valued(a, f.valuation[a]), (Valued(a, al),))
            for a in f.assumptions for al in vals if al != f.valuation[a]]
    return _tagged(f, rule_fn, prop)


# -- conjunctions --------------------------------------------------------------

def conjoin(items: Iterable, order: Mapping) -> object:
    """Canonical conjunction of the base parts of ``items``."""
    ps = sorted({p for x in items for p in parts(x)}, key=order.__getitem__)
    return ps[0] if len(ps) == 1 else Conj(tuple(ps))


def conjunction_rules(fc: Framework) -> FrozenSet[Rule]:
    """The introduction and elimination rules of a conjunction-closed framework."""
    out = set()
    for a in fc.assumptions:
        if isinstance(a, Conj):
            out.add(Rule(a, a.parts))
            out.update(Rule(p, (a,)) for p in a.parts)
    return frozenset(out)


def conjunction_closure(f: Framework) -> TranslationResult:
    base = [a for a in f.assumptions if not isinstance(a, Conj)]
    order = {a: i for i, a in enumerate(base)}
    conjs = [Conj(c) for k in range(2, len(base) + 1) for c in combinations(base, k)]
    intro = [Rule(c, c.parts) for c in conjs]
    elim = [Rule(p, (c,)) for c in conjs for p in c.parts]
    ab = tuple(base) + tuple(conjs)
    contraries = {a: f.contraries.get(a, frozenset()) for a in base}
    sentences = list(f.sentences) + conjs
    target = make_framework(ab, list(f.rules) + intro + elim, contraries,
                            valuation={a: f.valuation[a] for a in base},
                            order=sorted(f.leq, key=repr), sentences=sentences,
                            values=f.values)

    def set_map(delta):
        d = sorted(set(delta), key=order.__getitem__)
        return frozenset(c[0] if k == 1 else Conj(c)
                         for k in range(1, len(d) + 1) for c in combinations(d, k))

    rule_map = {r: frozenset({r}) for r in f.rules}
    return TranslationResult(target, {a: a for a in base}, set_map, rule_map,
                             frozenset(intro + elim))


def translate_r2d(fc: Framework, lifting: Lifting = Lifting.EXISTS_MIN,
                  conj_supports: bool = True, prune: bool = True) -> TranslationResult:
    """Contrapositive translation of a conjunction-closed framework.

    For each support ``D`` of a contrary of ``C`` with ``D`` strictly below
    ``C`` we add ``C -> (conj D)^neg``, where ``conj D`` conjoins the base
    parts of ``D``.  Supports may contain conjunctions unless
    ``conj_supports=False``.  With ``prune`` only the subset-minimal
    conjunctions per ``C`` are kept; the others are redundant on sets closed
    under the conjunction rules, which is every set the semantics compare.
    """
    need = {a for a in fc.assumptions if isinstance(a, Conj)}
    have = conjunction_rules(fc)
    rules = set(fc.rules)
    if not have <= rules or any(len(c.parts) < 2 for c in need):
        raise PreconditionError("r2d requires a conjunction-closed framework")
    base = [a for a in fc.assumptions if not isinstance(a, Conj)]
    if len(need) != 2 ** len(base) - 1 - len(base):
        raise PreconditionError("r2d requires a conjunction-closed framework")
    order = {a: i for i, a in enumerate(base)}
    fam = supports(fc)
    new_rules = []
    for c in fc.assumptions:
        found = []
        for b in fc.contrary_list(c):
            for m in sorted(fam.masks(b)):
                if not m:
                    continue
                delta = fc.members(m)
                if not conj_supports and any(isinstance(x, Conj) for x in delta):
                    continue
                if lifted_less(fc, lifting, delta, c):
                    found.append(frozenset(p for x in delta for p in parts(x)))
        found = list(dict.fromkeys(found))
        if prune:
            found = [x for x in found if not any(y < x for y in found)]
        new_rules += [Rule(Neg(conjoin(x, order)), (c,)) for x in found]
    new_rules = list(dict.fromkeys(new_rules))
    contraries = {a: set(fc.contraries.get(a, ())) | {Neg(a)} for a in fc.assumptions}
    sentences = list(fc.sentences) + [Neg(a) for a in fc.assumptions]
    target = make_framework(fc.assumptions, list(fc.rules) + new_rules, contraries,
                            valuation=fc.valuation, order=sorted(fc.leq, key=repr),
                            sentences=sentences, values=fc.values)
    rule_map = {r: frozenset({r}) for r in fc.rules}
    return TranslationResult(target, {a: a for a in fc.assumptions}, frozenset,
                             rule_map, frozenset(new_rules))


def single_contrary_reduction(f: Framework) -> TranslationResult:
    contraries = {}
    extra = []
    for a in f.assumptions:
        cs = f.contrary_list(a)
        contraries[a] = cs[:1]
        extra += [Rule(cs[0], (c,)) for c in cs[1:]]
    extra = list(dict.fromkeys(r for r in extra if r not in set(f.rules)))
    target = make_framework(f.assumptions, list(f.rules) + extra, contraries,
                            valuation=f.valuation, order=sorted(f.leq, key=repr),
                            sentences=f.sentences, values=f.values)
    rule_map = {r: frozenset({r}) for r in f.rules}
    return TranslationResult(target, {a: a for a in f.assumptions}, frozenset,
                             rule_map, frozenset(extra))
