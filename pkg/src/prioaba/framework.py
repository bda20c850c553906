"""Prioritized assumption-based frameworks.

A framework bundles a finite language, inference rules, candidate
assumptions, a set-valued contrariness map and a valuation of the
assumptions into a preordered set of values.  Frameworks are immutable;
every query module treats them as read-only values.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, Mapping, Tuple, Union

DEFAULT_MAX_AB = 20


class GuardrailError(ValueError):
    """Raised when a subset enumeration would exceed the assumption budget."""


@dataclass(frozen=True)
class Valued:
    """The sentence ``base`` tagged with a priority value (``A^alpha``)."""

    base: "Sentence"
    value: Hashable


@dataclass(frozen=True)
class Conj:
    """Canonical conjunction of assumptions; ``parts`` follow framework order."""

    parts: Tuple["Sentence", ...]


@dataclass(frozen=True)
class Neg:
    """Fresh contrary ``A^neg`` of an assumption."""

    of: "Sentence"


Sentence = Union[str, Valued, Conj, Neg]


class _Omega:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()


def render(s) -> str:
    """Human readable name of a sentence."""
    if isinstance(s, Valued):
        return f"{render(s.base)}^{render_value(s.value)}"
    if isinstance(s, Conj):
        return "&".join(render(p) for p in s.parts)
    if isinstance(s, Neg):
        return "!" + render(s.of)
    return str(s)


def render_value(v) -> str:
    if v is OMEGA:
        return "omega"
    if isinstance(v, frozenset):
        return "{" + ",".join(sorted(render_value(x) for x in v)) + "}"
    return str(v)


def parts(s) -> Tuple:
    """Base assumptions making up ``s`` (itself unless it is a conjunction)."""
    return s.parts if isinstance(s, Conj) else (s,)


@dataclass(frozen=True)
class Rule:
    head: Sentence
    body: Tuple[Sentence, ...] = ()

    @property
    def strict(self) -> bool:
        return not self.body

    def __str__(self):
        return f"{render(self.head)} <- {', '.join(render(b) for b in self.body)}"


@dataclass(frozen=True)
class Framework:
    sentences: Tuple[Sentence, ...]
    rules: Tuple[Rule, ...]
    assumptions: Tuple[Sentence, ...]
    contraries: Mapping[Sentence, FrozenSet[Sentence]]
    values: Tuple[Hashable, ...]
    leq: FrozenSet[Tuple[Hashable, Hashable]]
    valuation: Mapping[Sentence, Hashable]

    # -- indexing -------------------------------------------------------
    @cached_property
    def index(self) -> Dict[Sentence, int]:
        return {a: i for i, a in enumerate(self.assumptions)}

    @cached_property
    def sentence_index(self) -> Dict[Sentence, int]:
        return {s: i for i, s in enumerate(self.sentences)}

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.assumptions)) - 1

    @cached_property
    def assumption_set(self) -> FrozenSet[Sentence]:
        return frozenset(self.assumptions)

    def is_assumption(self, s) -> bool:
        return s in self.index

    def mask(self, delta: Iterable[Sentence]) -> int:
        m = 0
        for a in delta:
            m |= 1 << self.index[a]
        return m

    def members(self, m: int) -> FrozenSet[Sentence]:
        return frozenset(self.assumptions[i] for i in iter_bits(m))

    def ordered(self, m: int) -> Tuple[Sentence, ...]:
        return tuple(self.assumptions[i] for i in iter_bits(m))

    def contrary_list(self, a) -> Tuple[Sentence, ...]:
        """Contraries of ``a`` in canonical sentence order."""
        cs = self.contraries.get(a, frozenset())
        return tuple(sorted(cs, key=self.sentence_index.__getitem__))

    # -- order ------------------------------------------------------------
    @cached_property
    def lt(self) -> FrozenSet[Tuple[Hashable, Hashable]]:
        return frozenset((a, b) for a, b in self.leq if (b, a) not in self.leq)

    def less(self, a, b) -> bool:
        return (a, b) in self.lt

    def value_of(self, a):
        return self.valuation[a]

    def with_rules(self, rules: Iterable[Rule]) -> "Framework":
        return replace(self, rules=tuple(rules))


def iter_bits(m: int) -> Iterator[int]:
    i = 0
    while m:
        if m & 1:
            yield i
        m >>= 1
        i += 1


def subsets_of(m: int) -> Iterator[int]:
    """All submasks of ``m``, ascending."""
    sub = 0
    while True:
        yield sub
        if sub == m:
            return
        sub = (sub - m) & m


def max_assumptions() -> int:
    env = os.environ.get("ABA_MAX_AB")
    return int(env) if env else DEFAULT_MAX_AB


def check_guardrail(f: Framework, override: bool = False) -> None:
    limit = max_assumptions()
    if not override and len(f.assumptions) > limit:
        raise GuardrailError(
            f"framework has {len(f.assumptions)} assumptions; subset enumeration "
            f"is limited to {limit} (set ABA_MAX_AB to raise it)")


def preorder_closure(values: Iterable, pairs: Iterable[Tuple]) -> FrozenSet[Tuple]:
    vals = list(dict.fromkeys(values))
    rel = {(v, v) for v in vals}
    rel.update(pairs)
    for k in vals:
        below = [i for i in vals if (i, k) in rel]
        above = [j for j in vals if (k, j) in rel]
        for i in below:
            for j in above:
                rel.add((i, j))
    return frozenset(rel)


def normalize_preorder(f: Framework) -> Framework:
    """Replace ``leq`` by its reflexive-transitive closure."""
    closed = preorder_closure(f.values, f.leq)
    if closed == f.leq:
        return f
    return replace(f, leq=closed)


def make_framework(
    assumptions: Iterable[Sentence],
    rules: Iterable = (),
    contraries: Mapping | None = None,
    valuation: Mapping | None = None,
    order: Iterable[Tuple] = (),
    sentences: Iterable[Sentence] = (),
    values: Iterable = (),
    default_value: Hashable = "_",
) -> Framework:
    """Convenience constructor.

    ``rules`` holds :class:`Rule` objects or ``(head, body)`` pairs and
    ``order`` holds ``(lower, higher)`` pairs of the preorder.  Assumptions
    without a declared value share ``default_value``.
    """
    seen: Dict[Sentence, None] = {}

    def reg(s):
        seen.setdefault(s, None)

    for s in sentences:
        reg(s)
    ab = tuple(dict.fromkeys(assumptions))
    for a in ab:
        reg(a)
    built = []
    for r in rules:
        if not isinstance(r, Rule):
            head, body = r
            r = Rule(head, tuple(body))
        for b in r.body:
            reg(b)
        reg(r.head)
        built.append(r)
    contraries = dict(contraries or {})
    cmap = {}
    for a in ab:
        cs = contraries.get(a, ())
        if isinstance(cs, (str, Valued, Conj, Neg)):
            cs = (cs,)
        for c in cs:
            reg(c)
        cmap[a] = frozenset(cs)
    valuation = dict(valuation or {})
    vals: Dict[Hashable, None] = dict.fromkeys(values)
    val = {}
    for a in ab:
        if isinstance(a, Conj):
            continue
        v = valuation.get(a, default_value)
        val[a] = v
        vals.setdefault(v, None)
    pairs = list(order)
    for x, y in pairs:
        vals.setdefault(x, None)
        vals.setdefault(y, None)
    vtuple = tuple(vals)
    return Framework(
        sentences=tuple(seen),
        rules=tuple(dict.fromkeys(built)),
        assumptions=ab,
        contraries=cmap,
        values=vtuple,
        leq=preorder_closure(vtuple, pairs),
        valuation=val,
    )


def validate(f: Framework) -> list:
    """Return every violated well-formedness condition (empty if none)."""
    problems = []
    sents = set(f.sentences)
    if len(sents) != len(f.sentences):
        problems.append("sentence ids must be unique")
    if not f.assumptions:
        problems.append("assumptions must be nonempty")
    if len(set(f.assumptions)) != len(f.assumptions):
        problems.append("duplicate assumption")
    for a in f.assumptions:
        if a not in sents:
            problems.append(f"assumption {render(a)} is not a registered sentence")
    for a, cs in f.contraries.items():
        if a not in f.index:
            problems.append(f"contrary declared for non-assumption {render(a)}")
        for c in cs:
            if c not in sents:
                problems.append(f"contrary {render(c)} of {render(a)} is not a registered sentence")
    for r in f.rules:
        for s in (r.head, *r.body):
            if s not in sents:
                problems.append(f"rule {r} mentions unregistered sentence {render(s)}")
    if not f.values:
        problems.append("values must be nonempty")
    vals = set(f.values)
    clash = vals & sents
    if clash:
        problems.append("values and sentences must be disjoint: "
                        + ", ".join(sorted(render(s) for s in clash)))
    for x, y in f.leq:
        if x not in vals or y not in vals:
            problems.append(f"order relates unregistered value {render_value(x if x not in vals else y)}")
    if vals and preorder_closure(f.values, f.leq) != f.leq:
        problems.append("order is not a preorder (not reflexive and transitive)")
    for a in f.assumptions:
        if isinstance(a, Conj):
            for p in a.parts:
                if p not in f.valuation:
                    problems.append(f"conjunction {render(a)} has unvalued part {render(p)}")
            if list(a.parts) != sorted(set(a.parts), key=lambda p: f.index.get(p, -1)):
                problems.append(f"conjunction {render(a)} is not in canonical form")
        elif a not in f.valuation:
            problems.append(f"assumption {render(a)} has no value")
        elif f.valuation[a] not in vals:
            problems.append(f"assumption {render(a)} has unregistered value")
    return problems


def is_flat(f: Framework) -> bool:
    return not any(r.head in f.index for r in f.rules)


def is_total_order(f: Framework) -> bool:
    return all((a, b) in f.leq or (b, a) in f.leq for a in f.values for b in f.values)


def is_trivial(f: Framework) -> bool:
    """True when no assumption is strictly preferred over another."""
    vs = {f.valuation[a] for a in f.valuation}
    return not any(f.less(a, b) for a in vs for b in vs)
