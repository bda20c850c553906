"""Deductions with exact assumption supports, and rule closures.

Assumption sets are handled internally as bitmasks over the framework's
assumption order (bit ``i`` is ``f.assumptions[i]``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .framework import Framework, Rule, Sentence, iter_bits


@dataclass(frozen=True)
class SupportFamily:
    """For every sentence, the assumption sets it is deducible from exactly."""

    framework: Framework
    table: Dict[Sentence, FrozenSet[int]]

    def masks(self, s) -> FrozenSet[int]:
        return self.table.get(s, frozenset())

    def of(self, s) -> FrozenSet[FrozenSet[Sentence]]:
        return frozenset(self.framework.members(m) for m in self.masks(s))


def supports(f: Framework, rules: Optional[Iterable[Rule]] = None) -> SupportFamily:
    """Least fixpoint of the exact-support construction.

    A support of ``A`` is the set of assumption nodes of some finite
    deduction tree rooted at ``A``.  Assumption nodes count even when they
    are not leaves, which makes the relation non-monotonic.
    """
    rules = tuple(f.rules if rules is None else rules)
    idx = f.index
    table: Dict[Sentence, set] = {s: set() for s in f.sentences}
    for a in f.assumptions:
        table[a].add(1 << idx[a])
    changed = True
    while changed:
        changed = False
        for r in rules:
            combos = {0}
            for b in r.body:
                tb = table[b]
                if not tb:
                    combos = set()
                    break
                combos = {c | s for c in combos for s in tb}
            if not combos:
                continue
            extra = 1 << idx[r.head] if r.head in idx else 0
            if extra:
                combos = {c | extra for c in combos}
            new = combos - table[r.head]
            if new:
                table[r.head] |= new
                changed = True
    return SupportFamily(f, {s: frozenset(v) for s, v in table.items()})


def derives(fam: SupportFamily, delta: Iterable[Sentence], a) -> bool:
    """``delta |- a`` with ``delta`` as the exact support."""
    return fam.framework.mask(delta) in fam.masks(a)


@dataclass(frozen=True)
class ClosureMode:
    """Which rules a closure may use: all of them, none, or a chosen subset."""

    kind: str = "full"
    rules: Optional[FrozenSet[Rule]] = None

    def resolve(self, f: Framework) -> Tuple[Rule, ...]:
        if self.kind == "full":
            return f.rules
        if self.kind == "empty":
            return ()
        chosen = self.rules or frozenset()
        return tuple(r for r in f.rules if r in chosen)

    @classmethod
    def custom(cls, rules: Iterable[Rule]) -> "ClosureMode":
        return cls("custom", frozenset(rules))

    def label(self) -> str:
        if self.kind == "custom":
            return f"custom[{len(self.rules or ())}]"
        return self.kind


FULL = ClosureMode("full")
EMPTY = ClosureMode("empty")


class Closer:
    """Forward chaining over a fixed rule set, on sentence bitmasks.

    Sentences are renumbered so that assumptions occupy the low bits, which
    makes projecting a closure back onto the assumptions a single ``&``.
    """

    def __init__(self, f: Framework, rules: Iterable[Rule]):
        self.f = f
        num = {a: i for i, a in enumerate(f.assumptions)}
        for s in f.sentences:
            if s not in num:
                num[s] = len(num)
        self.num = num
        self.compiled: List[Tuple[int, int]] = []
        for r in rules:
            body = 0
            for b in r.body:
                body |= 1 << num[b]
            self.compiled.append((body, 1 << num[r.head]))
        self.full = f.full_mask
        self._cache: Dict[int, int] = {}

    def close(self, m: int) -> int:
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        known = m
        pending = list(self.compiled)
        progress = True
        while progress:
            progress = False
            rest = []
            for body, head in pending:
                if body & ~known == 0:
                    if not known & head:
                        known |= head
                        progress = True
                else:
                    rest.append((body, head))
            pending = rest
        self._cache[m] = known
        return known

    def close_ab(self, m: int) -> int:
        return self.close(m) & self.full

    def is_closed(self, m: int, strict: bool = False) -> bool:
        c = self.close(m)
        return c == m if strict else (c & self.full) == m

    def sentences_of(self, known: int) -> FrozenSet[Sentence]:
        rev = {i: s for s, i in self.num.items()}
        return frozenset(rev[i] for i in iter_bits(known))

    def closed_family(self, strict: bool = False) -> List[int]:
        """All closed assumption sets, ascending.

        Projected closedness is a closure system, so every closed set is
        reached from the closure of the empty set by adding one assumption
        at a time and re-closing.
        """
        start = self.close_ab(0)
        seen = {start}
        frontier = [start]
        n = len(self.f.assumptions)
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(n):
                    if not c >> i & 1:
                        d = self.close_ab(c | 1 << i)
                        if d not in seen:
                            seen.add(d)
                            nxt.append(d)
            frontier = nxt
        fam = sorted(seen)
        if strict:
            fam = [m for m in fam if self.is_closed(m, strict=True)]
        return fam


def closer(f: Framework, s: ClosureMode) -> Closer:
    return Closer(f, s.resolve(f))


def closure(f: Framework, s: ClosureMode, delta: Iterable[Sentence]) -> FrozenSet[Sentence]:
    """Every sentence obtainable from ``delta`` by chaining rules of ``s``."""
    c = closer(f, s)
    return c.sentences_of(c.close(f.mask(delta)))


def closed_subsets(f: Framework, s: ClosureMode, delta: Iterable[Sentence],
                   strict: bool = False) -> FrozenSet[FrozenSet[Sentence]]:
    """The ``s``-closed subsets of ``delta``.

    By default a set is closed when chaining adds no further assumption;
    ``strict=True`` demands that chaining adds nothing at all.
    """
    c = closer(f, s)
    dm = f.mask(delta)
    return frozenset(f.members(m) for m in c.closed_family(strict) if m & ~dm == 0)
