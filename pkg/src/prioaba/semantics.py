"""Extension semantics parametrized by defeat kind, lifting and closure rules.

Candidates for every semantics except plain conflict-freeness are closed
under the full rule set, so enumeration walks the closed sets of the
framework instead of all ``2^|Ab|`` subsets.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .deduction import FULL, ClosureMode, SupportFamily, closer, supports
from .defeat import DefeatIndex, DefeatKind
from .framework import Conj, Framework, check_guardrail, iter_bits, parts
from .preference import Lifting


class SemanticsKind(str, Enum):
    CONFLICT_FREE = "cf"
    NAIVE = "naive"
    ADMISSIBLE = "adm"
    COMPLETE = "complete"
    PREFERRED = "preferred"
    GROUNDED = "grounded"
    STABLE = "stable"


REPORTED = (SemanticsKind.NAIVE, SemanticsKind.GROUNDED,
            SemanticsKind.PREFERRED, SemanticsKind.STABLE)


@dataclass(frozen=True)
class Query:
    defeat: DefeatKind
    lifting: Lifting
    closure: ClosureMode
    semantics: SemanticsKind


@dataclass(frozen=True)
class ExtensionSet:
    query: Query
    extensions: Tuple[FrozenSet, ...]


def canonical_key(m: int) -> Tuple[int, ...]:
    return tuple(iter_bits(m))


def maximal(masks: Iterable[int]) -> List[int]:
    ms = list(masks)
    return [m for m in ms if not any(o != m and m & ~o == 0 for o in ms)]


def minimal(masks: Iterable[int]) -> List[int]:
    ms = list(masks)
    return [m for m in ms if not any(o != m and o & ~m == 0 for o in ms)]


def stable_target(f: Framework, i: int) -> int:
    """The set an outsider assumption must be defeated through.

    A conjunction stands for itself together with every sub-conjunction and
    component, since it carries no contraries of its own before the
    contrapositive translation.
    """
    a = f.assumptions[i]
    if not isinstance(a, Conj):
        return 1 << i
    ps = set(parts(a))
    return f.mask(x for x in f.assumptions if set(parts(x)) <= ps)


class Context:
    """All the machinery for one (framework, defeat, lifting, closure) query."""

    def __init__(self, f: Framework, defeat: DefeatKind = DefeatKind.D,
                 lifting: Lifting = Lifting.EXISTS_MIN, closure: ClosureMode = FULL,
                 fam: Optional[SupportFamily] = None, strict: bool = False,
                 override: bool = False):
        check_guardrail(f, override)
        self.f = f
        self.defeat = DefeatKind(defeat)
        self.lifting = Lifting(lifting)
        self.closure = closure
        self.strict = strict
        self.fam = fam if fam is not None else supports(f)
        self.index = DefeatIndex(self.fam, self.lifting)
        self.s_closer = closer(f, closure)
        self.r_closer = self.s_closer if closure.kind == "full" else closer(f, FULL)
        self._within: Dict[int, List[int]] = {}

    @cached_property
    def s_family(self) -> List[int]:
        return self.s_closer.closed_family(self.strict)

    @cached_property
    def r_family(self) -> List[int]:
        return self.r_closer.closed_family(self.strict)

    def r_closed(self, m: int) -> bool:
        return self.r_closer.is_closed(m, self.strict)

    def defeats(self, att: int, tgt: int) -> bool:
        return self.index.defeats(self.defeat, att, tgt)

    def closed_within(self, m: int) -> List[int]:
        """Maximal closed subsets of ``m`` (defeat is monotone in the attacker)."""
        hit = self._within.get(m)
        if hit is None:
            hit = self._within[m] = maximal(c for c in self.s_family if c & ~m == 0)
        return hit

    # -- predicates on masks ------------------------------------------------
    def conflict_free(self, m: int) -> bool:
        return not any(self.defeats(c, m) for c in self.closed_within(m))

    def defends(self, d: int, t: int) -> bool:
        guards = self.closed_within(d)
        for th in self.s_family:
            if self.defeats(th, t) and not any(self.defeats(g, th) for g in guards):
                return False
        return True

    def admissible(self, m: int) -> bool:
        # defeat is monotone in the target, so defending m covers its subsets
        return self.r_closed(m) and self.conflict_free(m) and self.defends(m, m)

    def complete(self, m: int) -> bool:
        return self.admissible(m) and all(
            t & ~m == 0 for t in self.s_family if self.defends(m, t))

    def stable(self, m: int) -> bool:
        if not (self.r_closed(m) and self.conflict_free(m)):
            return False
        outside = self.f.full_mask & ~m
        return all(self.defeats(m, stable_target(self.f, i)) for i in iter_bits(outside))

    # -- enumeration ------------------------------------------------------------
    def masks(self, kind: SemanticsKind) -> List[int]:
        kind = SemanticsKind(kind)
        if kind is SemanticsKind.CONFLICT_FREE:
            found = [m for m in range(self.f.full_mask + 1) if self.conflict_free(m)]
        elif kind is SemanticsKind.NAIVE:
            found = maximal(m for m in self.r_family if self.conflict_free(m))
        elif kind is SemanticsKind.ADMISSIBLE:
            found = self._admissible
        elif kind is SemanticsKind.COMPLETE:
            found = self._complete
        elif kind is SemanticsKind.PREFERRED:
            found = maximal(self._admissible)
        elif kind is SemanticsKind.GROUNDED:
            found = minimal(self._complete)
        else:
            found = [m for m in self.r_family if self.stable(m)]
        return sorted(found, key=canonical_key)

    @cached_property
    def _admissible(self) -> List[int]:
        return [m for m in self.r_family if self.admissible(m)]

    @cached_property
    def _complete(self) -> List[int]:
        return [m for m in self._admissible
                if all(t & ~m == 0 for t in self.s_family if self.defends(m, t))]


def is_conflict_free(ctx: Context, delta: Iterable) -> bool:
    return ctx.conflict_free(ctx.f.mask(delta))


def defends(ctx: Context, delta: Iterable, target: Iterable) -> bool:
    return ctx.defends(ctx.f.mask(delta), ctx.f.mask(target))


def enumerate_extensions(ctx: Context, kind: SemanticsKind) -> ExtensionSet:
    kind = SemanticsKind(kind)
    q = Query(ctx.defeat, ctx.lifting, ctx.closure, kind)
    return ExtensionSet(q, tuple(ctx.f.members(m) for m in ctx.masks(kind)))


def solve(f: Framework, defeat="d", lifting="emin", semantics="complete",
          closure: ClosureMode = FULL, strict: bool = False) -> ExtensionSet:
    """One-shot convenience wrapper around :class:`Context`."""
    ctx = Context(f, DefeatKind(defeat), Lifting(lifting), closure, strict=strict)
    return enumerate_extensions(ctx, SemanticsKind(semantics))
