"""Lifting the value preorder to comparisons between assumption sets.

Conjunction assumptions are compared through their components, so the same
functions serve plain and conjunction-closed frameworks.
"""
from __future__ import annotations

from enum import Enum
from typing import FrozenSet, Iterable

from .framework import Framework, parts


class Lifting(str, Enum):
    EXISTS_MIN = "emin"
    FORALL_MIN = "amin"
    FORALL_MINBAR = "aminbar"
    # only meaningful against conjunction targets; see lifted_less_conj
    EXISTS_MINBAR = "eminbar"


LIFTINGS = (Lifting.EXISTS_MIN, Lifting.FORALL_MIN, Lifting.FORALL_MINBAR)


def value_set(f: Framework, delta: Iterable) -> FrozenSet:
    return frozenset(f.valuation[p] for x in delta for p in parts(x))


def _minimal(f: Framework, vals: FrozenSet) -> FrozenSet:
    return frozenset(a for a in vals if not any(f.less(b, a) for b in vals))


def min_values(f: Framework, delta: Iterable) -> FrozenSet:
    return _minimal(f, value_set(f, delta))


def minbar_values(f: Framework, delta: Iterable) -> FrozenSet:
    """Values of ``delta`` not strictly above every minimal value."""
    vals = value_set(f, delta)
    mins = _minimal(f, vals)
    return frozenset(a for a in vals if any(not f.less(b, a) for b in mins))


def conj_value(f: Framework, a) -> FrozenSet:
    """Set-valued priority of a (possibly conjunctive) assumption."""
    return min_values(f, (a,))


def _compare(f: Framework, lifting: Lifting, delta, target) -> bool:
    if not delta:
        return False
    lt = f.less
    if lifting is Lifting.EXISTS_MIN:
        lo, hi = min_values(f, delta), min_values(f, (target,))
        return any(lt(b, a) for b in lo for a in hi)
    if lifting is Lifting.FORALL_MIN:
        lo, hi = min_values(f, delta), min_values(f, (target,))
        return all(lt(b, a) for b in lo for a in hi)
    lo, hi = minbar_values(f, delta), minbar_values(f, (target,))
    if lifting is Lifting.FORALL_MINBAR:
        return all(lt(b, a) for b in lo for a in hi)
    return any(all(lt(b, a) for a in hi) for b in lo)


def lifted_less(f: Framework, lifting: Lifting, delta: Iterable, a) -> bool:
    """Whether ``delta`` is strictly less preferred than the assumption ``a``.

    The empty set is never less than anything.
    """
    return _compare(f, Lifting(lifting), frozenset(delta), a)


def lifted_less_conj(f: Framework, lifting: Lifting, delta: Iterable, theta) -> bool:
    """Comparison against a conjunction assumption ``theta``."""
    for p in parts(theta):
        if p not in f.valuation:
            raise ValueError(f"{p!r} is not a valued base assumption")
    return _compare(f, Lifting(lifting), frozenset(delta), theta)


def compile_less(f: Framework, lifting: Lifting):
    """Memoized ``(delta_mask, assumption_index) -> bool`` comparator."""
    cache = {}
    lifting = Lifting(lifting)

    def less(mask: int, i: int) -> bool:
        key = (mask, i)
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = _compare(f, lifting, f.members(mask), f.assumptions[i])
        return hit

    return less

