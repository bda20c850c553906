"""Attack, direct defeat and reverse defeat between assumption sets."""
from __future__ import annotations

from enum import Enum
from typing import FrozenSet, Iterable, List, Set, Tuple

from .deduction import SupportFamily
from .framework import Framework, iter_bits
from .preference import Lifting, compile_less, lifted_less


class DefeatKind(str, Enum):
    F = "f"
    D = "d"
    R = "r"


def attacks(fam: SupportFamily, f: Framework, delta: Iterable, a) -> Set[Tuple[FrozenSet, object]]:
    """All witnesses ``(support, contrary)`` of ``delta`` attacking ``a``."""
    dm = f.mask(delta)
    out = set()
    for b in f.contrary_list(a):
        for s in fam.masks(b):
            if s & ~dm == 0:
                out.add((f.members(s), b))
    return out


def d_defeats(fam: SupportFamily, f: Framework, lifting: Lifting, delta: Iterable, a) -> bool:
    return any(not lifted_less(f, lifting, sup, a) for sup, _ in attacks(fam, f, delta, a))


def set_defeats(fam: SupportFamily, f: Framework, kind: DefeatKind, lifting: Lifting,
                delta: Iterable, target: Iterable) -> bool:
    idx = DefeatIndex(fam, lifting)
    return idx.defeats(DefeatKind(kind), f.mask(delta), f.mask(target))


def _minimal(masks: Iterable[int]) -> Tuple[int, ...]:
    ms = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    keep: List[int] = []
    for m in ms:
        if not any(k & ~m == 0 for k in keep):
            keep.append(m)
    return tuple(keep)


class DefeatIndex:
    """Per-assumption attack supports, split by the lifted comparison.

    Only existence of a support inside a given set is ever queried, so each
    list is reduced to its subset-minimal members.
    """

    def __init__(self, fam: SupportFamily, lifting: Lifting):
        f = fam.framework
        self.f = f
        less = compile_less(f, lifting)
        self.attack: List[Tuple[int, ...]] = []
        self.direct: List[Tuple[int, ...]] = []
        self.reverse: List[Tuple[int, ...]] = []
        for i, a in enumerate(f.assumptions):
            sup = set()
            for b in f.contraries.get(a, ()):
                sup |= fam.masks(b)
            self.attack.append(_minimal(sup))
            self.direct.append(_minimal(s for s in sup if not less(s, i)))
            self.reverse.append(_minimal(s for s in sup if less(s, i)))
        self._cache = {}

    @staticmethod
    def _hit(lists, owners: int, within: int) -> bool:
        for i in iter_bits(owners):
            for s in lists[i]:
                if s & ~within == 0:
                    return True
        return False

    def defeats(self, kind: DefeatKind, att: int, tgt: int) -> bool:
        key = (kind, att, tgt)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if kind is DefeatKind.F:
            res = self._hit(self.attack, tgt, att)
        else:
            res = self._hit(self.direct, tgt, att)
            if not res and kind is DefeatKind.R:
                # reverse: something inside the target attacks a more preferred
                # member of the attacker
                res = self._hit(self.reverse, att, tgt)
        self._cache[key] = res
        return res
