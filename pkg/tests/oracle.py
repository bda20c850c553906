"""Deliberately naive reference implementation used as a test oracle.

Works on plain frozensets, enumerates deduction trees and subsets
literally, and shares no code with the package beyond the Framework data.
Only meant for tiny frameworks.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations


def powerset(items):
    items = list(items)
    for k in range(len(items) + 1):
        for c in combinations(items, k):
            yield frozenset(c)


class Oracle:
    def __init__(self, f):
        self.f = f
        self.ab = frozenset(f.assumptions)
        self.depth = len(f.sentences) * (len(f.rules) + 1) + 1
        self._trees = lru_cache(maxsize=None)(self._trees_impl)

    # -- deductions as explicit trees ----------------------------------------
    def _trees_impl(self, s, depth):
        """Assumption-node sets of deduction trees for ``s`` of height <= depth."""
        out = set()
        if s in self.ab:
            out.add(frozenset({s}))
        if depth == 0:
            return frozenset(out)
        own = frozenset({s}) if s in self.ab else frozenset()
        for r in self.f.rules:
            if r.head != s:
                continue
            partial = {own}
            for b in r.body:
                subs = self._trees(b, depth - 1)
                partial = {p | t for p in partial for t in subs}
            out |= partial
        return frozenset(out)

    def supports(self, s):
        return self._trees(s, self.depth)

    # -- values -----------------------------------------------------------------
    def lt(self, a, b):
        return (a, b) in self.f.leq and (b, a) not in self.f.leq

    def vals(self, delta):
        out = set()
        for x in delta:
            for p in getattr(x, "parts", (x,)):
                out.add(self.f.valuation[p])
        return out

    def mins(self, vs):
        return {a for a in vs if not any(self.lt(b, a) for b in vs)}

    def minbars(self, vs):
        m = self.mins(vs)
        return {a for a in vs if any(not self.lt(b, a) for b in m)}

    def less(self, lifting, delta, a):
        if not delta:
            return False
        lo, hi = self.vals(delta), self.vals({a})
        if lifting == "emin":
            return any(self.lt(b, c) for b in self.mins(lo) for c in self.mins(hi))
        if lifting == "amin":
            return all(self.lt(b, c) for b in self.mins(lo) for c in self.mins(hi))
        return all(self.lt(b, c) for b in self.minbars(lo) for c in self.minbars(hi))

    # -- closure ----------------------------------------------------------------
    def close(self, rules, delta):
        known = set(delta)
        changed = True
        while changed:
            changed = False
            for r in rules:
                if r.head not in known and all(b in known for b in r.body):
                    known.add(r.head)
                    changed = True
        return known

    def closed(self, rules, delta):
        return (self.close(rules, delta) & self.ab) == set(delta)

    # -- defeat -----------------------------------------------------------------
    def witnesses(self, delta, a):
        for c in self.f.contraries.get(a, ()):
            for s in self.supports(c):
                if s <= delta:
                    yield s

    def defeats(self, kind, lifting, delta, theta):
        for a in theta:
            for s in self.witnesses(delta, a):
                if kind == "f" or not self.less(lifting, s, a):
                    return True
        if kind == "r":
            for a in delta:
                for s in self.witnesses(theta, a):
                    if self.less(lifting, s, a):
                        return True
        return False

    # -- semantics --------------------------------------------------------------
    def semantics(self, kind, lifting, srules, sem):
        rules = self.f.rules
        subsets = list(powerset(self.f.assumptions))
        s_closed = [d for d in subsets if self.closed(srules, d)]
        memo = {}

        def dft(x, y):
            key = (x, y)
            if key not in memo:
                memo[key] = self.defeats(kind, lifting, x, y)
            return memo[key]

        def cf(d):
            return not any(dft(x, d) for x in s_closed if x <= d)

        def defends(d, t):
            for att in s_closed:
                if dft(att, t) and not any(dft(x, att) for x in s_closed if x <= d):
                    return False
            return True

        r_closed = [d for d in subsets if self.closed(rules, d)]
        if sem == "naive":
            cands = [d for d in r_closed if cf(d)]
            return {d for d in cands if not any(d < e for e in cands)}
        if sem == "stable":
            return {d for d in r_closed if cf(d)
                    and all(dft(d, frozenset({a})) for a in self.ab - d)}
        adm = [d for d in r_closed if cf(d) and all(defends(d, t) for t in powerset(d))]
        if sem == "adm":
            return set(adm)
        if sem == "preferred":
            return {d for d in adm if not any(d < e for e in adm)}
        comp = [d for d in adm if all(t <= d for t in s_closed if defends(d, t))]
        if sem == "complete":
            return set(comp)
        if sem == "grounded":
            return {d for d in comp if not any(e < d for e in comp)}
        raise ValueError(sem)
