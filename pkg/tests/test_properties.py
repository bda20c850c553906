"""Property tests over small frameworks drawn by hypothesis."""
from itertools import combinations

from hypothesis import given, settings, strategies as st

from oracle import Oracle
from prioaba import DefeatKind, Lifting, make_framework, parse, serialize, supports
from prioaba.deduction import EMPTY, FULL, ClosureMode
from prioaba.defeat import set_defeats
from prioaba.preference import min_values, minbar_values
from prioaba.semantics import Context, is_conflict_free
from prioaba.syntax import structure
from prioaba.verify import evaluate

LIFTS = ("emin", "amin", "aminbar")


@st.composite
def frameworks(draw, trivial=False, max_ab=4):
    n = draw(st.integers(1, max_ab))
    ab = [f"a{i}" for i in range(n)]
    pool = ab + ["s0", "s1", "s2"]
    rules = draw(st.lists(st.tuples(st.sampled_from(pool),
                                    st.lists(st.sampled_from(pool), max_size=2, unique=True)),
                          max_size=5))
    rules = [(h, b) for h, b in rules if h not in b]
    contraries = {a: draw(st.lists(st.sampled_from(pool), max_size=2, unique=True)) for a in ab}
    if trivial:
        return make_framework(ab, rules, contraries)
    values = ["v0", "v1", "v2"]
    valuation = {a: draw(st.sampled_from(values)) for a in ab}
    order = draw(st.lists(st.tuples(st.sampled_from(values), st.sampled_from(values)), max_size=3))
    return make_framework(ab, rules, contraries, valuation, order, sentences=pool, values=values)


def subsets(items):
    items = list(items)
    return [frozenset(c) for k in range(len(items) + 1) for c in combinations(items, k)]


@settings(max_examples=60, deadline=None)
@given(frameworks(), st.sampled_from("fdr"), st.sampled_from(LIFTS))
def test_defeat_monotone(f, kind, lifting):
    fam = supports(f)
    subs = subsets(f.assumptions)
    for x in subs:
        for y in subs:
            if set_defeats(fam, f, kind, lifting, x, y):
                for x2 in subs:
                    if x <= x2:
                        assert set_defeats(fam, f, kind, lifting, x2, y)
                for y2 in subs:
                    if y <= y2:
                        assert set_defeats(fam, f, kind, lifting, x, y2)


@settings(max_examples=60, deadline=None)
@given(frameworks(), st.sampled_from(LIFTS))
def test_defeat_kinds_nest(f, lifting):
    fam = supports(f)
    subs = subsets(f.assumptions)
    for x in subs:
        for y in subs:
            if set_defeats(fam, f, "d", lifting, x, y):
                assert set_defeats(fam, f, "r", lifting, x, y)
                assert set_defeats(fam, f, "f", lifting, x, y)
            plain = {set_defeats(fam, f, "f", l, x, y) for l in LIFTS}
            assert len(plain) == 1


@settings(max_examples=40, deadline=None)
@given(frameworks(trivial=True), st.sampled_from(LIFTS))
def test_trivial_priorities_collapse_kinds(f, lifting):
    fam = supports(f)
    subs = subsets(f.assumptions)
    for x in subs:
        for y in subs:
            got = {set_defeats(fam, f, k, lifting, x, y) for k in "fdr"}
            assert len(got) == 1


@settings(max_examples=60, deadline=None)
@given(frameworks(), st.sampled_from("fdr"), st.sampled_from(LIFTS), st.sampled_from(["full", "empty"]))
def test_semantic_inclusions(f, kind, lifting, closure):
    ctx = Context(f, kind, lifting, FULL if closure == "full" else EMPTY)
    adm = set(ctx.masks("adm"))
    comp = set(ctx.masks("complete"))
    assert comp <= adm
    assert set(ctx.masks("grounded")) <= comp
    naive = ctx.masks("naive")
    for m in ctx.masks("stable"):
        d = f.members(m)
        assert is_conflict_free(ctx, d) and ctx.r_closed(m)
        assert any(m & ~n == 0 for n in naive)


@settings(max_examples=40, deadline=None)
@given(frameworks(max_ab=3), st.sampled_from("fdr"), st.sampled_from(LIFTS), st.data())
def test_matches_oracle(f, kind, lifting, data):
    srules = [r for r in f.rules if data.draw(st.booleans())]
    ctx = Context(f, kind, lifting, ClosureMode.custom(srules))
    o = Oracle(f)
    for s in f.sentences:
        assert o.supports(s) == supports(f).of(s)
    for sem in ("naive", "stable", "adm", "preferred", "complete", "grounded"):
        assert {f.members(m) for m in ctx.masks(sem)} == o.semantics(kind, lifting, srules, sem)


@settings(max_examples=80, deadline=None)
@given(frameworks())
def test_min_within_minbar(f):
    for d in subsets(f.assumptions):
        vals = {f.valuation[a] for a in d}
        assert min_values(f, d) <= minbar_values(f, d) <= vals
        assert bool(min_values(f, d)) == bool(d)


@settings(max_examples=60, deadline=None)
@given(frameworks())
def test_lifting_theorems(f):
    assert evaluate("LiftingChain", f, {}) == []
    assert evaluate("LiftingExistsMinbar", f, {}) == []


@settings(max_examples=40, deadline=None)
@given(frameworks(trivial=True), st.sampled_from("dr"), st.sampled_from(LIFTS),
       st.sampled_from(["full", "empty"]))
def test_trivial_values_match_plain_attack(f, kind, lifting, closure):
    assert evaluate("T5", f, {"defeat": kind, "lifting": lifting, "closure": closure}) == []


@settings(max_examples=80, deadline=None)
@given(frameworks())
def test_text_round_trip(f):
    assert structure(parse(serialize(f))) == structure(f)
