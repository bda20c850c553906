import pytest

from prioaba import (OMEGA, Conj, Neg, Rule, Valued, conjunction_closure, make_framework,
                     single_contrary_reduction, translate_d2f_minbar, translate_d2f_total,
                     translate_r2d)
from prioaba.translate import PreconditionError, translate_rule_subset


def test_rule_count_total():
    f = make_framework("pq", [("x", ("p", "q"))], {"p": "x"}, {"p": 1, "q": 2}, [(1, 2)])
    res = translate_d2f_total(f)
    # three values (1, 2, omega), two antecedents; ties give no duplicates in a chain
    assert len(res.rule_map[f.rules[0]]) == 9


def test_total_preconditions(fixture):
    with pytest.raises(PreconditionError):
        translate_d2f_total(fixture("ex6"))
    with pytest.raises(PreconditionError):
        translate_d2f_total(make_framework("pq", valuation={"p": 1, "q": 2}))


def test_single_assumption_copy():
    res = translate_d2f_total(make_framework("p", valuation={"p": 1}))
    assert res.target.assumptions == (Valued("p", 1),) and res.target.rules == ()


def test_strict_rules_get_omega():
    f = make_framework("p", [Rule("x")], {"p": "x"}, {"p": 1})
    t = translate_d2f_total(f).target
    assert Rule(Valued("x", OMEGA)) in t.rules
    assert Valued("x", OMEGA) in t.contraries[Valued("p", 1)]


def test_rule_subsets(fixture):
    total = translate_d2f_total(fixture("ex5"))
    assert translate_rule_subset(total, ()) == frozenset()
    assert translate_rule_subset(total, total.rule_map) == frozenset(total.target.rules)
    minbar = translate_d2f_minbar(fixture("ex6"))
    props = translate_rule_subset(minbar, ())
    assert props and all(len(r.body) == 1 and r.body[0].base == r.head.base for r in props)


def test_minbar_trivial_values():
    f = make_framework("pq", [("x", ("p",)), ("y", ("x", "q"))], {"q": "y"})
    t = translate_d2f_minbar(f).target
    assert all(r.head.value in ("_", OMEGA) for r in t.rules)


def test_conjunction_closure_shapes(fixture):
    one = conjunction_closure(make_framework("p"))
    assert one.target.assumptions == ("p",) and not one.structural
    res = conjunction_closure(fixture("ex8"))
    assert len(res.set_map({"p", "q", "r"})) == 7
    assert res.set_map(()) == frozenset()
    assert res.set_map({"q", "r"}) == {"q", "r", Conj(("q", "r"))}


def test_r2d_requires_conjunctions(fixture):
    with pytest.raises(PreconditionError):
        translate_r2d(fixture("ex8"))


def test_r2d_without_strict_preferences():
    f = make_framework("pq", [("x", ("p",))], {"q": "x"})
    fc = conjunction_closure(f).target
    assert translate_r2d(fc).structural == frozenset()


def test_r2d_literal_supports(fixture):
    fc = conjunction_closure(fixture("ex9")).target
    unpruned = translate_r2d(fc, prune=False).structural
    assert Rule(Neg(Conj(("p", "q", "r"))), ("r",)) in unpruned
    assert translate_r2d(fc, conj_supports=False).structural == {Rule(Neg(Conj(("p", "q"))), ("r",))}


def test_single_contrary_reduction():
    f = make_framework("b", contraries={"b": ["x", "y"]})
    t = single_contrary_reduction(f).target
    assert t.contraries["b"] == {"x"} and Rule("x", ("y",)) in t.rules
    same = make_framework("ab", contraries={"a": "x"})
    assert single_contrary_reduction(same).target.rules == ()
    assert single_contrary_reduction(make_framework("a")).target.contraries["a"] == frozenset()
