from prioaba import DefeatKind, Lifting, supports
from prioaba.defeat import attacks, d_defeats, set_defeats


def test_attack_witnesses(fixture):
    f = fixture("ex4")
    fam = supports(f)
    assert attacks(fam, f, {"p"}, "q") == {(frozenset("p"), "nq")}
    g = fixture("ex8")
    assert attacks(supports(g), g, {"p", "q"}, "r") == {(frozenset("pq"), "s")}


def test_direct_defeat(fixture):
    f = fixture("ex4")
    assert not d_defeats(supports(f), f, Lifting.EXISTS_MIN, {"p"}, "q")
    g = fixture("ex3")
    assert d_defeats(supports(g), g, Lifting.EXISTS_MIN, {"q"}, "p")


def test_reverse_defeat(fixture):
    f = fixture("ex4")
    fam = supports(f)
    assert set_defeats(fam, f, DefeatKind.R, "emin", {"q"}, {"p"})
    assert not set_defeats(fam, f, DefeatKind.D, "emin", {"q"}, {"p"})


def test_nothing_defeats_empty_target(fixture):
    f = fixture("ex4")
    fam = supports(f)
    for k in DefeatKind:
        assert not set_defeats(fam, f, k, "emin", {"p", "q"}, ())


def test_plain_attack_ignores_lifting(fixture):
    f = fixture("ex11")
    fam = supports(f)
    got = {set_defeats(fam, f, "f", l, {"p", "q"}, {"r"}) for l in ("emin", "amin", "aminbar")}
    assert got == {True}
