import pytest

from prioaba import parse, serialize
from prioaba.syntax import ParseError, structure

SOURCE = """
# comment
assumption p. assumption q.
contrary q : nq.
rule nq <- p.
value p = v1.
value q = v2.
order v1 < v2.
"""


def test_parse_basic():
    f = parse(SOURCE)
    assert f.assumptions == ("p", "q")
    assert f.contraries["q"] == {"nq"}
    assert f.less("v1", "v2")


@pytest.mark.parametrize("name", [f"ex{i}" for i in range(1, 12)])
def test_fixture_round_trip(fixture, name):
    f = fixture(name)
    assert structure(parse(serialize(f))) == structure(f)


@pytest.mark.parametrize("text, fragment", [
    ("assumption p. assumption p.", "duplicate assumption"),
    ("assumption p. contrary q : x.", "undeclared"),
    ("assumption p. value q = 1.", "undeclared"),
    ("assumption p. value p = 1. value p = 2.", "duplicate value"),
    ("rule x <- y.", "assumptions must be nonempty"),
    ("assumption p", ""),
    ("assumption p. frobnicate q.", ""),
])
def test_errors_carry_location(text, fragment):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert fragment in str(err.value)
    assert err.value.line >= 1 and err.value.column >= 1


def test_error_position():
    with pytest.raises(ParseError) as err:
        parse("assumption p.\nassumption p.")
    assert err.value.line == 2 and str(err.value).startswith("2:")


def test_default_value_avoids_collision():
    f = parse("assumption p. assumption q. value p = _.")
    assert f.valuation["p"] == "_" and f.valuation["q"] not in ("_", "p", "q")


def test_preorder_equivalence_round_trip():
    f = parse("assumption p. assumption q. value p = a. value q = b. order a ~ b.")
    assert not f.less("a", "b") and ("a", "b") in f.leq
    assert structure(parse(serialize(f))) == structure(f)
