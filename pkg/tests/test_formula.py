import pytest
from hypothesis import given

from imlkit.formula import (
    BOT, DEGREE_FRAGMENT, IML1_FRAGMENT, INTUITIONISTIC_FRAGMENT, TOP, And, Atom, Bot, Box, Delta, Dia,
    FormulaSyntaxError, Heart, Imp, MaxImp, Nabla, Or, atoms, degree, enumerate_formulas, instantiate_schema,
    neg, parse, pretty, size, subformulas,
)
from strategies import formulas

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.parametrize("text, expected", [
    ("p & q | r", Or(And(p, q), r)),
    ("p | q & r", Or(p, And(q, r))),
    ("p -> q -> r", Imp(p, Imp(q, r))),
    ("p ~> q -> r", MaxImp(p, Imp(q, r))),
    ("!p", Imp(p, BOT)),
    ("~p", MaxImp(p, BOT)),
    ("top", TOP),
    ("delta !p & q", And(Delta(neg(p)), q)),
    ("nabla dia heart box p", Nabla(Dia(Heart(Box(p))))),
    ("(p -> q) -> r", Imp(Imp(p, q), r)),
    ("  bot  ", Bot()),
])
def test_parse_precedence(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize("text, offset", [
    ("p &", 3), ("", 0), ("(p", 2), ("p q", 2), ("p -> -> q", 5), ("delta", 5),
])
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(FormulaSyntaxError) as e:
        parse(text)
    assert e.value.offset == offset
    assert e.value.expected


@pytest.mark.parametrize("text, offset", [("P", 0), ("p & Q", 4), ("p => q", 2), ("p ∧ q", 2)])
def test_lexical_errors(text, offset):
    with pytest.raises(FormulaSyntaxError) as e:
        parse(text)
    assert e.value.offset == offset


@given(formulas(INTUITIONISTIC_FRAGMENT, max_size=12))
def test_pretty_round_trips(f):
    assert parse(pretty(f)) == f


@pytest.mark.parametrize("text, sz, deg", [
    ("p", 1, 0), ("!p", 3, 1), ("delta p", 2, 1), ("delta (p -> delta q)", 5, 3),
    ("nabla p & dia q", 5, 1), ("p ~> q", 3, 1), ("p & q | r", 5, 0), ("heart box p", 3, 2),
])
def test_size_and_degree(text, sz, deg):
    f = parse(text)
    assert (size(f), degree(f)) == (sz, deg)


def test_subformulas_and_atoms():
    f = parse("delta (p -> q) & p")
    subs = subformulas(f)
    assert f in subs and p in subs and Delta(Imp(p, q)) in subs
    assert len(subs) == len(set(subs))
    assert atoms(f) == ["p", "q"]


def test_instantiate_schema():
    f = instantiate_schema("delta (phi -> psi) -> delta phi -> delta psi", {"phi": "p & q", "psi": "r"})
    assert f == parse("delta (p & q -> r) -> delta (p & q) -> delta r")


def test_enumeration_respects_bounds_and_fragment():
    seen = list(enumerate_formulas(["p"], DEGREE_FRAGMENT, 2, 5))
    assert len(seen) == len(set(seen))
    assert all(size(f) <= 5 and degree(f) <= 2 and DEGREE_FRAGMENT.allows(f) for f in seen)
    assert Delta(Delta(p)) in seen and MaxImp(p, p) in seen
    assert all(not isinstance(f, Nabla) for f in seen)


def test_enumeration_is_complete_for_small_sizes():
    got = set(enumerate_formulas(["p"], IML1_FRAGMENT, 1, 3))
    expected = {p, Bot(), Delta(p), Delta(Bot())}
    expected |= {k(a, b) for k in (And, Or, Imp) for a in (p, Bot()) for b in (p, Bot())}
    assert expected <= got
    assert Delta(Delta(p)) not in got
    assert all(size(f) <= 3 and degree(f) <= 1 for f in got)


def test_fragment_reports_first_violation():
    f = parse("p & nabla q")
    assert IML1_FRAGMENT.first_violation(f) == Nabla(q)
    assert INTUITIONISTIC_FRAGMENT.allows(f)


@given(formulas(IML1_FRAGMENT))
def test_random_formulas_stay_in_fragment(f):
    assert IML1_FRAGMENT.allows(f)
