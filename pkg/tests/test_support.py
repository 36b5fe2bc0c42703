"""Fixtures, file I/O, random generators and the formula corpus."""
import json
import random

import pytest
from hypothesis import given

from imlkit import fixtures
from imlkit.birel import validate_br
from imlkit.corpus import iml1_corpus, random_corpus
from imlkit.equiv import formula_agreement
from imlkit.formula import IML1_FRAGMENT, And, Atom, Bot, Delta, Fragment, Imp, Or, parse, size
from imlkit.io import ModelFileError, dump_brmodel, dump_nmodel, load_brmodel, load_nmodel, load_worldmap
from imlkit.nmodel import Condition, check_conditions, satisfies, truth_map
from imlkit.randgen import random_brmodel
from strategies import brmodels, nmodels

C = Condition


def test_dia_model_is_not_an_f1_model():
    assert not satisfies(fixtures.dia_nondistributive_model().frame, [C.F1])


def test_nabla_dual_countermodel():
    m = fixtures.nabla_dual_countermodel()
    assert satisfies(m.frame, [C.BASE, C.ARROW, C.DELTA, C.F1]) and not satisfies(m.frame, [C.T])
    assert not truth_map(m, parse("!delta !p -> nabla p"))["w"]


def test_u_countermodel_breaks_u():
    assert check_conditions(fixtures.u_countermodel().frame, [C.U])["u"] is not None


def test_delta_pair_differs_on_delta_alpha():
    m1, m2 = fixtures.delta_undefinable_pair()
    assert truth_map(m1, parse("delta alpha"))["w"] and not truth_map(m2, parse("delta alpha"))["w"]


def test_published_nabla_pair_is_split_without_nabla():
    n1, n2 = fixtures.nabla_undefinable_pair()
    no_nabla = Fragment([Atom, Bot, And, Or, Imp, Delta])
    assert formula_agreement(n1, "w", n2, "w", ["alpha"], 2, 7, no_nabla) == parse("delta !alpha")


def test_repaired_nabla_pair():
    n1, n2 = fixtures.nabla_undefinable_repaired_pair()
    for m in (n1, n2):
        assert satisfies(m.frame, [C.BASE, C.ARROW, C.DELTA, C.F1])
    assert not truth_map(n1, parse("nabla alpha"))["w"] and truth_map(n2, parse("nabla alpha"))["w"]
    no_nabla = Fragment([Atom, Bot, And, Or, Imp, Delta])
    assert formula_agreement(n1, "w", n2, "w", ["alpha"], 3, 8, no_nabla) is None
    assert truth_map(n1, parse("dia alpha"))["w"] != truth_map(n2, parse("dia alpha"))["w"]


@given(nmodels())
def test_nmodel_json_round_trip(m):
    data = json.loads(json.dumps(dump_nmodel(m)))
    back = load_nmodel(data)
    assert back.frame.to_sets() == m.frame.to_sets() and back.valuation == m.valuation


@given(brmodels())
def test_brmodel_json_round_trip(m):
    back = load_brmodel(json.loads(json.dumps(dump_brmodel(m))))
    assert back.frame.pairs("leq") == m.frame.pairs("leq") and back.valuation == m.valuation


@pytest.mark.parametrize("data", [
    {"worlds": ["w"]},
    {"semantics": "other", "worlds": ["w"], "min": {"w": ["w"]}, "max": {"w": ["w"]}},
    {"worlds": "w", "min": {}, "max": {}},
    {"worlds": ["w"], "min": {"w": ["w"]}, "max": {"w": ["w"]}, "valuation": {"P": ["w"]}},
])
def test_malformed_model_files(data):
    with pytest.raises(ModelFileError):
        load_nmodel(data)


def test_worldmap_file():
    assert load_worldmap({"map": {"w": "a"}}) == {"w": "a"}
    with pytest.raises(ModelFileError):
        load_worldmap({"mapping": {}})


def test_random_models_are_valid_and_seeded():
    a = random_brmodel(random.Random(1), 5)
    b = random_brmodel(random.Random(1), 5)
    assert a.frame == b.frame and a.valuation == b.valuation
    for seed in range(50):
        assert validate_br(random_brmodel(random.Random(seed), 6).frame).ok


def test_corpus():
    corpus = iml1_corpus()
    assert len(corpus) == len(set(corpus)) == 130
    assert all(IML1_FRAGMENT.allows(f) for f in corpus)
    assert parse("delta (p -> q) -> delta p -> delta q") in corpus
    rc = random_corpus(7, 50, fragment=IML1_FRAGMENT)
    assert rc == random_corpus(7, 50, fragment=IML1_FRAGMENT)
    assert len(rc) == 50 and all(size(f) <= 8 for f in rc)
