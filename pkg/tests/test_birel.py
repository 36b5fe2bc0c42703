import pytest
from hypothesis import given

from imlkit.birel import (
    BrFrame, BrModel, birel_to_nbhd, br_force, filtrate, nbhd_to_birel, validate_br,
)
from imlkit.fixtures import delta_violation_model
from imlkit.formula import IML1_FRAGMENT, parse, subformulas
from imlkit.nmodel import FrameError, NModel, SemanticsError, check_conditions, force
from strategies import brmodels, formulas

ID_WV = [("w", "w"), ("v", "v"), ("w", "v")]


def test_validate_br_examples():
    assert validate_br(BrFrame.from_pairs("wv", ID_WV, ID_WV)).ok
    bad = validate_br(BrFrame.from_pairs("wv", [("w", "w")], [("w", "w")]))
    assert bad["reflexive"].witness == ("v",)
    r = ID_WV + [("v", "u"), ("u", "u")]
    bad = validate_br(BrFrame.from_pairs("wvu", ID_WV + [("u", "u")], r))
    assert bad["leq_r_in_r"].witness == ("w", "v", "u")
    assert bad["transitive"] is None and bad["leq_in_r"] is None


def test_antisymmetry_is_optional():
    loop = [("w", "w"), ("v", "v"), ("w", "v"), ("v", "w")]
    fr = BrFrame.from_pairs("wv", loop, loop)
    assert validate_br(fr).ok
    assert not validate_br(fr, antisymmetry=True).ok


def test_br_force_examples():
    one = BrModel.from_pairs("w", [("w", "w")], [("w", "w")], {"p": ["w"]})
    assert br_force(one, "w", parse("delta p"))
    chain = BrModel.from_pairs("wv", ID_WV, ID_WV, {"p": ["v"]})
    assert br_force(chain, "w", parse("p -> p"))
    r = [("w", "w"), ("v", "v"), ("w", "v")]
    leq = [("w", "w"), ("v", "v")]
    assert br_force(BrModel.from_pairs("wv", leq, r, {"p": "wv"}), "w", parse("delta p"))
    assert not br_force(BrModel.from_pairs("wv", leq, r, {"p": "w"}), "w", parse("delta p"))


def test_br_force_rejects_other_connectives():
    one = BrModel.from_pairs("w", [("w", "w")], [("w", "w")])
    with pytest.raises(SemanticsError):
        br_force(one, "w", parse("nabla p"))


def test_br_model_rejects_non_hereditary_valuation():
    with pytest.raises(FrameError):
        BrModel.from_pairs("wv", ID_WV, ID_WV, {"p": ["w"]})


def test_birel_to_nbhd_example():
    leq = ID_WV + [("u", "u")]
    r = leq + [("w", "u"), ("v", "u")]
    nb = birel_to_nbhd(BrModel.from_pairs("wvu", leq, r))
    assert nb.frame.min_of("w") == {"w", "v"} and nb.frame.max_of("w") == {"w", "v", "u"}
    assert check_conditions(nb.frame, ["base", "arrow", "delta"]).ok


def test_nbhd_to_birel_rejects_non_iml1_frames():
    with pytest.raises(FrameError, match=r"delta fails at \(w, v\)"):
        nbhd_to_birel(delta_violation_model())


def test_one_world_conversion():
    m = NModel.from_sets("w", {"w": "w"}, {"w": "w"}, {})
    br = nbhd_to_birel(m)
    assert br.frame.pairs("leq") == [("w", "w")] == br.frame.pairs("r")


@given(brmodels(), formulas())
def test_conversions_preserve_forcing(br, f):
    nb = birel_to_nbhd(br)
    assert check_conditions(nb.frame, ["base", "arrow", "delta"]).ok
    for w in br.frame.worlds:
        assert br_force(br, w, f) == force(nb, w, f)


@given(brmodels())
def test_round_trips_are_identities(br):
    nb = birel_to_nbhd(br)
    back = nbhd_to_birel(nb)
    assert back.frame.pairs("leq") == br.frame.pairs("leq")
    assert back.frame.pairs("r") == br.frame.pairs("r")
    assert back.valuation == br.valuation
    assert birel_to_nbhd(back).frame.to_sets() == nb.frame.to_sets()


def test_filtration_on_atom_gives_two_classes():
    leq = ID_WV + [("u", "u")]
    m = BrModel.from_pairs("wvu", leq, leq, {"p": ["v", "u"]})
    fm = filtrate(m, parse("p"))
    assert fm.class_of == {"w": "w", "v": "v", "u": "v"}
    assert fm.model.frame.worlds == ("w", "v")


def test_filtration_rejects_other_connectives():
    m = BrModel.from_pairs("w", [("w", "w")], [("w", "w")])
    with pytest.raises(SemanticsError):
        filtrate(m, parse("nabla p"))


@given(brmodels(max_worlds=6), formulas(IML1_FRAGMENT, max_size=8))
def test_filtration_preserves_subformulas(m, gamma):
    fm = filtrate(m, gamma)
    q = fm.model
    assert validate_br(q.frame).ok
    assert q.frame.n <= 2 ** len(subformulas(gamma))
    for a in subformulas(gamma):
        for w in m.frame.worlds:
            assert br_force(m, w, a) == br_force(q, fm.class_of[w], a)
    # the original relations embed into the quotient ones
    leq, r = set(q.frame.pairs("leq")), set(q.frame.pairs("r"))
    assert all((fm.class_of[a], fm.class_of[b]) in leq for a, b in m.frame.pairs("leq"))
    assert all((fm.class_of[a], fm.class_of[b]) in r for a, b in m.frame.pairs("r"))


@given(brmodels(max_worlds=6), formulas(IML1_FRAGMENT, max_size=8))
def test_refutations_survive_filtration(m, gamma):
    fm = filtrate(m, gamma)
    if m.ext(gamma) != m.frame.full:
        assert fm.model.ext(gamma) != fm.model.frame.full
