"""Small hand-built frames and models used as reference cases."""
from __future__ import annotations

from .nmodel import NFrame, NModel, Semantics


def _model(worlds, mn, mx, val=None, semantics=Semantics.INTUITIONISTIC) -> NModel:
    return NModel.from_sets(list(worlds), mn, mx, val or {}, semantics)


def delta_violation_model() -> NModel:
    """Delta is forced at w but not at v, even though v is in min(w)."""
    return _model(
        "wvz",
        {"w": "wv", "v": "v", "z": "z"},
        {"w": "wv", "v": "vz", "z": "z"},
        {"p": "wv"},
    )


def f1_counterframe() -> NFrame:
    return NFrame.from_sets("wvu", {"w": "wu", "v": "v", "u": "u"}, {"w": "wuv", "v": "v", "u": "u"})


def f2_counterframe() -> NFrame:
    return NFrame.from_sets("wuv", {"w": "w", "u": "u", "v": "vu"}, {"w": "wv", "u": "u", "v": "vu"})


def ps2_counterframe() -> NFrame:
    return NFrame.from_sets("wvu", {"w": "wv", "v": "v", "u": "u"}, {"w": "wv", "v": "v", "u": "uv"})


def dia_nondistributive_model() -> NModel:
    """dia (p | q) holds at w while neither dia p nor dia q does."""
    return _model("wuv", {"w": "wuv", "u": "u", "v": "v"}, {"w": "wuv", "u": "u", "v": "v"}, {"p": "u", "q": "v"})


def u_countermodel() -> NModel:
    """Breaks the U condition; !(p & nabla !p) fails at w."""
    return _model("wu", {"w": "w", "u": "u"}, {"w": "wu", "u": "u"}, {"p": "w"})


def nabla_dual_countermodel() -> NModel:
    """An F1 model without T where !delta !p -> nabla p fails at w."""
    return _model("wux", {"w": "w", "u": "ux", "x": "x"}, {"w": "wu", "u": "ux", "x": "x"}, {"p": "x"})


def delta_undefinable_pair() -> tuple[NModel, NModel]:
    """Agree at w on every delta-free formula, disagree on delta alpha."""
    m1 = NModel.from_sets(["w", "v"], {"w": ["w"], "v": ["v"]}, {"w": ["w", "v"], "v": ["v"]}, {"alpha": ["w", "v"]})
    m2 = NModel.from_sets(
        ["w", "v", "u"],
        {"w": ["w"], "v": ["v"], "u": ["u", "v"]},
        {"w": ["w", "v", "u"], "v": ["v"], "u": ["u", "v"]},
        {"alpha": ["w", "v"]},
    )
    return m1, m2


def nabla_undefinable_pair() -> tuple[NModel, NModel]:
    """Agree at w on every nabla-free formula, disagree on nabla alpha."""
    m1 = NModel.from_sets(["w", "v"], {"w": ["w"], "v": ["v"]}, {"w": ["w", "v"], "v": ["v"]}, {"alpha": []})
    m2 = NModel.from_sets(
        ["w", "v", "u"],
        {"w": ["w"], "v": ["v", "u"], "u": ["u"]},
        {"w": ["w", "v", "u"], "v": ["v", "u"], "u": ["u"]},
        {"alpha": ["u"]},
    )
    return m1, m2


def shared_neighborhood_frame() -> NFrame:
    """Two worlds whose only neighborhood is the whole space."""
    return NFrame.from_sets("wv", {"w": "wv", "v": "wv"}, {"w": "wv", "v": "wv"})


def literal_delta_counterexample() -> NModel:
    """Classical model on which leaving delta untranslated changes truth at v."""
    return _model(
        "vux",
        {"v": "v", "u": "ux", "x": "x"},
        {"v": "vu", "u": "ux", "x": "x"},
        {"p": "vu"},
        Semantics.CLASSICAL,
    )


def one_world_frame() -> NFrame:
    return NFrame(("w",), (1,), (1,))


def nabla_undefinable_repaired_pair() -> tuple[NModel, NModel]:
    """Models differing only in max(w), split by nabla alpha at w.

    They agree at w on every formula built from atoms, bot, &, |, -> and delta.

    x sits in min(v), so anything forced on max(w) in the first model is
    forced on x as well, and widening max(w) by x changes no delta-truth.
    """
    mn = {"w": ["w"], "v": ["v", "x"], "x": ["x"]}
    m1 = NModel.from_sets(["w", "v", "x"], mn, {"w": ["w", "v"], "v": ["v", "x"], "x": ["x"]}, {"alpha": ["x"]})
    m2 = NModel.from_sets(["w", "v", "x"], mn, {"w": ["w", "v", "x"], "v": ["v", "x"], "x": ["x"]}, {"alpha": ["x"]})
    return m1, m2
