"""Embedding of the intuitionistic Δ-logic into its classical counterpart.

Atoms become ``box q`` and implications become ``box (a -> b)``, so
intuitionistic forcing at a world matches classical forcing of the image on
a model with the same neighborhoods.

By default the translation recurses under ``delta``. With
``literal_delta=True`` it leaves ``delta g`` untouched. That variant breaks
the pointwise correspondence, and it is kept so the failure can be shown.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bits import members, subset
from .formula import And, Atom, Bot, Box, Delta, Formula, Imp, Or, IML1_FRAGMENT
from .nmodel import Condition, FrameError, NModel, Semantics, check_conditions
from .search import enumerate_all_models

CL24_CONDITIONS = (Condition.BASE, Condition.DELTA, Condition.ARROW)


def star(f: Formula, literal_delta: bool = False) -> Formula:
    bad = IML1_FRAGMENT.first_violation(f)
    if bad is not None:
        raise ValueError(f"{type(bad).__name__} cannot be translated")
    return _star(f, literal_delta)


def _star(f: Formula, literal: bool) -> Formula:
    match f:
        case Atom():
            return Box(f)
        case Bot():
            return f
        case And(l, r):
            return And(_star(l, literal), _star(r, literal))
        case Or(l, r):
            return Or(_star(l, literal), _star(r, literal))
        case Imp(l, r):
            return Box(Imp(_star(l, literal), _star(r, literal)))
        case Delta(b):
            return f if literal else Delta(_star(b, literal))
    raise TypeError(f"not a formula: {f!r}")


def _require(model: NModel, semantics: Semantics) -> None:
    if model.semantics is not semantics:
        raise ValueError(f"expected a {semantics.value} model")
    report = check_conditions(model.frame, CL24_CONDITIONS)
    if not report.ok:
        raise FrameError(str(report.failed()[0]))


def to_intuitionistic(m: NModel) -> NModel:
    """Same neighborhoods; q holds where min(v) lies inside the classical V(q)."""
    _require(m, Semantics.CLASSICAL)
    fr = m.frame
    val = {
        q: sum(1 << v for v in range(fr.n) if subset(fr.min[v], vq))
        for q, vq in m.valuation.items()
    }
    return NModel(fr, val, Semantics.INTUITIONISTIC)


def to_classical(m: NModel) -> NModel:
    _require(m, Semantics.INTUITIONISTIC)
    return NModel(m.frame, m.valuation, Semantics.CLASSICAL)


@dataclass(frozen=True)
class TranslationCheck:
    ok: bool
    world: str | None = None
    intuitionistic: bool | None = None
    classical: bool | None = None


def verify_translation(m: NModel, f: Formula, literal_delta: bool = False) -> TranslationCheck:
    """Compare ``f`` on the intuitionistic side with ``star(f)`` on the classical side."""
    g = star(f, literal_delta)
    if m.semantics is Semantics.CLASSICAL:
        intu, clas = to_intuitionistic(m), m
    else:
        intu, clas = m, to_classical(m)
    a, b = intu.ext(f), clas.ext(g)
    diff = a ^ b
    if not diff:
        return TranslationCheck(True)
    i = next(members(diff))
    return TranslationCheck(False, m.frame.worlds[i], bool(a >> i & 1), bool(b >> i & 1))


def translation_sweep(
    models: Iterable[NModel], formulas: Iterable[Formula], literal_delta: bool = False,
) -> tuple[NModel, Formula, TranslationCheck] | None:
    """First (model, formula, check) where the pointwise correspondence fails.

    Counterparts are built once per model so evaluation caches are shared
    across the whole formula list.
    """
    pairs = [(f, star(f, literal_delta)) for f in formulas]
    for m in models:
        if m.semantics is Semantics.CLASSICAL:
            intu, clas = to_intuitionistic(m), m
        else:
            intu, clas = m, to_classical(m)
        for f, g in pairs:
            diff = intu.ext(f) ^ clas.ext(g)
            if diff:
                i = next(members(diff))
                check = TranslationCheck(False, m.frame.worlds[i], bool(intu.ext(f) >> i & 1), bool(clas.ext(g) >> i & 1))
                return m, f, check
    return None


def bounded_transfer(
    formulas: Iterable[Formula], max_worlds: int = 3, vars: Iterable[str] = ("p", "q"),
    literal_delta: bool = False,
) -> list[tuple[Formula, bool, bool]]:
    """Per formula: (f, valid on small IML1 models, image valid on small CL2.4 models)."""
    vars = list(vars)
    formulas = list(formulas)
    images = [star(f, literal_delta) for f in formulas]
    intu = [True] * len(formulas)
    clas = [True] * len(formulas)
    for m in enumerate_all_models(max_worlds, CL24_CONDITIONS, vars, Semantics.INTUITIONISTIC):
        for k, f in enumerate(formulas):
            if intu[k] and m.ext(f) != m.frame.full:
                intu[k] = False
    for m in enumerate_all_models(max_worlds, CL24_CONDITIONS, vars, Semantics.CLASSICAL):
        for k, g in enumerate(images):
            if clas[k] and m.ext(g) != m.frame.full:
                clas[k] = False
    return list(zip(formulas, intu, clas))
