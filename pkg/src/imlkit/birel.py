"""Bi-relational models (a preorder plus a modal relation) and filtration.

Relations are stored as successor bitmasks: ``leq[i]`` is the set of worlds
above world ``i`` and ``r[i]`` the set of worlds it sees.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .bits import mask, members, subset
from .formula import And, Atom, Bot, Delta, Formula, Imp, Or, IML1_FRAGMENT, subformulas
from .nmodel import (
    Condition, ConditionReport, FrameError, NFrame, NModel, Semantics, SemanticsError,
    Violation, check_conditions,
)


@dataclass(frozen=True)
class BrFrame:
    worlds: tuple[str, ...]
    leq: tuple[int, ...]
    r: tuple[int, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "leq", tuple(self.leq))
        object.__setattr__(self, "r", tuple(self.r))
        object.__setattr__(self, "index", {w: i for i, w in enumerate(self.worlds)})
        n = len(self.worlds)
        if n == 0 or len(self.index) != n:
            raise FrameError("worlds must be nonempty and distinct")
        if len(self.leq) != n or len(self.r) != n:
            raise FrameError("relations must cover exactly the worlds")

    @classmethod
    def from_pairs(cls, worlds: Iterable[str], leq: Iterable[tuple[str, str]], r: Iterable[tuple[str, str]]) -> BrFrame:
        worlds = tuple(worlds)
        idx = {w: i for i, w in enumerate(worlds)}
        succ = {"leq": [0] * len(worlds), "r": [0] * len(worlds)}
        for name, pairs in (("leq", leq), ("r", r)):
            for a, b in pairs:
                if a not in idx or b not in idx:
                    raise FrameError(f"{name} pair ({a}, {b}) mentions an unknown world")
                succ[name][idx[a]] |= 1 << idx[b]
        return cls(worlds, succ["leq"], succ["r"])

    @property
    def n(self) -> int:
        return len(self.worlds)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def names(self, m: int) -> list[str]:
        return [self.worlds[i] for i in members(m)]

    def pairs(self, rel: str) -> list[tuple[str, str]]:
        succ = self.leq if rel == "leq" else self.r
        return [(self.worlds[a], self.worlds[b]) for a in range(self.n) for b in members(succ[a])]


def validate_br(frame: BrFrame, antisymmetry: bool = False) -> ConditionReport:
    """Reflexivity and transitivity of leq, leq within r, and leq;r within r."""
    n, leq, r, ws = frame.n, frame.leq, frame.r, frame.worlds
    v: dict[str, Violation | None] = {}

    v["reflexive"] = next((Violation("reflexive", (ws[w],)) for w in range(n) if not leq[w] >> w & 1), None)

    def transitivity():
        for a in range(n):
            for b in members(leq[a]):
                out = leq[b] & ~leq[a]
                if out:
                    return Violation("transitive", (ws[a], ws[b], ws[next(members(out))]))
        return None

    def inclusion():
        for a in range(n):
            out = leq[a] & ~r[a]
            if out:
                return Violation("leq_in_r", (ws[a], ws[next(members(out))]))
        return None

    def composition():
        for a in range(n):
            for b in members(leq[a]):
                out = r[b] & ~r[a]
                if out:
                    return Violation("leq_r_in_r", (ws[a], ws[b], ws[next(members(out))]))
        return None

    v["transitive"] = transitivity()
    v["leq_in_r"] = inclusion()
    v["leq_r_in_r"] = composition()
    if antisymmetry:
        v["antisymmetric"] = next(
            (Violation("antisymmetric", (ws[a], ws[b]))
             for a in range(n) for b in members(leq[a]) if a != b and leq[b] >> a & 1),
            None,
        )
    return ConditionReport(v)


@dataclass(frozen=True)
class BrModel:
    frame: BrFrame
    valuation: dict[str, int]
    _cache: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "valuation", dict(self.valuation))
        report = validate_br(self.frame)
        if not report.ok:
            raise FrameError(f"not a bi-relational frame: {report.failed()[0]}")
        for q, m in self.valuation.items():
            Atom(q)
            if m & ~self.frame.full:
                raise FrameError(f"valuation of {q} mentions an unknown world")
            for w in members(m):
                out = self.frame.leq[w] & ~m
                if out:
                    u = self.frame.worlds[next(members(out))]
                    raise FrameError(f"valuation of {q} is not upward closed at ({self.frame.worlds[w]}, {u})")

    @classmethod
    def from_pairs(cls, worlds, leq, r, valuation: Mapping[str, Iterable[str]] = {}) -> BrModel:
        frame = BrFrame.from_pairs(worlds, leq, r)
        return cls(frame, {q: mask(frame.index[x] for x in ws) for q, ws in valuation.items()})

    def ext(self, f: Formula) -> int:
        cached = self._cache.get(f)
        if cached is not None:
            return cached
        r = self._eval(f)
        self._cache[f] = r
        return r

    def _eval(self, f: Formula) -> int:
        if type(f) not in IML1_FRAGMENT:
            raise SemanticsError(f"{type(f).__name__} has no bi-relational clause")
        fr = self.frame
        match f:
            case Atom(q):
                return self.valuation.get(q, 0)
            case Bot():
                return 0
            case And(l, rt):
                return self.ext(l) & self.ext(rt)
            case Or(l, rt):
                return self.ext(l) | self.ext(rt)
            case Imp(l, rt):
                ok = (~self.ext(l) | self.ext(rt)) & fr.full
                return mask(w for w in range(fr.n) if subset(fr.leq[w], ok))
            case Delta(b):
                a = self.ext(b)
                return mask(w for w in range(fr.n) if subset(fr.r[w], a))
        raise TypeError(f"not a formula: {f!r}")


def br_force(model: BrModel, world: str, f: Formula) -> bool:
    try:
        i = model.frame.index[world]
    except KeyError:
        raise KeyError(f"unknown world {world!r}") from None
    return bool(model.ext(f) >> i & 1)


# -- conversions -------------------------------------------------------------

def birel_to_nbhd(model: BrModel) -> NModel:
    """min(w) is the leq-cone of w and max(w) its r-image; same valuation."""
    fr = model.frame
    return NModel(NFrame(fr.worlds, fr.leq, fr.r), model.valuation, Semantics.INTUITIONISTIC)


IML1_CONDITIONS = (Condition.BASE, Condition.ARROW, Condition.DELTA)


def nbhd_to_birel(model: NModel) -> BrModel:
    """w leq v iff v in min(w); w r v iff v in max(w)."""
    if model.semantics is not Semantics.INTUITIONISTIC:
        raise FrameError("only intuitionistic models have a bi-relational counterpart")
    report = check_conditions(model.frame, IML1_CONDITIONS)
    if not report.ok:
        raise FrameError(f"not an IML1 frame: {report.failed()[0]}")
    fr = model.frame
    return BrModel(BrFrame(fr.worlds, fr.min, fr.max), model.valuation)


# -- filtration --------------------------------------------------------------

@dataclass(frozen=True)
class FilteredModel:
    model: BrModel
    class_of: dict[str, str]
    sigma: tuple[Formula, ...]


def filtrate(model: BrModel, gamma: Formula) -> FilteredModel:
    """Quotient ``model`` by agreement on the subformulas of ``gamma``.

    Classes are named after their first member in world order. The quotient
    preorder and relation are read off forcing in the original model.
    """
    bad = IML1_FRAGMENT.first_violation(gamma)
    if bad is not None:
        raise SemanticsError(f"{type(bad).__name__} cannot be filtrated")
    fr = model.frame
    sigma = tuple(subformulas(gamma))
    exts = [model.ext(a) for a in sigma]

    def signature(w: int) -> tuple[bool, ...]:
        return tuple(bool(e >> w & 1) for e in exts)

    reps: dict[tuple[bool, ...], int] = {}
    for w in range(fr.n):
        reps.setdefault(signature(w), w)
    classes = list(reps.values())  # representatives in world order
    class_idx = {sig: k for k, sig in enumerate(reps)}
    sigs = list(reps)

    boxed = [(k, sigma.index(a.body)) for k, a in enumerate(sigma) if isinstance(a, Delta)]
    m = len(classes)
    leq = [0] * m
    rel = [0] * m
    for i, si in enumerate(sigs):
        for j, sj in enumerate(sigs):
            if all(sj[k] for k in range(len(sigma)) if si[k]):
                leq[i] |= 1 << j
            if all(sj[b] for d, b in boxed if si[d]):
                rel[i] |= 1 << j

    names = tuple(fr.worlds[w] for w in classes)
    valuation = {}
    for q, v in model.valuation.items():
        if Atom(q) in sigma:
            valuation[q] = mask(class_idx[signature(w)] for w in members(v))
        else:
            valuation[q] = 0
    quotient = BrModel(BrFrame(names, leq, rel), valuation)
    class_of = {fr.worlds[w]: names[class_idx[signature(w)]] for w in range(fr.n)}
    return FilteredModel(quotient, class_of, sigma)
