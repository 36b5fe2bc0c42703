"""Exhaustive enumeration of small frames and models, and countermodel search."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bits import members, subset
from .formula import (
    CLASSICAL_FRAGMENT, IML1_FRAGMENT, INTUITIONISTIC_FRAGMENT, Formula, atoms, parse,
    subformulas,
)
from .nmodel import CHECKERS, Condition, NFrame, NModel, Semantics

C = Condition


@dataclass(frozen=True)
class LogicSystem:
    name: str
    semantics: Semantics
    frame_conditions: tuple[Condition, ...]
    axiom_schemata: tuple[tuple[str, Formula], ...]
    rules: tuple[str, ...] = ("MP", "RN")
    notes: tuple[str, ...] = ()

    @property
    def fragment(self):
        return INTUITIONISTIC_FRAGMENT if self.semantics is Semantics.INTUITIONISTIC else CLASSICAL_FRAGMENT

    def schema(self, name: str) -> Formula:
        return dict(self.axiom_schemata)[name]


def _schemata(*pairs: tuple[str, str]) -> tuple[tuple[str, Formula], ...]:
    return tuple((name, parse(text)) for name, text in pairs)


_K = ("K", "delta (phi -> psi) -> delta phi -> delta psi")
_T = ("T", "delta phi -> phi")
_NABLA = (
    ("K-nabla", "delta (phi -> psi) -> nabla phi -> nabla psi"),
    ("N-nabla", "!nabla bot"),
    ("C-nabla", "nabla (phi | psi) -> nabla phi | nabla psi"),
    ("T-nabla", "(delta phi -> phi) & (phi -> nabla phi)"),
)
# needs the T condition; refuted on three-world F1 frames without it
_I_NABLA = ("I-nabla", "(nabla phi -> delta psi) -> delta (phi -> psi)")
_CL1 = (
    ("K-box", "box (phi -> psi) -> box phi -> box psi"),
    ("T-box", "box phi -> phi"),
    ("K-delta", "delta (phi -> psi) -> delta phi -> delta psi"),
    ("T-delta", "delta phi -> phi"),
    ("delta-N", "delta phi -> box phi"),
)
_CL2 = ("CL2", "delta phi -> box delta phi")
_CL3 = ("CL3", "delta phi -> delta box phi")
_CL4 = ("CL4", "box phi -> box box phi")
_CL5 = ("CL5", "delta phi -> delta delta phi")

#: the usual mono-modal schemata, written with delta
MODAL_SCHEMATA: dict[str, Formula] = {
    name: parse(text) for name, text in (
        ("K", "delta (phi -> psi) -> delta phi -> delta psi"),
        ("T", "delta phi -> phi"),
        ("D", "delta phi -> !delta !phi"),
        ("4", "delta phi -> delta delta phi"),
        ("B", "phi -> !delta !delta phi"),
        ("5", "!delta phi -> delta !delta phi"),
        ("GL", "delta (delta phi -> phi) -> delta phi"),
    )
}

_IML = Semantics.INTUITIONISTIC
_CL = Semantics.CLASSICAL
_CL_RULES = ("MP", "RN-box", "RN-delta")


def logic_registry() -> list[LogicSystem]:
    iml1 = (C.BASE, C.ARROW, C.DELTA)
    return [
        LogicSystem("IML1", _IML, iml1, _schemata(_K, _T)),
        LogicSystem("IML2", _IML, iml1 + (C.T,), _schemata(_K, _T, ("T-cond", "(phi ~> psi) -> delta (phi -> psi)"))),
        LogicSystem(
            "IML1-F1", _IML, iml1 + (C.F1,), _schemata(_K, _T, *_NABLA),
            notes=("T-nabla uses phi in both conjuncts",),
        ),
        LogicSystem(
            "IML2-F1", _IML, iml1 + (C.T, C.F1),
            _schemata(_K, _T, *_NABLA, _I_NABLA, ("nabla-dual", "!delta !phi -> nabla phi")),
        ),
        LogicSystem(
            "CL1", _CL, (C.BASE,), _schemata(*_CL1), _CL_RULES,
            notes=("K-box is the standard distribution schema",),
        ),
        LogicSystem("CL2", _CL, (C.BASE, C.DELTA), _schemata(*_CL1, _CL2), _CL_RULES),
        LogicSystem("CL3", _CL, (C.BASE, C.T), _schemata(*_CL1, _CL3), _CL_RULES),
        LogicSystem("CL4", _CL, (C.BASE, C.ARROW), _schemata(*_CL1, _CL4), _CL_RULES),
        LogicSystem("CL5", _CL, (C.BASE, C.MAX4), _schemata(*_CL1, _CL5), _CL_RULES),
        LogicSystem("CL2.4", _CL, (C.BASE, C.DELTA, C.ARROW), _schemata(*_CL1, _CL2, _CL4), _CL_RULES),
        LogicSystem(
            "CL2.4.5", _CL, (C.BASE, C.DELTA, C.ARROW, C.MAX4), _schemata(*_CL1, _CL2, _CL4, _CL5), _CL_RULES,
        ),
    ]


def get_logic(name: str) -> LogicSystem:
    for logic in logic_registry():
        if logic.name.lower() == name.lower():
            return logic
    raise KeyError(f"unknown logic {name!r}")


def with_conditions(logic: LogicSystem, *extra: Condition | str) -> LogicSystem:
    """The same logic restricted to frames that also satisfy ``extra``."""
    conds = tuple(dict.fromkeys(logic.frame_conditions + tuple(Condition.parse(c) for c in extra)))
    suffix = "+".join(Condition.parse(c).value for c in extra)
    return LogicSystem(f"{logic.name}+{suffix}", logic.semantics, conds, logic.axiom_schemata, logic.rules)


# -- enumeration -------------------------------------------------------------

MAX_ENUM_WORLDS = 4


def world_names(n: int) -> tuple[str, ...]:
    return tuple(f"w{i}" for i in range(n))


def _choices(n: int, w: int) -> list[tuple[int, int]]:
    """(min, max) pairs with w in min and min within max, ascending."""
    full = (1 << n) - 1
    out = []
    for mn in range(1 << n):
        if not mn >> w & 1:
            continue
        for mx in range(mn, full + 1):
            if subset(mn, mx):
                out.append((mn, mx))
    return out


def enumerate_frames(n: int, conds: Iterable[Condition | str] = ()) -> Iterator[NFrame]:
    """Every frame on worlds w0..w{n-1} satisfying ``conds``, without pruning."""
    if not 1 <= n <= MAX_ENUM_WORLDS:
        raise ValueError(f"frame enumeration supports 1..{MAX_ENUM_WORLDS} worlds, got {n}")
    checks = [CHECKERS[Condition.parse(c)] for c in conds if Condition.parse(c) is not C.BASE]
    names = world_names(n)
    for combo in itertools.product(*(_choices(n, w) for w in range(n))):
        mn = tuple(c[0] for c in combo)
        mx = tuple(c[1] for c in combo)
        if all(check(n, mn, mx) is None for check in checks):
            yield NFrame.unchecked(names, mn, mx)


def hereditary_sets(frame: NFrame) -> list[int]:
    """World sets closed upward along minimal neighborhoods."""
    return [s for s in range(frame.full + 1) if all(subset(frame.min[w], s) for w in members(s))]


def enumerate_models(
    frame: NFrame, vars: Iterable[str], semantics: Semantics | str = Semantics.INTUITIONISTIC,
) -> Iterator[NModel]:
    vars = list(dict.fromkeys(vars))
    if not vars:
        raise ValueError("need at least one variable")
    semantics = Semantics(semantics)
    if semantics is Semantics.INTUITIONISTIC:
        sets = hereditary_sets(frame)
    else:
        sets = list(range(frame.full + 1))
    for combo in itertools.product(sets, repeat=len(vars)):
        yield NModel.unchecked(frame, dict(zip(vars, combo)), semantics)


def enumerate_all_models(
    max_worlds: int, conds: Iterable[Condition | str], vars: Iterable[str],
    semantics: Semantics | str = Semantics.INTUITIONISTIC,
) -> Iterator[NModel]:
    conds, vars = list(conds), list(vars)
    for n in range(1, max_worlds + 1):
        for frame in enumerate_frames(n, conds):
            yield from enumerate_models(frame, vars, semantics)


# -- search ------------------------------------------------------------------

@dataclass(frozen=True)
class SearchBudget:
    max_worlds: int = 3
    max_vars: int = 2
    time_limit: float | None = None

    def __post_init__(self):
        if self.max_worlds < 1:
            raise ValueError("max_worlds must be at least 1")


@dataclass
class SearchResult:
    """Outcome of a bounded search.

    ``status`` is ``"countermodel"``, ``"none_within_bound"`` (the whole
    bound was exhausted) or ``"budget_exhausted"`` (the time limit hit first).
    """

    status: str
    model: NModel | None = None
    world: str | None = None
    frames_checked: int = 0
    models_checked: int = 0
    worlds_completed: int = 0
    complete_by_fmp: bool = False
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.status == "countermodel"


def _check_input(f: Formula, logic: LogicSystem, budget: SearchBudget) -> list[str]:
    bad = logic.fragment.first_violation(f)
    if bad is not None:
        raise ValueError(f"{type(bad).__name__} is outside the language of {logic.name}")
    vars = atoms(f)
    if len(vars) > budget.max_vars:
        raise ValueError(f"formula has {len(vars)} variables, budget allows {budget.max_vars}")
    if budget.max_worlds > MAX_ENUM_WORLDS:
        raise ValueError(f"max_worlds is capped at {MAX_ENUM_WORLDS}")
    return vars or ["p"]


def find_countermodel(f: Formula, logic: LogicSystem, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """First (model, world) in enumeration order at which ``f`` fails."""
    vars = _check_input(f, logic, budget)
    start = time.monotonic()
    frames = models = 0
    for n in range(1, budget.max_worlds + 1):
        for frame in enumerate_frames(n, logic.frame_conditions):
            frames += 1
            for model in enumerate_models(frame, vars, logic.semantics):
                models += 1
                e = model.ext(f)
                if e != frame.full:
                    w = next(members(frame.full & ~e))
                    return SearchResult("countermodel", model, frame.worlds[w], frames, models, n - 1,
                                        elapsed=time.monotonic() - start)
            if budget.time_limit is not None and time.monotonic() - start > budget.time_limit:
                return SearchResult("budget_exhausted", None, None, frames, models, n - 1,
                                    elapsed=time.monotonic() - start)
    return SearchResult("none_within_bound", None, None, frames, models, budget.max_worlds,
                        elapsed=time.monotonic() - start)


def decide_bounded_validity(f: Formula, logic: LogicSystem, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Countermodel search, flagged complete when the filtration bound is covered."""
    result = find_countermodel(f, logic, budget)
    if result.status == "none_within_bound":
        bound = 2 ** len(subformulas(f))
        if logic.name == "IML1" and IML1_FRAGMENT.allows(f) and budget.max_worlds >= bound:
            result.complete_by_fmp = True
        else:
            result.notes.append(f"valid up to {budget.max_worlds} worlds; completeness needs {bound}")
    return result
