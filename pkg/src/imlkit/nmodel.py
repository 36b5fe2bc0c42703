"""Neighborhood frames and models with minimal/maximal neighborhoods.

The neighborhood family of a world ``w`` is always the interval of sets
``X`` with ``min(w) <= X <= max(w)``, so a frame is stored as the pair of
maps (min, max) only. World sets are int bitmasks over ``frame.worlds``;
the ``*_of`` accessors translate to and from world names.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .bits import mask, members, subset, submasks
from .formula import (
    And, Atom, Bot, Box, Delta, Dia, Formula, Heart, Imp, MaxImp, Nabla, Or,
    CLASSICAL_FRAGMENT, INTUITIONISTIC_FRAGMENT,
)


class Semantics(str, Enum):
    INTUITIONISTIC = "intuitionistic"
    CLASSICAL = "classical"


class Condition(str, Enum):
    BASE = "base"
    ARROW = "arrow"
    DELTA = "delta"
    T = "t"
    F1 = "f1"
    F2 = "f2"
    PS1 = "ps1"
    PS2 = "ps2"
    U = "u"
    MAX4 = "max4"

    @classmethod
    def parse(cls, name: str | Condition) -> Condition:
        if isinstance(name, Condition):
            return name
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown condition {name!r}") from None


class FrameError(ValueError):
    pass


class SemanticsError(ValueError):
    """A connective was used outside the semantics that defines it."""


@dataclass(frozen=True)
class Violation:
    """A failed check together with the worlds that witness the failure."""

    condition: str
    witness: tuple[str, ...]
    atom: str | None = None

    def __str__(self) -> str:
        at = f" for {self.atom}" if self.atom else ""
        return f"{self.condition} fails{at} at ({', '.join(self.witness)})"


@dataclass
class ConditionReport:
    """Per-check verdicts; ``None`` means the check passed."""

    verdicts: dict[str, Violation | None]

    @property
    def ok(self) -> bool:
        return all(v is None for v in self.verdicts.values())

    def failed(self) -> list[Violation]:
        return [v for v in self.verdicts.values() if v is not None]

    def __getitem__(self, key: str | Condition) -> Violation | None:
        return self.verdicts[key.value if isinstance(key, Condition) else key]

    def to_json(self) -> dict:
        return {
            k: {"ok": True} if v is None else {"ok": False, "witness": list(v.witness), **({"atom": v.atom} if v.atom else {})}
            for k, v in self.verdicts.items()
        }


# -- frames ------------------------------------------------------------------

@dataclass(frozen=True)
class NFrame:
    worlds: tuple[str, ...]
    min: tuple[int, ...]
    max: tuple[int, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "min", tuple(self.min))
        object.__setattr__(self, "max", tuple(self.max))
        object.__setattr__(self, "index", {w: i for i, w in enumerate(self.worlds)})
        n = len(self.worlds)
        if n == 0:
            raise FrameError("a frame needs at least one world")
        if len(self.index) != n:
            raise FrameError("duplicate world names")
        if len(self.min) != n or len(self.max) != n:
            raise FrameError("min/max must cover exactly the worlds")
        full = (1 << n) - 1
        if any(m & ~full for m in self.min + self.max):
            raise FrameError("neighborhood mentions an unknown world")
        bad = base_violation(n, self.min, self.max)
        if bad is not None:
            raise FrameError(f"base condition fails at {tuple(self.worlds[i] for i in bad)}")

    @classmethod
    def unchecked(cls, worlds, min, max) -> NFrame:
        """Build without the base-condition check (for reporting broken input)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "worlds", tuple(worlds))
        object.__setattr__(obj, "min", tuple(min))
        object.__setattr__(obj, "max", tuple(max))
        object.__setattr__(obj, "index", {w: i for i, w in enumerate(obj.worlds)})
        return obj

    @classmethod
    def from_sets(
        cls,
        worlds: Iterable[str],
        min: Mapping[str, Iterable[str]],
        max: Mapping[str, Iterable[str]],
        check: bool = True,
    ) -> NFrame:
        worlds = tuple(worlds)
        idx = {w: i for i, w in enumerate(worlds)}
        for name, m in (("min", min), ("max", max)):
            if set(m) != set(worlds):
                raise FrameError(f"{name} keys must be exactly the worlds")
            for w, ws in m.items():
                unknown = [x for x in ws if x not in idx]
                if unknown:
                    raise FrameError(f"{name}({w}) mentions unknown world(s) {unknown}")
        mn = [mask(idx[x] for x in min[w]) for w in worlds]
        mx = [mask(idx[x] for x in max[w]) for w in worlds]
        if check:
            return cls(worlds, mn, mx)
        return cls.unchecked(worlds, mn, mx)

    @property
    def n(self) -> int:
        return len(self.worlds)

    @property
    def full(self) -> int:
        return (1 << len(self.worlds)) - 1

    def mask_of(self, names: Iterable[str]) -> int:
        try:
            return mask(self.index[x] for x in names)
        except KeyError as e:
            raise KeyError(f"unknown world {e.args[0]!r}") from None

    def names(self, m: int) -> list[str]:
        return [self.worlds[i] for i in members(m)]

    def min_of(self, w: str) -> frozenset[str]:
        return frozenset(self.names(self.min[self.index[w]]))

    def max_of(self, w: str) -> frozenset[str]:
        return frozenset(self.names(self.max[self.index[w]]))

    def in_interval(self, w: str, xs: Iterable[str]) -> bool:
        """Whether ``xs`` is one of the neighborhoods of ``w``."""
        i, x = self.index[w], self.mask_of(xs)
        return subset(self.min[i], x) and subset(x, self.max[i])

    def to_sets(self) -> tuple[dict[str, list[str]], dict[str, list[str]]]:
        return ({w: self.names(self.min[i]) for i, w in enumerate(self.worlds)},
                {w: self.names(self.max[i]) for i, w in enumerate(self.worlds)})


# -- condition checkers over raw masks ----------------------------------------
# Each returns the first violating index tuple in world order, or None.

def base_violation(n, mn, mx):
    for w in range(n):
        if not mn[w] >> w & 1:
            return (w,)
        extra = mn[w] & ~mx[w]
        if extra:
            return (w, next(members(extra)))
    return None


def _arrow(n, mn, mx):
    for w in range(n):
        for u in members(mn[w]):
            if mn[u] & ~mn[w]:
                return (w, u)
    return None


def _delta(n, mn, mx):
    for w in range(n):
        for u in members(mn[w]):
            if mx[u] & ~mx[w]:
                return (w, u)
    return None


def _t(n, mn, mx):
    for w in range(n):
        for v in members(mx[w]):
            if mn[v] & ~mx[w]:
                return (w, v)
    return None


def _max4(n, mn, mx):
    for w in range(n):
        for v in members(mx[w]):
            if mx[v] & ~mx[w]:
                return (w, v)
    return None


def _f1(n, mn, mx):
    for w in range(n):
        for u in members(mn[w]):
            for v in members(mx[w]):
                if not mx[u] & mn[v]:
                    return (w, u, v)
    return None


def _inverse(n, rel):
    inv = [0] * n
    for a in range(n):
        for b in members(rel[a]):
            inv[b] |= 1 << a
    return inv


def _f2(n, mn, mx):
    in_max = _inverse(n, mx)
    for w in range(n):
        for v in members(mx[w]):
            for u in members(mn[v]):
                if not mn[w] & in_max[u]:
                    return (w, v, u)
    return None


def _ps1(n, mn, mx):
    in_min = _inverse(n, mn)
    for w in range(n):
        for v in members(mn[w]):
            for u in members(mx[v]):
                if not mx[w] & in_min[u]:
                    return (w, v, u)
    return None


def _ps2(n, mn, mx):
    in_min = _inverse(n, mn)
    in_max = _inverse(n, mx)
    for w in range(n):
        for v in members(mn[w]):
            for u in members(in_max[v]):
                if not in_max[w] & in_min[u]:
                    return (w, v, u)
    return None


def _u(n, mn, mx):
    for w in range(n):
        for v in range(n):
            if mx[w] & mx[v] and not mn[w] & mn[v]:
                return (w, v)
    return None


CHECKERS = {
    Condition.BASE: base_violation,
    Condition.ARROW: _arrow,
    Condition.DELTA: _delta,
    Condition.T: _t,
    Condition.F1: _f1,
    Condition.F2: _f2,
    Condition.PS1: _ps1,
    Condition.PS2: _ps2,
    Condition.U: _u,
    Condition.MAX4: _max4,
}


def raw_violation(cond: Condition, n: int, mn, mx):
    return CHECKERS[cond](n, mn, mx)


def check_conditions(frame: NFrame, conds: Iterable[Condition | str]) -> ConditionReport:
    verdicts: dict[str, Violation | None] = {}
    for c in conds:
        c = Condition.parse(c)
        bad = CHECKERS[c](frame.n, frame.min, frame.max)
        verdicts[c.value] = None if bad is None else Violation(c.value, tuple(frame.worlds[i] for i in bad))
    return ConditionReport(verdicts)


def satisfies(frame: NFrame, conds: Iterable[Condition | str]) -> bool:
    return all(CHECKERS[Condition.parse(c)](frame.n, frame.min, frame.max) is None for c in conds)


# Formulations quantifying over all subsets X of W. ARROW and DELTA are the
# two nesting conditions; T is the version used for the open-set topology.

def subset_formulation_violation(frame: NFrame, which: Condition | str):
    """First (w, X) breaking the subset-quantified form of ``which``, or None."""
    which = Condition.parse(which)
    if frame.n > 16:
        raise ValueError("subset formulations are limited to 16 worlds")
    n, mn, mx = frame.n, frame.min, frame.max
    for w in range(n):
        for x in submasks(frame.full):
            if which is Condition.ARROW:
                if subset(mn[w], x):
                    good = mask(v for v in range(n) if subset(mn[v], x))
                    if not subset(mn[w], good):
                        return (w, x)
            elif which is Condition.DELTA:
                if subset(mx[w], x):
                    good = mask(v for v in range(n) if subset(mx[v], x))
                    if not subset(mn[w], good):
                        return (w, x)
            elif which is Condition.T:
                if subset(mx[w], x):
                    good = mask(v for v in range(n) if subset(mn[v], x))
                    if not subset(mx[w], good):
                        return (w, x)
            else:
                raise ValueError(f"no subset formulation for {which.value}")
    return None


def check_formulation_equivalence(frame: NFrame, which: Condition | str) -> bool:
    """Whether the element-wise and subset-quantified forms agree on ``frame``."""
    which = Condition.parse(which)
    elementwise = CHECKERS[which](frame.n, frame.min, frame.max) is None
    quantified = subset_formulation_violation(frame, which) is None
    return elementwise == quantified


# -- models ------------------------------------------------------------------

@dataclass(frozen=True)
class NModel:
    frame: NFrame
    valuation: dict[str, int]
    semantics: Semantics = Semantics.INTUITIONISTIC
    _cache: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "semantics", Semantics(self.semantics))
        object.__setattr__(self, "valuation", dict(self.valuation))
        for q, m in self.valuation.items():
            Atom(q)  # validates the name
            if m & ~self.frame.full:
                raise FrameError(f"valuation of {q} mentions an unknown world")
        bad = check_heredity(self)
        if bad is not None:
            raise FrameError(f"valuation is not hereditary: {bad}")

    @classmethod
    def from_sets(
        cls,
        worlds: Iterable[str],
        min: Mapping[str, Iterable[str]],
        max: Mapping[str, Iterable[str]],
        valuation: Mapping[str, Iterable[str]] = {},
        semantics: Semantics | str = Semantics.INTUITIONISTIC,
    ) -> NModel:
        frame = NFrame.from_sets(worlds, min, max)
        return cls(frame, {q: frame.mask_of(ws) for q, ws in valuation.items()}, Semantics(semantics))

    @classmethod
    def unchecked(cls, frame: NFrame, valuation: dict[str, int], semantics: Semantics | str) -> NModel:
        """Build without validation, for trusted enumeration or for reporting bad input."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "frame", frame)
        object.__setattr__(obj, "valuation", dict(valuation))
        object.__setattr__(obj, "semantics", Semantics(semantics))
        object.__setattr__(obj, "_cache", {})
        return obj

    def with_semantics(self, semantics: Semantics | str) -> NModel:
        return NModel(self.frame, self.valuation, Semantics(semantics))

    def val(self, q: str) -> int:
        return self.valuation.get(q, 0)

    def atoms_at(self, i: int) -> frozenset[str]:
        return frozenset(q for q, m in self.valuation.items() if m >> i & 1)

    def ext(self, f: Formula) -> int:
        """Extension of ``f`` as a bitmask, memoized per subformula."""
        cached = self._cache.get(f)
        if cached is not None:
            return cached
        r = self._eval(f)
        self._cache[f] = r
        return r

    def _eval(self, f: Formula) -> int:
        fr = self.frame
        n, mn, mx, full = fr.n, fr.min, fr.max, fr.full
        classical = self.semantics is Semantics.CLASSICAL
        allowed = CLASSICAL_FRAGMENT if classical else INTUITIONISTIC_FRAGMENT
        if type(f) not in allowed:
            raise SemanticsError(f"{type(f).__name__} is not available in {self.semantics.value} semantics")
        match f:
            case Atom(q):
                return self.valuation.get(q, 0)
            case Bot():
                return 0
            case And(l, r):
                return self.ext(l) & self.ext(r)
            case Or(l, r):
                return self.ext(l) | self.ext(r)
            case Imp(l, r):
                ok = (~self.ext(l) | self.ext(r)) & full
                if classical:
                    return ok
                return _all_within(mn, ok)
            case MaxImp(l, r):
                return _all_within(mx, (~self.ext(l) | self.ext(r)) & full)
            case Delta(b):
                return _all_within(mx, self.ext(b))
            case Box(b):
                return _all_within(mn, self.ext(b))
            case Nabla(b):
                a = self.ext(b)
                return mask(w for w in range(n) if mx[w] & a)
            case Dia(b):
                a = self.ext(b)
                sees = mask(x for x in range(n) if mx[x] & a)
                return _all_within(mn, sees)
            case Heart(b):
                a = self.ext(b)
                r = 0
                for u in range(n):
                    if mx[u] & a:
                        r |= mn[u]
                return r
        raise TypeError(f"not a formula: {f!r}")


def _all_within(nbhd, target: int) -> int:
    r = 0
    for w, m in enumerate(nbhd):
        if m & ~target == 0:
            r |= 1 << w
    return r


def check_heredity(model: NModel) -> Violation | None:
    """First (atom, w, u) with w in V(atom), u in min(w), u not in V(atom)."""
    if model.semantics is Semantics.CLASSICAL:
        return None
    fr = model.frame
    for q, v in model.valuation.items():
        for w in members(v):
            out = fr.min[w] & ~v
            if out:
                u = next(members(out))
                return Violation("heredity", (fr.worlds[w], fr.worlds[u]), atom=q)
    return None


def force(model: NModel, world: str, f: Formula) -> bool:
    try:
        i = model.frame.index[world]
    except KeyError:
        raise KeyError(f"unknown world {world!r}") from None
    return bool(model.ext(f) >> i & 1)


def extension(model: NModel, f: Formula) -> frozenset[str]:
    return frozenset(model.frame.names(model.ext(f)))


def truth_map(model: NModel, f: Formula) -> dict[str, bool]:
    e = model.ext(f)
    return {w: bool(e >> i & 1) for i, w in enumerate(model.frame.worlds)}


def valid_in(model: NModel, f: Formula) -> bool:
    return model.ext(f) == model.frame.full


def check_monotonicity(model: NModel, f: Formula) -> Violation | None:
    """First (w, u) with w forcing ``f``, u in min(w) and u not forcing it."""
    fr = model.frame
    e = model.ext(f)
    for w in members(e):
        out = fr.min[w] & ~e
        if out:
            return Violation("monotonicity", (fr.worlds[w], fr.worlds[next(members(out))]))
    return None
