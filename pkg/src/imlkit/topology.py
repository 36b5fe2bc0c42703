"""Per-world open-set families built from maximal neighborhoods."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce

from .bits import subset, submasks, members, popcount
from .nmodel import ConditionReport, NFrame, Violation

MAX_UNIVERSE = 16


class Variant(str, Enum):
    PAPER = "paper"  # X inside max(w), closed upward along min
    ALTERNATIVE = "alt"  # empty, or a superset of min(w) inside max(w)

    @classmethod
    def parse(cls, name: str | Variant) -> Variant:
        if isinstance(name, Variant):
            return name
        name = name.strip().lower()
        if name == "alternative":
            return cls.ALTERNATIVE
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown variant {name!r}; expected paper or alt") from None


@dataclass(frozen=True)
class OpenFamily:
    frame: NFrame
    world: str
    universe: int
    opens: frozenset[int]
    variant: Variant

    def sets(self) -> list[list[str]]:
        """Opens as sorted lists of world names, in canonical order."""
        out = [sorted(self.frame.names(x)) for x in self.opens]
        return sorted(out, key=lambda s: (len(s), s))


def open_sets(frame: NFrame, world: str, variant: Variant | str = Variant.PAPER) -> OpenFamily:
    if world not in frame.index:
        raise KeyError(f"unknown world {world!r}")
    variant = Variant.parse(variant)
    w = frame.index[world]
    universe = frame.max[w]
    if popcount(universe) > MAX_UNIVERSE:
        raise ValueError(f"max({world}) has more than {MAX_UNIVERSE} worlds")
    opens = set()
    for x in submasks(universe):
        if variant is Variant.PAPER:
            ok = all(subset(frame.min[v], x) for v in members(x))
        else:
            ok = x == 0 or subset(frame.min[w], x)
        if ok:
            opens.add(x)
    return OpenFamily(frame, world, universe, frozenset(opens), variant)


def verify_topology(fam: OpenFamily) -> ConditionReport:
    """Topology axioms on a finite family, plus the Alexandroff property."""
    names = fam.frame.names
    opens = sorted(fam.opens)

    def fmt(x):
        return "{" + ",".join(names(x)) + "}"

    def pairwise(op, label):
        for a in opens:
            for b in opens:
                if op(a, b) not in fam.opens:
                    return Violation(label, (fam.world, fmt(a), fmt(b)))
        return None

    v: dict[str, Violation | None] = {}
    v["empty"] = None if 0 in fam.opens else Violation("empty", (fam.world,))
    v["universe"] = None if fam.universe in fam.opens else Violation("universe", (fam.world, fmt(fam.universe)))
    v["union"] = pairwise(int.__or__, "union")
    v["intersection"] = pairwise(int.__and__, "intersection")
    whole_union = reduce(int.__or__, opens, 0)
    v["family_union"] = None if whole_union in fam.opens else Violation("family_union", (fam.world, fmt(whole_union)))
    whole_meet = reduce(int.__and__, opens, fam.universe)
    v["family_intersection"] = (
        None if whole_meet in fam.opens else Violation("family_intersection", (fam.world, fmt(whole_meet)))
    )
    v["alexandroff"] = None
    for x in members(fam.universe):
        # the meet of all opens around x must itself be open
        meet = reduce(int.__and__, (o for o in opens if o >> x & 1), fam.universe)
        if meet not in fam.opens:
            v["alexandroff"] = Violation("alexandroff", (fam.world, names(1 << x)[0], fmt(meet)))
            break
    return ConditionReport(v)
