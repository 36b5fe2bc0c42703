"""Bounded morphisms, bisimulations and bounded formula agreement."""
from __future__ import annotations

from typing import Iterable, Mapping

from .bits import mask, members
from .formula import DEGREE_FRAGMENT, Formula, Fragment, enumerate_formulas
from .nmodel import NModel, Violation

WorldMap = Mapping[str, str]
PairRelation = set[tuple[str, str]]


def _atoms(m1: NModel, m2: NModel) -> list[str]:
    return list(dict.fromkeys([*m1.valuation, *m2.valuation]))


def _agree_on_atoms(m1: NModel, i: int, m2: NModel, j: int, atoms: list[str]) -> bool:
    return all((m1.val(q) >> i & 1) == (m2.val(q) >> j & 1) for q in atoms)


def _same_mode(m1: NModel, m2: NModel) -> None:
    if m1.semantics is not m2.semantics:
        raise ValueError("models use different semantics")


def check_bounded_morphism(m1: NModel, m2: NModel, f: WorldMap) -> Violation | None:
    """Atoms preserved and min/max neighborhoods mapped exactly onto their images."""
    _same_mode(m1, m2)
    f1, f2 = m1.frame, m2.frame
    missing = [w for w in f1.worlds if w not in f]
    if missing:
        raise ValueError(f"map is not total: no image for {missing}")
    try:
        img = [f2.index[f[w]] for w in f1.worlds]
    except KeyError as e:
        raise ValueError(f"image {e.args[0]!r} is not a world of the target") from None
    atoms = _atoms(m1, m2)

    def image(m: int) -> int:
        return mask(img[x] for x in members(m))

    for i, w in enumerate(f1.worlds):
        j = img[i]
        if not _agree_on_atoms(m1, i, m2, j, atoms):
            return Violation("atoms", (w, f2.worlds[j]))
        if image(f1.min[i]) != f2.min[j]:
            return Violation("min_image", (w, f2.worlds[j]))
        if image(f1.max[i]) != f2.max[j]:
            return Violation("max_image", (w, f2.worlds[j]))
    return None


def check_behavioral_equivalence(
    m1: NModel, w1: str, m2: NModel, w2: str, b: NModel, f: WorldMap, g: WorldMap,
) -> bool:
    """Both maps are bounded morphisms into ``b`` and they meet at ``w1``/``w2``."""
    if w1 not in m1.frame.index or w2 not in m2.frame.index:
        raise ValueError("worlds must belong to their models")
    if check_bounded_morphism(m1, b, f) is not None:
        return False
    if check_bounded_morphism(m2, b, g) is not None:
        return False
    return f[w1] == g[w2]


# -- bisimulation -------------------------------------------------------------

def _zigzag(m1: NModel, m2: NModel, rel: list[int], i: int, j: int) -> str | None:
    """Name of the first back-and-forth clause failing at (i, j) against ``rel``.

    ``rel[x]`` is the set of m2-worlds related to m1-world ``x``.
    """
    f1, f2 = m1.frame, m2.frame
    for name, a, b in (("min_back", f1.min[i], f2.min[j]), ("max_back", f1.max[i], f2.max[j])):
        reach = 0
        for x in members(a):
            reach |= rel[x]
        if b & ~reach:
            return name
    for name, a, b in (("min_forth", f1.min[i], f2.min[j]), ("max_forth", f1.max[i], f2.max[j])):
        for x in members(a):
            if not rel[x] & b:
                return name
    return None


def _atom_agreement(m1: NModel, m2: NModel) -> list[int]:
    atoms = _atoms(m1, m2)
    return [
        mask(j for j in range(m2.frame.n) if _agree_on_atoms(m1, i, m2, j, atoms))
        for i in range(m1.frame.n)
    ]


def _to_pairs(m1: NModel, m2: NModel, rel: list[int]) -> PairRelation:
    return {(m1.frame.worlds[i], m2.frame.worlds[j]) for i in range(m1.frame.n) for j in members(rel[i])}


def _from_pairs(m1: NModel, m2: NModel, pairs: Iterable[tuple[str, str]]) -> list[int]:
    rel = [0] * m1.frame.n
    for a, b in pairs:
        rel[m1.frame.index[a]] |= 1 << m2.frame.index[b]
    return rel


def max_bisimulation(m1: NModel, m2: NModel) -> PairRelation:
    """The largest bisimulation, by deleting violating pairs until stable."""
    _same_mode(m1, m2)
    rel = _atom_agreement(m1, m2)
    changed = True
    while changed:
        changed = False
        for i in range(m1.frame.n):
            for j in members(rel[i]):
                if _zigzag(m1, m2, rel, i, j) is not None:
                    rel[i] &= ~(1 << j)
                    changed = True
    return _to_pairs(m1, m2, rel)


def check_bisimulation(m1: NModel, m2: NModel, r: Iterable[tuple[str, str]]) -> Violation | None:
    pairs = sorted(set(r), key=lambda p: (m1.frame.index[p[0]], m2.frame.index[p[1]]))
    if not pairs:
        return Violation("nonempty", ())
    rel = _from_pairs(m1, m2, pairs)
    atoms = _atoms(m1, m2)
    for a, b in pairs:
        i, j = m1.frame.index[a], m2.frame.index[b]
        if not _agree_on_atoms(m1, i, m2, j, atoms):
            return Violation("atoms", (a, b))
        clause = _zigzag(m1, m2, rel, i, j)
        if clause is not None:
            return Violation(clause, (a, b))
    return None


def n_bisimulation(m1: NModel, m2: NModel, n: int) -> list[PairRelation]:
    """The largest chain R_0 >= ... >= R_n; R_0 is agreement on atoms."""
    _same_mode(m1, m2)
    rel = _atom_agreement(m1, m2)
    chain = [rel]
    for _ in range(n):
        prev = chain[-1]
        nxt = [
            mask(j for j in members(prev[i]) if _zigzag(m1, m2, prev, i, j) is None)
            for i in range(m1.frame.n)
        ]
        chain.append(nxt)
    return [_to_pairs(m1, m2, rel) for rel in chain]


# -- formula agreement -------------------------------------------------------

def formula_agreement(
    m1: NModel,
    w1: str,
    m2: NModel,
    w2: str,
    vars: Iterable[str],
    max_degree: int,
    max_size: int,
    fragment: Fragment = DEGREE_FRAGMENT,
) -> Formula | None:
    """First enumerated formula on which ``w1`` and ``w2`` disagree, or None."""
    i, j = m1.frame.index[w1], m2.frame.index[w2]
    for f in enumerate_formulas(vars, fragment, max_degree, max_size):
        if (m1.ext(f) >> i & 1) != (m2.ext(f) >> j & 1):
            return f
    return None


def agreeing_pairs(
    m1: NModel, m2: NModel, vars: Iterable[str], max_degree: int, max_size: int,
    fragment: Fragment = DEGREE_FRAGMENT,
) -> PairRelation:
    """All world pairs that agree on every enumerated formula."""
    rel = [m2.frame.full] * m1.frame.n
    for f in enumerate_formulas(vars, fragment, max_degree, max_size):
        e1, e2 = m1.ext(f), m2.ext(f)
        for i in range(m1.frame.n):
            rel[i] &= e2 if e1 >> i & 1 else ~e2
    return _to_pairs(m1, m2, rel)
