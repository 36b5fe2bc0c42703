"""Seeded random IML1 models in both presentations."""
from __future__ import annotations

import random
from typing import Sequence

from .bits import members
from .birel import BrFrame, BrModel, birel_to_nbhd
from .nmodel import NModel


def _closure(succ: list[int]) -> list[int]:
    """Reflexive-transitive closure of a successor-mask relation."""
    n = len(succ)
    out = [s | 1 << i for i, s in enumerate(succ)]
    for k in range(n):
        for i in range(n):
            if out[i] >> k & 1:
                out[i] |= out[k]
    return out


def _random_relation(rng: random.Random, n: int, density: float) -> list[int]:
    return [sum(1 << j for j in range(n) if rng.random() < density) for _ in range(n)]


def _up_closed(rng: random.Random, leq: list[int], density: float) -> int:
    seed = sum(1 << i for i in range(len(leq)) if rng.random() < density)
    out = 0
    for i in members(seed):
        out |= leq[i]
    return out


def random_brmodel(
    rng: random.Random, n: int, vars: Sequence[str] = ("p", "q"), density: float = 0.3,
) -> BrModel:
    """leq is a random preorder and r = leq ; (r0 | leq), which makes leq ; r stay within r."""
    leq = _closure(_random_relation(rng, n, density))
    r0 = _random_relation(rng, n, density)
    r = []
    for i in range(n):
        step = 0
        for j in members(leq[i]):
            step |= r0[j] | leq[j]
        r.append(step)
    worlds = tuple(f"w{i}" for i in range(n))
    val = {q: _up_closed(rng, leq, 0.35) for q in vars}
    return BrModel(BrFrame(worlds, leq, r), val)


def random_nmodel(rng: random.Random, n: int, vars: Sequence[str] = ("p", "q"), density: float = 0.3) -> NModel:
    return birel_to_nbhd(random_brmodel(rng, n, vars, density))
