"""Formula collections shared by tests, sweeps and scripts."""
from __future__ import annotations

import random

from .formula import (
    DEGREE_FRAGMENT, IML1_FRAGMENT, Formula, Fragment, enumerate_formulas, instantiate_schema, parse,
    random_formula,
)
from .search import MODAL_SCHEMATA

_PQ = {"phi": parse("p"), "psi": parse("q")}

#: deeper formulas that small size bounds would miss
EXTRA_IML1 = ("delta (!!p -> p)", "delta (p | !p)", "!!delta p -> delta !!p", "delta (p -> q) -> delta !q -> delta !p")


def schema_instances(schemata=MODAL_SCHEMATA) -> list[Formula]:
    return [instantiate_schema(s, _PQ) for s in schemata.values()]


def iml1_corpus(max_size: int = 4) -> list[Formula]:
    """Every mono-modal formula over p, q up to ``max_size`` nodes, plus schema instances."""
    out = list(enumerate_formulas(["p", "q"], IML1_FRAGMENT, max_size, max_size))
    out += schema_instances() + [parse(t) for t in EXTRA_IML1]
    return list(dict.fromkeys(out))


def random_corpus(
    seed: int, count: int, vars=("p", "q"), fragment: Fragment = DEGREE_FRAGMENT, max_size: int = 8,
) -> list[Formula]:
    rng = random.Random(seed)
    seen: dict[Formula, None] = {}
    while len(seen) < count:
        seen.setdefault(random_formula(rng, list(vars), fragment, max_size))
    return list(seen)
