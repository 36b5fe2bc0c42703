"""Do bisimilar worlds agree on nabla, dia and heart formulas?

Bisimulation only guarantees agreement on atoms, bot, &, |, ->, ~> and delta.
This samples random model pairs, takes the largest bisimulation and looks for
related pairs split by formulas that use one of the other modalities.
"""
from __future__ import annotations

import argparse
import json
import random
import time
from dataclasses import asdict, dataclass

from imlkit.equiv import max_bisimulation
from imlkit.formula import And, Atom, Bot, Delta, Dia, Fragment, Heart, Imp, MaxImp, Nabla, Or, enumerate_formulas, pretty
from imlkit.nmodel import Condition, satisfies
from imlkit.randgen import random_nmodel

BASE = [Atom, Bot, And, Or, Imp, MaxImp, Delta]


@dataclass
class Config:
    seed: int = 0
    pairs: int = 300
    max_worlds: int = 4
    max_degree: int = 2
    max_size: int = 6
    f1_only: bool = False


def run(cfg: Config) -> dict:
    rng = random.Random(cfg.seed)
    corpora = {
        kind.__name__.lower(): list(enumerate_formulas(["p"], Fragment(BASE + [kind]), cfg.max_degree, cfg.max_size))
        for kind in (Nabla, Dia, Heart)
    }
    split = {k: 0 for k in corpora}
    example = {}
    related = sampled = 0
    start = time.perf_counter()
    while sampled < cfg.pairs:
        m1 = random_nmodel(rng, rng.randint(1, cfg.max_worlds), ["p"])
        m2 = random_nmodel(rng, rng.randint(1, cfg.max_worlds), ["p"])
        if cfg.f1_only and not (satisfies(m1.frame, [Condition.F1]) and satisfies(m2.frame, [Condition.F1])):
            continue
        sampled += 1
        for a, b in sorted(max_bisimulation(m1, m2)):
            related += 1
            i, j = m1.frame.index[a], m2.frame.index[b]
            for kind, corpus in corpora.items():
                f = next((f for f in corpus if (m1.ext(f) >> i & 1) != (m2.ext(f) >> j & 1)), None)
                if f is not None:
                    split[kind] += 1
                    example.setdefault(kind, {"formula": pretty(f), "pair": [a, b]})
    return {
        "config": asdict(cfg),
        "related_pairs": related,
        "split_pairs": split,
        "first_examples": example,
        "corpus_sizes": {k: len(v) for k, v in corpora.items()},
        "elapsed": round(time.perf_counter() - start, 2),
    }


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(Config()).items():
        flag = "--" + name.replace("_", "-")
        if isinstance(default, bool):
            p.add_argument(flag, action="store_true")
        else:
            p.add_argument(flag, type=type(default), default=default)
    print(json.dumps(run(Config(**vars(p.parse_args()))), indent=2))


if __name__ == "__main__":
    main()
