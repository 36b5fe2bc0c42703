"""Search small F1 models for two worlds that only nabla can tell apart.

Worlds are grouped by their truth values on every nabla-free formula up to a
degree and size bound; within a group, pairs that disagree on nabla alpha are
reported and re-checked against a larger bound.
"""
from __future__ import annotations

import argparse
import json
import time
from collections import defaultdict

from imlkit.equiv import formula_agreement
from imlkit.formula import And, Atom, Bot, Delta, Fragment, Imp, Or, enumerate_formulas, parse
from imlkit.io import dump_nmodel
from imlkit.nmodel import Condition
from imlkit.search import enumerate_all_models

NO_NABLA = Fragment([Atom, Bot, And, Or, Imp, Delta])


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-worlds", type=int, default=3)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--size", type=int, default=6)
    p.add_argument("--limit", type=int, default=3, help="stop after this many confirmed pairs")
    args = p.parse_args()

    start = time.perf_counter()
    corpus = list(enumerate_formulas(["alpha"], NO_NABLA, args.degree, args.size))
    nabla = parse("nabla alpha")
    groups = defaultdict(lambda: {False: None, True: None})
    found = []
    conds = [Condition.ARROW, Condition.DELTA, Condition.F1]
    for m in enumerate_all_models(args.max_worlds, conds, ["alpha"]):
        exts = [m.ext(f) for f in corpus]
        for i, w in enumerate(m.frame.worlds):
            key = tuple(e >> i & 1 for e in exts)
            side = bool(m.ext(nabla) >> i & 1)
            slot = groups[key]
            if slot[side] is None:
                slot[side] = (m, w)
                other = slot[not side]
                if other is not None:
                    a, b = (other, (m, w)) if side else ((m, w), other)
                    split = formula_agreement(a[0], a[1], b[0], b[1], ["alpha"], args.degree + 1, args.size + 2, NO_NABLA)
                    if split is None:
                        found.append({"without_nabla": dump_nmodel(a[0]), "world_1": a[1],
                                      "with_nabla": dump_nmodel(b[0]), "world_2": b[1]})
                        if len(found) >= args.limit:
                            break
        if len(found) >= args.limit:
            break
    print(json.dumps({"pairs": found, "corpus": len(corpus),
                      "elapsed": round(time.perf_counter() - start, 2)}, indent=2))


if __name__ == "__main__":
    main()
