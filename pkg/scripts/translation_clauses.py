"""Compare the two readings of the delta clause of the classical translation.

The recursive clause translates the body of delta; the literal one copies
delta subformulas unchanged. Both are run against every CL2.4 model with up
to three worlds and the IML1 corpus.
"""
from __future__ import annotations

import argparse
import json
import time

from imlkit.corpus import iml1_corpus
from imlkit.formula import pretty
from imlkit.io import dump_nmodel
from imlkit.nmodel import Semantics
from imlkit.search import enumerate_all_models
from imlkit.translate import CL24_CONDITIONS, bounded_transfer, translation_sweep


def report(models, corpus, literal: bool) -> dict:
    start = time.perf_counter()
    failure = translation_sweep(models, corpus, literal_delta=literal)
    rows = bounded_transfer(corpus, literal_delta=literal)
    out = {
        "clause": "literal" if literal else "recursive",
        "pointwise": "ok" if failure is None else "fails",
        "transfer_mismatches": [pretty(f) for f, a, b in rows if a != b],
    }
    if failure is not None:
        m, f, check = failure
        out["first_failure"] = {"formula": pretty(f), "world": check.world, "model": dump_nmodel(m)}
    out["elapsed"] = round(time.perf_counter() - start, 2)
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-size", type=int, default=4, help="node bound for the enumerated part of the corpus")
    args = p.parse_args()
    corpus = iml1_corpus(args.max_size)
    models = list(enumerate_all_models(3, CL24_CONDITIONS, ["p", "q"], Semantics.CLASSICAL))
    print(json.dumps({
        "formulas": len(corpus),
        "models": len(models),
        "results": [report(models, corpus, literal) for literal in (False, True)],
    }, indent=2))


if __name__ == "__main__":
    main()
