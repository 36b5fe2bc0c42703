"""Check every registered schema, and the standard modal schemata, on small frames."""
from __future__ import annotations

import argparse
import json
from dataclasses import dataclass

from imlkit.formula import instantiate_schema, pretty
from imlkit.io import dump_nmodel
from imlkit.search import MODAL_SCHEMATA, SearchBudget, find_countermodel, get_logic, logic_registry

PQ = {"phi": "p", "psi": "q"}


@dataclass
class Config:
    max_worlds: int = 3
    max_vars: int = 2
    show_models: bool = False


def row(logic, name, schema, cfg):
    f = instantiate_schema(schema, PQ)
    r = find_countermodel(f, logic, SearchBudget(cfg.max_worlds, cfg.max_vars))
    out = {"logic": logic.name, "schema": name, "instance": pretty(f), "status": r.status,
           "models_checked": r.models_checked}
    if r.found:
        out["world"] = r.world
        if cfg.show_models:
            out["model"] = dump_nmodel(r.model)
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-worlds", type=int, default=3)
    p.add_argument("--max-vars", type=int, default=2)
    p.add_argument("--show-models", action="store_true")
    cfg = Config(**{k.replace("-", "_"): v for k, v in vars(p.parse_args()).items()})
    rows = [row(lg, name, s, cfg) for lg in logic_registry() for name, s in lg.axiom_schemata]
    iml1 = get_logic("IML1")
    rows += [row(iml1, name, s, cfg) for name, s in MODAL_SCHEMATA.items()]
    print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
