"""Command-line interface.

Every command prints one JSON document on stdout (or prose with ``--human``).
Exit status: 0 on success, 1 when a checked property fails or a countermodel
is found, 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable

from .birel import FrameError, birel_to_nbhd, filtrate, nbhd_to_birel
from .equiv import check_bounded_morphism, max_bisimulation, n_bisimulation
from .formula import FormulaSyntaxError, degree, parse, pretty, size
from .io import (
    ModelFileError, dump_brmodel, dump_nmodel, load_brmodel, load_nframe_unchecked, load_nmodel,
    load_nmodel_unchecked, load_worldmap,
)
from .nmodel import Condition, SemanticsError, check_conditions, check_heredity, truth_map
from .search import SearchBudget, decide_bounded_validity, get_logic, logic_registry
from .topology import open_sets, verify_topology
from .translate import star

OK, FAIL, BAD_INPUT = 0, 1, 2


@dataclass
class Outcome:
    code: int
    data: dict
    lines: list[str] = field(default_factory=list)


def _violation_json(v) -> dict | None:
    if v is None:
        return None
    out = {"check": v.condition, "witness": list(v.witness)}
    if v.atom:
        out["atom"] = v.atom
    return out


def _pairs(rel) -> list[list[str]]:
    return [list(p) for p in sorted(rel)]


# -- commands ----------------------------------------------------------------

def cmd_parse(a) -> Outcome:
    f = parse(a.formula)
    text = pretty(f)
    data = {"formula": text, "repr": repr(f), "size": size(f), "degree": degree(f)}
    return Outcome(OK, data, [text])


def cmd_eval(a) -> Outcome:
    m, f = load_nmodel(a.model), parse(a.formula)
    truth = truth_map(m, f)
    data = {"formula": pretty(f), "truth": truth}
    if a.world is not None:
        if a.world not in truth:
            raise KeyError(f"unknown world {a.world!r}")
        data["world"] = a.world
        data["value"] = truth[a.world]
    lines = [f"{w}: {'true' if t else 'false'}" for w, t in truth.items()]
    return Outcome(OK, data, lines)


def cmd_check_frame(a) -> Outcome:
    frame = load_nframe_unchecked(a.model)
    conds = [Condition.parse(c) for c in a.conditions.split(",") if c.strip()]
    report = check_conditions(frame, conds)
    lines = [f"{k}: {'ok' if v is None else v}" for k, v in report.verdicts.items()]
    return Outcome(OK if report.ok else FAIL, {"ok": report.ok, "conditions": report.to_json()}, lines)


def cmd_check_heredity(a) -> Outcome:
    v = check_heredity(load_nmodel_unchecked(a.model))
    return Outcome(OK if v is None else FAIL, {"ok": v is None, "violation": _violation_json(v)},
                   ["hereditary" if v is None else str(v)])


def cmd_valid(a) -> Outcome:
    m, f = load_nmodel(a.model), parse(a.formula)
    failing = [w for w, t in truth_map(m, f).items() if not t]
    lines = ["valid"] if not failing else [f"fails at {', '.join(failing)}"]
    return Outcome(FAIL if failing else OK, {"formula": pretty(f), "valid": not failing, "failing": failing}, lines)


def cmd_countermodel(a) -> Outcome:
    f = parse(a.formula)
    logic = get_logic(a.logic)
    budget = SearchBudget(a.max_worlds, a.max_vars, a.time_limit)
    r = decide_bounded_validity(f, logic, budget)
    data = {
        "formula": pretty(f), "logic": logic.name, "status": r.status,
        "frames_checked": r.frames_checked, "models_checked": r.models_checked,
        "complete_by_fmp": r.complete_by_fmp,
    }
    if r.found:
        data["world"] = r.world
        data["model"] = dump_nmodel(r.model)
        lines = [f"countermodel at {r.world}:", json.dumps(data["model"])]
        return Outcome(FAIL, data, lines)
    if r.status == "budget_exhausted":
        lines = [f"time limit reached after {r.worlds_completed} complete world count(s)"]
    elif r.complete_by_fmp:
        lines = ["valid (search covers the finite model bound)"]
    else:
        lines = [f"no countermodel with at most {budget.max_worlds} worlds"]
    return Outcome(OK, data, lines)


def cmd_convert(a) -> Outcome:
    if a.to == "birel":
        out = dump_brmodel(nbhd_to_birel(load_nmodel(a.model)))
    else:
        out = dump_nmodel(birel_to_nbhd(load_brmodel(a.model)))
    return Outcome(OK, out, [json.dumps(out)])


def cmd_filtrate(a) -> Outcome:
    fm = filtrate(load_brmodel(a.model), parse(a.formula))
    data = {"model": dump_brmodel(fm.model), "classes": fm.class_of, "sigma": [pretty(s) for s in fm.sigma]}
    return Outcome(OK, data, [f"{len(fm.model.frame.worlds)} classes", json.dumps(data["model"])])


def _load_pair(a):
    return load_nmodel(a.m1), load_nmodel(a.m2)


def cmd_bisim(a) -> Outcome:
    m1, m2 = _load_pair(a)
    rel = max_bisimulation(m1, m2)
    data = {"bisimulation": _pairs(rel)}
    lines = [f"{x} ~ {y}" for x, y in sorted(rel)] or ["no bisimilar pairs"]
    if a.n is not None:
        chain = n_bisimulation(m1, m2, a.n)
        data["chain"] = [_pairs(r) for r in chain]
        lines.append(f"R_{a.n}: {len(chain[-1])} pairs")
    return Outcome(OK if rel else FAIL, data, lines)


def cmd_morphism(a) -> Outcome:
    m1, m2 = _load_pair(a)
    v = check_bounded_morphism(m1, m2, load_worldmap(a.map))
    return Outcome(OK if v is None else FAIL, {"ok": v is None, "violation": _violation_json(v)},
                   ["bounded morphism" if v is None else str(v)])


def cmd_topology(a) -> Outcome:
    fam = open_sets(load_nmodel(a.model).frame, a.world, a.variant)
    report = verify_topology(fam)
    data = {
        "world": a.world, "variant": fam.variant.value,
        "universe": sorted(fam.frame.names(fam.universe)),
        "opens": fam.sets(), "ok": report.ok, "checks": report.to_json(),
    }
    lines = ["opens: " + " ".join("{" + ",".join(s) + "}" for s in fam.sets())]
    lines += [f"{k}: {'ok' if v is None else v}" for k, v in report.verdicts.items()]
    return Outcome(OK if report.ok else FAIL, data, lines)


def cmd_translate(a) -> Outcome:
    f = parse(a.formula)
    g = star(f, literal_delta=a.literal_delta)
    return Outcome(OK, {"input": pretty(f), "output": pretty(g)}, [pretty(g)])


def cmd_logics(a) -> Outcome:
    out = []
    for lg in logic_registry():
        out.append({
            "name": lg.name, "semantics": lg.semantics.value,
            "conditions": [c.value for c in lg.frame_conditions],
            "schemata": {name: pretty(s) for name, s in lg.axiom_schemata},
            "rules": list(lg.rules), "notes": list(lg.notes),
        })
    lines = [f"{d['name']}: {d['semantics']}, {'+'.join(d['conditions'])}" for d in out]
    return Outcome(OK, {"logics": out}, lines)


# -- wiring ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="imlkit", description="Neighborhood-model workbench for modal logics.")
    p.add_argument("--human", action="store_true", help="print prose instead of JSON")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, *args: str, help: str = "") -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        for arg in args:
            sp.add_argument(arg)
        sp.add_argument("--human", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        sp.set_defaults(func=fn)
        return sp

    add("parse", cmd_parse, "formula", help="parse and pretty-print a formula")
    add("eval", cmd_eval, "model", "formula", help="truth map of a formula").add_argument("--world")
    add("check-frame", cmd_check_frame, "model", help="check frame conditions").add_argument(
        "--conditions", required=True, help="comma-separated: " + ",".join(c.value for c in Condition))
    add("check-heredity", cmd_check_heredity, "model", help="check that atoms persist along min")
    add("valid", cmd_valid, "model", "formula", help="is the formula true at every world")

    cm = add("countermodel", cmd_countermodel, "formula", help="bounded countermodel search")
    cm.add_argument("--logic", required=True)
    cm.add_argument("--max-worlds", type=int, default=3)
    cm.add_argument("--max-vars", type=int, default=2)
    cm.add_argument("--time-limit", type=float)

    add("convert", cmd_convert, "model", help="switch presentation").add_argument(
        "--to", required=True, choices=["birel", "nbhd"])
    add("filtrate", cmd_filtrate, "model", "formula", help="filtrate a bi-relational model")
    add("bisim", cmd_bisim, "m1", "m2", help="largest bisimulation").add_argument("--n", type=int)
    add("morphism", cmd_morphism, "m1", "m2", "map", help="check a bounded morphism")
    tp = add("topology", cmd_topology, "model", help="open sets at a world")
    tp.add_argument("--world", required=True)
    tp.add_argument("--variant", default="paper", choices=["paper", "alt"])
    add("translate", cmd_translate, "formula", help="translate into the classical language").add_argument(
        "--literal-delta", action="store_true", help="leave delta subformulas untranslated")
    add("logics", cmd_logics, help="list the named logic systems")
    return p


INPUT_ERRORS = (FormulaSyntaxError, ModelFileError, FrameError, SemanticsError, ValueError, KeyError)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return BAD_INPUT if e.code else OK
    try:
        out = args.func(args)
    except INPUT_ERRORS as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        err = {"error": type(e).__name__, "message": msg}
        if isinstance(e, FormulaSyntaxError):
            err["offset"] = e.offset
            err["expected"] = list(e.expected)
        print(f"error: {msg}" if args.human else json.dumps(err))
        return BAD_INPUT
    if args.human:
        print("\n".join(out.lines))
    else:
        print(json.dumps(out.data, indent=2))
    return out.code


if __name__ == "__main__":
    sys.exit(main())
