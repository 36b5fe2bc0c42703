"""JSON model files.

Neighborhood models::

    {"semantics": "intuitionistic", "worlds": [...], "min": {...}, "max": {...}, "valuation": {...}}

Bi-relational models::

    {"worlds": [...], "leq": [[a, b], ...], "r": [[a, b], ...], "valuation": {...}}

World maps::

    {"map": {"w": "a", ...}}
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .birel import BrFrame, BrModel
from .nmodel import NFrame, NModel, Semantics


class ModelFileError(ValueError):
    pass


def _read(source: str | Path | dict) -> dict:
    if isinstance(source, dict):
        return source
    try:
        data = json.loads(Path(source).read_text())
    except OSError as e:
        raise ModelFileError(f"cannot read {source}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise ModelFileError(f"{source}: invalid JSON ({e.msg} at line {e.lineno})") from None
    if not isinstance(data, dict):
        raise ModelFileError(f"{source}: top level must be an object")
    return data


def _need(data: dict, key: str, kind: type) -> Any:
    if key not in data:
        raise ModelFileError(f"missing key {key!r}")
    if not isinstance(data[key], kind):
        raise ModelFileError(f"{key!r} must be a {kind.__name__}")
    return data[key]


def is_birel(data: dict) -> bool:
    return "leq" in data or "r" in data


def load_nmodel(source: str | Path | dict) -> NModel:
    data = _read(source)
    worlds = _need(data, "worlds", list)
    try:
        semantics = Semantics(data.get("semantics", "intuitionistic"))
    except ValueError:
        raise ModelFileError(f"unknown semantics {data.get('semantics')!r}") from None
    try:
        return NModel.from_sets(
            [str(w) for w in worlds], _need(data, "min", dict), _need(data, "max", dict),
            data.get("valuation", {}), semantics,
        )
    except (ValueError, KeyError) as e:
        raise ModelFileError(str(e).strip("'\"")) from None


def load_nframe_unchecked(source: str | Path | dict) -> NFrame:
    """The frame of a model file, without rejecting base-condition failures."""
    data = _read(source)
    try:
        return NFrame.from_sets(
            [str(w) for w in _need(data, "worlds", list)], _need(data, "min", dict), _need(data, "max", dict),
            check=False,
        )
    except (ValueError, KeyError) as e:
        raise ModelFileError(str(e)) from None


def load_nmodel_unchecked(source: str | Path | dict) -> NModel:
    """A model file loaded without frame or heredity validation."""
    data = _read(source)
    frame = load_nframe_unchecked(data)
    try:
        semantics = Semantics(data.get("semantics", "intuitionistic"))
        val = {q: frame.mask_of(ws) for q, ws in data.get("valuation", {}).items()}
    except (ValueError, KeyError) as e:
        raise ModelFileError(str(e)) from None
    return NModel.unchecked(frame, val, semantics)


def dump_nmodel(model: NModel) -> dict:
    mn, mx = model.frame.to_sets()
    return {
        "semantics": model.semantics.value,
        "worlds": list(model.frame.worlds),
        "min": mn,
        "max": mx,
        "valuation": {q: model.frame.names(v) for q, v in sorted(model.valuation.items())},
    }


def load_brmodel(source: str | Path | dict) -> BrModel:
    data = _read(source)
    try:
        return BrModel.from_pairs(
            [str(w) for w in _need(data, "worlds", list)],
            [tuple(p) for p in _need(data, "leq", list)],
            [tuple(p) for p in _need(data, "r", list)],
            data.get("valuation", {}),
        )
    except (ValueError, KeyError, TypeError) as e:
        raise ModelFileError(str(e)) from None


def dump_brmodel(model: BrModel) -> dict:
    fr = model.frame
    return {
        "worlds": list(fr.worlds),
        "leq": [list(p) for p in fr.pairs("leq")],
        "r": [list(p) for p in fr.pairs("r")],
        "valuation": {q: fr.names(v) for q, v in sorted(model.valuation.items())},
    }


def load_worldmap(source: str | Path | dict) -> dict[str, str]:
    data = _read(source)
    m = _need(data, "map", dict)
    return {str(k): str(v) for k, v in m.items()}


def write_json(path: str | Path, data: dict) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n")
