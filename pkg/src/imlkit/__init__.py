"""Finite-model tools for intuitionistic and classical modal logics over neighborhood frames.

Frames record, for each world, a minimal and a maximal neighborhood; the
neighborhoods of a world are exactly the sets between the two.
"""
from .formula import Formula, parse, pretty
from .nmodel import Condition, NFrame, NModel, Semantics, check_conditions, force, truth_map

__all__ = [
    "Condition", "Formula", "NFrame", "NModel", "Semantics",
    "check_conditions", "force", "parse", "pretty", "truth_map",
]
