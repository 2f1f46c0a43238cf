"""The finite-set model: hereditarily finite codes, the universe and the interpretation of syntax."""

from .hf import BudgetExceeded
from .universe import U0, LargeW, LiftingSquare, NotCommuting, SetUniverse, build_set_universe
from .closure import ClosureReport, verify_internal_closure
from .interpret import Interpreter, SType, Unsupported, describe_definition, interpret, term_at, type_at
from .sweep import SweepReport, soundness_sweep

__all__ = [
    "U0",
    "BudgetExceeded",
    "ClosureReport",
    "Interpreter",
    "LargeW",
    "LiftingSquare",
    "NotCommuting",
    "SType",
    "SetUniverse",
    "SweepReport",
    "Unsupported",
    "build_set_universe",
    "describe_definition",
    "interpret",
    "soundness_sweep",
    "term_at",
    "type_at",
    "verify_internal_closure",
]
