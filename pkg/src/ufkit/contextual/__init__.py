"""Contextual categories: the abstract interface, C_U, the syntactic category and logical structures."""

from .core import (
    CU,
    Comparison,
    Configuration,
    CorruptedCU,
    ContextualCategory,
    CUMor,
    CUObject,
    FinMap,
    LawReport,
    Violation,
    contextualize,
    default_chooser,
    verify_contextual_laws,
)
from .structures import LogicalStructure, Sampler, induce_logical_structure, verify_structure
from .syntactic import SynMor, SyntacticCC, syntactic_cc

__all__ = [
    "CU",
    "Comparison",
    "CorruptedCU",
    "CUMor",
    "CUObject",
    "Configuration",
    "ContextualCategory",
    "FinMap",
    "LawReport",
    "LogicalStructure",
    "Sampler",
    "SynMor",
    "SyntacticCC",
    "Violation",
    "contextualize",
    "default_chooser",
    "induce_logical_structure",
    "syntactic_cc",
    "verify_contextual_laws",
    "verify_structure",
]
