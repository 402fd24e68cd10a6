"""Coherent probability bounds for uncertain argument forms with conditionals."""

from .coherence import (
    Assessment,
    AssessmentEntry,
    Bounds,
    ClassificationConfig,
    Coherent,
    Incoherent,
    IncoherentPremises,
    ResponseCategory,
    check_coherence,
    classify,
    propagate,
    structural_bounds,
)
from .events import (
    And,
    Atom,
    Bottom,
    ConditionalObject,
    Every,
    Formula,
    If,
    Interpretation,
    MaterialImp,
    NegIf,
    Not,
    Or,
    Plain,
    Top,
    TruthValue3,
    constituents,
    eval3,
    eval_classical,
    expand,
)
from .prevision import ConditionalRandomQuantity, crq_of, nested_prevision

__all__ = [
    "And",
    "Assessment",
    "AssessmentEntry",
    "Atom",
    "Bottom",
    "Bounds",
    "ClassificationConfig",
    "Coherent",
    "ConditionalObject",
    "ConditionalRandomQuantity",
    "Every",
    "Formula",
    "If",
    "Incoherent",
    "IncoherentPremises",
    "Interpretation",
    "MaterialImp",
    "NegIf",
    "Not",
    "Or",
    "Plain",
    "ResponseCategory",
    "Top",
    "TruthValue3",
    "check_coherence",
    "classify",
    "constituents",
    "crq_of",
    "eval3",
    "eval_classical",
    "expand",
    "nested_prevision",
    "propagate",
    "structural_bounds",
]

__version__ = "0.1.0"
