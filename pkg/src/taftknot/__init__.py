"""Exact knot invariants from Yetter-Drinfeld modules over the Taft algebra."""

from .braid import BraidParseError, BraidWord, format_braid, parse
from .invariant import (
    JONES_EPSILON,
    EvaluationError,
    InvariantResult,
    NormalizationMode,
    batch_evaluate,
    evaluate_closure,
    jones_via_v1,
    kauffman_bracket_oracle,
)
from .kernels import BACKEND
from .ribbon import ribbon_data
from .scalars import LaurentScalar

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BraidParseError",
    "BraidWord",
    "EvaluationError",
    "InvariantResult",
    "JONES_EPSILON",
    "LaurentScalar",
    "NormalizationMode",
    "batch_evaluate",
    "evaluate_closure",
    "format_braid",
    "jones_via_v1",
    "kauffman_bracket_oracle",
    "parse",
    "ribbon_data",
]
