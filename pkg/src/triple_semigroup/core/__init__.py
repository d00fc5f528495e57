"""triple_semigroup.core: shared config, errors and generator helpers."""

from .config import SemigroupConfig, get_config
from .generators import (
    INFINITE,
    FrobeniusGenus,
    GapSet,
    Generators,
    closed_form,
    is_representable,
    matrix_representation,
    sylvester_pair,
    validate,
)
from .report import Report

__all__ = [
    "SemigroupConfig",
    "get_config",
    "INFINITE",
    "FrobeniusGenus",
    "GapSet",
    "Generators",
    "closed_form",
    "is_representable",
    "matrix_representation",
    "sylvester_pair",
    "validate",
    "Report",
]
