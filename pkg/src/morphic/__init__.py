"""
Morphic words: morphisms and codings, lazily generated fixed points,
prefix analyzers, the ten-property taxonomy and a catalog of examples.
"""

__version__ = "0.1.0"

from .analyze import (
    factor_complexity,
    factor_recurrence,
    find_additive_cubes,
    find_k_powers,
    find_overlaps,
    find_xxxR,
    gap_report,
    letter_frequency,
    perron_frequencies,
    primitivity,
)
from .core import (
    Alphabet,
    Coding,
    Morphism,
    Word,
    apply,
    base_k_value,
    classify_shape,
    compose,
    image_lengths,
    incidence_matrix,
    occurrences,
    power,
    render,
)
from .errors import (
    AlphabetMismatchError,
    AnalysisError,
    BudgetExceededError,
    ContradictionError,
    MorphicError,
    NotPrimitiveError,
    NotProlongableError,
    ParseError,
    PrecisionError,
)
from .generate import WordStream, fixed_point_stream, is_prolongable, iterate, letter_structure, mortal_letters
from .taxonomy import PropertyAssignment, class_label, classify_evidence, closure, enumerate_classes

__all__ = [
    "Alphabet",
    "Coding",
    "Morphism",
    "Word",
    "apply",
    "base_k_value",
    "classify_shape",
    "compose",
    "image_lengths",
    "incidence_matrix",
    "occurrences",
    "power",
    "render",
    "WordStream",
    "fixed_point_stream",
    "is_prolongable",
    "iterate",
    "letter_structure",
    "mortal_letters",
    "factor_complexity",
    "factor_recurrence",
    "find_additive_cubes",
    "find_k_powers",
    "find_overlaps",
    "find_xxxR",
    "gap_report",
    "letter_frequency",
    "perron_frequencies",
    "primitivity",
    "PropertyAssignment",
    "class_label",
    "classify_evidence",
    "closure",
    "enumerate_classes",
    "AlphabetMismatchError",
    "AnalysisError",
    "BudgetExceededError",
    "ContradictionError",
    "MorphicError",
    "NotPrimitiveError",
    "NotProlongableError",
    "ParseError",
    "PrecisionError",
]
