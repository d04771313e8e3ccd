"""Word constructions and the catalog of example words."""

from .constructions import (
    PI,
    BaseConcat,
    Characteristic,
    MorphicFixedPoint,
    MorphicImage,
    NamedConstant,
    PrefixPatch,
    Product,
    Quadratic,
    RulerImage,
    Shift,
    Sturmian,
    WordSpec,
    materialize,
)
from .entries import (
    DEFAULT_BUDGET,
    Check,
    CheckResult,
    CorpusEntry,
    VerifyReport,
    catalog,
    get_entry,
    labeled_entries,
    list_entries,
    verify,
    verify_all,
)

__all__ = [
    "PI",
    "BaseConcat",
    "Characteristic",
    "MorphicFixedPoint",
    "MorphicImage",
    "NamedConstant",
    "PrefixPatch",
    "Product",
    "Quadratic",
    "RulerImage",
    "Shift",
    "Sturmian",
    "WordSpec",
    "materialize",
    "DEFAULT_BUDGET",
    "Check",
    "CheckResult",
    "CorpusEntry",
    "VerifyReport",
    "catalog",
    "get_entry",
    "labeled_entries",
    "list_entries",
    "verify",
    "verify_all",
]
