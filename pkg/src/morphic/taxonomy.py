"""
The ten-property lattice of morphic words.

Assignments are stored as two 10-bit masks (known-true, known-false); bit
``i - 1`` stands for property ``Pi``. Closure chains implications forward
and contrapositively until nothing changes.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContradictionError

PROPERTIES = {
    1: "pure morphic",
    2: "morphic",
    3: "pure uniform morphic",
    4: "uniform morphic",
    5: "pure primitive morphic",
    6: "primitive morphic",
    7: "pure uniform primitive morphic",
    8: "uniform primitive morphic",
    9: "uniformly recurrent",
    10: "recurrent",
}

FULL = (1 << 10) - 1


def _bit(p: int) -> int:
    return 1 << (p - 1)


@dataclass(frozen=True)
class PropertyAssignment:
    true: int = 0
    false: int = 0

    def __post_init__(self):
        if self.true & self.false:
            raise ValueError("a property cannot be both true and false")

    @classmethod
    def of(cls, values: Mapping[int | str, bool | None] | None = None, **kw: bool) -> PropertyAssignment:
        """``PropertyAssignment.of({6: True, 1: False})`` or ``.of(P6=True, P1=False)``."""
        t = f = 0
        items = dict(values or {})
        items.update(kw)
        for key, val in items.items():
            p = int(str(key).upper().lstrip("P"))
            if not 1 <= p <= 10:
                raise ValueError(f"no property P{p}")
            if val is None:
                continue
            if val:
                t |= _bit(p)
            else:
                f |= _bit(p)
        return cls(t, f)

    @classmethod
    def parse(cls, text: str) -> PropertyAssignment:
        """``"P1=true,P10=false"``; values true/false/1/0/unknown."""
        values: dict[int, bool | None] = {}
        for part in filter(None, (s.strip() for s in text.split(","))):
            key, _, val = part.partition("=")
            val = val.strip().lower()
            if val in ("true", "t", "1", "yes"):
                values[int(key.strip().upper().lstrip("P"))] = True
            elif val in ("false", "f", "0", "no"):
                values[int(key.strip().upper().lstrip("P"))] = False
            elif val in ("unknown", "?", ""):
                values[int(key.strip().upper().lstrip("P"))] = None
            else:
                raise ValueError(f"bad value {val!r} for {key}")
        return cls.of(values)

    def __getitem__(self, p: int) -> bool | None:
        if self.true & _bit(p):
            return True
        if self.false & _bit(p):
            return False
        return None

    @property
    def is_total(self) -> bool:
        return (self.true | self.false) == FULL

    def extends(self, other: PropertyAssignment) -> bool:
        return (self.true & other.true) == other.true and (self.false & other.false) == other.false

    def as_dict(self) -> dict[str, bool | None]:
        return {f"P{p}": self[p] for p in PROPERTIES}

    def __str__(self):
        sym = {True: "T", False: "F", None: "?"}
        return " ".join(f"P{p}={sym[self[p]]}" for p in PROPERTIES)


@dataclass(frozen=True)
class ImplicationRule:
    antecedents: frozenset[int]
    consequent: int
    provenance: str

    @property
    def mask(self) -> int:
        return sum(_bit(p) for p in self.antecedents)

    def __str__(self):
        lhs = " and ".join(f"P{p}" for p in sorted(self.antecedents))
        return f"{lhs} => P{self.consequent} [{self.provenance}]"


_TRIVIAL = {
    1: (2,),
    3: (1, 2, 4),
    4: (2,),
    5: (1, 2, 6),
    6: (2,),
    7: (1, 2, 3, 4, 5, 6, 8),
    8: (2, 4, 6),
    9: (10,),
}

RULES: tuple[ImplicationRule, ...] = tuple(
    [ImplicationRule(frozenset({a}), c, "definition") for a, cs in _TRIVIAL.items() for c in cs]
    + [
        ImplicationRule(frozenset({6}), 9, "Cobham (a): primitive morphic words are uniformly recurrent"),
        ImplicationRule(
            frozenset({6, 4}), 8, "Cobham (b): uniformly recurrent uniform morphic words are uniform primitive morphic"
        ),
        ImplicationRule(
            frozenset({3, 9}), 7, "pure uniform morphic and uniformly recurrent implies pure uniform primitive"
        ),
        ImplicationRule(frozenset({2, 9}), 6, "Durand: uniformly recurrent morphic words are primitive morphic"),
    ]
)

_COMPILED = tuple((r.mask, _bit(r.consequent), r) for r in RULES)


def _close(t: int, f: int) -> tuple[int, int]:
    changed = True
    while changed:
        changed = False
        for ante, cons, rule in _COMPILED:
            if t & ante == ante:
                if f & cons:
                    raise ContradictionError(rule, rule.consequent)
                if not t & cons:
                    t |= cons
                    changed = True
            if f & cons:
                open_ = ante & ~t
                if open_ == 0:
                    raise ContradictionError(rule, rule.consequent)
                if open_ & (open_ - 1) == 0 and not f & open_:
                    f |= open_
                    changed = True
    return t, f


def closure(a: PropertyAssignment) -> PropertyAssignment:
    """Least fixpoint of ``a`` under all rules; raises ContradictionError."""
    return PropertyAssignment(*_close(a.true, a.false))


def consistent(a: PropertyAssignment) -> bool:
    try:
        _close(a.true, a.false)
    except ContradictionError:
        return False
    return True


# Each class: the slots its description fixes; closure determines the rest.
CLASS_CLAUSES: dict[str, tuple[str, dict[int, bool]]] = {
    "a": ("neither morphic nor recurrent", {2: False, 10: False}),
    "b": ("recurrent, but neither morphic nor uniformly recurrent", {10: True, 2: False, 9: False}),
    "c": ("uniformly recurrent, but not morphic", {9: True, 2: False}),
    "d": (
        "morphic; not pure morphic, uniform morphic, primitive morphic, or recurrent",
        {2: True, 1: False, 4: False, 6: False, 10: False},
    ),
    "e": (
        "morphic and recurrent; not pure morphic, uniform morphic, primitive morphic, or uniformly recurrent",
        {2: True, 10: True, 1: False, 4: False, 6: False, 9: False},
    ),
    "f": ("primitive morphic; not pure morphic or uniform morphic", {6: True, 1: False, 4: False}),
    "g": ("uniform morphic; not pure morphic, primitive morphic, or recurrent", {4: True, 1: False, 6: False, 10: False}),
    "h": ("uniform morphic and recurrent; not pure morphic or primitive morphic", {4: True, 10: True, 1: False, 6: False}),
    "i": ("uniform primitive morphic; not pure morphic", {8: True, 1: False}),
    "j": ("pure morphic; not uniform morphic, primitive morphic, or recurrent", {1: True, 4: False, 6: False, 10: False}),
    "k": (
        "pure morphic and recurrent; not uniform morphic, primitive morphic, or uniformly recurrent",
        {1: True, 10: True, 4: False, 6: False, 9: False},
    ),
    "l": (
        "pure morphic and primitive morphic; not uniform morphic or pure primitive morphic",
        {1: True, 6: True, 4: False, 5: False},
    ),
    "m": ("pure primitive morphic; not uniform morphic", {5: True, 4: False}),
    "n": (
        "pure morphic and uniform morphic; not pure uniform morphic, primitive morphic, or recurrent",
        {1: True, 4: True, 3: False, 6: False, 10: False},
    ),
    "o": (
        "pure morphic, uniform morphic and recurrent; not pure uniform morphic or primitive morphic",
        {1: True, 4: True, 10: True, 3: False, 6: False},
    ),
    "p": (
        "pure morphic and uniform primitive morphic; not pure uniform morphic or pure primitive morphic",
        {1: True, 8: True, 3: False, 5: False},
    ),
    "q": ("pure primitive morphic and uniform primitive morphic; not pure uniform morphic", {5: True, 8: True, 3: False}),
    "r": ("pure uniform morphic; not primitive morphic or recurrent", {3: True, 6: False, 10: False}),
    "s": ("pure uniform morphic and recurrent; not primitive morphic", {3: True, 10: True, 6: False}),
    "t": ("pure uniform primitive morphic", {7: True}),
}

LABELS = tuple(CLASS_CLAUSES)


@lru_cache(maxsize=None)
def class_assignment(label: str) -> PropertyAssignment:
    """The total assignment of a class, from its clause by closure."""
    _, slots = CLASS_CLAUSES[label]
    a = closure(PropertyAssignment.of(slots))
    if not a.is_total:
        raise AssertionError(f"clause ({label}) leaves {a} undetermined")
    return a


def enumerate_classes() -> list[PropertyAssignment]:
    """Every total assignment consistent with all rules (brute force over 2^10)."""
    out = []
    for bits in range(1 << 10):
        t = bits
        f = FULL & ~bits
        if consistent(PropertyAssignment(t, f)):
            out.append(PropertyAssignment(t, f))
    return out


@lru_cache(maxsize=None)
def _label_table() -> dict[PropertyAssignment, str]:
    return {class_assignment(lbl): lbl for lbl in LABELS}


def class_label(a: PropertyAssignment) -> str:
    if not a.is_total:
        raise ValueError(f"assignment is not total: {a}")
    closed = closure(a)
    try:
        return _label_table()[closed]
    except KeyError:  # pragma: no cover - 20 classes cover all consistent totals
        raise ValueError(f"no class matches {a}") from None


def classify_evidence(e: PropertyAssignment) -> list[str]:
    """Labels of all classes compatible with the closed evidence."""
    closed = closure(e)
    return [lbl for lbl in LABELS if class_assignment(lbl).extends(closed)]


def partial_assignments() -> Iterable[PropertyAssignment]:
    """All 3^10 partial assignments."""
    for digits in itertools.product((0, 1, 2), repeat=10):
        t = f = 0
        for i, d in enumerate(digits):
            if d == 1:
                t |= 1 << i
            elif d == 2:
                f |= 1 << i
        yield PropertyAssignment(t, f)
