"""
Word constructions: each spec materializes exact prefixes on demand.

Only ``MorphicFixedPoint`` is backed by a morphism; the other variants
build words directly (characteristic sequences, base-k concatenation,
Sturmian words, ruler-sequence images, closed-form products) so they can be
checked against morphic constructions of the same word.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..core import Alphabet, Coding, Morphism, Word, apply, render
from ..errors import AlphabetMismatchError, BudgetExceededError, PrecisionError
from ..generate import STREAM_BUDGET, WordStream


class WordSpec:
    """A recipe for an infinite word."""

    alphabet: Alphabet
    budget: int = STREAM_BUDGET

    def materialize(self, n: int) -> Word:
        if n < 0:
            raise ValueError("negative length")
        if n > self.budget:
            raise BudgetExceededError(n, self.budget, f"{type(self).__name__} prefix")
        return self._prefix(n)

    def _prefix(self, n: int) -> Word:
        raise NotImplementedError

    def describe(self) -> str:
        return type(self).__name__


def materialize(spec: WordSpec, n: int) -> Word:
    return spec.materialize(n)


@dataclass(eq=False)
class MorphicFixedPoint(WordSpec):
    morphism: Morphism
    seed: str
    coding: Coding | None = None
    budget: int = STREAM_BUDGET
    _stream: WordStream | None = field(default=None, init=False, repr=False)

    @property
    def alphabet(self) -> Alphabet:
        return self.coding.target if self.coding is not None else self.morphism.source

    @property
    def stream(self) -> WordStream:
        if self._stream is None:
            self._stream = WordStream(self.morphism, self.seed, self.coding, self.budget)
        return self._stream

    def _prefix(self, n):
        return self.stream.prefix(n)

    def describe(self):
        via = f" coded by {self.coding!r}" if self.coding is not None else ""
        return f"fixed point of {self.morphism!r} on {self.seed}{via}"


@dataclass(eq=False)
class PrefixPatch(WordSpec):
    """``base`` with its first ``len(replacement)`` symbols overwritten."""

    base: WordSpec
    replacement: tuple[str, ...]
    budget: int = STREAM_BUDGET

    def __post_init__(self):
        self.replacement = tuple(self.replacement)
        extra = [t for t in dict.fromkeys(self.replacement) if t not in self.base.alphabet]
        self.alphabet = Alphabet(self.base.alphabet.letters + tuple(extra))

    def _prefix(self, n):
        w = self.base.materialize(n).relabel(self.alphabet)
        arr = w.symbols.copy()
        k = min(n, len(self.replacement))
        arr[:k] = [self.alphabet.id(t) for t in self.replacement[:k]]
        return Word._trusted(self.alphabet, arr)

    def describe(self):
        return f"{self.base.describe()} with prefix replaced by {''.join(self.replacement)}"


@dataclass(eq=False)
class Shift(WordSpec):
    """``base`` with its first ``k`` symbols dropped."""

    base: WordSpec
    k: int
    budget: int = STREAM_BUDGET

    @property
    def alphabet(self):
        return self.base.alphabet

    def _prefix(self, n):
        return self.base.materialize(n + self.k)[self.k :]

    def describe(self):
        return f"shift by {self.k} of {self.base.describe()}"


@dataclass(eq=False)
class MorphicImage(WordSpec):
    """Image of ``base`` under a non-erasing morphism."""

    base: WordSpec
    morphism: Morphism
    budget: int = STREAM_BUDGET

    def __post_init__(self):
        if not np.all(self.morphism.lengths > 0):
            raise ValueError("image morphism must be non-erasing")
        if self.morphism.source != self.base.alphabet:
            raise AlphabetMismatchError("morphism source differs from base alphabet")

    @property
    def alphabet(self):
        return self.morphism.target

    def _prefix(self, n):
        return apply(self.morphism, self.base.materialize(n))[:n]

    def describe(self):
        return f"image of {self.base.describe()} under {self.morphism!r}"


def _integer_positions(kind: str, k: int | None, n: int) -> list[int]:
    out = []
    if kind == "factorials":
        i, f = 1, 1
        while f < n:
            out.append(f)
            i += 1
            f *= i
    elif kind == "fibonacci_numbers":
        a, b = 0, 1
        while a < n:
            out.append(a)
            a, b = b, a + b
    elif kind == "powers_of":
        f = 1
        while f < n:
            out.append(f)
            f *= k
    else:
        raise ValueError(f"unknown integer stream {kind!r}")
    return out


@dataclass(eq=False)
class Characteristic(WordSpec):
    """Binary word with 1 exactly at the members of an integer sequence."""

    kind: str
    k: int | None = None
    budget: int = STREAM_BUDGET

    def __post_init__(self):
        if self.kind == "powers_of" and (self.k is None or self.k < 2):
            raise ValueError("powers_of needs k >= 2")
        self.alphabet = Alphabet(("0", "1"))

    def _prefix(self, n):
        arr = np.zeros(n, dtype=np.int32)
        pos = _integer_positions(self.kind, self.k, n)
        arr[pos] = 1
        return Word._trusted(self.alphabet, arr)

    def describe(self):
        what = f"powers of {self.k}" if self.kind == "powers_of" else self.kind.replace("_", " ")
        return f"characteristic word of the {what}"


def _digits(i: int, k: int) -> list[int]:
    out = []
    while i:
        i, d = divmod(i, k)
        out.append(d)
    return out[::-1]


@dataclass(eq=False)
class BaseConcat(WordSpec):
    """Base-k expansions of 1, 2, 3, ... concatenated."""

    k: int
    budget: int = STREAM_BUDGET

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("base must be >= 2")
        self.alphabet = Alphabet(tuple(str(d) for d in range(self.k)))

    def _prefix(self, n):
        if self.k == 2:
            parts, total, i = [], 0, 1
            while total < n:
                s = format(i, "b")
                parts.append(s)
                total += len(s)
                i += 1
            arr = np.frombuffer("".join(parts).encode(), dtype=np.uint8)[:n] - ord("0")
        else:
            digits, i = [], 1
            while len(digits) < n:
                digits.extend(_digits(i, self.k))
                i += 1
            arr = np.asarray(digits[:n])
        return Word._trusted(self.alphabet, arr.astype(np.int32))

    def describe(self):
        return f"concatenated base-{self.k} expansions of 1, 2, 3, ..."


# ---------------------------------------------------------------------------
# exact reals for Sturmian words


@dataclass(frozen=True)
class Quadratic:
    """The real ``(p + q*sqrt(d)) / r`` with integers, ``r > 0``, ``d`` square-free-ish (not a square)."""

    p: int
    q: int
    d: int
    r: int = 1

    def __post_init__(self):
        if self.r <= 0:
            raise ValueError("denominator must be positive")
        if self.q and (self.d < 2 or math.isqrt(self.d) ** 2 == self.d):
            raise ValueError("d must be a positive non-square")

    @classmethod
    def rational(cls, x: Fraction | int, d: int = 5) -> Quadratic:
        x = Fraction(x)
        return cls(x.numerator, 0, d, x.denominator)

    def __add__(self, other: Quadratic) -> Quadratic:
        if self.q and other.q and self.d != other.d:
            raise ValueError("different quadratic fields")
        d = self.d if self.q else other.d
        return Quadratic(self.p * other.r + other.p * self.r, self.q * other.r + other.q * self.r, d, self.r * other.r)

    def scale(self, n: int) -> Quadratic:
        return Quadratic(n * self.p, n * self.q, self.d, self.r)

    def floor(self) -> int:
        if self.q == 0:
            return self.p // self.r
        s = math.isqrt(self.q * self.q * self.d)
        fl = s if self.q > 0 else -s - 1
        return (self.p + fl) // self.r

    def __float__(self):
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def __str__(self):
        return f"({self.p}{self.q:+d}*sqrt({self.d}))/{self.r}"


PI_DIGITS = "3.1415926535897932384626433832795028841971693993751058209749445923"


@dataclass(frozen=True)
class NamedConstant:
    """An irrational known to a fixed number of decimals; floors are checked against the error interval."""

    name: str
    digits: str

    @property
    def scale(self) -> int:
        return 10 ** len(self.digits.split(".")[1])

    @property
    def lower(self) -> int:
        return int(self.digits.replace(".", ""))

    def floor_affine(self, n: int, shift: Fraction) -> int:
        """``floor(n*x + shift)`` for ``x`` strictly inside ``(lower, lower+1)/scale``."""
        s = self.scale
        shift = Fraction(shift)
        lo = Fraction(n * self.lower, s) + shift
        hi = Fraction(n * (self.lower + 1), s) + shift
        a = math.floor(lo)
        b = math.ceil(hi) - 1 if n else a
        if a != b:
            raise PrecisionError(f"floor({n}*{self.name} + {shift}) undecided at {len(self.digits) - 2} decimals")
        return a

    def __float__(self):
        return float(self.digits)

    def __str__(self):
        return self.name


PI = NamedConstant("pi", PI_DIGITS)


@dataclass(eq=False)
class Sturmian(WordSpec):
    """``s_n = floor((n+1)*alpha + rho) - floor(n*alpha + rho)``."""

    alpha: Quadratic | NamedConstant
    rho: Quadratic | Fraction | int = 0
    budget: int = 10**6

    def __post_init__(self):
        base = self._floor(1) - self._floor(0)
        lo = math.floor(float(self.alpha))
        if base not in (lo, lo + 1):  # pragma: no cover
            raise PrecisionError("inconsistent first term")
        self.low = lo
        self.alphabet = Alphabet((str(lo), str(lo + 1)))

    def _floor(self, n: int) -> int:
        if isinstance(self.alpha, NamedConstant):
            if isinstance(self.rho, Quadratic):
                raise TypeError("named constants take a rational offset")
            return self.alpha.floor_affine(n, Fraction(self.rho))
        rho = self.rho if isinstance(self.rho, Quadratic) else Quadratic.rational(self.rho, self.alpha.d)
        return (self.alpha.scale(n) + rho).floor()

    def _prefix(self, n):
        floors = [self._floor(i) for i in range(n + 1)]
        arr = np.diff(np.asarray(floors, dtype=np.int64)) - self.low
        if arr.size and (arr.min() < 0 or arr.max() > 1):  # pragma: no cover
            raise PrecisionError("Sturmian term outside {floor(alpha), floor(alpha)+1}")
        return Word._trusted(self.alphabet, arr.astype(np.int32))

    def describe(self):
        return f"Sturmian word with slope {self.alpha} and intercept {self.rho}"


def nu2(n: int) -> int:
    """2-adic valuation of ``n >= 1``."""
    return (n & -n).bit_length() - 1


@dataclass(eq=False)
class RulerImage(WordSpec):
    """Concatenation of ``block(nu2(n))`` for ``n = 1, 2, 3, ...``."""

    block: Callable[[int], Sequence[str]]
    alphabet: Alphabet
    description: str = "ruler image"
    params: dict | None = None
    budget: int = STREAM_BUDGET

    @classmethod
    def power_blocks(cls, prefix: Sequence[str], letter: str, base: int, shift: int) -> RulerImage:
        """``i -> prefix . letter^(base^(i+shift))``."""
        prefix = tuple(prefix)
        alpha = Alphabet(tuple(dict.fromkeys(prefix + (letter,))))

        def block(i):
            return prefix + (letter,) * base ** (i + shift)

        desc = f"i -> {''.join(prefix)}{letter}^({base}^(i+{shift}))"
        return cls(block, alpha, desc, {"prefix": prefix, "letter": letter, "base": base, "shift": shift})

    @classmethod
    def ruler(cls, max_letter: int = 63) -> RulerImage:
        """The ruler sequence itself, letters ``0..max_letter``."""
        alpha = Alphabet(tuple(str(i) for i in range(max_letter + 1)))
        return cls(lambda i: (str(i),), alpha, "ruler sequence", {"ruler": max_letter})

    def _prefix(self, n):
        ids = self.alphabet.index
        cache: dict[int, list[int]] = {}
        out: list[int] = []
        i = 1
        while len(out) < n:
            v = nu2(i)
            if v not in cache:
                cache[v] = [ids[t] for t in self.block(v)]
            out.extend(cache[v])
            i += 1
        return Word._trusted(self.alphabet, np.asarray(out[:n], dtype=np.int32))

    def describe(self):
        return f"image of the ruler sequence under {self.description}"


def _nu2_square_runs(n: int) -> np.ndarray:
    out = np.empty(n, dtype=np.int32)
    k, i = 0, 1
    while k < n:
        run = (nu2(i) + 1) ** 2
        out[k] = 0
        out[k + 1 : k + 1 + run] = 1
        k += 1 + run
        i += 1
    return out[:n]


PRODUCT_FORMULAS: dict[str, Callable[[int], np.ndarray]] = {
    "nu2-square-runs": _nu2_square_runs,
}


@dataclass(eq=False)
class Product(WordSpec):
    """A closed-form block product; ``nu2-square-runs`` is ``prod_{n>=1} 0 1^((nu2(n)+1)^2)``."""

    formula: str
    budget: int = STREAM_BUDGET

    def __post_init__(self):
        if self.formula not in PRODUCT_FORMULAS:
            raise ValueError(f"unknown product formula {self.formula!r}")
        self.alphabet = Alphabet(("0", "1"))

    def _prefix(self, n):
        fn = PRODUCT_FORMULAS[self.formula]
        # over-allocate: the last block may run past n
        return Word._trusted(self.alphabet, fn(n))

    def describe(self):
        return f"product formula {self.formula}"


def display(spec: WordSpec, n: int = 40) -> str:
    return render(spec.materialize(n))
