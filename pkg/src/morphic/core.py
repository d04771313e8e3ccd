"""
Alphabets, finite words, morphisms and codings.

Letters are arbitrary non-empty string tokens; internally each word is an
immutable ``int32`` array of dense letter ids. Two letters are the same iff
their tokens are equal, never by numeric value.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import AlphabetMismatchError, BudgetExceededError, DigitError

POWER_BUDGET = 10**8


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("alphabet must contain at least one letter")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in {letters}")
        for t in letters:
            if not isinstance(t, str) or not t or any(ch.isspace() for ch in t):
                raise ValueError(f"bad letter token {t!r}")

    @classmethod
    def of(cls, letters: str | Iterable[str]) -> Alphabet:
        """``Alphabet.of("01")`` or ``Alphabet.of(["c0", "e0"])``."""
        if isinstance(letters, str):
            letters = letters.split() if any(ch.isspace() for ch in letters) else list(letters)
        return cls(tuple(letters))

    @cached_property
    def index(self) -> dict[str, int]:
        return {t: i for i, t in enumerate(self.letters)}

    @cached_property
    def single_char(self) -> bool:
        return all(len(t) == 1 for t in self.letters)

    def id(self, letter: str) -> int:
        try:
            return self.index[letter]
        except KeyError:
            raise AlphabetMismatchError(f"letter {letter!r} not in alphabet {self.letters}") from None

    def tokenize(self, text: str | Sequence[str]) -> list[str]:
        if not isinstance(text, str):
            return list(text)
        if any(ch.isspace() for ch in text) or not self.single_char:
            return text.split()
        return list(text)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, letter):
        return letter in self.index

    def __repr__(self):
        return f"Alphabet({' '.join(self.letters)})"


class Word:
    """A finite word: an alphabet plus a read-only array of letter ids."""

    __slots__ = ("alphabet", "symbols")

    def __init__(self, alphabet: Alphabet, symbols=()):
        arr = np.array(symbols, dtype=kernels.SYMBOL).reshape(-1)
        if arr.size and (arr.min() < 0 or arr.max() >= len(alphabet)):
            raise AlphabetMismatchError(f"symbol id out of range for {alphabet}")
        arr.flags.writeable = False
        self.alphabet = alphabet
        self.symbols = arr

    @classmethod
    def _trusted(cls, alphabet: Alphabet, arr: np.ndarray) -> Word:
        obj = cls.__new__(cls)
        arr = np.asarray(arr, dtype=kernels.SYMBOL)
        if arr.flags.writeable:
            arr = arr.view()
            arr.flags.writeable = False
        obj.alphabet = alphabet
        obj.symbols = arr
        return obj

    @classmethod
    def parse(cls, alphabet: Alphabet | str, text: str | Sequence[str]) -> Word:
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet.of(alphabet)
        return cls(alphabet, [alphabet.id(t) for t in alphabet.tokenize(text)])

    @classmethod
    def empty(cls, alphabet: Alphabet) -> Word:
        return cls(alphabet, ())

    def __len__(self):
        return int(self.symbols.shape[0])

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._trusted(self.alphabet, self.symbols[item])
        return self.alphabet.letters[int(self.symbols[item])]

    def __iter__(self):
        letters = self.alphabet.letters
        return (letters[i] for i in self.symbols.tolist())

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.symbols, other.symbols)

    def __hash__(self):
        return hash((self.alphabet, self.symbols.tobytes()))

    def __add__(self, other: Word) -> Word:
        if other.alphabet != self.alphabet:
            raise AlphabetMismatchError("cannot concatenate words over different alphabets")
        return Word._trusted(self.alphabet, np.concatenate((self.symbols, other.symbols)))

    def __mul__(self, k: int) -> Word:
        return Word._trusted(self.alphabet, np.tile(self.symbols, k))

    def tokens(self) -> list[str]:
        return list(self)

    def letters(self) -> set[str]:
        return {self.alphabet.letters[i] for i in np.unique(self.symbols).tolist()}

    def count(self, letter: str) -> int:
        return int(np.count_nonzero(self.symbols == self.alphabet.id(letter)))

    def reversed(self) -> Word:
        return Word._trusted(self.alphabet, self.symbols[::-1])

    def relabel(self, alphabet: Alphabet) -> Word:
        """Same tokens, expressed over another alphabet containing them."""
        if alphabet == self.alphabet:
            return self
        table = np.array([alphabet.index.get(t, -1) for t in self.alphabet.letters], dtype=kernels.SYMBOL)
        arr = table[self.symbols]
        if arr.size and arr.min() < 0:
            missing = sorted(self.letters() - set(alphabet.letters))
            raise AlphabetMismatchError(f"letters {missing} not in {alphabet}")
        return Word._trusted(alphabet, arr)

    def __str__(self):
        return render(self)

    def __repr__(self):
        text = render(self[:40]) + ("..." if len(self) > 40 else "")
        return f"Word({text!r}, len={len(self)})"


def render(w: Word) -> str:
    """Concatenate single-character letters; otherwise space-separate tokens."""
    sep = "" if w.alphabet.single_char else " "
    return sep.join(w)


def same_word(u: Word, v: Word) -> bool:
    """Token-wise equality, independent of how the two alphabets are ordered."""
    if len(u) != len(v):
        return False
    try:
        return np.array_equal(u.relabel(v.alphabet).symbols, v.symbols)
    except AlphabetMismatchError:
        return False


def first_difference(u: Word, v: Word) -> int | None:
    n = min(len(u), len(v))
    ua = np.array(u.alphabet.letters, dtype=object)[u.symbols[:n]]
    vb = np.array(v.alphabet.letters, dtype=object)[v.symbols[:n]]
    diff = np.flatnonzero(ua != vb)
    if diff.size:
        return int(diff[0])
    return None if len(u) == len(v) else n


class Morphism:
    """
    A morphism given by its letter images.

    ``source`` and ``target`` may differ (e.g. a coding into a new alphabet);
    endomorphisms have ``source == target``.
    """

    def __init__(self, source: Alphabet, images: Sequence, target: Alphabet | None = None, name: str | None = None):
        target = source if target is None else target
        if len(images) != len(source):
            raise ValueError(f"need {len(source)} images, got {len(images)}")
        imgs = []
        for img in images:
            if isinstance(img, Word):
                if img.alphabet != target:
                    img = img.relabel(target)
                arr = img.symbols
            else:
                arr = np.asarray(img, dtype=kernels.SYMBOL).reshape(-1)
            if arr.size and (arr.min() < 0 or arr.max() >= len(target)):
                raise AlphabetMismatchError("image letter outside target alphabet")
            arr = arr.astype(kernels.SYMBOL)
            arr.flags.writeable = False
            imgs.append(arr)
        self.source = source
        self.target = target
        self.name = name
        self.images: tuple[np.ndarray, ...] = tuple(imgs)
        self.lengths = np.array([a.size for a in imgs], dtype=np.int64)
        self.offsets = np.concatenate(([0], np.cumsum(self.lengths)[:-1])).astype(np.int64)
        self.flat = np.concatenate(imgs).astype(kernels.SYMBOL) if imgs else np.empty(0, kernels.SYMBOL)

    @classmethod
    def from_dict(
        cls,
        rules: Mapping[str, str | Sequence[str]],
        alphabet: Alphabet | str | Iterable[str] | None = None,
        target: Alphabet | str | Iterable[str] | None = None,
        name: str | None = None,
    ) -> Morphism:
        """
        Build from ``{letter: image}``; images are strings (split per
        character for single-character alphabets, else on whitespace) or
        token lists.
        """
        source = Alphabet.of(list(rules)) if alphabet is None else _as_alphabet(alphabet)
        if set(rules) != set(source.letters):
            raise AlphabetMismatchError(f"rules must cover exactly {source.letters}")
        raw = {}
        for a in source.letters:
            img = rules[a]
            if isinstance(img, str):
                img = img.split() if (any(ch.isspace() for ch in img) or not source.single_char) else list(img)
            raw[a] = list(img)
        if target is None:
            seen = [t for img in raw.values() for t in img]
            if all(t in source for t in seen):
                tgt = source
            else:
                tgt = Alphabet(tuple(dict.fromkeys(seen)))
        else:
            tgt = _as_alphabet(target)
        images = [[tgt.id(t) for t in raw[a]] for a in source.letters]
        return cls(source, images, tgt, name=name)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> Morphism:
        return cls(alphabet, [[i] for i in range(len(alphabet))], alphabet, name="id")

    @property
    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def image(self, letter: str) -> Word:
        return Word._trusted(self.target, self.images[self.source.id(letter)])

    def __call__(self, x: str | Word) -> Word:
        if isinstance(x, Word):
            return apply(self, x)
        return self.image(x)

    def as_dict(self) -> dict[str, list[str]]:
        letters = self.target.letters
        return {a: [letters[i] for i in img.tolist()] for a, img in zip(self.source.letters, self.images)}

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and all(np.array_equal(x, y) for x, y in zip(self.images, other.images))
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(i.tobytes() for i in self.images)))

    def __repr__(self):
        t = self.target
        sep = "" if t.single_char else " "
        body = ", ".join(f"{a}->{sep.join(t.letters[i] for i in img.tolist()) or 'ε'}" for a, img in zip(self.source.letters, self.images))
        label = f"{self.name}: " if self.name else ""
        return f"Morphism({label}{body})"


class Coding(Morphism):
    """A 1-uniform morphism (letter-to-letter renaming)."""

    def __init__(self, source: Alphabet, images: Sequence, target: Alphabet | None = None, name: str | None = None):
        super().__init__(source, images, target, name)
        if not np.all(self.lengths == 1):
            raise ValueError("coding images must have length exactly 1")
        self.map = self.flat

    @classmethod
    def from_string(cls, source: str | Sequence[str], target: str | Sequence[str], name: str | None = None) -> Coding:
        """The shorthand ``a1 a2 .. an -> b1 b2 .. bn``, e.g. ``("abcd", "2201")``."""
        src = Alphabet.of(source)
        if isinstance(target, str):
            tgt_tokens = target.split() if any(ch.isspace() for ch in target) else list(target)
        else:
            tgt_tokens = list(target)
        if len(tgt_tokens) != len(src):
            raise ValueError("coding source and target lengths differ")
        tgt = Alphabet(tuple(dict.fromkeys(tgt_tokens)))
        return cls(src, [[tgt.id(t)] for t in tgt_tokens], tgt, name=name)

    @classmethod
    def from_dict(cls, rules, alphabet=None, target=None, name=None) -> Coding:
        m = Morphism.from_dict(rules, alphabet, target, name)
        return cls(m.source, m.images, m.target, name)

    def __call__(self, x: str | Word) -> Word:
        if isinstance(x, Word):
            if x.alphabet != self.source:
                raise AlphabetMismatchError("word alphabet differs from coding source")
            return Word._trusted(self.target, self.map[x.symbols])
        return self.image(x)


def _as_alphabet(a) -> Alphabet:
    return a if isinstance(a, Alphabet) else Alphabet.of(a)


def apply(m: Morphism, w: Word) -> Word:
    if w.alphabet != m.source:
        raise AlphabetMismatchError(f"word over {w.alphabet} but morphism acts on {m.source}")
    if isinstance(m, Coding):
        return Word._trusted(m.target, m.map[w.symbols])
    return Word._trusted(m.target, kernels.expand(w.symbols, m.flat, m.offsets, m.lengths))


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """``outer ∘ inner``: apply ``inner`` first."""
    if inner.target != outer.source:
        raise AlphabetMismatchError("inner target alphabet differs from outer source alphabet")
    images = [kernels.expand(img, outer.flat, outer.offsets, outer.lengths) for img in inner.images]
    cls = Coding if isinstance(outer, Coding) and isinstance(inner, Coding) else Morphism
    return cls(inner.source, images, outer.target)


def incidence_matrix(m: Morphism) -> np.ndarray:
    """``M[a, b]`` = number of occurrences of letter ``b`` in ``m(a)``."""
    mat = np.zeros((len(m.source), len(m.target)), dtype=np.int64)
    for a, img in enumerate(m.images):
        if img.size:
            mat[a] = np.bincount(img, minlength=len(m.target))
    return mat


def image_lengths(m: Morphism, n: int) -> list[int]:
    """Exact ``|m^n(a)|`` for every letter (python ints, no overflow)."""
    if not m.is_endomorphism:
        raise AlphabetMismatchError("powers need an endomorphism")
    mat = [[int(v) for v in row] for row in incidence_matrix(m)]
    lens = [1] * len(m.source)
    for _ in range(n):
        lens = [sum(r * l for r, l in zip(row, lens)) for row in mat]
    return lens


def power(m: Morphism, n: int, budget: int = POWER_BUDGET) -> Morphism:
    if n < 0:
        raise ValueError("negative exponent")
    if not m.is_endomorphism:
        raise AlphabetMismatchError("powers need an endomorphism")
    total = sum(image_lengths(m, n))
    if total > budget:
        raise BudgetExceededError(total, budget, "total image size")
    result = Morphism.identity(m.source)
    for _ in range(n):
        result = compose(m, result)
    result.name = f"{m.name}^{n}" if m.name else None
    return result


def occurrences(w: Word, x: Word) -> list[int]:
    """Start positions (0-based, overlapping allowed) of ``x`` in ``w``."""
    if len(x) < 1:
        raise ValueError("pattern must be non-empty")
    if x.alphabet != w.alphabet:
        try:
            x = x.relabel(w.alphabet)
        except AlphabetMismatchError:
            return []
    return kernels.occurrences(w.symbols, x.symbols).tolist()


def base_k_value(w: Word, k: int) -> int:
    if k < 2:
        raise ValueError("base must be at least 2")
    digits = []
    for t in w.alphabet.letters:
        digits.append(int(t) if t.isdigit() and int(t) < k else -1)
    value = 0
    for s in w.symbols.tolist():
        d = digits[s]
        if d < 0:
            raise DigitError(f"letter {w.alphabet.letters[s]!r} is not a base-{k} digit")
        value = value * k + d
    return value


@dataclass(frozen=True)
class Shape:
    uniform: int | None
    nonerasing: bool
    coding: bool


def classify_shape(m: Morphism) -> Shape:
    lens = set(m.lengths.tolist())
    k = lens.pop() if len(lens) == 1 else None
    return Shape(uniform=k, nonerasing=bool(np.all(m.lengths > 0)), coding=k == 1)
