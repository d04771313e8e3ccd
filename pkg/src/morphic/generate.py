"""Letter structure of D0L systems and lazy fixed-point streams."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import Alphabet, Coding, Morphism, Word, apply, image_lengths
from .errors import AlphabetMismatchError, BudgetExceededError, NotProlongableError

STREAM_BUDGET = 10**7


@dataclass(frozen=True)
class LetterStructure:
    mortal: frozenset[str]
    growing: frozenset[str]
    reduced: Morphism

    @property
    def non_growing(self) -> frozenset[str]:
        return frozenset(self.reduced.source.letters) - self.growing


def mortal_letters(m: Morphism) -> frozenset[str]:
    if not m.is_endomorphism:
        raise AlphabetMismatchError("letter structure needs an endomorphism")
    dead: set[int] = set()
    while True:
        nxt = {a for a, img in enumerate(m.images) if all(int(b) in dead for b in img)}
        if nxt == dead:
            break
        dead = nxt
    return frozenset(m.source.letters[a] for a in dead)


def _reachable(succ: list[set[int]], a: int) -> set[int]:
    seen, stack = set(), list(succ[a])
    while stack:
        b = stack.pop()
        if b not in seen:
            seen.add(b)
            stack.extend(succ[b])
    return seen


def letter_structure(m: Morphism) -> LetterStructure:
    """
    Mortal letters by fixpoint; growing letters from the occurrence graph of
    the morphism with mortal letters erased: ``a`` grows iff it reaches (in
    zero or more steps) a letter that lies on a cycle and whose reduced image
    has length at least 2.
    """
    mortal = mortal_letters(m)
    dead = {m.source.id(t) for t in mortal}
    images = [img[~np.isin(img, list(dead))] if dead else img for img in m.images]
    reduced = Morphism(m.source, images, m.source, name=f"{m.name}'" if m.name else None)

    succ = [set(img.tolist()) for img in images]
    reach = [_reachable(succ, a) for a in range(len(m.source))]
    pumping = {c for c in range(len(m.source)) if c in reach[c] and images[c].size >= 2}
    growing = {a for a in range(len(m.source)) if ({a} | reach[a]) & pumping}
    letters = m.source.letters
    return LetterStructure(
        mortal=mortal,
        growing=frozenset(letters[a] for a in growing),
        reduced=reduced,
    )


def is_prolongable(m: Morphism, a: str) -> bool:
    if not m.is_endomorphism or a not in m.source:
        return False
    img = m.images[m.source.id(a)]
    if img.size < 2 or img[0] != m.source.id(a):
        return False
    mortal = mortal_letters(m)
    letters = m.source.letters
    return any(letters[b] not in mortal for b in img[1:].tolist())


def iterate(m: Morphism, w: Word, n: int, budget: int = STREAM_BUDGET) -> Word:
    """``m^n(w)``, refusing up front if the result would exceed ``budget``."""
    if n < 0:
        raise ValueError("negative iteration count")
    if w.alphabet != m.source:
        raise AlphabetMismatchError("word alphabet differs from morphism source")
    if n == 0:
        return w
    lens = image_lengths(m, n)
    counts = np.bincount(w.symbols, minlength=len(m.source)).tolist()
    total = sum(c * l for c, l in zip(counts, lens))
    if total > budget:
        raise BudgetExceededError(total, budget, "iterated word length")
    for _ in range(n):
        w = apply(m, w)
    return w


class WordStream:
    """
    The fixed point ``m^ω(seed)``, optionally passed through a coding,
    materialized on demand.

    The buffer always satisfies ``buffer = m(buffer[:cursor])``; growing it
    means expanding the next unread letters and appending their images.
    Materialized positions never change, so returned prefixes are views.
    """

    def __init__(self, morphism: Morphism, seed: str, coding: Coding | None = None, budget: int = STREAM_BUDGET):
        if not is_prolongable(morphism, seed):
            raise NotProlongableError(f"{morphism!r} is not prolongable on {seed!r}")
        if coding is not None and coding.source != morphism.source:
            raise AlphabetMismatchError("coding source must be the morphism alphabet")
        self.morphism = morphism
        self.seed = seed
        self.coding = coding
        self.budget = budget
        first = morphism.images[morphism.source.id(seed)]
        self._buf = np.empty(max(1024, 2 * first.size), dtype=kernels.SYMBOL)
        self._buf[: first.size] = first
        self._len = int(first.size)
        self._cursor = 1

    @property
    def alphabet(self) -> Alphabet:
        return self.coding.target if self.coding is not None else self.morphism.source

    @property
    def materialized(self) -> int:
        return self._len

    def _grow(self, n: int) -> None:
        if n > self.budget:
            raise BudgetExceededError(n, self.budget, "stream prefix")
        m = self.morphism
        while self._len < n:
            block = self._buf[self._cursor : self._len]
            if not block.size:  # impossible for a prolongable morphism
                raise RuntimeError("fixed-point expansion stalled")
            cum = np.cumsum(m.lengths[block])
            take = int(np.searchsorted(cum, n - self._len)) + 1
            take = min(max(take, min(block.size, 4096)), block.size)
            new = kernels.expand(block[:take], m.flat, m.offsets, m.lengths)
            end = self._len + new.size
            if end > self._buf.size:
                grown = np.empty(max(end, 2 * self._buf.size), dtype=kernels.SYMBOL)
                grown[: self._len] = self._buf[: self._len]
                self._buf = grown
            self._buf[self._len : end] = new
            self._len = end
            self._cursor += take

    def raw_prefix(self, n: int) -> Word:
        """First ``n`` symbols of the uncoded fixed point."""
        self._grow(n)
        return Word._trusted(self.morphism.source, self._buf[:n])

    def prefix(self, n: int) -> Word:
        raw = self.raw_prefix(n)
        if self.coding is None:
            return raw
        return Word._trusted(self.coding.target, self.coding.map[raw.symbols])

    def __getitem__(self, i: int) -> str:
        return self.prefix(i + 1)[i]

    def __repr__(self):
        via = f", coding={self.coding!r}" if self.coding is not None else ""
        return f"WordStream({self.morphism!r}, seed={self.seed!r}{via})"


def fixed_point_stream(m: Morphism, a: str, c: Coding | None = None, budget: int = STREAM_BUDGET) -> WordStream:
    return WordStream(m, a, c, budget)
