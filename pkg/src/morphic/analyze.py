"""
Analyzers over finite prefixes: primitivity, letter frequencies, factor
complexity, recurrence gaps, repetitions and patterns, runs.

Everything here reports evidence about a prefix. Nothing certifies a
property of the infinite word.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .core import Coding, Morphism, Word, incidence_matrix, occurrences, render
from .errors import AlphabetMismatchError, AnalysisError, NotPrimitiveError

UNBOUNDED = math.inf
PERRON_TOL = 1e-10
PERRON_MAX_ITER = 10**5


def primitivity(m: Morphism) -> int | None:
    """Least ``n >= 1`` with ``M^n`` entrywise positive, or None."""
    if not m.is_endomorphism:
        raise AlphabetMismatchError("primitivity needs an endomorphism")
    k = len(m.source)
    b = (incidence_matrix(m) > 0).astype(np.int64)
    p = b.copy()
    for n in range(1, (k - 1) ** 2 + 2):
        if p.all():
            return n
        p = ((p @ b) > 0).astype(np.int64)
    return None


@dataclass(frozen=True)
class ComplexityProfile:
    prefix_length: int
    values: tuple[int, ...]

    def p(self, n: int) -> int:
        return self.values[n - 1]

    @property
    def n_max(self) -> int:
        return len(self.values)


def factor_complexity(w: Word, n_max: int) -> ComplexityProfile:
    """
    Distinct-factor counts ``p(1..n_max)`` of the prefix ``w``; a lower
    bound for the infinite word. ``n_max`` may not exceed ``|w| / 2``.
    """
    if n_max < 0 or 2 * n_max > len(w):
        raise AnalysisError(f"n_max={n_max} needs a prefix of length >= {2 * n_max}, got {len(w)}")
    counts = kernels.factor_counts(w.symbols, len(w.alphabet), n_max)
    return ComplexityProfile(len(w), tuple(int(c) for c in counts[1:]))


@dataclass(frozen=True)
class GapReport:
    factor: Word
    positions: list[int]
    max_gap: float
    scanned_length: int

    @property
    def count(self) -> int:
        return len(self.positions)


def gap_report(w: Word, x: Word) -> GapReport:
    pos = occurrences(w, x)
    gap = max(b - a for a, b in zip(pos, pos[1:])) if len(pos) >= 2 else UNBOUNDED
    return GapReport(x, pos, gap, len(w))


@dataclass(frozen=True)
class RecurrenceReport:
    length: int
    head: int
    scanned_length: int
    factors_checked: int
    non_recurring: list[str]
    max_gap: int

    @property
    def all_recur(self) -> bool:
        return not self.non_recurring


def factor_recurrence(w: Word, length: int, head: int | None = None) -> RecurrenceReport:
    """
    For every factor of the given length occurring in ``w[:head]``, check it
    occurs at least twice in all of ``w``; report the largest gap between
    consecutive occurrences of those factors.
    """
    n = len(w)
    head = n if head is None else min(head, n)
    if length < 1 or length > head:
        raise AnalysisError("factor length must be in 1..head")
    ids = kernels.window_ids(w.symbols, length)
    order = np.argsort(ids, kind="stable")
    sid = ids[order]
    new_group = np.concatenate(([True], sid[1:] != sid[:-1]))
    group = np.cumsum(new_group) - 1
    starts = np.flatnonzero(new_group)
    counts = np.bincount(group)
    first_pos = order[starts]
    in_head = first_pos <= head - length
    same = ~new_group[1:]
    max_gap_per = np.zeros(starts.size, dtype=np.int64)
    np.maximum.at(max_gap_per, group[1:][same], np.diff(order)[same])
    lonely = np.flatnonzero(in_head & (counts < 2))
    bad = [render(w[int(first_pos[g]) : int(first_pos[g]) + length]) for g in lonely[:20]]
    return RecurrenceReport(
        length=length,
        head=head,
        scanned_length=n,
        factors_checked=int(in_head.sum()),
        non_recurring=bad,
        max_gap=int(max_gap_per[in_head].max()) if in_head.any() else 0,
    )


@dataclass
class FrequencyReport:
    empirical: dict[str, Fraction]
    theoretical: dict[str, float] | None = None
    residual: float | None = None
    iterations: int | None = None
    extra: dict = field(default_factory=dict)


def perron_frequencies(m: Morphism, tol: float = PERRON_TOL, max_iter: int = PERRON_MAX_ITER):
    """Normalized left Perron eigenvector of the incidence matrix, by power iteration."""
    if primitivity(m) is None:
        raise NotPrimitiveError(f"{m!r} is not primitive")
    mat = incidence_matrix(m).astype(float)
    v = np.full(len(m.source), 1.0 / len(m.source))
    for it in range(1, max_iter + 1):
        nv = v @ mat
        nv /= nv.sum()
        res = float(np.abs(nv - v).sum())
        v = nv
        if res < tol:
            return dict(zip(m.source.letters, v.tolist())), res, it
    raise NotPrimitiveError(f"power iteration did not converge (residual {res:.3g})")


def letter_frequency(w_prefix: Word, m: Morphism | None = None, coding: Coding | None = None) -> FrequencyReport:
    """
    Empirical letter frequencies of ``w_prefix``; with ``m`` also the
    theoretical ones, pushed through ``coding`` when the word is coded.
    """
    n = len(w_prefix)
    counts = np.bincount(w_prefix.symbols, minlength=len(w_prefix.alphabet))
    emp = {t: Fraction(int(c), n) if n else Fraction(0) for t, c in zip(w_prefix.alphabet.letters, counts)}
    if m is None:
        return FrequencyReport(emp)
    theo, res, it = perron_frequencies(m)
    if coding is not None:
        pushed: dict[str, float] = {t: 0.0 for t in coding.target.letters}
        for a, f in theo.items():
            pushed[coding.image(a)[0]] += f
        theo = pushed
    return FrequencyReport(emp, theo, res, it)


def _pairs(pos: np.ndarray, sizes: np.ndarray) -> list[tuple[int, int]]:
    order = np.lexsort((sizes, pos))
    return list(zip(pos[order].tolist(), sizes[order].tolist()))


def find_k_powers(w: Word, k: int, max_period: int) -> list[tuple[int, int]]:
    """All ``(position, period)`` with ``w[position:position+k*period] = u^k``."""
    if k < 2:
        raise AnalysisError("k must be at least 2")
    pos, per = kernels.periodic_windows(w.symbols, max_period, k - 1, 0)
    return _pairs(pos, per)


def find_overlaps(w: Word, max_period: int) -> list[tuple[int, int]]:
    """Factors ``xyxyx`` with period ``|xy|``; length ``2*period + 1``."""
    pos, per = kernels.periodic_windows(w.symbols, max_period, 1, 1)
    return _pairs(pos, per)


def find_additive_cubes(w: Word, values: Mapping[str, int], max_block: int) -> list[tuple[int, int]]:
    missing = [t for t in w.alphabet.letters if t not in values]
    if missing:
        raise AnalysisError(f"no value for letters {missing}")
    table = np.array([values[t] for t in w.alphabet.letters], dtype=np.int64)
    pos, blk = kernels.additive_cubes(table[w.symbols], max_block)
    return _pairs(pos, blk)


def find_xxxR(w: Word, max_x: int) -> list[tuple[int, int]]:
    """Occurrences of ``x x reverse(x)`` with ``1 <= |x| <= max_x``."""
    pos, size = kernels.xxxr(w.symbols, max_x)
    return _pairs(pos, size)


def arithmetic_subsequence(w: Word, start: int, step: int, count: int) -> Word:
    if step < 1 or start < 0 or count < 0:
        raise AnalysisError("need start >= 0, step >= 1, count >= 0")
    if count and start + step * (count - 1) >= len(w):
        raise AnalysisError(f"index {start + step * (count - 1)} beyond prefix of length {len(w)}")
    return w[start : start + step * count : step] if count else w[0:0]


def run_statistics(w: Word, letter: str) -> list[tuple[int, int]]:
    """Maximal runs of ``letter`` as ``(start, length)``."""
    if letter not in w.alphabet:
        return []
    starts, lens = kernels.runs(w.symbols, w.alphabet.id(letter))
    return list(zip(starts.tolist(), lens.tolist()))


def occurrence_growth(source, letter: str, checkpoints: Sequence[int]) -> list[int]:
    """Count of ``letter`` in each prefix length of ``checkpoints`` (ascending)."""
    if list(checkpoints) != sorted(checkpoints):
        raise AnalysisError("checkpoints must be ascending")
    if not checkpoints:
        return []
    top = max(checkpoints)
    w = source.prefix(top) if hasattr(source, "prefix") else source[:top]
    if letter not in w.alphabet:
        return [0] * len(checkpoints)
    cum = np.concatenate(([0], np.cumsum(w.symbols == w.alphabet.id(letter))))
    return [int(cum[c]) for c in checkpoints]


def square_prefixes(w: Word, max_half: int | None = None) -> list[int]:
    """Half-lengths ``L`` such that ``w`` begins with ``uu``, ``|u| = L``."""
    max_half = len(w) // 2 if max_half is None else min(max_half, len(w) // 2)
    return kernels.square_prefixes(w.symbols, max_half).tolist()


def factors_at(w: Word, hits: Sequence[tuple[int, int]], factor_len) -> set[str]:
    """Render the factors located by a pattern search (``factor_len(size)``)."""
    return {render(w[p : p + factor_len(s)]) for p, s in hits}
