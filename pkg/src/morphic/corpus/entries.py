"""
The catalog: one entry per taxonomy class (a)..(t) plus the named words.

Every entry carries a word construction, the property evidence that places
it in its class, and executable checks. Check sizes are written for the
default budget and scale linearly with the budget handed to ``verify``.
"""

from __future__ import annotations

import math
import os
import time
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from .. import analyze as an
from ..core import (
    Alphabet,
    Coding,
    Morphism,
    Word,
    apply,
    base_k_value,
    classify_shape,
    compose,
    first_difference,
    image_lengths,
    occurrences,
    power,
    render,
    same_word,
)
from ..taxonomy import CLASS_CLAUSES, PropertyAssignment, class_label, closure, classify_evidence
from .constructions import (
    PI,
    BaseConcat,
    Characteristic,
    MorphicFixedPoint,
    MorphicImage,
    PrefixPatch,
    Product,
    Quadratic,
    RulerImage,
    Shift,
    Sturmian,
    WordSpec,
)

DEFAULT_BUDGET = 10**5


def default_budget() -> int:
    return int(os.environ.get("MORPHIC_BUDGET", DEFAULT_BUDGET))


# ---------------------------------------------------------------------------
# the morphisms


def M(rules: dict, name: str | None = None, alphabet=None) -> Morphism:
    return Morphism.from_dict(rules, alphabet=alphabet, name=name)


PHI = M({"0": "01", "1": "0"}, "phi")
MU = M({"0": "01", "1": "10"}, "mu")
GAMMA = M({"0": "03", "1": "43", "3": "1", "4": "01"}, "gamma", alphabet="0134")
G_SQF = M({"2": "210", "1": "20", "0": "1"}, "g", alphabet="012")
RS = M({"a": "ab", "b": "ac", "c": "db", "d": "dc"}, "s")
RS_CODE = Coding.from_string("abcd", "0011")
ROTE = M({"a": "abcab", "b": "cda", "c": "cdacd", "d": "abc"}, "g")
ROTE_CODE = Coding.from_string("abcd", "0011")
CHACON = M({"0": "0012", "1": "12", "2": "012"}, "c")
CHACON_CODE = Coding.from_string("012", "010")
DELTA_L = M({"0": "0010", "1": "1"}, "delta")
CHI = M(
    {"c0": "c0 e0", "e0": "c1", "c1": "c1 e1", "e1": "c2", "c2": "c2 e1"},
    "chi",
    alphabet=("c0", "e0", "c1", "e1", "c2"),
)
CHI_CODE = Coding.from_string(("c0", "e0", "c1", "e1", "c2"), "11100")

F_D = M({"a": "ab", "b": "c", "c": "cd", "d": "c"}, "h")
F_D_CODE = Coding.from_string("abcd", "2201")
X_E = M({"a": "ababb", "b": "bc", "c": "c"}, "h")
X_E_CODE = Coding.from_string("abc", "011")
H_F = M({"a": "ac", "c": "b", "b": "ac"}, "h", alphabet="abc")
H_F_CODE = Coding.from_string("abc", "100")
H_G = M({"a": "ab", "b": "ca", "c": "cd", "d": "ac"}, "h")
H_G_CODE = Coding.from_string("abcd", "2101")
W_G = M({"0": "01", "1": "23", "2": "24", "3": "35", "4": "32", "5": "23"}, "h'")
W_G_CODE = Coding.from_string("012345", "220211")
V_H = M({"a": "abba", "b": "bccb", "c": "cbbc"}, "v")
V_H_CODE = Coding.from_string("abc", "001")
V_H_TM = Coding.from_string("abc", "010")
Y_H = M({"a": "aba", "b": "ccc", "c": "ccc"}, "y")
Y_H_CODE = Coding.from_string("abc", "001")
U_J = M({"2": "21", "1": "0", "0": "01"}, "h", alphabet="210")
H_K = M({"0": "010", "1": "11"}, "h")
H_N = M({"3": "32", "2": "102012", "1": "1012", "0": "02"}, "h", alphabet="3210")
DELTA_N = M({"a": "ab", "b": "cd", "c": "bd", "d": "eb", "e": "db"}, "delta")
RHO_N = Coding.from_string("abcde", "32101")
F_O = M({"a": "abcda", "b": "bcdee", "c": "eeeee", "d": "eeeee", "e": "eeeee"}, "f")
G_O = Coding.from_string("abcde", "01123")
H_O = M({"0": "01120", "1": "1", "2": "2333333333333", "3": "33333"}, "h")
P_IMG = Morphism.from_dict({"0": "ac", "1": "bc"}, alphabet="01", target="acb")
P_PURE = M({"a": "acb", "b": "bca", "c": "c"}, alphabet="acb")
ETA = M({"0": "01", "1": "23", "2": "23", "3": "01"}, "eta")
ETA_CODE = Coding.from_string("0123", "acbc")
R_R = M({"a": "ab", "b": "bc", "c": "cc"})
S_S = M({"0": "010", "1": "111"})

GAMMA_VALUES = {"0": 0, "1": 1, "3": 3, "4": 4}


def fixed(m: Morphism, seed: str, coding: Coding | None = None) -> MorphicFixedPoint:
    return MorphicFixedPoint(m, seed, coding)


F = fixed(PHI, "0")
TM = fixed(MU, "0")
T_SQF = fixed(G_SQF, "2")


# ---------------------------------------------------------------------------
# checks


@dataclass(frozen=True)
class Scale:
    """Check sizes are stated at the default budget; this rescales them."""

    budget: int

    def __call__(self, n: int) -> int:
        return max(1, n * self.budget // DEFAULT_BUDGET)


Outcome = tuple[bool, object]


@dataclass(frozen=True)
class Check:
    name: str
    kind: str
    run: Callable[[Scale], Outcome]


@dataclass
class CheckResult:
    name: str
    kind: str
    passed: bool
    witness: object
    seconds: float


@dataclass
class VerifyReport:
    key: str
    label: str | None
    budget: int
    results: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]


@dataclass(eq=False)
class CorpusEntry:
    key: str
    title: str
    spec: WordSpec
    evidence: PropertyAssignment
    label: str | None = None
    checks: list[Check] = field(default_factory=list)
    alternatives: dict[str, WordSpec] = field(default_factory=dict)

    def prefix(self, n: int) -> Word:
        return self.spec.materialize(n)


def agree(a: WordSpec, b: WordSpec, n: int) -> Outcome:
    u, v = a.materialize(n), b.materialize(n)
    ok = same_word(u, v)
    return ok, {"length": n} if ok else {"length": n, "first_difference": first_difference(u, v)}


def starts_with(spec: WordSpec, text: str) -> Outcome:
    want = Word.parse(spec.alphabet, text) if spec.alphabet.single_char else None
    got = spec.materialize(len(want) if want is not None else len(text.split()))
    got_text = render(got)
    return got_text == text, got_text


def _equal(name: str, a: WordSpec, b: WordSpec, n: int) -> Check:
    return Check(name, "equality", lambda s: agree(a, b, s(n)))


def _display(spec: WordSpec, text: str) -> Check:
    return Check(f"prefix is {text}", "display", lambda s: starts_with(spec, text))


def _primitivity(m: Morphism, want: int | Callable[[int | None], bool]) -> Check:
    test = want if callable(want) else (lambda e: e == want)
    label = f"primitivity exponent of {m.name or 'morphism'}"
    return Check(label if callable(want) else f"{label} is {want}", "structure", lambda s: (test(an.primitivity(m)), an.primitivity(m)))


def _occurs_exactly(spec: WordSpec, factor: str, count: int, n: int) -> Check:
    def run(s):
        w = spec.materialize(s(n))
        pos = occurrences(w, Word.parse(w.alphabet, factor))
        return len(pos) == count, pos[:10]

    return Check(f"{factor} occurs {count} time(s) in prefix", "structure", run)


def _complexity(spec: WordSpec, formula: Callable[[int], int], n_max: int, n: int, what: str) -> Check:
    def run(s):
        w = spec.materialize(max(s(n), 2 * n_max))
        got = an.factor_complexity(w, n_max).values
        bad = [k for k in range(1, n_max + 1) if got[k - 1] != formula(k)]
        return not bad, {"values": list(got), "mismatch": bad}

    return Check(f"p(n) = {what} for n <= {n_max}", "complexity", run)


def _recurrence(spec: WordSpec, max_len: int, head: int, n: int) -> Check:
    def run(s):
        w = spec.materialize(s(n))
        h = s(head)
        bad = {}
        for L in range(1, max_len + 1):
            r = an.factor_recurrence(w, L, head=h)
            if not r.all_recur:
                bad[L] = r.non_recurring
        return not bad, bad or {"lengths": max_len, "head": h, "scanned": len(w)}

    return Check(f"factors of length <= {max_len} in the head recur", "recurrence", run)


def _frequency(m: Morphism, spec: WordSpec, letter: str, exact: float | None, n: int, coding: Coding | None = None) -> Check:
    def run(s):
        rep = an.letter_frequency(spec.materialize(s(n)), m, coding)
        theo = rep.theoretical[letter]
        emp = float(rep.empirical[letter])
        ok = abs(emp - theo) < 1e-3 and (exact is None or abs(theo - exact) < 1e-9)
        return ok, {"theoretical": theo, "empirical": emp, "residual": rep.residual, "iterations": rep.iterations}

    return Check(f"frequency of {letter}", "frequency", run)


def _k_power_free(spec: WordSpec, k: int, max_period: int, n: int, what: str) -> Check:
    def run(s):
        w = spec.materialize(s(n))
        hits = an.find_k_powers(w, k, min(max_period, len(w) // k))
        return not hits, hits[:10]

    return Check(f"{what} on prefix (period <= {max_period})", "avoidance", run)


def _perfect_squares(run_lengths: list[int]) -> bool:
    return all(math.isqrt(r) ** 2 == r for r in run_lengths)


# ---------------------------------------------------------------------------
# per-entry check builders


def _checks_a(spec):
    def ones(s):
        n_max = 1
        while math.factorial(n_max + 1) + 1 <= s(10**6):
            n_max += 1
        w = spec.materialize(math.factorial(n_max) + 1)
        cum = np.cumsum(w.symbols)
        got = {n: int(cum[math.factorial(n)]) for n in range(1, n_max + 1)}
        return all(got[n] == n for n in got), got

    return [
        _display(spec, "01100010000000000000000010"),
        _occurs_exactly(spec, "11", 1, 10**5),
        Check("prefix of length n!+1 holds n ones", "structure", ones),
    ]


def _checks_b(spec):
    def zero_runs(s):
        w = spec.materialize(s(10**5))
        runs = an.run_statistics(w, "0")
        longest = max(r for _, r in runs)
        # 2^k writes the first run of k zeros
        out = {}
        for k in range(1, longest + 1):
            first = next(p for p, r in runs if r >= k)
            out[k] = first
        expect = {}
        pos = 0
        i = 1
        while len(expect) < longest:
            bits = format(i, "b")
            if i & (i - 1) == 0 and i > 1:
                expect[len(bits) - 1] = pos + 1
            pos += len(bits)
            i += 1
        return out == expect and longest >= 12, {"longest": longest}

    return [
        _display(spec, "11011100101110111"),
        _complexity(spec, lambda n: 2**n, 14, 5 * 10**5, "2^n"),
        Check("0-runs of every length up to the prefix", "structure", zero_runs),
        _recurrence(spec, 8, 10**4, 10**5),
    ]


def _checks_c(spec):
    def direct(s):
        import mpmath

        n = s(10**4)
        with mpmath.workdps(40):
            pi = mpmath.pi
            floors = [int(mpmath.floor(k * pi)) for k in range(n + 1)]
        want = "".join(str(floors[k + 1] - floors[k]) for k in range(n))
        got = render(spec.materialize(n))
        return got == want, {"length": n, "first_difference": next((i for i, (x, y) in enumerate(zip(got, want)) if x != y), None)}

    def gaps(s):
        n = s(10**4)
        full = spec.materialize(n)
        half = full[: n // 2]
        table = {}
        ok = True
        for L in range(1, 13):
            a = an.factor_recurrence(half, L, head=n // 4)
            b = an.factor_recurrence(full, L, head=n // 2)
            ok &= a.all_recur and b.all_recur and a.max_gap == b.max_gap
            table[L] = (a.max_gap, b.max_gap)
        return ok, table

    return [
        _display(spec, "33333334333333433333"),
        Check("terms match floor((n+1)pi) - floor(n pi)", "equality", direct),
        Check("factors of length <= 12 recur with stable maximal gaps", "recurrence", gaps),
        _complexity(spec, lambda n: n + 1, 30, 10**4, "n+1"),
    ]


def _checks_d(spec, alt):
    return [
        _display(spec, "22001010"),
        _equal("patched f equals the coded fixed point", spec, alt, 10**5),
        _occurs_exactly(spec, "2", 2, 10**5),
        _frequency(PHI, spec, "0", (math.sqrt(5) - 1) / 2, 10**5),
    ]


def _checks_e(spec, alt):
    def squares(s):
        w = spec.materialize(s(10**5))
        runs = an.run_statistics(w, "1")
        inner = sorted({r for p, r in runs if p > 0 and p + r < len(w)})
        top = math.isqrt(inner[-1])
        return _perfect_squares(inner) and inner == [k * k for k in range(1, top + 1)], inner

    return [
        _display(spec, "0101111010111111111010111101"),
        _equal("fixed point equals the product formula", spec, alt, 10**5),
        Check("01^n0 occurs only for perfect squares n", "structure", squares),
        _recurrence(spec, 8, 10**4, 10**5),
    ]


def _checks_f(spec, alt):
    return [
        _display(spec, "10010100100101001010"),
        _equal("Sturmian word equals the coded fixed point", spec, alt, 10**4),
        _equal("Sturmian word equals the shifted Fibonacci word", spec, Shift(F, 1), 10**4),
        _primitivity(H_F, lambda e: e is not None and e <= 3),
    ]


def _checks_g(spec, alt, automatic):
    return [
        _display(spec, "220201210120"),
        _display(T_SQF, "210201"),
        _equal("coded 2-uniform fixed point equals g^w(2)", automatic, T_SQF, 10**5),
        _equal("patched word equals the 6-letter construction", spec, alt, 10**5),
        _occurs_exactly(spec, "22", 1, 10**5),
    ]


def _checks_h(spec, v_tm, y, y_ruler, ruler):
    def blocks(s):
        w = spec.materialize(s(10**5) // 4 * 4)
        b = {render(w[i : i + 4]) for i in range(0, len(w), 4)}
        return b <= {"0000", "0110", "1001"}, sorted(b)

    def squarefree_ruler(s):
        w = ruler.materialize(s(10**4))
        hits = an.find_k_powers(w, 2, len(w) // 2)
        return not hits, hits[:10]

    return [
        _display(spec, "0000011001100000011010011001011001101001100101100000"),
        Check("4-aligned blocks are 0000, 0110, 1001", "structure", blocks),
        _equal("v coded by abc -> 010 is Thue-Morse", v_tm, TM, 2**14),
        _display(y, "000111000111111111000111000"),
        _equal("y equals the ruler image i -> 0001^(3^(i+1))", y, y_ruler, 10**5),
        Check("ruler sequence is squarefree on prefix", "avoidance", squarefree_ruler),
        _recurrence(spec, 8, 10**4, 10**5),
    ]


def rudin_shapiro_parity(n: int) -> int:
    return (n & (n >> 1)).bit_count() & 1


def _checks_i(spec):
    def parity(s):
        n = 2**16
        w = spec.materialize(n)
        want = np.array([rudin_shapiro_parity(i) for i in range(n)])
        got = np.array([int(t) for t in w.tokens()])
        bad = np.flatnonzero(got != want)
        return not bad.size, {"checked": n, "mismatch": bad[:10].tolist()}

    def cubes(s):
        w = spec.materialize(s(10**5))
        hits = an.find_k_powers(w, 3, 20)
        found = an.factors_at(w, hits, lambda p: 3 * p)
        return found == {"000", "111"}, {"cubes": sorted(found), "positions": hits[:20]}

    return [
        _display(spec, "0001001000011101"),
        Check("r[n] is the parity of 11-blocks in binary n", "structure", parity),
        Check("cubes are exactly 000 and 111", "avoidance", cubes),
        _primitivity(RS, 3),
    ]


def _checks_j(spec, alt):
    return [
        _display(spec, "21001010"),
        _equal("patched f equals the fixed point of 2->21", spec, alt, 10**5),
        _occurs_exactly(spec, "2", 1, 10**5),
    ]


def first_run_position(m: int) -> int:
    """1-based start of the first block of ``n`` ones, ``m = ceil(log2 n)``."""
    return (m + 2) * 2 ** (m - 1) + 1


def _checks_k(spec):
    def runs(s):
        n_top = 1024
        m_top = math.ceil(math.log2(n_top))
        w = spec.materialize(first_run_position(m_top) + n_top + 16)
        found = an.run_statistics(w, "1")
        bad = []
        for n in range(2, n_top + 1):
            start0 = next(p for p, r in found if r >= n)
            m = (n - 1).bit_length()  # ceil(log2 n)
            if start0 + 1 != first_run_position(m):
                bad.append(n)
        return not bad, {"checked": f"2..{n_top}", "mismatch": bad[:10]}

    return [
        _display(spec, "0101101011110101101011111111"),
        _recurrence(spec, 10, 10**4, 10**5),
        Check("first block of n ones starts at 1-based (m+2)2^(m-1)+1", "structure", runs),
    ]


def chacon_x(n: int) -> int:
    return base_k_value(Word.parse("012", "20" * n), 3)


def _checks_l(spec, alt):
    def lengths(s):
        got = [image_lengths(DELTA_L, n)[0] for n in range(13)]
        want = [(3 ** (n + 1) - 1) // 2 for n in range(13)]
        return got == want, got

    def positions(s):
        xs = [chacon_x(n) for n in range(8)]
        assert all(x == (3 ** (2 * n + 1) - 3) // 4 for n, x in enumerate(xs))
        d = spec.materialize(xs[-1] + 1)
        parts = [Word.parse("01", "0101")]
        k = 1
        while sum(map(len, parts)) < 8:
            parts += [power(DELTA_L, k)("0"), Word.parse("01", "1")]
            k += 1
        w = parts[0]
        for p in parts[1:]:
            w = w + p
        got = [d[x] for x in xs]
        want = [w[n] for n in range(8)]
        return got == want, {"x": xs, "D[x]": "".join(got), "w": "".join(want)}

    def square_prefixes(s):
        d = spec.materialize(s(10**4))
        halves = an.square_prefixes(d)
        want = [L for L in ((3 ** (n + 1) - 1) // 2 for n in range(20)) if 2 * L <= len(d)]
        return halves == want, halves

    return [
        _display(spec, "0010001010010"),
        _display(fixed(CHACON, "0"), "0012001212012"),
        _equal("coded Chacon word equals delta^w(0)", alt, spec, 10**6),
        _primitivity(CHACON, 2),
        Check("|delta^n(0)| = (3^(n+1)-1)/2 for n <= 12", "structure", lengths),
        _complexity(spec, lambda n: 2 if n == 1 else 2 * n - 1, 30, 10**5, "2n-1 (n >= 2)"),
        _complexity(fixed(CHACON, "0"), lambda n: 2 * n + 1, 30, 10**5, "2n+1 for C"),
        Check("D at x_n = [(20)^n]_3 reads 0101 delta(0) 1 delta^2(0) 1 ...", "structure", positions),
        Check("square prefixes uu have u = delta^n(0)", "structure", square_prefixes),
    ]


def _checks_m(spec):
    return [
        _display(spec, "01001010"),
        _primitivity(PHI, 2),
        _complexity(spec, lambda n: n + 1, 30, 10**5, "n+1"),
        _frequency(PHI, spec, "0", (math.sqrt(5) - 1) / 2, 10**5),
    ]


def _checks_n(spec, alt):
    def telescoping(s):
        bad = []
        for n in range(9):
            lhs = power(H_N, n + 1)("3")
            parts = ["3"] + [render(power(G_SQF, 2 * i)("2")) for i in range(n, 0, -1)] + ["2"]
            if render(lhs) != "".join(parts):
                bad.append(n)
        return not bad, {"n": "0..8", "mismatch": bad}

    def parity_heads(s):
        bad = []
        for n in range(1, 13):
            c = render(RHO_N(power(DELTA_N, n)("c")))[:2]
            e = render(RHO_N(power(DELTA_N, n)("e")))[:2]
            if (c, e) != (("20", "02") if n % 2 else ("10", "12")):
                bad.append((n, c, e))
        return not bad, {"n": "1..12", "mismatch": bad}

    return [
        _display(spec, "3210201"),
        Check("h^(n+1)(3) = 3 g^2n(2) ... g^2(2) 2 for n <= 8", "identity", telescoping),
        Check("rho(delta^n(c)), rho(delta^n(e)) begin 20/02 (odd) and 10/12 (even)", "identity", parity_heads),
        _equal("h^w(3) equals the coded 2-uniform fixed point", spec, alt, 10**5),
        _equal("h^w(3) shifted by one is g^w(2)", Shift(spec, 1), T_SQF, 10**5),
        _occurs_exactly(spec, "3", 1, 10**5),
    ]


def _checks_o(spec, alt):
    def hgf(s):
        gf = compose(G_O, F_O)
        lhs, rhs = compose(H_O, gf), compose(gf, F_O)
        bad = [a for a in F_O.source.letters if render(lhs(a)) != render(rhs(a))]
        return not bad, {"letters": list(F_O.source.letters), "mismatch": bad}

    def three_runs(s):
        w = spec.materialize(200)
        runs = an.run_statistics(w, "3")[:2]
        # the displayed prefix writes the second run as 3^62; both morphisms give 72
        return runs == [(8, 12), (28, 72)], {"runs": runs, "displayed": [(8, 12), (28, 62)]}

    return [
        _display(spec, "01120112333333333333011201123"),
        Check("hgf = gf^2 on every letter", "identity", hgf),
        Check("first 3-runs start at 8 and 28 with lengths 12 and 72", "structure", three_runs),
        _equal("coded fixed point of f equals h^w(0)", spec, alt, 10**5),
        _recurrence(spec, 6, 10**4, 10**5),
    ]


def _checks_p(spec, pure, uniform):
    def gelfond(s):
        t = TM.materialize(64 * 256)
        bad = []
        for step in range(1, 65):
            for start in range(step):
                sub = an.arithmetic_subsequence(t, start, step, 256)
                if len(sub.letters()) < 2:
                    bad.append((start, step))
        return not bad, {"steps": "1..64", "terms": 256, "constant": bad[:10]}

    return [
        _display(spec, "acbcbcacbcacacbc"),
        _equal("image of t equals the fixed point of a->acb", spec, pure, 10**5),
        _equal("image of t equals the coded fixed point of eta", spec, uniform, 10**5),
        _primitivity(ETA, 2),
        Check("arithmetic progressions in t see both letters", "structure", gelfond),
    ]


def _checks_q(spec):
    return [
        _display(spec, "210201210120"),
        _k_power_free(spec, 2, 100, 10**5, "squarefree"),
        _primitivity(G_SQF, lambda e: e is not None),
        _frequency(G_SQF, spec, "1", None, 10**5),
    ]


def _checks_r(spec):
    return [
        _display(spec, "abbcbccc"),
        _occurs_exactly(spec, "a", 1, 10**5),
        Check("morphism is 2-uniform", "structure", lambda s: (classify_shape(R_R).uniform == 2, classify_shape(R_R).uniform)),
    ]


def _checks_s(spec):
    def ones(s):
        small = an.run_statistics(spec.materialize(s(10**4)), "1")
        w = spec.materialize(s(10**5))
        big = [(p, r) for p, r in an.run_statistics(w, "1") if p + r < len(w)]
        lens = {r for _, r in big}
        powers3 = all(3 ** round(math.log(r, 3)) == r for r in lens)
        grow = max(r for _, r in big) > max(r for _, r in small)
        return powers3 and grow, {"run lengths": sorted(lens)}

    return [
        _display(spec, "010111010111111111010111010"),
        _recurrence(spec, 12, 10**4, 10**5),
        Check("1-runs grow without bound", "structure", ones),
    ]


def _checks_t(spec):
    def law(s):
        n = s(10**5)
        w = spec.materialize(2 * n)
        return same_word(apply(MU, w[:n]), w), {"length": 2 * n}

    def overlap_free(s):
        w = spec.materialize(2**14)
        hits = an.find_overlaps(w, 2**13)
        return not hits, hits[:10]

    return [
        _display(spec, "01101001"),
        Check("mu(t) = t on prefix", "identity", law),
        Check("overlap-free on prefix 2^14", "avoidance", overlap_free),
        _primitivity(MU, 1),
        _frequency(MU, spec, "0", 0.5, 10**5),
    ]


# ---------------------------------------------------------------------------
# named words


def _checks_gamma(spec):
    want = {
        "0": "03143011034343031011011",
        "1": "03143011031011011031011011",
        "3": "03143034343034343",
        "4": "0314301103434303143034343034343",
    }

    def sixth(s):
        g6 = power(GAMMA, 6)
        got = {a: render(g6(a)) for a in want}
        return got == want, got

    def cubes(s):
        w = spec.materialize(s(10**4))
        hits = an.find_additive_cubes(w, GAMMA_VALUES, 50)
        return not hits, hits[:10]

    return [
        _display(spec, "0314301103434303101101103"),
        Check("gamma^6 images", "identity", sixth),
        _primitivity(GAMMA, 6),
        Check("additive-cube-free (block <= 50)", "avoidance", cubes),
    ]


def _checks_rote(spec):
    def xxxr(s):
        w = spec.materialize(s(10**4))
        hits = an.find_xxxR(w, 50)
        return not hits, hits[:10]

    return [
        _primitivity(ROTE, lambda e: e is not None and e <= 2),
        Check("avoids x x x^R (|x| <= 50)", "avoidance", xxxr),
    ]


def _checks_chi(spec, alt):
    return [
        _display(spec, "11110100100001"),
        _equal("characteristic word equals the coded fixed point", spec, alt, 10**5),
        _occurs_exactly(spec, "1111", 1, 10**5),
    ]


# ---------------------------------------------------------------------------
# assembly


def _ev(label: str) -> PropertyAssignment:
    return PropertyAssignment.of(CLASS_CLAUSES[label][1])


def _build() -> dict[str, CorpusEntry]:
    entries: list[CorpusEntry] = []

    def add(key, title, spec, checks, label=None, evidence=None, **alts):
        entries.append(
            CorpusEntry(
                key=key,
                title=title,
                spec=spec,
                evidence=evidence if evidence is not None else _ev(label),
                label=label,
                checks=checks,
                alternatives=alts,
            )
        )

    a = Characteristic("factorials")
    add("a", "characteristic word of the factorials", a, _checks_a(a), "a")

    b = BaseConcat(2)
    add("b", "binary expansions of 1, 2, 3, ... concatenated", b, _checks_b(b), "b")

    c = Sturmian(PI, 0)
    add("c", "Sturmian characteristic word of slope pi", c, _checks_c(c), "c")

    d = PrefixPatch(F, ("2", "2"))
    d_alt = fixed(F_D, "a", F_D_CODE)
    add("d", "Fibonacci word with its first two symbols set to 2", d, _checks_d(d, d_alt), "d", morphic=d_alt)

    e = fixed(X_E, "a", X_E_CODE)
    e_alt = Product("nu2-square-runs")
    add("e", "coded fixed point of a->ababb, b->bc, c->c", e, _checks_e(e, e_alt), "e", product=e_alt)

    alpha = Quadratic(3, -1, 5, 2)
    f = Sturmian(alpha, alpha.scale(2))
    f_alt = fixed(H_F, "a", H_F_CODE)
    add("f", "Sturmian word with slope (3-sqrt5)/2 and intercept 3-sqrt5", f, _checks_f(f, f_alt), "f", morphic=f_alt, shift=Shift(F, 1))

    g = PrefixPatch(T_SQF, ("2", "2"))
    g_alt = fixed(W_G, "0", W_G_CODE)
    g_auto = fixed(H_G, "a", H_G_CODE)
    add("g", "g^w(2) with its first 1 changed to 2", g, _checks_g(g, g_alt, g_auto), "g", morphic=g_alt, automatic=g_auto)

    h = fixed(V_H, "a", V_H_CODE)
    v_tm = fixed(V_H, "a", V_H_TM)
    y = fixed(Y_H, "a", Y_H_CODE)
    y_ruler = RulerImage.power_blocks(("0", "0", "0"), "1", 3, 1)
    ruler = RulerImage.ruler()
    add(
        "h",
        "fixed point of a->abba, b->bccb, c->cbbc coded by abc->001",
        h,
        _checks_h(h, v_tm, y, y_ruler, ruler),
        "h",
        thue_morse=v_tm,
        y=y,
        y_ruler=y_ruler,
    )

    r = fixed(RS, "a", RS_CODE)
    add("i", "Rudin-Shapiro word", r, _checks_i(r), "i")

    j = PrefixPatch(F, ("2",))
    j_alt = fixed(U_J, "2")
    add("j", "Fibonacci word with its first symbol set to 2", j, _checks_j(j, j_alt), "j", morphic=j_alt)

    k = fixed(H_K, "0")
    add("k", "fixed point of 0->010, 1->11", k, _checks_k(k), "k")

    dl = fixed(DELTA_L, "0")
    dl_alt = fixed(CHACON, "0", CHACON_CODE)
    add("l", "Chacon word coded by 012->010", dl, _checks_l(dl, dl_alt), "l", chacon=dl_alt)

    add("m", "Fibonacci word", F, _checks_m(F), "m")

    n = fixed(H_N, "3")
    n_alt = fixed(DELTA_N, "a", RHO_N)
    add("n", "fixed point of 3->32, 2->102012, 1->1012, 0->02", n, _checks_n(n, n_alt), "n", uniform=n_alt)

    o = fixed(F_O, "a", G_O)
    o_alt = fixed(H_O, "0")
    add("o", "fixed point of a->abcda, b->bcdee coded by abcde->01123", o, _checks_o(o, o_alt), "o", pure=o_alt)

    p = MorphicImage(TM, P_IMG)
    p_pure = fixed(P_PURE, "a")
    p_uni = fixed(ETA, "0", ETA_CODE)
    add("p", "Thue-Morse word under 0->ac, 1->bc", p, _checks_p(p, p_pure, p_uni), "p", pure=p_pure, uniform=p_uni)

    add("q", "squarefree word g^w(2)", T_SQF, _checks_q(T_SQF), "q")

    rr = fixed(R_R, "a")
    add("r", "fixed point of a->ab, b->bc, c->cc", rr, _checks_r(rr), "r")

    s = fixed(S_S, "0")
    add("s", "fixed point of 0->010, 1->111", s, _checks_s(s), "s")

    add("t", "Thue-Morse word", TM, _checks_t(TM), "t")

    # named words from the definitions
    add("fibonacci", "Fibonacci word f", F, [_display(F, "01001010"), _primitivity(PHI, 2)], "m")
    add("thue-morse", "Thue-Morse word t", TM, [_display(TM, "01101001"), _primitivity(MU, 1)], "t")
    chi = Characteristic("fibonacci_numbers")
    chi_alt = fixed(CHI, "c0", CHI_CODE)
    add(
        "chi",
        "characteristic word of the Fibonacci numbers",
        chi,
        _checks_chi(chi, chi_alt),
        evidence=PropertyAssignment.of({2: True, 10: False}),
        morphic=chi_alt,
    )
    add("rudin-shapiro", "Golay-Rudin-Shapiro word r", r, [_display(r, "0001001000011101")], "i")
    gw = fixed(GAMMA, "0")
    add("gamma", "additive-cube-free word gamma^w(0)", gw, _checks_gamma(gw), evidence=PropertyAssignment.of({5: True}))
    rote = fixed(ROTE, "a", ROTE_CODE)
    add("rote", "Rote-Fibonacci word R", rote, _checks_rote(rote), evidence=PropertyAssignment.of({6: True}))
    cw = fixed(CHACON, "0")
    add("chacon", "Chacon word C", cw, [_display(cw, "0012001212012"), _primitivity(CHACON, 2)], evidence=PropertyAssignment.of({5: True}))
    add("D", "Chacon word coded by 012->010", dl, [_display(dl, "0010001010010")], "l")
    add("T", "squarefree word g^w(2)", T_SQF, [_display(T_SQF, "210201")], "q")
    return {e.key: e for e in entries}


_CATALOG: dict[str, CorpusEntry] | None = None

ALIASES = {"f-word": "fibonacci", "t-word": "thue-morse", "χ": "chi", "γ": "gamma", "R": "rote", "C": "chacon"}


def catalog() -> dict[str, CorpusEntry]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build()
    return _CATALOG


def list_entries() -> list[CorpusEntry]:
    return list(catalog().values())


def labeled_entries() -> list[CorpusEntry]:
    return [e for e in list_entries() if len(e.key) == 1 and e.key.islower()]


def get_entry(key: str) -> CorpusEntry:
    key = ALIASES.get(key, key)
    try:
        return catalog()[key]
    except KeyError:
        raise KeyError(f"no corpus entry {key!r}") from None


def evidence_check(entry: CorpusEntry) -> CheckResult:
    t0 = time.perf_counter()
    closed = closure(entry.evidence)
    candidates = classify_evidence(entry.evidence)
    if entry.label is None:
        ok = bool(candidates)
    else:
        ok = candidates == [entry.label] and class_label(closed) == entry.label
    return CheckResult("evidence closes to the class", "evidence", ok, {"closure": str(closed), "classes": candidates}, time.perf_counter() - t0)


def verify(entry: CorpusEntry, budget: int | None = None) -> VerifyReport:
    """Run every check of ``entry``; failures and errors are recorded, never raised."""
    budget = default_budget() if budget is None else budget
    scale = Scale(budget)
    results = [evidence_check(entry)]
    for chk in entry.checks:
        t0 = time.perf_counter()
        try:
            ok, witness = chk.run(scale)
        except Exception as exc:  # noqa: BLE001 - failures are data
            ok, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
        results.append(CheckResult(chk.name, chk.kind, bool(ok), witness, time.perf_counter() - t0))
    return VerifyReport(entry.key, entry.label, budget, results)


def verify_all(budget: int | None = None, keys=None) -> list[VerifyReport]:
    chosen = [get_entry(k) for k in keys] if keys else list_entries()
    return [verify(e, budget) for e in chosen]
