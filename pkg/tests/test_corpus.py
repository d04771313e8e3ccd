import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from morphic.analyze import find_k_powers
from morphic.core import Word, render, same_word
from morphic.corpus import (

    BaseConcat,
    Check,
    CorpusEntry,
    Characteristic,
    MorphicFixedPoint,
    MorphicImage,
    NamedConstant,
    PI,
    PrefixPatch,
    Product,
    Quadratic,
    RulerImage,
    Shift,
    Sturmian,
    catalog,

    get_entry,
    labeled_entries,
    list_entries,
    verify,
)
from morphic.corpus import entries as E
from morphic.corpus.entries import ALIASES, evidence_check
from morphic.corpus.constructions import display, nu2
from morphic.errors import BudgetExceededError, PrecisionError
from morphic.taxonomy import LABELS, class_label, closure


class TestMaterialize:
    @pytest.mark.parametrize(
        "spec, want",
        [
            (Characteristic("factorials"), "01100010"),
            (BaseConcat(2), "11011100101110111"),
            (Characteristic("fibonacci_numbers"), "11110100100001"),
            (Characteristic("powers_of", 2), "0110100010000000"),
            (BaseConcat(10), "12345678910111213"),
        ],
    )
    def test_prefixes(self, spec, want):
        assert render(spec.materialize(len(want))) == want

    def test_zero_length(self):
        assert len(BaseConcat(2).materialize(0)) == 0

    def test_budget(self):
        spec = Characteristic("factorials")
        with pytest.raises(BudgetExceededError):
            spec.materialize(spec.budget + 1)

    def test_patch(self):
        j = PrefixPatch(E.F, ("2",))
        assert render(j.materialize(8)) == "21001010"
        assert "2" in j.alphabet

    def test_shift(self):
        assert render(Shift(E.F, 1).materialize(7)) == "1001010"

    def test_image(self):
        assert render(MorphicImage(E.TM, E.P_IMG).materialize(8)) == "acbcbcac"

    def test_ruler(self):
        assert render(RulerImage.ruler().materialize(15)) == "0 1 0 2 0 1 0 3 0 1 0 2 0 1 0"
        assert [nu2(n) for n in range(1, 9)] == [0, 1, 0, 2, 0, 1, 0, 3]

    def test_product_runs(self):
        want = "".join("0" + "1" * (nu2(n) + 1) ** 2 for n in range(1, 9))
        assert render(Product("nu2-square-runs").materialize(len(want))) == want

    def test_display_truncates(self):
        assert display(E.F, 8).startswith("01001010")


class TestSturmian:
    def test_pi_matches_high_precision(self):
        mpmath.mp.dps = 80
        s = Sturmian(PI, 0).materialize(3000)
        want = [int(mpmath.floor((n + 1) * mpmath.pi) - mpmath.floor(n * mpmath.pi)) - 3 for n in range(3000)]
        assert s.symbols.tolist() == want
        assert s.alphabet.letters == ("3", "4")

    def test_precision_exhausted(self):
        short = NamedConstant("pi", "3.14")
        with pytest.raises(PrecisionError):
            Sturmian(short, 0).materialize(1000)

    def test_golden_slope_is_shifted_fibonacci(self):
        s = Sturmian(Quadratic(3, -1, 5, 2), Quadratic(3, -1, 5, 1))
        assert same_word(s.materialize(10**4), Shift(E.F, 1).materialize(10**4))

    @given(st.integers(-50, 50), st.integers(-50, 50), st.sampled_from([2, 3, 5, 7, 13]), st.integers(1, 40))
    def test_quadratic_floor(self, p, q, d, r):
        x = Quadratic(p, q, d, r)
        mpmath.mp.dps = 60
        assert x.floor() == int(mpmath.floor((p + q * mpmath.sqrt(d)) / r))

    def test_quadratic_rejects_square(self):
        with pytest.raises(ValueError):
            Quadratic(1, 1, 4)


class TestCatalog:
    def test_twenty_labels(self):
        labels = sorted(e.label for e in labeled_entries())
        assert labels == sorted(LABELS)
        assert [e.key for e in labeled_entries()] == [e.label for e in labeled_entries()]

    def test_named_words(self):
        for key in ("fibonacci", "thue-morse", "chi", "rudin-shapiro", "gamma", "rote", "chacon", "D", "T"):
            assert key in catalog()
        assert get_entry("γ") is get_entry("gamma")
        assert all(v in catalog() for v in ALIASES.values())

    def test_thue_morse_entry_spec(self):
        spec = get_entry("t").spec
        assert isinstance(spec, MorphicFixedPoint)
        assert spec.morphism == E.MU and spec.seed == "0" and spec.coding is None

    def test_unknown(self):
        with pytest.raises(KeyError):
            get_entry("zz")

    @pytest.mark.parametrize("key", [e.key for e in list_entries()])
    def test_evidence_closes_to_label(self, key):
        e = get_entry(key)
        closed = closure(e.evidence)
        if e.label is not None:
            assert class_label(closed) == e.label
        assert evidence_check(e).passed


SAME_AS_SPEC = [
    ("d", "morphic"),
    ("e", "product"),
    ("f", "morphic"),
    ("f", "shift"),
    ("g", "morphic"),
    ("j", "morphic"),
    ("l", "chacon"),
    ("o", "pure"),
    ("p", "pure"),
    ("p", "uniform"),
]


class TestCrossConstructions:
    @pytest.mark.parametrize("key, name", SAME_AS_SPEC)
    def test_agrees_with_spec(self, key, name):
        e = get_entry(key)
        n = 10**5 if key in "dgjp" else 10**4
        assert same_word(e.spec.materialize(n), e.alternatives[name].materialize(n))

    def test_g_coded_is_squarefree_word(self):
        alt = get_entry("g").alternatives["automatic"]
        assert same_word(alt.materialize(10**5), E.T_SQF.materialize(10**5))

    def test_h_coding_gives_thue_morse(self):
        alt = get_entry("h").alternatives["thue_morse"]
        assert same_word(alt.materialize(2**14), E.TM.materialize(2**14))

    def test_h_y_as_ruler_image(self):
        alts = get_entry("h").alternatives
        assert same_word(alts["y"].materialize(10**5), alts["y_ruler"].materialize(10**5))


@pytest.mark.parametrize("key", [e.key for e in list_entries()])
def test_verify_entry(key):
    rep = verify(get_entry(key))
    assert rep.passed, [(r.name, r.witness) for r in rep.failures]


def test_verify_records_failures():
    def boom(scale):
        raise RuntimeError("kaput")

    e = get_entry("m")
    checks = [Check("fails", "identity", lambda scale: (False, "w")), Check("raises", "identity", boom)]
    rep = verify(CorpusEntry(e.key, e.title, e.spec, e.evidence, e.label, checks))
    assert [r.name for r in rep.failures] == ["fails", "raises"]
    assert "kaput" in rep.failures[1].witness["error"]


def test_rudin_shapiro_cubes():
    r = get_entry("i").prefix(10**5)
    hits = find_k_powers(r, 3, 20)
    assert {render(r[p : p + 3 * q]) for p, q in hits} == {"000", "111"}


def test_o_morphism_identity():
    from morphic.core import compose

    gf = compose(E.G_O, E.F_O)
    assert compose(E.H_O, gf) == compose(gf, E.F_O)
