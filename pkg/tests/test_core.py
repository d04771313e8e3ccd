import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from morphic.core import (
    Alphabet,
    Coding,
    Morphism,
    Word,
    apply,
    base_k_value,
    classify_shape,
    compose,
    first_difference,
    incidence_matrix,
    occurrences,
    power,
    render,
    same_word,
)
from morphic.errors import AlphabetMismatchError, BudgetExceededError, DigitError

from .conftest import morphism_and_words, morphisms

PHI = Morphism.from_dict({"0": "01", "1": "0"})
MU = Morphism.from_dict({"0": "01", "1": "10"})
GAMMA = Morphism.from_dict({"0": "03", "1": "43", "3": "1", "4": "01"}, alphabet="0134")


def w(text, alphabet="01"):
    return Word.parse(alphabet, text)


class TestAlphabetAndWord:
    def test_ids_are_dense_and_stable(self):
        a = Alphabet.of("xyz")
        assert [a.id(t) for t in "xyz"] == [0, 1, 2]

    def test_duplicate_letters_rejected(self):
        with pytest.raises(ValueError):
            Alphabet(("a", "a"))

    def test_empty_alphabet_rejected(self):
        with pytest.raises(ValueError):
            Alphabet(())

    def test_empty_word(self):
        e = Word.empty(Alphabet.of("01"))
        assert len(e) == 0 and render(e) == ""

    def test_multichar_tokens_render_with_spaces(self):
        a = Alphabet(("c0", "e0"))
        assert render(Word.parse(a, "c0 e0 c0")) == "c0 e0 c0"

    def test_words_are_read_only(self):
        x = w("0101")
        with pytest.raises(ValueError):
            x.symbols[0] = 1

    def test_bad_symbol_rejected(self):
        with pytest.raises(AlphabetMismatchError):
            Word(Alphabet.of("01"), [0, 2])

    def test_same_word_ignores_alphabet_order(self):
        assert same_word(w("0110"), Word.parse(Alphabet(("1", "0")), "0110"))
        assert not same_word(w("0110"), w("0111"))

    def test_first_difference(self):
        assert first_difference(w("0110"), w("0100")) == 2
        assert first_difference(w("01"), w("01")) is None
        assert first_difference(w("01"), w("011")) == 2


class TestApply:
    def test_phi_on_0(self):
        assert render(apply(PHI, w("0"))) == "01"

    def test_mu_on_01(self):
        assert render(apply(MU, w("01"))) == "0110"

    def test_empty_word(self):
        assert len(apply(PHI, Word.empty(PHI.source))) == 0

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            apply(PHI, Word.parse("ab", "ab"))

    @given(morphism_and_words())
    def test_homomorphism(self, mwv):
        m, u, v = mwv
        assert apply(m, u + v) == apply(m, u) + apply(m, v)

    @given(morphism_and_words(n_words=1))
    def test_letter_counts_follow_incidence(self, mw):
        m, x = mw
        mat = incidence_matrix(m)
        counts = np.bincount(x.symbols, minlength=len(m.source))
        got = np.bincount(apply(m, x).symbols, minlength=len(m.target))
        assert got.tolist() == (counts @ mat).tolist()


class TestCompose:
    def test_phi_squared(self):
        assert render(compose(PHI, PHI)("0")) == "010"

    def test_gamma_squared(self):
        assert render(compose(GAMMA, GAMMA)("0")) == "031"

    def test_identity_law(self):
        ident = Morphism.identity(PHI.source)
        assert compose(ident, PHI) == PHI
        assert compose(PHI, ident) == PHI

    def test_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            compose(PHI, GAMMA)

    @given(morphisms(max_letters=4, max_image=3), st.data())
    def test_matrix_of_composition(self, m1, data):
        m2 = data.draw(morphisms(max_letters=4, max_image=3).filter(lambda m: m.source == m1.source))
        got = incidence_matrix(compose(m1, m2))
        assert (got == incidence_matrix(m2) @ incidence_matrix(m1)).all()


class TestPower:
    def test_gamma_6_on_3(self):
        assert render(power(GAMMA, 6)("3")) == "03143034343034343"

    def test_zeroth_power(self):
        assert render(power(PHI, 0)("1")) == "1"

    def test_phi_cubed(self):
        assert render(power(PHI, 3)("0")) == "01001"

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            power(MU, 30, budget=10**6)

    @given(morphisms(max_letters=3, max_image=3), st.integers(0, 3), st.integers(0, 3))
    def test_power_splits(self, m, i, j):
        for a in m.source.letters:
            assert power(m, i + j)(a) == apply(power(m, i), power(m, j)(a))


class TestIncidence:
    def test_phi(self):
        assert incidence_matrix(PHI).tolist() == [[1, 1], [1, 0]]

    def test_mu(self):
        assert incidence_matrix(MU).tolist() == [[1, 1], [1, 1]]

    def test_coding_rows(self):
        c = Coding.from_string("abcd", "0011")
        assert (incidence_matrix(c).sum(axis=1) == 1).all()

    @given(morphisms())
    def test_row_sums_are_image_lengths(self, m):
        assert incidence_matrix(m).sum(axis=1).tolist() == m.lengths.tolist()


class TestOccurrences:
    def test_single(self):
        assert occurrences(w("0110"), w("11")) == [1]

    def test_overlapping(self):
        assert occurrences(w("1111"), w("11")) == [0, 1, 2]

    def test_absent_letter(self):
        assert occurrences(w("0101"), Word.parse("2", "2")) == []

    def test_empty_pattern(self):
        with pytest.raises(ValueError):
            occurrences(w("01"), Word.empty(Alphabet.of("01")))


class TestBaseK:
    def test_examples(self):
        assert base_k_value(Word.parse("012", "20"), 3) == 6 == (3**3 - 3) // 4
        assert base_k_value(Word.empty(Alphabet.of("01")), 2) == 0
        assert base_k_value(w("101"), 2) == 5

    def test_big(self):
        x7 = base_k_value(Word.parse("012", "20" * 7), 3)
        assert x7 == (3**15 - 3) // 4 == 3587226

    def test_non_digit(self):
        with pytest.raises(DigitError):
            base_k_value(Word.parse("01a", "1a"), 10)
        with pytest.raises(DigitError):
            base_k_value(Word.parse("012", "2"), 2)

    @given(st.lists(st.integers(0, 2), max_size=30), st.lists(st.integers(0, 2), max_size=30))
    def test_concatenation(self, a, b):
        alpha = Alphabet.of("012")
        u, v = Word(alpha, a), Word(alpha, b)
        assert base_k_value(u + v, 3) == base_k_value(u, 3) * 3 ** len(v) + base_k_value(v, 3)


class TestShape:
    def test_mu(self):
        s = classify_shape(MU)
        assert s.uniform == 2 and s.nonerasing and not s.coding

    def test_phi(self):
        s = classify_shape(PHI)
        assert s.uniform is None and s.nonerasing

    def test_erasing(self):
        s = classify_shape(Morphism.from_dict({"a": ["a", "b"], "b": []}))
        assert not s.nonerasing

    def test_coding(self):
        assert classify_shape(Coding.from_string("abc", "001")).coding


class TestCoding:
    def test_shorthand(self):
        c = Coding.from_string("abcd", "2201")
        assert [render(c(a)) for a in "abcd"] == ["2", "2", "0", "1"]

    def test_not_1_uniform(self):
        with pytest.raises(ValueError):
            Coding(Alphabet.of("ab"), [[0, 1], [0]])
