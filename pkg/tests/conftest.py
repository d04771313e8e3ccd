import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from morphic.core import Alphabet, Morphism, Word

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

LETTERS = "abcde"


@st.composite
def morphisms(draw, max_letters=5, max_image=4, min_image=0):
    k = draw(st.integers(1, max_letters))
    alpha = Alphabet(tuple(LETTERS[:k]))
    images = [draw(st.lists(st.integers(0, k - 1), min_size=min_image, max_size=max_image)) for _ in range(k)]
    return Morphism(alpha, images, alpha)


@st.composite
def words_over(draw, alphabet, max_size=64):
    ids = draw(st.lists(st.integers(0, len(alphabet) - 1), max_size=max_size))
    return Word(alphabet, ids)


@st.composite
def morphism_and_words(draw, n_words=2, **kw):
    m = draw(morphisms(**kw))
    return (m, *[draw(words_over(m.source)) for _ in range(n_words)])


def random_morphism(rng: np.random.Generator, max_letters=4, max_image=3) -> Morphism:
    k = int(rng.integers(1, max_letters + 1))
    alpha = Alphabet(tuple(LETTERS[:k]))
    images = [rng.integers(0, k, size=int(rng.integers(0, max_image + 1))).tolist() for _ in range(k)]
    return Morphism(alpha, images, alpha)


@pytest.fixture
def rng():
    return np.random.default_rng(20241018)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
