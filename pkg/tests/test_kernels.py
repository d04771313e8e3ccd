import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from morphic import kernels
from morphic.core import Alphabet, Morphism

symbols = st.integers(1, 3).flatmap(
    lambda k: arrays(np.int32, st.integers(0, 120), elements=st.integers(0, k - 1)).map(lambda a: (k, a))
)


def pairs(result):
    a, b = result
    return sorted(zip(np.asarray(a).tolist(), np.asarray(b).tolist()))


def both(name):
    return kernels.KERNELS[name]


@given(symbols, st.data())
def test_expand(ka, data):
    k, w = ka
    imgs = [data.draw(st.lists(st.integers(0, k - 1), max_size=4)) for _ in range(k)]
    m = Morphism(Alphabet(tuple(map(str, range(k)))), imgs)
    nb, npy = both("expand")
    got = nb(w, m.flat, m.offsets, m.lengths)
    assert got.tolist() == npy(w, m.flat, m.offsets, m.lengths).tolist()
    assert got.tolist() == [s for c in w.tolist() for s in imgs[c]]


@given(symbols, st.lists(st.integers(0, 2), min_size=1, max_size=4))
def test_occurrences(ka, pat):
    _, w = ka
    x = np.array(pat, dtype=np.int32)
    nb, npy = both("occurrences")
    assert np.asarray(nb(w, x)).tolist() == np.asarray(npy(w, x)).tolist()


@given(symbols, st.integers(1, 12), st.sampled_from([(1, 0), (2, 0), (1, 1), (3, 0)]))
def test_periodic_windows(ka, max_period, ab):
    _, w = ka
    nb, npy = both("periodic_windows")
    assert pairs(nb(w, max_period, *ab)) == pairs(npy(w, max_period, *ab))


@given(symbols, st.integers(1, 15))
def test_additive_cubes(ka, max_block):
    _, w = ka
    vals = w.astype(np.int64) * 3 - 2
    nb, npy = both("additive_cubes")
    assert pairs(nb(vals, max_block)) == pairs(npy(vals, max_block))


@given(symbols, st.integers(1, 15))
def test_xxxr(ka, max_x):
    _, w = ka
    nb, npy = both("xxxr")
    assert pairs(nb(w, max_x)) == pairs(npy(w, max_x))


@given(symbols)
def test_factor_counts(ka):
    k, w = ka
    n_max = w.size // 2
    nb, npy = both("factor_counts")
    got = np.asarray(nb(w, k, n_max)).tolist()
    assert got == np.asarray(npy(w, k, n_max)).tolist()
    for n in range(1, n_max + 1):
        assert got[n] == len({tuple(w[i : i + n].tolist()) for i in range(w.size - n + 1)})


@given(symbols, st.integers(0, 2))
def test_runs(ka, letter):
    _, w = ka
    nb, npy = both("runs")
    assert pairs(nb(w, letter)) == pairs(npy(w, letter))


@given(symbols)
def test_square_prefixes(ka):
    _, w = ka
    nb, npy = both("square_prefixes")
    half = w.size // 2
    got = np.asarray(nb(w, half)).tolist()
    assert got == np.asarray(npy(w, half)).tolist()
    assert got == [n for n in range(1, half + 1) if (w[:n] == w[n : 2 * n]).all()]


def test_window_ids_distinguish_factors():
    w = np.array([0, 1, 1, 0, 1, 0, 0, 1], dtype=np.int32)
    ids = kernels.window_ids(w, 3)
    facs = [tuple(w[i : i + 3]) for i in range(6)]
    for i in range(6):
        for j in range(6):
            assert (ids[i] == ids[j]) == (facs[i] == facs[j])


@pytest.mark.parametrize("flag, backend", [("0", "numpy"), ("1", "numba")])
def test_env_flag_selects_backend(flag, backend):
    out = subprocess.run(
        [sys.executable, "-c", "from morphic import kernels; print(kernels.BACKEND)"],
        env={"MORPHIC_NUMBA": flag, "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == backend
