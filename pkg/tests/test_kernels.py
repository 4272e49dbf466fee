import random

import numpy as np
import pytest

from taftknot import _pykernels, kernels
from taftknot.braid import BraidWord
from taftknot.invariant import closure_trace
from taftknot.ribbon import ribbon_data

try:
    from taftknot import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _random_case(rng):
    C, S, E = rng.randint(1, 3), rng.randint(1, 6), rng.randint(1, 9)
    state = np.array([[[rng.randint(-3, 3) for _ in range(E)] for _ in range(S)] for _ in range(C)], dtype=np.int64)
    trans = np.array(
        [(rng.randrange(S), rng.randrange(S), rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(rng.randint(0, 12))],
        dtype=np.int64,
    ).reshape(-1, 4)
    return state, trans


def _dense_reference(state, trans):
    C, S, E = state.shape
    out = np.zeros_like(state)
    for dst, src, shift, coef in trans.tolist():
        for e in range(E):
            if 0 <= e + shift < E:
                out[:, dst, e + shift] += coef * state[:, src, e]
    return out


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("seed", range(20))
def test_python_kernel_matches_reference(seed):
    state, trans = _random_case(random.Random(seed))
    assert np.array_equal(_pykernels.apply_sparse(state, trans), _dense_reference(state, trans))


@needs_ext
@pytest.mark.parametrize("seed", range(20))
def test_compiled_kernel_matches_python(seed):
    state, trans = _random_case(random.Random(seed))
    assert np.array_equal(_ckernels.apply_sparse(state, trans), _pykernels.apply_sparse(state, trans))


@needs_ext
@pytest.mark.parametrize("letters,strands", [((), 1), ((1,), 2), ((1, 1, 1), 2), ((1, -2, 1, -2), 3), ((1, 2, -3, 2, 1, -1, 3), 4)])
def test_compiled_state_counts_match_python(letters, strands):
    a = _ckernels.bracket_state_counts(np.array(letters, dtype=np.int64), strands)
    b = _pykernels.bracket_state_counts(np.array(letters, dtype=np.int64), strands)
    assert np.array_equal(a, b)
    assert a.sum() == 2 ** len(letters)


def test_state_counts_small_cases():
    counts = _pykernels.bracket_state_counts(np.array([1], dtype=np.int64), 2)
    # one crossing on two strands: the vertical smoothing gives 2 loops, the cup-cap 1
    assert counts[2, 2] == 1 and counts[0, 1] == 1


@pytest.mark.parametrize("n", [1, 2])
def test_engines_agree(n):
    rd = ribbon_data(n)
    rng = random.Random(n)
    for _ in range(15):
        strands = rng.randint(2, 4)
        w = BraidWord(strands, tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(rng.randint(0, 9))))
        assert closure_trace(w, rd, engine="kernel") == closure_trace(w, rd, engine="exact")


def test_pure_python_backend_forced(monkeypatch):
    import importlib

    monkeypatch.setenv("TAFTKNOT_PURE_PYTHON", "1")
    reloaded = importlib.reload(kernels)
    try:
        assert reloaded.BACKEND == "python"
        assert reloaded.apply_sparse is _pykernels.apply_sparse
    finally:
        monkeypatch.delenv("TAFTKNOT_PURE_PYTHON")
        importlib.reload(kernels)


def test_overflow_guard_forces_exact_path():
    rd = ribbon_data(1)
    w = BraidWord(2, (1,) * 8)
    import taftknot.invariant as inv

    old = inv._INT64_LIMIT
    inv._INT64_LIMIT = 2
    try:
        with pytest.raises(OverflowError):
            closure_trace(w, rd, engine="kernel")
        assert closure_trace(w, rd) == closure_trace(w, rd, engine="exact")
    finally:
        inv._INT64_LIMIT = old
