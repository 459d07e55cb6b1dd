"""Dense symmetric eigensolver: reconstruction, determinism, failure modes."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as npst

from heisenring import eigensolver
from heisenring.eigensolver import ConvergenceError, eigh


def _random_symmetric(dim: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal((dim, dim))
    return (raw + raw.T) / 2.0


def test_two_by_two_exchange_block():
    dec = eigh(np.array([[0.0, 2.0], [2.0, 0.0]]))
    assert np.allclose(dec.values, [-2.0, 2.0], atol=1e-14)


def test_identity_is_a_fixed_point():
    dec = eigh(np.eye(5))
    assert np.array_equal(dec.values, np.ones(5))
    assert np.array_equal(dec.vectors, np.eye(5))


@pytest.mark.parametrize("dim", [3, 17, 64, 231])
def test_reconstruction_orthonormality_trace(dim):
    a = _random_symmetric(dim, seed=dim)
    dec = eigh(a)

    assert np.all(np.diff(dec.values) >= 0.0)
    assert dec.dim == dim

    recon = dec.vectors @ np.diag(dec.values) @ dec.vectors.T
    assert np.abs(recon - a).max() <= 1e-9 * max(1.0, np.abs(a).max())

    orth = dec.vectors.T @ dec.vectors - np.eye(dim)
    assert np.abs(orth).max() <= 1e-10

    trace = float(np.trace(a))
    assert abs(float(dec.values.sum()) - trace) <= 1e-9 * max(1.0, abs(trace))


def test_permutation_similarity():
    a = _random_symmetric(40, seed=7)
    rng = np.random.default_rng(8)
    p = np.eye(40)[rng.permutation(40)]
    permuted = p.T @ a @ p
    assert np.abs(eigh(permuted).values - eigh(a).values).max() <= 1e-9


def test_values_only_mode_matches_full_mode():
    a = _random_symmetric(30, seed=3)
    full = eigh(a)
    lean = eigh(a, want_vectors=False)
    assert lean.vectors is None
    assert np.array_equal(lean.values, full.values)


def test_deterministic_output_and_sign_convention():
    a = _random_symmetric(25, seed=11)
    first = eigh(a)
    second = eigh(a)
    assert np.array_equal(first.values, second.values)
    assert np.array_equal(first.vectors, second.vectors)
    # fixed sign: the largest-magnitude component of every column is positive
    idx = np.abs(first.vectors).argmax(axis=0)
    assert np.all(first.vectors[idx, np.arange(25)] > 0.0)


def test_output_arrays_are_frozen():
    dec = eigh(_random_symmetric(6, seed=2))
    with pytest.raises(ValueError):
        dec.values[0] = 0.0
    with pytest.raises(ValueError):
        dec.vectors[0, 0] = 0.0


def test_rejects_non_square_and_non_symmetric():
    with pytest.raises(ValueError):
        eigh(np.zeros((3, 4)))
    bad = np.array([[0.0, 1.0], [1.0 + 1e-6, 0.0]])
    with pytest.raises(ValueError):
        eigh(bad)


def test_symmetry_tolerance_admits_roundoff():
    a = _random_symmetric(10, seed=5)
    a[2, 3] += 1e-14  # below SYMMETRY_TOL, must be accepted and symmetrized
    dec = eigh(a)
    assert dec.dim == 10


def test_sweep_cap_raises_convergence_error(monkeypatch):
    monkeypatch.setattr(eigensolver, "MAX_SWEEPS", 0)
    with pytest.raises(ConvergenceError):
        eigh(np.array([[0.0, 1.0], [1.0, 0.0]]))


@settings(deadline=None, max_examples=40)
@given(
    npst.arrays(
        dtype=np.float64,
        shape=st.integers(min_value=1, max_value=12).map(lambda k: (k, k)),
        elements=st.floats(min_value=-10.0, max_value=10.0),
    )
)
def test_reconstruction_on_arbitrary_symmetric_input(raw):
    a = (raw + raw.T) / 2.0
    dec = eigh(a)
    recon = dec.vectors @ np.diag(dec.values) @ dec.vectors.T
    assert np.abs(recon - a).max() <= 1e-9 * max(1.0, np.abs(a).max())
    assert np.abs(dec.vectors.T @ dec.vectors - np.eye(a.shape[0])).max() <= 1e-10
