"""Ground spaces, GHZ fidelities, thresholds, and the Wootters oracle."""

from __future__ import annotations

import numpy as np
import pytest

from heisenring.entanglement import (
    GhzSpec,
    best_neel_ghz,
    exhaustive_ghz_search,
    fidelity_threshold,
    ghz_fidelity_ground,
    ground_space,
    neel_ghz,
    thermal_ghz_fidelity,
    wootters_concurrence_oracle,
)
from heisenring.four_qubit_analytic import analytic_thermal_fidelity
from heisenring.hamiltonian import full_spectrum, ring_bonds
from heisenring.spin_basis import BasisState
from heisenring.thermodynamics import concurrence


def _dense_hamiltonian(n: int) -> np.ndarray:
    """Full-space assembly straight from the bond action, as an oracle."""
    dim = 2**n
    h = np.zeros((dim, dim))
    for x in range(dim):
        for a, b in ring_bonds(n):
            if ((x >> a) & 1) == ((x >> b) & 1):
                h[x, x] += 1.0
            else:
                h[x ^ (1 << a) ^ (1 << b), x] += 1.0
    return h


def test_ground_space_even_ring_is_unique():
    gs = ground_space(4)
    assert gs.degeneracy == 1
    assert abs(gs.energy + 2.0) <= 1e-12
    assert gs.sectors == (2,)


def test_ground_space_odd_ring_is_fourfold():
    gs = ground_space(3)
    assert gs.degeneracy == 4
    assert abs(gs.energy) <= 1e-12

    gs5 = ground_space(5)
    assert gs5.degeneracy == 4
    assert gs5.sectors == (2, 2, 3, 3)


def test_ground_space_vectors_orthonormal_and_eigen():
    gs = ground_space(5)
    v = gs.vectors
    assert np.abs(v.T @ v - np.eye(gs.degeneracy)).max() <= 1e-10

    h = _dense_hamiltonian(5)
    residual = h @ v - gs.energy * v
    assert np.abs(residual).max() <= 1e-8


def test_ghz_spec_validation():
    a = BasisState(bits=0b0101, n=4)
    with pytest.raises(ValueError):
        GhzSpec(state_a=a, state_b=a, sign=1)
    with pytest.raises(ValueError):
        GhzSpec(state_a=a, state_b=BasisState(bits=0b1010, n=4), sign=0)
    spec = neel_ghz(4, 1)
    assert spec.state_a.ket() == "|0101>"
    assert spec.state_b.ket() == "|1010>"
    assert spec.label() == "(|0101> + |1010>)/sqrt(2)"


def test_ground_fidelity_known_values():
    assert abs(ghz_fidelity_ground(4, neel_ghz(4, 1)) - 2.0 / 3.0) <= 1e-12
    assert abs(ghz_fidelity_ground(3, neel_ghz(3, 1)) - 1.0 / 6.0) <= 1e-12
    assert abs(ghz_fidelity_ground(2, neel_ghz(2, -1)) - 1.0) <= 1e-12


def test_ground_fidelity_is_basis_invariant():
    n = 5
    gs = ground_space(n)
    spec = neel_ghz(n, 1)
    g = np.zeros(2**n)
    g[spec.state_a.bits] = 1.0 / np.sqrt(2.0)
    g[spec.state_b.bits] = spec.sign / np.sqrt(2.0)

    rng = np.random.default_rng(9)
    q, _ = np.linalg.qr(rng.standard_normal((gs.degeneracy, gs.degeneracy)))
    remixed = gs.vectors @ q
    fidelity_remixed = float(((g @ remixed) ** 2).sum() / gs.degeneracy)
    assert abs(fidelity_remixed - ghz_fidelity_ground(n, spec)) <= 1e-12


def test_best_neel_sign_pattern():
    for n, sign in [(2, -1), (4, 1), (6, -1), (9, 1), (10, -1)]:
        spec, fidelity = best_neel_ghz(n)
        assert spec.sign == sign
        other = ghz_fidelity_ground(n, neel_ghz(n, -sign))
        assert fidelity >= other - 1e-15


def test_exhaustive_search_recovers_the_singlet():
    spec, fidelity = exhaustive_ghz_search(2)
    assert spec.sign == -1
    assert abs(fidelity - 1.0) <= 1e-12


def test_exhaustive_search_never_beats_neel_on_small_rings():
    for n in (3, 4, 5):
        _, best = exhaustive_ghz_search(n)
        _, neel = best_neel_ghz(n)
        assert best <= neel + 1e-12


def test_thermal_fidelity_limits_and_closed_form():
    ghz = neel_ghz(4, 1)
    assert abs(thermal_ghz_fidelity(4, ghz, 0.01) - 2.0 / 3.0) <= 1e-6
    # maximally mixed limit: <GHZ| I/2^n |GHZ> = 1/16
    assert abs(thermal_ghz_fidelity(4, ghz, 1e6) - 1.0 / 16.0) <= 1e-6
    for t in (0.2, 1.0, 5.0):
        assert abs(thermal_ghz_fidelity(4, ghz, t) - analytic_thermal_fidelity(t)) <= 1e-10


def test_thermal_fidelity_rejects_bad_temperature():
    with pytest.raises(ValueError):
        thermal_ghz_fidelity(4, neel_ghz(4, 1), 0.0)


def test_fidelity_threshold_four_sites():
    t_star = fidelity_threshold(4, neel_ghz(4, 1))
    assert t_star is not None
    assert abs(t_star - 0.83) <= 0.01
    assert abs(thermal_ghz_fidelity(4, neel_ghz(4, 1), t_star) - 0.5) <= 1e-6

    # independent root of the closed form
    lo, hi = 0.5, 1.2
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if analytic_thermal_fidelity(mid) > 0.5:
            lo = mid
        else:
            hi = mid
    assert abs(t_star - 0.5 * (lo + hi)) <= 5e-8


def test_fidelity_threshold_two_sites_is_the_pair_threshold():
    t_star = fidelity_threshold(2, neel_ghz(2, -1))
    assert t_star is not None
    assert abs(t_star - 4.0 / np.log(3.0)) <= 1e-7


def test_fidelity_threshold_absent_when_never_certified():
    assert fidelity_threshold(3, neel_ghz(3, 1)) is None


def test_wootters_oracle_matches_energy_concurrence():
    for n, t in [(2, 1.0), (4, 0.5), (5, 2.0), (6, 1.3)]:
        expected = concurrence(full_spectrum(n), t)
        assert abs(wootters_concurrence_oracle(n, t) - expected) <= 1e-8


def test_wootters_oracle_three_sites_vanishes():
    assert wootters_concurrence_oracle(3, 0.7) == 0.0


def test_wootters_oracle_translation_invariant():
    values = [
        wootters_concurrence_oracle(6, 0.8, pair=(i, (i + 1) % 6)) for i in range(6)
    ]
    assert max(values) - min(values) <= 1e-9


def test_wootters_oracle_bounds():
    with pytest.raises(ValueError):
        wootters_concurrence_oracle(9, 1.0)
    with pytest.raises(ValueError):
        wootters_concurrence_oracle(4, 0.0)
