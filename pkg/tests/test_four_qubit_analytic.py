"""The printed four-qubit eigensystem, treated as claims under test."""

from __future__ import annotations

import numpy as np
import pytest

from heisenring.entanglement import ground_space
from heisenring.four_qubit_analytic import (
    analytic_eigensystem,
    analytic_thermal_fidelity,
    ghz_overlap_weights,
    verify_against_numeric,
)
from heisenring.thermodynamics import analytic_partition_function


def _matrix_of_states() -> np.ndarray:
    return np.column_stack([pair.amplitudes for pair in analytic_eigensystem()])


def test_sixteen_states_with_the_known_energy_profile():
    pairs = analytic_eigensystem()
    assert len(pairs) == 16
    assert [pair.label for pair in pairs] == list(range(16))

    energies = sorted(round(pair.energy, 9) for pair in pairs)
    profile = {e: energies.count(e) for e in set(energies)}
    assert profile == {-2.0: 1, 0.0: 3, 2.0: 7, 4.0: 5}


def test_magnon_energies_follow_the_phase_rule():
    by_label = {pair.label: pair for pair in analytic_eigensystem()}
    for k in range(1, 5):
        expected = 2.0 + 2.0 * np.cos(np.pi * k / 2.0)
        assert abs(by_label[k].energy - expected) <= 1e-12
        assert abs(by_label[k + 4].energy - expected) <= 1e-12


def test_states_are_unit_norm_and_orthonormal():
    m = _matrix_of_states()
    gram = m.conj().T @ m
    assert np.abs(np.diag(gram) - 1.0).max() <= 1e-12
    assert np.abs(gram - np.eye(16)).max() <= 1e-10


def test_states_are_complete():
    m = _matrix_of_states()
    assert np.abs(m @ m.conj().T - np.eye(16)).max() <= 1e-10


def test_specific_printed_states():
    by_label = {pair.label: pair for pair in analytic_eigensystem()}

    psi9 = by_label[9].amplitudes
    psi14 = by_label[14].amplitudes
    assert abs(np.vdot(psi9, psi14)) <= 1e-12

    psi10 = by_label[10].amplitudes
    expected = np.zeros(16, dtype=complex)
    expected[0b0101] = 1.0 / np.sqrt(2.0)
    expected[0b1010] = -1.0 / np.sqrt(2.0)
    # equality up to a global phase
    phase = np.vdot(expected, psi10)
    assert abs(abs(phase) - 1.0) <= 1e-12


def test_ground_state_matches_numeric_ground_vector():
    by_label = {pair.label: pair for pair in analytic_eigensystem()}
    numeric = ground_space(4).vectors[:, 0]
    overlap = abs(np.vdot(by_label[9].amplitudes, numeric))
    assert overlap >= 1.0 - 1e-9


def test_full_verification_report_is_clean():
    report = verify_against_numeric()
    assert report.ok
    assert report.failing_labels() == ()
    assert report.max_residual <= 1e-10
    assert report.orthonormality_defect <= 1e-10
    assert report.completeness_defect <= 1e-10
    assert max(check.span_defect for check in report.checks) <= 1e-9


def test_ghz_overlap_weights():
    weights = ghz_overlap_weights()
    assert set(weights) == {9, 14}
    assert abs(weights[9] - 2.0 / 3.0) <= 1e-12
    assert abs(weights[14] - 1.0 / 3.0) <= 1e-12


def test_thermal_fidelity_low_temperature_limit():
    assert abs(analytic_thermal_fidelity(0.01) - 2.0 / 3.0) <= 1e-6


def test_thermal_fidelity_crosses_half_near_point_eight_three():
    assert analytic_thermal_fidelity(0.82) > 0.5
    assert analytic_thermal_fidelity(0.84) < 0.5


def test_thermal_fidelity_denominator_is_the_partition_function():
    # F * Z equals the numerator's two weighted overlaps; with the known
    # weights this pins the denominator to Z(4)
    for t in np.geomspace(0.05, 20.0, 20):
        t = float(t)
        z = analytic_partition_function(4, t)
        beta = 1.0 / t
        numerator = (2.0 / 3.0) * np.exp(2.0 * beta) + (1.0 / 3.0) * np.exp(-4.0 * beta)
        assert abs(analytic_thermal_fidelity(t) * z - numerator) <= 1e-12 * max(
            1.0, numerator
        )


def test_thermal_fidelity_rejects_bad_temperature():
    with pytest.raises(ValueError):
        analytic_thermal_fidelity(0.0)
