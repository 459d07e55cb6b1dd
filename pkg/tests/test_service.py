"""Service layer: payload shapes, validation, reproduction reports."""

from __future__ import annotations

import numpy as np
import pytest

from heisenring import reference, service
from heisenring.thermodynamics import ground_state_concurrence


def test_temperature_grid_validation():
    with pytest.raises(ValueError):
        service.temperature_grid(0.0, 1.0, 10)
    with pytest.raises(ValueError):
        service.temperature_grid(2.0, 1.0, 10)
    with pytest.raises(ValueError):
        service.temperature_grid(0.1, 1.0, 1)
    grid = service.temperature_grid(0.1, 10.0, 5)
    assert grid[0] == pytest.approx(0.1) and grid[-1] == pytest.approx(10.0)


def test_spectrum_report_payload():
    report = service.spectrum_report(4)
    assert report.n == 4 and report.dimension == 16
    assert abs(report.ground_energy + 2.0) <= 1e-12
    assert [level.multiplicity for level in report.levels] == [1, 3, 7, 5]


def test_thermal_series_grid_and_endpoints():
    series = service.thermal_series(2, 0.1, 5.0, 7)
    assert series.n == 2 and len(series.points) == 7
    temps = [p.temperature for p in series.points]
    assert temps == sorted(temps)
    assert abs(series.points[0].concurrence - ground_state_concurrence(2)) <= 1e-6
    assert series.points[-1].concurrence == 0.0


def test_threshold_report_zero_case():
    report = service.threshold_report(3)
    assert report.t_threshold == 0.0 and report.bracket_width == 0.0


def test_ghz_report_default_and_exhaustive():
    plain = service.ghz_report(4)
    assert not plain.exhaustive and not plain.beats_neel
    assert plain.ket_a == "|0101>" and plain.sign == 1
    assert plain.certified_below == pytest.approx(0.8336, abs=1e-3)

    searched = service.ghz_report(4, exhaustive=True)
    assert searched.exhaustive and not searched.beats_neel
    assert searched.fidelity == plain.fidelity

    uncertified = service.ghz_report(3)
    assert uncertified.certified_below is None


def test_fidelity_curve_defaults_and_consistency():
    curve = service.fidelity_curve()
    assert curve.n == 4 and len(curve.points) == 400
    assert curve.points[0].temperature == pytest.approx(0.02)
    assert curve.points[-1].temperature == pytest.approx(5.0)
    assert curve.fidelity_threshold == pytest.approx(0.8336, abs=1e-3)
    for point in curve.points[::40]:
        assert abs(point.fidelity - point.fidelity_analytic) <= 1e-10
        assert abs(point.concurrence - point.concurrence_analytic) <= 1e-12


def test_tables_report_blocks_and_notes():
    report = service.tables_report()
    assert report.ok
    blocks = {row.block for row in report.rows}
    assert blocks == {
        "ground_state_concurrence",
        "threshold_temperature",
        "threshold_limit",
        "ghz_ground_fidelity",
    }
    assert all(row.ok for row in report.rows)

    # the two documented source defects carry explanatory notes and are
    # checked against the independently verified values
    by_key = {(row.block, row.key): row for row in report.rows}
    six = by_key[("threshold_temperature", 6)]
    assert "published" in six.note
    assert six.reference == reference.VERIFIED_THRESHOLD_CORRECTIONS[6]
    eight = by_key[("ground_state_concurrence", 8)]
    assert "published" in eight.note
    assert eight.reference == reference.VERIFIED_CONCURRENCE_CORRECTIONS[8]

    clean = by_key[("ground_state_concurrence", 5)]
    assert clean.note == "" and clean.reference == 0.247


def test_tables_report_row_count():
    report = service.tables_report()
    # 10 concurrence + 10 threshold + 1 limit + 10 fidelity rows
    assert len(report.rows) == 31


def test_verification_report_names_and_tolerances():
    report = service.verification_report()
    assert report.ok
    named = {check.name: check for check in report.checks}
    assert set(named) == {
        "partition_function_closed_form",
        "concurrence_closed_form",
        "four_site_eigensystem",
        "four_site_cluster_span",
        "thermal_fidelity_closed_form",
        "wootters_concurrence_oracle",
    }
    for check in report.checks:
        assert check.worst <= check.tolerance


def test_thermal_series_matches_observables_pointwise():
    series = service.thermal_series(4, 0.5, 2.0, 3)
    grid = service.temperature_grid(0.5, 2.0, 3)
    assert np.allclose([p.temperature for p in series.points], grid)
    for point in series.points:
        assert point.concurrence == max(0.0, -point.internal_energy / 4)
