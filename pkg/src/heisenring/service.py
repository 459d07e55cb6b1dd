"""Service layer: turns engine results into schema payloads.

Both front ends (FastAPI app and CLI) call these functions, so their outputs
are structurally identical. Everything here is deterministic and pure.
"""

from __future__ import annotations

import numpy as np

from . import entanglement, four_qubit_analytic, reference, thermodynamics
from .hamiltonian import full_spectrum
from .schemas import (
    FidelityCurve,
    FidelityPoint,
    GhzResponse,
    SpectrumLevel,
    SpectrumResponse,
    TableRow,
    TablesReport,
    ThermalPoint,
    ThermalSeries,
    ThresholdResponse,
    VerifyCheck,
    VerifyReport,
)

TABLE_RANGE = range(2, 12)

FIG_T_MIN = 0.02
FIG_T_MAX = 5.0
FIG_STEPS = 400


def temperature_grid(t_min: float, t_max: float, steps: int) -> np.ndarray:
    """Log-spaced temperature grid with argument validation."""
    if not t_min > 0.0:
        raise ValueError(f"t_min must be positive, got {t_min}")
    if not t_max > t_min:
        raise ValueError(f"t_max must exceed t_min, got [{t_min}, {t_max}]")
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")
    return np.geomspace(t_min, t_max, steps)


def spectrum_report(n: int) -> SpectrumResponse:
    spectrum = full_spectrum(n)
    return SpectrumResponse(
        n=n,
        dimension=int(spectrum.values.shape[0]),
        ground_energy=spectrum.ground_energy,
        levels=[
            SpectrumLevel(energy=energy, multiplicity=count)
            for energy, count in spectrum.degeneracies()
        ],
    )


def thermal_series(n: int, t_min: float, t_max: float, steps: int) -> ThermalSeries:
    grid = temperature_grid(t_min, t_max, steps)
    spectrum = full_spectrum(n)
    points = []
    for t in grid:
        obs = thermodynamics.thermal_observables(spectrum, float(t))
        points.append(
            ThermalPoint(
                temperature=obs.temperature,
                log_z=obs.log_z,
                internal_energy=obs.u,
                concurrence=obs.c,
            )
        )
    return ThermalSeries(n=n, points=points)


def threshold_report(n: int) -> ThresholdResponse:
    result = thermodynamics.threshold_temperature(n)
    return ThresholdResponse(
        n=result.n, t_threshold=result.t_threshold, bracket_width=result.bracket_width
    )


def ghz_report(n: int, exhaustive: bool = False) -> GhzResponse:
    neel_spec, neel_fidelity = entanglement.best_neel_ghz(n)
    spec, fidelity = neel_spec, neel_fidelity
    beats_neel = False
    if exhaustive:
        found_spec, found_fidelity = entanglement.exhaustive_ghz_search(n)
        if found_fidelity > neel_fidelity + 1e-12:
            spec, fidelity, beats_neel = found_spec, found_fidelity, True
    certified = entanglement.fidelity_threshold(n, spec)
    return GhzResponse(
        n=n,
        ket_a=spec.state_a.ket(),
        ket_b=spec.state_b.ket(),
        sign=spec.sign,
        fidelity=fidelity,
        neel_fidelity=neel_fidelity,
        exhaustive=exhaustive,
        beats_neel=beats_neel,
        certified_below=certified,
    )


def fidelity_curve(
    t_min: float = FIG_T_MIN, t_max: float = FIG_T_MAX, steps: int = FIG_STEPS
) -> FidelityCurve:
    """Four-site thermal GHZ fidelity and pair concurrence over a grid,
    with the closed-form columns appended."""
    grid = temperature_grid(t_min, t_max, steps)
    n = 4
    spectrum = full_spectrum(n)
    ghz = entanglement.neel_ghz(n, 1)
    points = []
    for t_raw in grid:
        t = float(t_raw)
        points.append(
            FidelityPoint(
                temperature=t,
                fidelity=entanglement.thermal_ghz_fidelity(n, ghz, t),
                fidelity_analytic=four_qubit_analytic.analytic_thermal_fidelity(t),
                concurrence=thermodynamics.concurrence(spectrum, t),
                concurrence_analytic=thermodynamics.analytic_concurrence(n, t),
            )
        )
    return FidelityCurve(
        n=n,
        fidelity_threshold=entanglement.fidelity_threshold(n, ghz),
        points=points,
    )


def _concurrence_rows() -> list[TableRow]:
    rows = []
    for n in TABLE_RANGE:
        computed = thermodynamics.ground_state_concurrence(n)
        published = reference.GROUND_STATE_CONCURRENCE[n]
        corrected = reference.VERIFIED_CONCURRENCE_CORRECTIONS.get(n)
        target = corrected if corrected is not None else published
        deviation = abs(computed - target)
        note = ""
        if corrected is not None:
            note = (
                f"published {published} is the truncation, not the rounding, "
                f"of the exact value; checked against the independently "
                f"verified one"
            )
        rows.append(
            TableRow(
                block="ground_state_concurrence",
                key=n,
                computed=computed,
                reference=target,
                deviation=deviation,
                tolerance=reference.GROUND_STATE_CONCURRENCE_TOL,
                ok=deviation <= reference.GROUND_STATE_CONCURRENCE_TOL,
                note=note,
            )
        )
    return rows


def _threshold_rows() -> list[TableRow]:
    rows = []
    computed_by_n = {}
    for n in TABLE_RANGE:
        computed = thermodynamics.threshold_temperature(n).t_threshold
        computed_by_n[n] = computed
        published = reference.THRESHOLD_TEMPERATURE[n]
        corrected = reference.VERIFIED_THRESHOLD_CORRECTIONS.get(n)
        target = corrected if corrected is not None else published
        deviation = abs(computed - target)
        note = ""
        if corrected is not None:
            note = (
                f"published {published:.8f} fails its defining equation "
                f"U(T_th)=0 (U=+8.0e-3 there); checked against the "
                f"independently verified root"
            )
        rows.append(
            TableRow(
                block="threshold_temperature",
                key=n,
                computed=computed,
                reference=target,
                deviation=deviation,
                tolerance=reference.THRESHOLD_TEMPERATURE_TOL,
                ok=deviation <= reference.THRESHOLD_TEMPERATURE_TOL,
                note=note,
            )
        )
    midpoint = 0.5 * (computed_by_n[10] + computed_by_n[11])
    deviation = abs(midpoint - reference.THRESHOLD_LIMIT_ESTIMATE)
    rows.append(
        TableRow(
            block="threshold_limit",
            key=0,
            computed=midpoint,
            reference=reference.THRESHOLD_LIMIT_ESTIMATE,
            deviation=deviation,
            tolerance=reference.THRESHOLD_LIMIT_TOL,
            ok=deviation <= reference.THRESHOLD_LIMIT_TOL,
            note="midpoint of the largest odd and even thresholds",
        )
    )
    return rows


def _ghz_rows() -> list[TableRow]:
    rows = []
    for n in TABLE_RANGE:
        spec, fidelity = entanglement.best_neel_ghz(n)
        expected_fidelity, expected_sign = reference.GHZ_GROUND_FIDELITY[n]
        deviation = abs(fidelity - expected_fidelity)
        sign_ok = spec.sign == expected_sign
        ok = deviation <= reference.GHZ_GROUND_FIDELITY_TOL and sign_ok
        note = f"state {spec.label()}"
        if not sign_ok:
            note += f"; sign mismatch: expected {expected_sign:+d}"
        rows.append(
            TableRow(
                block="ghz_ground_fidelity",
                key=n,
                computed=fidelity,
                reference=expected_fidelity,
                deviation=deviation,
                tolerance=reference.GHZ_GROUND_FIDELITY_TOL,
                ok=ok,
                note=note,
            )
        )
    return rows


def tables_report() -> TablesReport:
    """Reproduce every reference table, side by side with deviations."""
    rows = _concurrence_rows() + _threshold_rows() + _ghz_rows()
    return TablesReport(rows=rows, ok=all(row.ok for row in rows))


def _closed_form_checks() -> list[VerifyCheck]:
    worst_z = 0.0
    worst_c = 0.0
    for n in (2, 3, 4):
        spectrum = full_spectrum(n)
        for t_raw in np.geomspace(0.05, 50.0, 50):
            t = float(t_raw)
            z_analytic = thermodynamics.analytic_partition_function(n, t)
            z_numeric = float(np.exp(thermodynamics.log_partition_function(spectrum, t)))
            worst_z = max(worst_z, abs(z_numeric - z_analytic) / z_analytic)
            worst_c = max(
                worst_c,
                abs(
                    thermodynamics.concurrence(spectrum, t)
                    - thermodynamics.analytic_concurrence(n, t)
                ),
            )
    return [
        VerifyCheck(
            name="partition_function_closed_form",
            tolerance=1e-12,
            worst=worst_z,
            ok=worst_z <= 1e-12,
        ),
        VerifyCheck(
            name="concurrence_closed_form",
            tolerance=1e-12,
            worst=worst_c,
            ok=worst_c <= 1e-12,
        ),
    ]


def _four_site_checks() -> list[VerifyCheck]:
    report = four_qubit_analytic.verify_against_numeric()
    basis_worst = max(
        report.max_residual,
        report.orthonormality_defect,
        report.completeness_defect,
    )
    span_worst = max(check.span_defect for check in report.checks)
    return [
        VerifyCheck(
            name="four_site_eigensystem",
            tolerance=1e-10,
            worst=basis_worst,
            ok=basis_worst <= 1e-10,
        ),
        VerifyCheck(
            name="four_site_cluster_span",
            tolerance=1e-9,
            worst=span_worst,
            ok=span_worst <= 1e-9,
        ),
    ]


def _thermal_fidelity_check() -> VerifyCheck:
    ghz = entanglement.neel_ghz(4, 1)
    worst = 0.0
    for t_raw in np.geomspace(0.05, 20.0, 20):
        t = float(t_raw)
        worst = max(
            worst,
            abs(
                entanglement.thermal_ghz_fidelity(4, ghz, t)
                - four_qubit_analytic.analytic_thermal_fidelity(t)
            ),
        )
    return VerifyCheck(
        name="thermal_fidelity_closed_form", tolerance=1e-10, worst=worst, ok=worst <= 1e-10
    )


def _wootters_check() -> VerifyCheck:
    worst = 0.0
    for n in (2, 4, 5, 6, 7, 8):
        spectrum = full_spectrum(n)
        for t_raw in np.geomspace(0.1, 5.0, 10):
            t = float(t_raw)
            worst = max(
                worst,
                abs(
                    entanglement.wootters_concurrence_oracle(n, t)
                    - thermodynamics.concurrence(spectrum, t)
                ),
            )
    return VerifyCheck(
        name="wootters_concurrence_oracle", tolerance=1e-8, worst=worst, ok=worst <= 1e-8
    )


def verification_report() -> VerifyReport:
    """Run every oracle-equivalence suite and report worst deviations."""
    checks = (
        _closed_form_checks()
        + _four_site_checks()
        + [_thermal_fidelity_check(), _wootters_check()]
    )
    return VerifyReport(checks=checks, ok=all(check.ok for check in checks))
