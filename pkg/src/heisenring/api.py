"""HTTP front end.

Thin wrapper over the service layer: every endpoint delegates to a function
in `service` and returns its schema object unchanged. Run with

    uvicorn heisenring.api:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query

from . import service
from .schemas import (
    FidelityCurve,
    GhzResponse,
    SpectrumResponse,
    TablesReport,
    ThermalSeries,
    ThresholdResponse,
    VerifyReport,
)

app = FastAPI(
    title="heisenring",
    description="Thermal entanglement of the isotropic antiferromagnetic "
    "Heisenberg ring: spectra, concurrence, threshold temperatures, and "
    "GHZ fidelities.",
    version="0.1.0",
)


def _guard(fn, *args, **kwargs):
    """Map domain validation errors to HTTP 422."""
    try:
        return fn(*args, **kwargs)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.get("/spectrum/{n}", response_model=SpectrumResponse)
def spectrum(n: int) -> SpectrumResponse:
    return _guard(service.spectrum_report, n)


@app.get("/thermal/{n}", response_model=ThermalSeries)
def thermal(
    n: int,
    t_min: float = Query(default=0.02, gt=0.0),
    t_max: float = Query(default=5.0),
    steps: int = Query(default=100, ge=2, le=100_000),
) -> ThermalSeries:
    return _guard(service.thermal_series, n, t_min, t_max, steps)


@app.get("/threshold/{n}", response_model=ThresholdResponse)
def threshold(n: int) -> ThresholdResponse:
    return _guard(service.threshold_report, n)


@app.get("/ghz/{n}", response_model=GhzResponse)
def ghz(n: int, exhaustive: bool = Query(default=False)) -> GhzResponse:
    return _guard(service.ghz_report, n, exhaustive)


@app.get("/fig1", response_model=FidelityCurve)
def fig1(
    t_min: float = Query(default=service.FIG_T_MIN, gt=0.0),
    t_max: float = Query(default=service.FIG_T_MAX),
    steps: int = Query(default=service.FIG_STEPS, ge=2, le=100_000),
) -> FidelityCurve:
    return _guard(service.fidelity_curve, t_min, t_max, steps)


@app.get("/tables", response_model=TablesReport)
def tables() -> TablesReport:
    return service.tables_report()


@app.get("/verify", response_model=VerifyReport)
def verify() -> VerifyReport:
    return service.verification_report()
