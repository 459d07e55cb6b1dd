"""Request/response models shared by the HTTP API and the CLI.

Every payload the service layer produces is one of these models, so both
front ends serialize identical structures.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class SpectrumLevel(BaseModel):
    energy: float
    multiplicity: int


class SpectrumResponse(BaseModel):
    n: int
    dimension: int
    ground_energy: float
    levels: list[SpectrumLevel]


class ThermalPoint(BaseModel):
    temperature: float
    log_z: float
    internal_energy: float
    concurrence: float


class ThermalSeries(BaseModel):
    n: int
    points: list[ThermalPoint]


class ThresholdResponse(BaseModel):
    n: int
    t_threshold: float
    bracket_width: float


class GhzResponse(BaseModel):
    n: int
    ket_a: str
    ket_b: str
    sign: int
    fidelity: float
    neel_fidelity: float
    exhaustive: bool = False
    beats_neel: bool = False
    certified_below: float | None = Field(
        default=None,
        description="Temperature below which thermal fidelity exceeds 1/2; "
        "null when there is no certified region.",
    )


class FidelityPoint(BaseModel):
    temperature: float
    fidelity: float
    fidelity_analytic: float
    concurrence: float
    concurrence_analytic: float


class FidelityCurve(BaseModel):
    n: int
    fidelity_threshold: float | None
    points: list[FidelityPoint]


class TableRow(BaseModel):
    block: str
    key: int
    computed: float
    reference: float
    deviation: float
    tolerance: float
    ok: bool
    note: str = ""


class TablesReport(BaseModel):
    rows: list[TableRow]
    ok: bool


class VerifyCheck(BaseModel):
    name: str
    tolerance: float
    worst: float
    ok: bool


class VerifyReport(BaseModel):
    checks: list[VerifyCheck]
    ok: bool
