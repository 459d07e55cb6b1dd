"""Closed-form eigensystem of the four-site ring and the closed-form thermal
GHZ fidelity, kept as independent claims that are verified against the
numerical pipeline rather than trusted.

States live on 16 complex amplitudes in the bit convention of spin_basis
(site 1 is bit 0). The one-magnon states carry plane-wave phases
t_k = exp(i pi k / 2); their spin-flip images share the same t_k ordering.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .hamiltonian import full_spectrum, ring_bonds
from .spin_basis import enumerate_sector

N_SITES = 4
_DIM = 16

RESIDUAL_TOL = 1e-10
BASIS_TOL = 1e-10
SPAN_TOL = 1e-9


@dataclass(frozen=True)
class AnalyticEigenpair:
    """One closed-form eigenstate: label 0..15, energy, 16 amplitudes."""

    label: int
    energy: float
    amplitudes: np.ndarray


def _pair(label: int, energy: float, amps: dict[int, complex]) -> AnalyticEigenpair:
    vec = np.zeros(_DIM, dtype=np.complex128)
    for bits, amplitude in amps.items():
        vec[bits] = amplitude
    vec.setflags(write=False)
    return AnalyticEigenpair(label=label, energy=energy, amplitudes=vec)


def analytic_eigensystem() -> tuple[AnalyticEigenpair, ...]:
    """All sixteen eigenstates of the four-site ring in closed form.

    Energy multiset: -2 (x1), 0 (x3), 2 (x7), 4 (x5).
    """
    flip_mask = (1 << N_SITES) - 1
    pairs = [
        _pair(0, 4.0, {0b0000: 1.0}),
        _pair(15, 4.0, {0b1111: 1.0}),
    ]
    # One-magnon plane waves: amplitude t_k^{-m} / 2 on the ket with site m
    # up, energy 2 + t_k + t_k^{-1} = 2 + 2 cos(pi k / 2); labels k + 4 are
    # the global spin flips with identical phases.
    for k in (1, 2, 3, 4):
        t_k = cmath.exp(1j * math.pi * k / 2.0)
        energy = 2.0 + 2.0 * math.cos(math.pi * k / 2.0)
        amps = {1 << (m - 1): (t_k ** (-m)) / 2.0 for m in (1, 2, 3, 4)}
        pairs.append(_pair(k, energy, amps))
        pairs.append(
            _pair(k + 4, energy, {bits ^ flip_mask: a for bits, a in amps.items()})
        )
    # Half-filled sector: the ground state, two singlet-like differences,
    # their even partner, and the symmetric combination.
    c9 = 1.0 / (2.0 * math.sqrt(3.0))
    pairs.extend(
        [
            _pair(
                9,
                -2.0,
                {
                    0b0011: c9,
                    0b0110: c9,
                    0b1100: c9,
                    0b1001: c9,
                    0b0101: -2.0 * c9,
                    0b1010: -2.0 * c9,
                },
            ),
            _pair(10, 0.0, {0b0101: 1.0 / math.sqrt(2.0), 0b1010: -1.0 / math.sqrt(2.0)}),
            _pair(11, 2.0, {0b0011: 1.0 / math.sqrt(2.0), 0b1100: -1.0 / math.sqrt(2.0)}),
            _pair(12, 2.0, {0b1001: 1.0 / math.sqrt(2.0), 0b0110: -1.0 / math.sqrt(2.0)}),
            _pair(13, 2.0, {0b0011: 0.5, 0b1100: 0.5, 0b1001: -0.5, 0b0110: -0.5}),
            _pair(
                14,
                4.0,
                {bits: 1.0 / math.sqrt(6.0) for bits in (0b0011, 0b0110, 0b1100, 0b1001, 0b0101, 0b1010)},
            ),
        ]
    )
    pairs.sort(key=lambda p: p.label)
    return tuple(pairs)


def _full_matrix() -> np.ndarray:
    """The 16x16 ring Hamiltonian assembled over the unsplit basis."""
    h = np.zeros((_DIM, _DIM))
    for s in range(_DIM):
        aligned = 0
        for i, j in ring_bonds(N_SITES):
            if ((s >> i) ^ (s >> j)) & 1:
                h[s, s ^ ((1 << i) | (1 << j))] += 1.0
            else:
                aligned += 1
        h[s, s] = float(aligned)
    return h


@dataclass(frozen=True)
class EigenpairCheck:
    """Verification record for one closed-form state."""

    label: int
    energy: float
    residual: float
    span_defect: float
    ok: bool


@dataclass(frozen=True)
class FourQubitReport:
    """Cross-validation of the closed-form eigensystem against numerics."""

    checks: tuple[EigenpairCheck, ...]
    max_residual: float
    orthonormality_defect: float
    completeness_defect: float
    ok: bool

    def failing_labels(self) -> tuple[int, ...]:
        return tuple(check.label for check in self.checks if not check.ok)


def verify_against_numeric(
    residual_tol: float = RESIDUAL_TOL,
    basis_tol: float = BASIS_TOL,
    span_tol: float = SPAN_TOL,
) -> FourQubitReport:
    """Check every closed-form state against the numerical pipeline.

    Per state: the residual ||H psi - E psi||. Per degenerate cluster: the
    state must lie in the span of the numeric eigenvectors of that
    eigenvalue (projector defect). Globally: the sixteen states must be
    orthonormal and complete. Failures become report entries, not exceptions.
    """
    pairs = analytic_eigensystem()
    h = _full_matrix()

    spectrum = full_spectrum(N_SITES, with_vectors=True)
    embedded = np.zeros((_DIM, _DIM))
    col = 0
    numeric_values = []
    for block in spectrum.by_sector:
        # sector vectors are in sector-basis rows; scatter rows by bitmask
        sector = enumerate_sector(N_SITES, block.n_up)
        bits = [s.bits for s in sector.states]
        for j in range(len(bits)):
            embedded[bits, col] = block.vectors[:, j]
            numeric_values.append(float(block.values[j]))
            col += 1
    numeric_values = np.array(numeric_values)

    checks = []
    for pair in pairs:
        psi = pair.amplitudes
        residual = float(np.linalg.norm(h @ psi - pair.energy * psi))
        cluster = embedded[:, np.abs(numeric_values - pair.energy) <= 1e-8]
        projected = cluster @ (cluster.T @ psi)
        span_defect = float(np.linalg.norm(psi - projected))
        checks.append(
            EigenpairCheck(
                label=pair.label,
                energy=pair.energy,
                residual=residual,
                span_defect=span_defect,
                ok=residual <= residual_tol and span_defect <= span_tol,
            )
        )

    basis = np.column_stack([pair.amplitudes for pair in pairs])
    gram = basis.conj().T @ basis
    orthonormality = float(np.max(np.abs(gram - np.eye(_DIM))))
    completeness = float(np.max(np.abs(basis @ basis.conj().T - np.eye(_DIM))))
    max_residual = max(check.residual for check in checks)
    ok = (
        all(check.ok for check in checks)
        and orthonormality <= basis_tol
        and completeness <= basis_tol
    )
    return FourQubitReport(
        checks=tuple(checks),
        max_residual=max_residual,
        orthonormality_defect=orthonormality,
        completeness_defect=completeness,
        ok=ok,
    )


def ghz_overlap_weights() -> dict[int, float]:
    """|<GHZ|Psi_label>|^2 for the (|0101>+|1010>)/sqrt(2) state, nonzero only
    for the ground state (2/3) and the symmetric E=4 state (1/3)."""
    ghz = np.zeros(_DIM, dtype=np.complex128)
    ghz[0b0101] = ghz[0b1010] = 1.0 / math.sqrt(2.0)
    weights = {}
    for pair in analytic_eigensystem():
        overlap = abs(np.vdot(ghz, pair.amplitudes)) ** 2
        if overlap > 1e-15:
            weights[pair.label] = float(overlap)
    return weights


def analytic_thermal_fidelity(t: float) -> float:
    """Closed-form thermal GHZ fidelity of the four-site ring.

    Equals (e^{-4b}/3 + 2 e^{2b}/3) / (3 + e^{2b} + 7 e^{-2b} + 5 e^{-4b})
    with b = 1/t, evaluated here with every exponential rescaled by e^{-2b}
    so the t -> 0 limit (2/3) is reached without overflow.
    """
    if not t > 0.0:
        raise ValueError(f"temperature must be positive, got {t}")
    b = 1.0 / t
    num = 2.0 / 3.0 + math.exp(-6.0 * b) / 3.0
    den = 1.0 + 3.0 * math.exp(-2.0 * b) + 7.0 * math.exp(-4.0 * b) + 5.0 * math.exp(-6.0 * b)
    return num / den


__all__ = [
    "AnalyticEigenpair",
    "EigenpairCheck",
    "FourQubitReport",
    "analytic_eigensystem",
    "analytic_thermal_fidelity",
    "ghz_overlap_weights",
    "verify_against_numeric",
]
