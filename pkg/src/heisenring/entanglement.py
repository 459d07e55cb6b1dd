"""Ground-space extraction, GHZ fidelities (pure, degenerate-mixed, thermal),
and an independent reduced-density-matrix concurrence oracle.

A GHZ state here is (|a> + sign*|b>)/sqrt(2) where b is the bitwise
complement of a. Full-space vectors are indexed directly by bitmask, so a
basis amplitude lives at vector[bits].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigensolver import eigh
from .hamiltonian import MAX_SITES, full_spectrum, sector_eigensystem
from .spin_basis import BasisState, enumerate_sector, global_flip

GROUND_TOL = 1e-8
FIDELITY_BRACKET_WIDTH = 1e-8
WOOTTERS_MAX_SITES = 8

_SQRT2 = math.sqrt(2.0)

# sigma_y (x) sigma_y in the two-qubit bit basis; real, so the spin flip of a
# real rho is just this matrix on both sides.
_SIGMA_YY = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ]
)


@dataclass(frozen=True)
class GroundSpace:
    """Orthonormal basis of the lowest-energy eigenspace, in the full space."""

    n: int
    energy: float
    vectors: np.ndarray
    sectors: tuple[int, ...]

    @property
    def degeneracy(self) -> int:
        return int(self.vectors.shape[1])


def ground_space(n: int, tol: float = GROUND_TOL) -> GroundSpace:
    """Collect every eigenvector within ``tol`` of the global minimum energy.

    The degeneracy is determined numerically, not assumed. Eigenvalue scans
    run first so eigenvectors are only computed for sectors that contain
    ground states.
    """
    values_by_sector = [sector_eigensystem(n, k).values for k in range(n + 1)]
    energy = min(float(v[0]) for v in values_by_sector)
    columns = []
    column_sectors = []
    for k in range(n + 1):
        if float(values_by_sector[k][0]) > energy + tol:
            continue
        dec = sector_eigensystem(n, k, want_vectors=True)
        sector = enumerate_sector(n, k)
        bits = np.fromiter((s.bits for s in sector.states), dtype=np.intp, count=sector.dim)
        for j in range(dec.dim):
            if float(dec.values[j]) > energy + tol:
                break  # ascending order: nothing further is a ground state
            full = np.zeros(1 << n)
            full[bits] = dec.vectors[:, j]
            columns.append(full)
            column_sectors.append(k)
    vectors = np.column_stack(columns)
    vectors.setflags(write=False)
    return GroundSpace(n=n, energy=energy, vectors=vectors, sectors=tuple(column_sectors))


@dataclass(frozen=True)
class GhzSpec:
    """(|a> + sign*|b>)/sqrt(2) with b the bitwise complement of a."""

    state_a: BasisState
    state_b: BasisState
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.state_b != global_flip(self.state_a):
            raise ValueError(
                f"{self.state_b.ket()} is not the bitwise complement of {self.state_a.ket()}"
            )

    @property
    def n(self) -> int:
        return self.state_a.n

    def label(self) -> str:
        middle = "+" if self.sign == 1 else "-"
        return f"({self.state_a.ket()} {middle} {self.state_b.ket()})/sqrt(2)"


def neel_ghz(n: int, sign: int) -> GhzSpec:
    """GHZ spec on the alternating pair, site 1 down: |0101...> and |1010...>."""
    bits_a = sum(1 << i for i in range(1, n, 2))
    state_a = BasisState(bits_a, n)
    return GhzSpec(state_a=state_a, state_b=global_flip(state_a), sign=sign)


def _ground_overlaps(gs: GroundSpace, ghz: GhzSpec) -> np.ndarray:
    """<GHZ|v_i> for each ground basis vector; two amplitudes suffice."""
    amps_a = gs.vectors[ghz.state_a.bits, :]
    amps_b = gs.vectors[ghz.state_b.bits, :]
    return (amps_a + ghz.sign * amps_b) / _SQRT2


def ghz_fidelity_ground(n: int, ghz: GhzSpec) -> float:
    """<GHZ| P/d |GHZ> with P the ground projector and d the degeneracy.

    The uniform mixture over the ground space is the t -> 0 limit of the
    thermal state; for a non-degenerate ground state this is the plain pure
    overlap. Basis-invariant: only the projector enters.
    """
    if ghz.n != n:
        raise ValueError(f"GHZ spec is for n={ghz.n}, not n={n}")
    gs = ground_space(n)
    overlaps = _ground_overlaps(gs, ghz)
    return float(np.sum(overlaps**2) / gs.degeneracy)


def best_neel_ghz(n: int) -> tuple[GhzSpec, float]:
    """The better-signed Néel GHZ state and its ground fidelity.

    Ties keep the + sign.
    """
    best: tuple[GhzSpec, float] | None = None
    for sign in (1, -1):
        ghz = neel_ghz(n, sign)
        fidelity = ghz_fidelity_ground(n, ghz)
        if best is None or fidelity > best[1]:
            best = (ghz, fidelity)
    return best


def exhaustive_ghz_search(n: int) -> tuple[GhzSpec, float]:
    """Best GHZ spec over all 2^(n-1) complementary pairs and both signs.

    Deterministic preference on ties: smaller state_a bitmask, then + sign.
    """
    gs = ground_space(n)
    mask = (1 << n) - 1
    best: tuple[GhzSpec, float] | None = None
    for bits_a in range(1 << (n - 1)):  # top bit clear, so bits_a < complement
        state_a = BasisState(bits_a, n)
        for sign in (1, -1):
            ghz = GhzSpec(state_a=state_a, state_b=BasisState(bits_a ^ mask, n), sign=sign)
            fidelity = float(np.sum(_ground_overlaps(gs, ghz) ** 2) / gs.degeneracy)
            if best is None or fidelity > best[1]:
                best = (ghz, fidelity)
    return best


def thermal_ghz_fidelity(n: int, ghz: GhzSpec, t: float) -> float:
    """F = sum_j w_j |<GHZ|Psi_j>|^2 over Boltzmann weights w_j = e^{-E_j/t}/Z.

    Only the sectors containing state_a or state_b overlap the GHZ state, so
    eigenvectors are fetched for at most two sectors; Z runs over the full
    spectrum.
    """
    if ghz.n != n:
        raise ValueError(f"GHZ spec is for n={ghz.n}, not n={n}")
    if not t > 0.0:
        raise ValueError(f"temperature must be positive, got {t}")
    spectrum = full_spectrum(n)
    e_min = spectrum.ground_energy
    z = float(np.sum(np.exp(-(spectrum.values - e_min) / t)))
    k_a, k_b = ghz.state_a.n_up, ghz.state_b.n_up
    total = 0.0
    for k in sorted({k_a, k_b}):
        dec = sector_eigensystem(n, k, want_vectors=True)
        sector = enumerate_sector(n, k)
        amps = np.zeros(dec.dim)
        if k == k_a:
            amps += dec.vectors[sector.index_of(ghz.state_a), :]
        if k == k_b:
            amps += ghz.sign * dec.vectors[sector.index_of(ghz.state_b), :]
        amps /= _SQRT2
        weights = np.exp(-(dec.values - e_min) / t)
        total += float(weights @ (amps * amps))
    return total / z


def fidelity_threshold(n: int, ghz: GhzSpec) -> float | None:
    """Temperature where the thermal GHZ fidelity crosses 1/2.

    Below the returned temperature, F > 1/2 certifies n-particle
    entanglement. Returns None when there is no certified region, i.e. the
    fidelity never exceeds 1/2 even as t -> 0.
    """
    t_cold = 1e-3
    if thermal_ghz_fidelity(n, ghz, t_cold) <= 0.5:
        return None
    lo, hi = t_cold, 1.0
    while thermal_ghz_fidelity(n, ghz, hi) > 0.5:
        lo = hi
        hi *= 2.0
        if hi > 1e9:  # unreachable: F(inf) = 2^-n < 1/2
            return None
    while hi - lo > FIDELITY_BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        if thermal_ghz_fidelity(n, ghz, mid) > 0.5:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _thermal_density_matrix(n: int, t: float) -> np.ndarray:
    """Dense 2^n thermal state from the per-sector eigenpairs."""
    dim = 1 << n
    spectrum = full_spectrum(n)
    e_min = spectrum.ground_energy
    rho = np.zeros((dim, dim))
    z = 0.0
    for k in range(n + 1):
        dec = sector_eigensystem(n, k, want_vectors=True)
        sector = enumerate_sector(n, k)
        bits = np.fromiter((s.bits for s in sector.states), dtype=np.intp, count=sector.dim)
        weights = np.exp(-(dec.values - e_min) / t)
        z += float(np.sum(weights))
        scaled = dec.vectors * np.sqrt(weights)
        rho[np.ix_(bits, bits)] += scaled @ scaled.T
    return rho / z


def _reduced_pair_density(rho: np.ndarray, n: int, pair: tuple[int, int]) -> np.ndarray:
    """Trace out everything except the two bit positions in ``pair``.

    Direct index contraction over bitmasks: reduced index p = bit_i + 2*bit_j.
    """
    i, j = pair
    rest = [k for k in range(n) if k not in (i, j)]
    count = 1 << len(rest)
    indices = np.empty((4, count), dtype=np.intp)
    for p in range(4):
        base = ((p & 1) << i) | (((p >> 1) & 1) << j)
        for r in range(count):
            s = base
            for pos, k in enumerate(rest):
                s |= ((r >> pos) & 1) << k
            indices[p, r] = s
    reduced = np.empty((4, 4))
    for p in range(4):
        for q in range(4):
            reduced[p, q] = float(np.sum(rho[indices[p], indices[q]]))
    return reduced


def wootters_concurrence_oracle(n: int, t: float, pair: tuple[int, int] = (0, 1)) -> float:
    """Concurrence of one adjacent pair via the spin-flip construction.

    Builds the dense thermal state, reduces it to ``pair`` (bit positions,
    default the first two sites), and evaluates
    max(0, l1 - l2 - l3 - l4) over the decreasingly sorted square roots of
    the eigenvalues of sqrt(rho) * (YY rho YY) * sqrt(rho). Entirely
    independent of the energy-based concurrence formula, as an oracle must be.
    """
    if not t > 0.0:
        raise ValueError(f"temperature must be positive, got {t}")
    if n > WOOTTERS_MAX_SITES:
        raise ValueError(
            f"dense thermal state capped at n <= {WOOTTERS_MAX_SITES}, got n={n}"
        )
    i, j = pair
    if not (0 <= i < n and 0 <= j < n and i != j):
        raise ValueError(f"pair {pair} is not two distinct bit positions below {n}")
    rho = _thermal_density_matrix(n, t)
    reduced = _reduced_pair_density(rho, n, pair)
    dec = eigh(reduced)
    root = dec.vectors @ (np.sqrt(np.clip(dec.values, 0.0, None)) * dec.vectors).T
    flipped = _SIGMA_YY @ reduced @ _SIGMA_YY
    m = root @ flipped @ root
    m = 0.5 * (m + m.T)  # symmetric up to rounding; make it exact for eigh
    lams = np.sqrt(np.clip(eigh(m, want_vectors=False).values, 0.0, None))
    return max(0.0, float(lams[3] - lams[2] - lams[1] - lams[0]))
