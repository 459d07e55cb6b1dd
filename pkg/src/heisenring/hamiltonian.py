"""Exchange Hamiltonian of the closed spin-1/2 ring, one block per
magnetization sector.

H = J * sum over ring bonds (i, i+1 mod n) of the pair-swap operator
(1 + sigma_i . sigma_j) / 2. In the bit basis a swap acts as identity on an
aligned pair (adding J to the diagonal) and as a transposition on an
anti-aligned pair (a unit off-diagonal element to the pair-exchanged state).
For n = 2 the bond list is [(0, 1), (1, 0)]: the single physical pair is
summed twice, which doubles the two-site spectrum to eigenvalues -2 and +2.
J is fixed to 1; temperatures are measured in units of J.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .eigensolver import EigenDecomposition, eigh
from .spin_basis import BasisState, Sector, enumerate_sector

J_COUPLING = 1.0
MAX_SITES = 14


def ring_bonds(n: int) -> list[tuple[int, int]]:
    """Bit-index pairs coupled around the ring, one bond per site."""
    return [(i, (i + 1) % n) for i in range(n)]


@dataclass(frozen=True)
class SectorMatrix:
    """Dense symmetric Hamiltonian block on one magnetization sector."""

    sector: Sector
    entries: np.ndarray
    j_coupling: float = J_COUPLING


def build_sector_matrix(sector: Sector) -> SectorMatrix:
    """Assemble the Hamiltonian block for ``sector``.

    The matrix is exactly symmetric by construction: every bond contributes
    the same unit element at (a, b) and at (b, a) because the bond list and
    the exchanged pair are the same seen from either state.
    """
    n = sector.n
    bonds = ring_bonds(n)
    h = np.zeros((sector.dim, sector.dim))
    for a, state in enumerate(sector.states):
        s = state.bits
        aligned = 0
        for i, j in bonds:
            if ((s >> i) ^ (s >> j)) & 1:
                b = sector.index_of(BasisState(s ^ ((1 << i) | (1 << j)), n))
                h[a, b] += J_COUPLING
            else:
                aligned += 1
        h[a, a] = J_COUPLING * aligned
    h.setflags(write=False)
    return SectorMatrix(sector=sector, entries=h)


@lru_cache(maxsize=None)
def sector_eigensystem(n: int, n_up: int, want_vectors: bool = False) -> EigenDecomposition:
    """Eigendecomposition of one (n, n_up) block; cached, arrays read-only."""
    sector = enumerate_sector(n, n_up)
    return eigh(build_sector_matrix(sector).entries, want_vectors=want_vectors)


def clear_caches() -> None:
    """Drop memoized eigendecompositions (used by timing-sensitive tests)."""
    sector_eigensystem.cache_clear()


@dataclass(frozen=True)
class SectorSpectrum:
    """Eigenvalues (and optional eigenvectors) of one sector, ascending."""

    n_up: int
    values: np.ndarray
    vectors: np.ndarray | None


@dataclass(frozen=True)
class FullSpectrum:
    """Merged spectrum of the whole 2^n space, plus the per-sector blocks."""

    n: int
    values: np.ndarray
    by_sector: tuple[SectorSpectrum, ...]

    @property
    def ground_energy(self) -> float:
        return float(self.values[0])

    def degeneracies(self, rel_tol: float = 1e-8) -> list[tuple[float, int]]:
        """Cluster the sorted spectrum into (representative, multiplicity).

        A value joins the current cluster when it is within ``rel_tol``
        (relative to max(1, magnitude)) of the cluster's first member.
        """
        groups: list[tuple[float, int]] = []
        for v in self.values:
            x = float(v)
            if groups and abs(x - groups[-1][0]) <= rel_tol * max(
                1.0, abs(x), abs(groups[-1][0])
            ):
                groups[-1] = (groups[-1][0], groups[-1][1] + 1)
            else:
                groups.append((x, 1))
        return groups


def full_spectrum(n: int, with_vectors: bool = False) -> FullSpectrum:
    """All 2^n eigenvalues of the n-site ring, sorted ascending.

    Per-sector eigenvalues (and eigenvectors when ``with_vectors``) remain
    available in ``by_sector``, tagged by n_up.
    """
    if not 2 <= n <= MAX_SITES:
        raise ValueError(f"n={n} outside supported range 2..{MAX_SITES}")
    blocks = []
    for n_up in range(n + 1):
        dec = sector_eigensystem(n, n_up, want_vectors=with_vectors)
        blocks.append(SectorSpectrum(n_up=n_up, values=dec.values, vectors=dec.vectors))
    values = np.sort(np.concatenate([b.values for b in blocks]), kind="stable")
    values.setflags(write=False)
    return FullSpectrum(n=n, values=values, by_sector=tuple(blocks))
