"""Bitmask basis states for a ring of spin-1/2 sites, grouped by magnetization.

A basis ket is an integer: bit i - 1 holds the spin of site i (1 = up), so
site 1 is the least significant bit. ``BasisState.ket()`` prints site 1
leftmost, e.g. ``BasisState(0b0001, 4).ket() == "|1000>"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb


@dataclass(frozen=True)
class BasisState:
    """One computational-basis ket of an ``n``-site ring, packed into an int."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one site, got n={self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits={self.bits} out of range for n={self.n} sites")

    @property
    def n_up(self) -> int:
        return self.bits.bit_count()

    def site(self, i: int) -> int:
        """Spin of site ``i`` (1-based): 1 for up, 0 for down."""
        if not 1 <= i <= self.n:
            raise ValueError(f"site index {i} outside 1..{self.n}")
        return (self.bits >> (i - 1)) & 1

    def ket(self) -> str:
        """Render as ``|m1 m2 ... mn>`` with site 1 leftmost."""
        body = "".join(str((self.bits >> i) & 1) for i in range(self.n))
        return f"|{body}>"


def cyclic_shift(state: BasisState) -> BasisState:
    """Move the spin of site i to site i + 1; site n wraps around to site 1.

    Applying this n times is the identity.
    """
    n, bits = state.n, state.bits
    shifted = ((bits << 1) | (bits >> (n - 1))) & ((1 << n) - 1)
    return BasisState(shifted, n)


def global_flip(state: BasisState) -> BasisState:
    """Flip every spin; an involution."""
    return BasisState(state.bits ^ ((1 << state.n) - 1), state.n)


@dataclass(frozen=True)
class Sector:
    """All basis states with fixed (n, n_up), sorted by ascending bit pattern.

    Fixed n_up fixes the collective S_z; the Hamiltonian never mixes sectors.
    """

    n: int
    n_up: int
    states: tuple[BasisState, ...]

    @property
    def dim(self) -> int:
        return len(self.states)

    @cached_property
    def _positions(self) -> dict[int, int]:
        return {s.bits: i for i, s in enumerate(self.states)}

    def index_of(self, state: BasisState) -> int:
        """Position of ``state`` in ``states``; KeyError if it is not here."""
        pos = self._positions.get(state.bits)
        if pos is None or state.n != self.n:
            raise KeyError(
                f"{state.ket()} is not in sector (n={self.n}, n_up={self.n_up})"
            )
        return pos


def enumerate_sector(n: int, n_up: int) -> Sector:
    """Every n-site basis state with exactly ``n_up`` up spins, ascending.

    Successive patterns come from Gosper's hack (next larger integer with the
    same popcount), which emits them in increasing order.
    """
    if n < 2:
        raise ValueError(f"need at least two sites, got n={n}")
    if not 0 <= n_up <= n:
        raise ValueError(f"n_up={n_up} outside 0..{n}")
    states = []
    s = (1 << n_up) - 1
    top = 1 << n
    while s < top:
        states.append(BasisState(s, n))
        if s == 0:
            break
        low = s & -s
        ripple = s + low
        s = ripple | (((s ^ ripple) >> 2) // low)
    assert len(states) == comb(n, n_up)
    return Sector(n=n, n_up=n_up, states=tuple(states))
