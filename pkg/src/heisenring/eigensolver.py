"""Dense real-symmetric eigensolver: Householder reduction to tridiagonal
form followed by implicit-shift QL iteration.

Deterministic by construction: fixed sweep order, stable final sort, and a
fixed sign convention (the largest-magnitude component of every eigenvector
is made positive). numpy is used for array storage and the vectorized
Householder updates; the QL recurrences run on Python floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SYMMETRY_TOL = 1e-12
MAX_SWEEPS = 64

_EPS = float(np.finfo(np.float64).eps)


class ConvergenceError(RuntimeError):
    """A subdiagonal element failed to vanish within the sweep cap."""


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in ascending order with matching eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray | None

    @property
    def dim(self) -> int:
        return int(self.values.shape[0])


def eigh(matrix: np.ndarray, want_vectors: bool = True) -> EigenDecomposition:
    """Diagonalize a real symmetric matrix.

    Parameters
    ----------
    matrix:
        Square array, symmetric to within ``SYMMETRY_TOL`` absolute.
    want_vectors:
        When False, only eigenvalues are computed (substantially faster).

    Returns
    -------
    EigenDecomposition with ``values`` ascending and, when requested,
    orthonormal ``vectors`` columns such that ``A @ v[:, i] == values[i] * v[:, i]``.

    Raises
    ------
    ValueError for non-square or non-symmetric input; ConvergenceError if a
    subdiagonal element survives MAX_SWEEPS implicit-shift sweeps.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    dim = a.shape[0]
    if dim == 0:
        raise ValueError("empty matrix")
    skew = float(np.max(np.abs(a - a.T))) if dim > 1 else 0.0
    if skew > SYMMETRY_TOL:
        raise ValueError(f"matrix is not symmetric: max |a - a.T| = {skew:.3e}")
    a = 0.5 * (a + a.T)  # exact symmetry for the reduction below

    # Rescale extreme inputs into a safe range; near the denormal floor the
    # QL rotations would be built from quotients with almost no mantissa
    # bits and lose orthogonality. A power of two keeps the scaling exact.
    amax = float(np.abs(a).max())
    scale_exp = 0
    if 0.0 < amax and not 1e-150 < amax < 1e150:
        scale_exp = -math.frexp(amax)[1]
        a = np.ldexp(a, scale_exp)

    d, e, q = _tridiagonalize(a, want_q=want_vectors)
    values, vectors = _ql_implicit_shift(d, e, q)
    if scale_exp:
        values = np.ldexp(values, -scale_exp)

    order = np.argsort(values, kind="stable")
    values = np.ascontiguousarray(values[order])
    values.setflags(write=False)
    if vectors is not None:
        vectors = np.ascontiguousarray(vectors[:, order])
        _fix_signs(vectors)
        vectors.setflags(write=False)
    return EigenDecomposition(values=values, vectors=vectors)


def _fix_signs(vectors: np.ndarray) -> None:
    """Flip columns so the largest-magnitude component of each is positive."""
    lead = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[lead, np.arange(vectors.shape[1])])
    signs[signs == 0.0] = 1.0
    vectors *= signs


def _tridiagonalize(a: np.ndarray, want_q: bool):
    """Householder similarity reduction of symmetric ``a`` (overwritten).

    Returns (d, e, q): diagonal, subdiagonal (e[k] = T[k+1, k], e[-1] scratch),
    and the accumulated orthogonal transform (None unless ``want_q``).
    """
    n = a.shape[0]
    e = np.zeros(n)
    reflectors: list[tuple[np.ndarray, float] | None] = []
    for k in range(n - 2):
        x = a[k + 1 :, k]
        scale = float(np.sum(np.abs(x)))
        if scale == 0.0:
            reflectors.append(None)
            continue
        u = x / scale
        sigma = math.sqrt(float(u @ u))
        if u[0] < 0.0:
            sigma = -sigma
        u[0] += sigma
        h = sigma * u[0]  # equals (u . u) / 2
        e[k] = -sigma * scale
        block = a[k + 1 :, k + 1 :]
        p = block @ u / h
        p -= (float(u @ p) / (2.0 * h)) * u
        block -= np.outer(p, u)
        block -= np.outer(u, p)
        reflectors.append((u, h))
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    d = np.diagonal(a).copy()

    q = None
    if want_q:
        q = np.eye(n)
        # Apply reflectors to the identity from the innermost outward; at
        # step k only the trailing block of q differs from the identity.
        for k in range(n - 3, -1, -1):
            ref = reflectors[k]
            if ref is None:
                continue
            u, h = ref
            sub = q[k + 1 :, k + 1 :]
            w = u @ sub
            sub -= np.outer(u, w / h)
    return d, e, q


def _ql_implicit_shift(d_in: np.ndarray, e_in: np.ndarray, q: np.ndarray | None):
    """QL iteration with implicit Wilkinson shifts on a tridiagonal matrix.

    Rotation accumulation into ``q`` (when given) turns the tridiagonal
    eigenvectors into eigenvectors of the original matrix.
    """
    n = len(d_in)
    d = [float(x) for x in d_in]
    e = [float(x) for x in e_in]
    v = q
    for l in range(n):
        sweeps = 0
        while True:
            for m in range(l, n - 1):
                if abs(e[m]) <= _EPS * (abs(d[m]) + abs(d[m + 1])):
                    break
            else:
                m = n - 1
            if m == l:
                break
            if sweeps == MAX_SWEEPS:
                raise ConvergenceError(
                    f"subdiagonal |e|={abs(e[l]):.3e} at index {l} still finite "
                    f"after {MAX_SWEEPS} implicit-shift sweeps"
                )
            sweeps += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            completed = True
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    # Deflate and restart the sweep for this eigenvalue.
                    d[i + 1] -= p
                    e[m] = 0.0
                    completed = False
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if v is not None:
                    nxt = v[:, i + 1].copy()  # copy: the slice below reuses it
                    v[:, i + 1] = s * v[:, i] + c * nxt
                    v[:, i] = c * v[:, i] - s * nxt
            if completed:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return np.array(d), v
