"""Matrix representations of the open Kitaev chain.

Two Majorana operators per site split the quadratic Hamiltonian into

    H = i * GammaA . M . GammaB

with a real L x L coupling matrix ``M``.  Its singular values are the
quasiparticle energies.  ``M`` is built either in position space
(tridiagonal) or in the hard-wall momentum basis of :mod:`kitaev_dst.dst`,
where it is a diagonal band ``E_zeta`` plus a skew pairing block that only
couples modes of opposite parity.

The 2L x 2L fermionic BdG matrix is kept as an independent oracle for the
spectrum, and the periodic-chain dispersion is provided for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .model import ChainParams

__all__ = [
    "CouplingMatrix",
    "BdgRealSpace",
    "PbcDispersion",
    "momentum_grid",
    "free_band",
    "pairing_kernel",
    "momentum_coupling",
    "position_coupling",
    "bdg_realspace",
    "pbc_dispersion",
    "pbc_gap_profile",
    "count_wrinkles",
]

Representation = Literal["position", "momentum"]


@dataclass(frozen=True)
class CouplingMatrix:
    """Real coupling matrix of ``H = i GammaA . M . GammaB``.

    Rows contract with species A, columns with species B.
    """

    entries: np.ndarray
    representation: Representation
    params: ChainParams

    def __post_init__(self):
        if self.representation not in ("position", "momentum"):
            raise ValueError(f"unknown representation {self.representation!r}")
        L = self.params.L
        if self.entries.shape != (L, L):
            raise ValueError(f"entries must be {L}x{L}, got {self.entries.shape}")
        self.entries.setflags(write=False)

    @property
    def L(self) -> int:
        return self.params.L

    def diagonal_part(self) -> np.ndarray:
        return np.diag(np.diag(self.entries))

    def skew_part(self) -> np.ndarray:
        return self.entries - self.diagonal_part()


@dataclass(frozen=True)
class BdgRealSpace:
    """Single-particle BdG matrix in the (particles 1..L, holes 1..L) basis."""

    entries: np.ndarray
    params: ChainParams

    @property
    def L(self) -> int:
        return self.params.L

    def eigenvalues(self) -> np.ndarray:
        """All 2L eigenvalues, ascending."""
        return np.linalg.eigvalsh(self.entries)

    def quasiparticle_energies(self) -> np.ndarray:
        """Upper half of the spectrum (the non-negative branch), descending."""
        ev = self.eigenvalues()
        return ev[::-1][: self.L].copy()


@dataclass(frozen=True)
class PbcDispersion:
    k: float
    eps_k: float
    delta_k_abs: float
    lambda_plus: float
    lambda_minus: float


def _mode_trig(L: int) -> tuple[np.ndarray, np.ndarray]:
    angle = np.pi * np.arange(1, L + 1) / (L + 1)
    return np.sin(angle), np.cos(angle)


def free_band(c: ChainParams) -> np.ndarray:
    """``E_zeta = -mu - 2 t cos(pi zeta / (L+1))`` for zeta = 1..L."""
    _, C = _mode_trig(c.L)
    return -c.mu - 2.0 * c.t * C


def pairing_kernel(L: int) -> np.ndarray:
    """The kernel ``F[z, z']``; exactly zero when ``z + z'`` is even.

    ``F = 2/(L+1) * S_z S_z' / (C_z - C_z')`` otherwise.  Entries of equal
    parity (including the diagonal) are never divided.
    """
    S, C = _mode_trig(L)
    idx = np.arange(1, L + 1)
    odd = (idx[:, None] + idx[None, :]) % 2 == 1
    F = np.zeros((L, L))
    rows, cols = np.nonzero(np.triu(odd))
    F[rows, cols] = 2.0 / (L + 1) * S[rows] * S[cols] / (C[rows] - C[cols])
    return F - F.T  # mirrored so the kernel is exactly skew


def momentum_coupling(c: ChainParams, pairing_sign: int = +1) -> CouplingMatrix:
    """Coupling matrix in the hard-wall momentum basis.

    ``M = diag(E) + pairing_sign * 2 * delta * F``.

    With the default ``pairing_sign=+1`` the result equals
    ``conjugate(build_dst(L), position_coupling(c).entries)`` to rounding.
    ``pairing_sign=-1`` gives the transposed matrix, which has the same
    singular values and eigenvalues and swaps the left/right null vectors.
    """
    if pairing_sign not in (+1, -1):
        raise ValueError("pairing_sign must be +1 or -1")
    M = np.diag(free_band(c))
    if c.delta != 0.0:
        M = M + pairing_sign * 2.0 * c.delta * pairing_kernel(c.L)
    return CouplingMatrix(M, "momentum", c)


def position_coupling(c: ChainParams) -> CouplingMatrix:
    """Tridiagonal position-space coupling matrix.

    Diagonal ``-mu``, ``M[j, j+1] = -(t + delta)``, ``M[j+1, j] = -(t - delta)``.
    """
    L = c.L
    M = -c.mu * np.eye(L)
    j = np.arange(L - 1)
    M[j, j + 1] = -(c.t + c.delta)
    M[j + 1, j] = -(c.t - c.delta)
    return CouplingMatrix(M, "position", c)


def bdg_realspace(c: ChainParams) -> BdgRealSpace:
    """2L x 2L BdG matrix of the open chain.

    Hopping block ``h`` (``-t`` on bonds, ``-mu`` on site) and antisymmetric
    pairing block ``D`` with ``D[l, l+1] = delta``; the matrix is
    ``[[h, D], [D.T, -h]]``.
    """
    L = c.L
    h = -c.mu * np.eye(L)
    D = np.zeros((L, L))
    j = np.arange(L - 1)
    h[j, j + 1] = h[j + 1, j] = -c.t
    D[j, j + 1] = c.delta
    D[j + 1, j] = -c.delta
    H = np.block([[h, D], [D.T, -h]])
    H.setflags(write=False)
    return BdgRealSpace(H, c)


def pbc_dispersion(c: ChainParams, k: float) -> PbcDispersion:
    """Periodic-chain BdG eigenvalues at momentum ``k`` in (-pi, pi]."""
    if not (-np.pi < k <= np.pi):
        raise ValueError(f"k must lie in (-pi, pi], got {k!r}")
    eps = -c.mu - 2.0 * c.t * np.cos(k)
    dk = c.delta * abs(np.sin(k))
    root = float(np.hypot(eps, dk))
    return PbcDispersion(float(k), float(eps), float(dk), -root, root)


def momentum_grid(L: int) -> np.ndarray:
    """Periodic momenta ``2 pi n / L``, n = 0..L-1.  Odd L misses k = pi."""
    return 2.0 * np.pi * np.arange(L) / L


def pbc_gap_profile(c: ChainParams, mu_grid) -> np.ndarray:
    """Minimal periodic-chain gap as a function of ``mu``.

    For each grid chemical potential, ``2 * sqrt(eps_k**2 + |delta_k|**2)``
    is minimised over the L discrete momenta of :func:`momentum_grid`.
    ``c.mu`` is ignored.

    Returns
    -------
    ndarray of shape (n, 2)
        Columns ``mu`` and ``gap``.
    """
    mu = np.asarray(mu_grid, dtype=float).ravel()
    if mu.size == 0:
        raise ValueError("mu grid is empty")
    k = momentum_grid(c.L)
    eps = -mu[:, None] - 2.0 * c.t * np.cos(k)[None, :]
    dk = c.delta * np.abs(np.sin(k))[None, :]
    gap = 2.0 * np.hypot(eps, dk).min(axis=1)
    return np.column_stack([mu, gap])


def count_wrinkles(values) -> int:
    """Number of interior local minima of a sampled profile.

    A plateau of equal values counts once.
    """
    y = np.asarray(values, dtype=float)
    count = 0
    i = 1
    n = y.size
    while i < n - 1:
        if y[i] < y[i - 1]:
            j = i
            while j + 1 < n and y[j + 1] == y[i]:
                j += 1
            if j + 1 < n and y[j + 1] > y[i]:
                count += 1
            i = j + 1
        else:
            i += 1
    return count

