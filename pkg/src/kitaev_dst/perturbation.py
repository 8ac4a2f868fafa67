"""Weak-pairing spectrum of the coupling matrix.

Treating the skew pairing block ``K = 2 delta F`` as a perturbation of the
diagonal band ``E``, the odd orders vanish (``K`` has no diagonal and
``K_ij K_ji = -K_ij**2``), and the leading correction is

    E3_z = E_z + 8 delta**2 / (t (L+1)**2)
               * sum_{z' : z+z' odd} S_z**2 S_z'**2 / (C_z - C_z')**3.

The sum collapses to ``C_z`` for every ``L``, so the corrected band is a
free band with renormalised hopping ``t_eff = t - delta**2 / (2 t)``, the
weak-pairing expansion of ``sqrt(t**2 - delta**2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hamiltonian import free_band
from .model import ChainParams

__all__ = [
    "PerturbativeSpectrum",
    "correction_sum",
    "effective_hopping",
    "third_order_spectrum",
    "effective_spectrum",
    "zero_mode_mu_predictions",
]


@dataclass(frozen=True)
class PerturbativeSpectrum:
    """Energies indexed by zeta = 1..L (stored 0-based)."""

    energies: np.ndarray
    t_eff: float
    params: ChainParams


def _require_hopping(c: ChainParams):
    if not (c.t > 0):
        raise ValueError("the weak-pairing expansion divides by t; t must be > 0")


def correction_sum(L: int) -> np.ndarray:
    """``sum_{z' : z+z' odd} S_z**2 S_z'**2 / (C_z - C_z')**3`` for each zeta.

    Equal-parity pairs are dropped before any division.
    """
    angle = np.pi * np.arange(1, L + 1) / (L + 1)
    S2 = np.sin(angle) ** 2
    C = np.cos(angle)
    idx = np.arange(L)
    odd = (idx[:, None] + idx[None, :]) % 2 == 1
    out = np.zeros(L)
    rows, cols = np.nonzero(odd)
    np.add.at(out, rows, S2[rows] * S2[cols] / (C[rows] - C[cols]) ** 3)
    return out


def effective_hopping(t: float, delta: float, coefficient: float = 0.5) -> float:
    """``t - coefficient * delta**2 / t``.

    The default coefficient 1/2 is the one the perturbative sum produces.
    ``coefficient=2`` gives the stronger renormalisation ``t - 2 delta**2 / t``
    for comparison.
    """
    if t == 0:
        raise ValueError("t must be non-zero")
    return t - coefficient * delta * delta / t


def third_order_spectrum(c: ChainParams, correction_sign: int = +1) -> PerturbativeSpectrum:
    """Perturbative band ``E3_zeta`` for ``zeta = 1..L``.

    Parameters
    ----------
    c : ChainParams
        Requires ``t > 0``.
    correction_sign : {+1, -1}
        Sign in front of the correction.  ``+1`` is what second-order
        perturbation theory gives for the eigenvalues of the coupling
        matrix (the band narrows); ``-1`` widens it and is kept only to make
        the comparison reproducible.
    """
    _require_hopping(c)
    if correction_sign not in (+1, -1):
        raise ValueError("correction_sign must be +1 or -1")
    prefactor = 8.0 * c.delta**2 / (c.t * (c.L + 1) ** 2)
    energies = free_band(c) + correction_sign * prefactor * correction_sum(c.L)
    return PerturbativeSpectrum(energies, effective_hopping(c.t, c.delta), c)


def effective_spectrum(c: ChainParams, coefficient: float = 0.5) -> PerturbativeSpectrum:
    """Free band with ``t`` replaced by :func:`effective_hopping`."""
    _require_hopping(c)
    t_eff = effective_hopping(c.t, c.delta, coefficient)
    zeta = np.arange(1, c.L + 1)
    energies = -c.mu - 2.0 * t_eff * np.cos(np.pi * zeta / (c.L + 1))
    return PerturbativeSpectrum(energies, t_eff, c)


def zero_mode_mu_predictions(L: int, t_eff: float) -> np.ndarray:
    """Chemical potentials where a weak-pairing band level crosses zero.

    ``-2 t_eff cos(pi zeta / (L+1))`` for zeta = 1..L, ascending.  Units
    follow ``t_eff`` (pass ``t_eff / E0`` to get ``mu_tilde``).
    """
    if t_eff == 0:
        raise ValueError("t_eff must be non-zero")
    if int(L) != L or L < 1:
        raise ValueError(f"L must be a positive integer, got {L!r}")
    zeta = np.arange(1, int(L) + 1)
    mu = -2.0 * t_eff * np.cos(np.pi * zeta / (L + 1))
    if L % 2 == 1:
        mu[(L + 1) // 2 - 1] = 0.0  # cos(pi/2) is not exactly zero in floating point
    return np.sort(mu)
