"""SVD and eigenvalue analysis of coupling matrices, and the phase-diagram scan.

A chain is classified as topological when the smallest singular value
``d0`` of its coupling matrix falls below a threshold.  At finite ``L`` the
zero mode splitting is exponentially small rather than exactly zero, so the
threshold is a parameter.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .hamiltonian import CouplingMatrix, momentum_coupling
from .model import EtaPoint, from_eta

__all__ = [
    "SingularSpectrum",
    "ComplexSpectrum",
    "PhaseDiagram",
    "DEFAULT_THRESHOLD",
    "REAL_TOL",
    "WORKERS_ENV",
    "default_workers",
    "singular_spectrum",
    "complex_spectrum",
    "minimal_singular_value",
    "scan_phase_diagram",
    "analytic_boundary",
]

DEFAULT_THRESHOLD = 1e-6
REAL_TOL = 1e-9
WORKERS_ENV = "KITAEV_DST_WORKERS"


def _entries(m) -> np.ndarray:
    if isinstance(m, CouplingMatrix):
        return m.entries
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class SingularSpectrum:
    """Singular values sorted descending; optionally the minimal triplet.

    ``u_min`` and ``v_min`` satisfy ``M @ v_min = d0 * u_min``.
    """

    values: np.ndarray
    u_min: Optional[np.ndarray] = None
    v_min: Optional[np.ndarray] = None

    @property
    def d0(self) -> float:
        return float(self.values[-1])


@dataclass(frozen=True)
class ComplexSpectrum:
    values: np.ndarray

    def real_mask(self, tol: float = REAL_TOL) -> np.ndarray:
        return np.abs(self.values.imag) <= tol

    def real_count(self, tol: float = REAL_TOL) -> int:
        return int(self.real_mask(tol).sum())

    def sorted_real_parts(self) -> np.ndarray:
        return np.sort(self.values.real)


@dataclass(frozen=True)
class PhaseDiagram:
    """Minimal singular value on an (eta, mu_tilde) grid.

    ``d0_grid[i, j]`` belongs to ``eta_grid[i]`` and ``mu_grid[j]``.
    """

    eta_grid: np.ndarray
    mu_grid: np.ndarray
    d0_grid: np.ndarray
    threshold: float
    L: int
    E0: float
    labels: np.ndarray = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", self.d0_grid < self.threshold)

    def rows(self):
        """Yield ``(eta, mu_tilde, d0, topological)`` row-major over eta then mu."""
        for i, eta in enumerate(self.eta_grid):
            for j, mu in enumerate(self.mu_grid):
                yield float(eta), float(mu), float(self.d0_grid[i, j]), bool(self.labels[i, j])


def singular_spectrum(m, vectors: bool = False) -> SingularSpectrum:
    """Full dense SVD of a coupling matrix.

    Parameters
    ----------
    m : CouplingMatrix or array_like
    vectors : bool
        Also return the left/right singular vectors of the smallest value.
    """
    a = _entries(m)
    if not vectors:
        return SingularSpectrum(np.linalg.svd(a, compute_uv=False))
    u, s, vh = np.linalg.svd(a)
    return SingularSpectrum(s, u[:, -1].copy(), vh[-1].copy())


def minimal_singular_value(m) -> float:
    return float(np.linalg.svd(_entries(m), compute_uv=False)[-1])


def complex_spectrum(m) -> ComplexSpectrum:
    """Eigenvalues of the (generally non-symmetric) real coupling matrix."""
    return ComplexSpectrum(np.linalg.eigvals(_entries(m)))


def analytic_boundary(eta: float) -> tuple[float, float]:
    """Topological boundary ``mu_tilde = +/- 2 cos(pi eta / 2)**2``."""
    if not (0.0 <= eta <= 1.0):
        raise ValueError(f"eta must lie in [0, 1], got {eta!r}")
    b = 2.0 * np.cos(0.5 * np.pi * eta) ** 2
    return float(b), float(-b)


def default_workers() -> int:
    """Worker count from ``$KITAEV_DST_WORKERS``, else the CPU count."""
    env = os.environ.get(WORKERS_ENV)
    if env:
        n = int(env)
        if n < 1:
            raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {env!r}")
        return n
    return os.cpu_count() or 1


def _scan_row(L: int, E0: float, eta: float, mu_grid: np.ndarray) -> np.ndarray:
    row = np.empty(mu_grid.size)
    base = from_eta(EtaPoint(eta, 0.0, E0), L)
    for j, mu_tilde in enumerate(mu_grid):
        row[j] = minimal_singular_value(momentum_coupling(base.with_mu(mu_tilde * E0)))
    return row


def scan_phase_diagram(
    L: int,
    E0: float,
    eta_grid,
    mu_grid,
    threshold: float = DEFAULT_THRESHOLD,
    workers: Optional[int] = None,
) -> PhaseDiagram:
    """Compute ``d0`` on every (eta, mu_tilde) grid point.

    Rows are dispatched to a thread pool (LAPACK releases the GIL); results
    are written back by index, so the output does not depend on ``workers``.
    """
    eta_grid = np.asarray(eta_grid, dtype=float).ravel()
    mu_grid = np.asarray(mu_grid, dtype=float).ravel()
    if eta_grid.size == 0 or mu_grid.size == 0:
        raise ValueError("eta and mu grids must be non-empty")
    if not (threshold > 0):
        raise ValueError(f"threshold must be positive, got {threshold!r}")
    if not (E0 > 0):
        raise ValueError(f"E0 must be positive, got {E0!r}")
    if workers is None:
        workers = default_workers()
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers!r}")

    d0 = np.empty((eta_grid.size, mu_grid.size))
    if workers == 1:
        for i, eta in enumerate(eta_grid):
            d0[i] = _scan_row(L, E0, eta, mu_grid)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_row, L, E0, eta, mu_grid) for eta in eta_grid]
            for i, fut in enumerate(futures):
                d0[i] = fut.result()
    return PhaseDiagram(eta_grid, mu_grid, d0, float(threshold), int(L), float(E0))
