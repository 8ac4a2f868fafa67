"""Zero-energy Majorana pair of a (numerically) singular coupling matrix.

For ``H = i GammaA . M . GammaB`` a zero mode of species B is a right null
vector of ``M`` (orthogonal to every row) and the partner of species A is a
left null vector (orthogonal to every column).  Two routes are provided:

* :func:`null_pair_projection` strips a seeded random vector of its
  components along the rows/columns of ``M`` by Gram-Schmidt;
* :func:`null_pair_svd` reads the minimal singular triplet.

Both return momentum amplitudes ``phi`` together with position amplitudes
``psi = s @ phi``.  The global sign is fixed so that the largest position
component is positive.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from .dst import SineBasis, build_dst
from .hamiltonian import CouplingMatrix

__all__ = [
    "ZeroModePair",
    "DecayFit",
    "NoZeroModeError",
    "DegenerateNullSpaceError",
    "null_pair_projection",
    "null_pair_svd",
    "to_position",
    "fit_decay",
    "half_chain_weights",
    "dominant_edge",
]

Edge = Literal["left", "right"]

REMAINDER_TOL = 1e-8
DEFAULT_RANK_TOL = 1e-5


class NoZeroModeError(ValueError):
    """The coupling matrix has full numerical rank."""


class DegenerateNullSpaceError(ValueError):
    """More than one zero-mode pair; not resolved here."""


@dataclass(frozen=True)
class ZeroModePair:
    phi_A: np.ndarray
    phi_B: np.ndarray
    psi_A: np.ndarray
    psi_B: np.ndarray
    residual_left: float
    residual_right: float
    d0: float


@dataclass(frozen=True)
class DecayFit:
    """Log-linear fit ``|psi| ~ amplitude * exp(-distance / xi)``.

    ``distance`` is measured in sites from ``edge`` (0 on the edge site).
    """

    xi: float
    amplitude: float
    r_squared: float
    edge: Edge
    support_sites: int


def _row_basis(rows: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis of the row span by pivoted modified Gram-Schmidt.

    At each step the row with the largest remainder is taken; the loop stops
    when every remainder is below ``tol``.  Each accepted direction is
    projected out twice.
    """
    R = np.array(rows, dtype=float, copy=True)
    basis = []
    active = np.ones(R.shape[0], dtype=bool)
    while active.any():
        norms = np.where(active, np.linalg.norm(R, axis=1), -1.0)
        k = int(np.argmax(norms))
        if norms[k] <= tol:
            break
        q = _strip(R[k] / norms[k], basis)
        q /= np.linalg.norm(q)
        basis.append(q)
        active[k] = False
        for _ in range(2):
            R[active] -= np.outer(R[active] @ q, q)
    return np.array(basis).reshape(len(basis), R.shape[1])


def _strip(x: np.ndarray, basis: np.ndarray) -> np.ndarray:
    for _ in range(2):
        for q in basis:
            x = x - (q @ x) * q
    return x


def _null_vector(rows: np.ndarray, x: np.ndarray, tol: float) -> np.ndarray:
    L = rows.shape[1]
    basis = _row_basis(rows, tol)
    nullity = L - basis.shape[0]
    if nullity > 1:
        raise DegenerateNullSpaceError(
            f"null space has dimension {nullity}; several zero-mode pairs are not supported"
        )
    x = x / np.linalg.norm(x)
    r = _strip(x, basis)
    norm = np.linalg.norm(r)
    if nullity == 0 or norm < REMAINDER_TOL:
        raise NoZeroModeError(
            f"remainder norm {norm:.3e} after projection: the matrix has full rank, no zero mode"
        )
    return r / norm


def _fix_sign(psi: np.ndarray, phi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    k = int(np.argmax(np.abs(psi)))
    if psi[k] < 0:
        return -psi, -phi
    return psi, phi


def _assemble(m: CouplingMatrix, left: np.ndarray, right: np.ndarray, d0: float) -> ZeroModePair:
    s = build_dst(m.L).s
    if m.representation == "momentum":
        phi_A, phi_B = left, right
        psi_A, psi_B = s @ left, s @ right
    else:
        psi_A, psi_B = left, right
        phi_A, phi_B = s @ left, s @ right
    psi_A, phi_A = _fix_sign(psi_A, phi_A)
    psi_B, phi_B = _fix_sign(psi_B, phi_B)
    M = m.entries
    if m.representation == "momentum":
        res_left = np.linalg.norm(M.T @ phi_A)
        res_right = np.linalg.norm(M @ phi_B)
    else:
        res_left = np.linalg.norm(M.T @ psi_A)
        res_right = np.linalg.norm(M @ psi_B)
    return ZeroModePair(phi_A, phi_B, psi_A, psi_B, float(res_left), float(res_right), float(d0))


def null_pair_projection(m: CouplingMatrix, seed: int = 0, rank_tol: float = DEFAULT_RANK_TOL) -> ZeroModePair:
    """Zero-mode pair by projecting a random vector off the rows and columns.

    Parameters
    ----------
    m : CouplingMatrix
        Must be rank deficient by exactly one.
    seed : int
        Seed of the Philox generator drawing the starting vectors.
    rank_tol : float
        A row (column) whose Gram-Schmidt remainder falls below
        ``rank_tol * max(1, ||M||_2)`` is treated as linearly dependent.

    Raises
    ------
    NoZeroModeError
        The projected remainder is below 1e-8 (full rank).
    DegenerateNullSpaceError
        More than one dependent row.
    """
    M = m.entries
    tol = rank_tol * max(1.0, float(np.linalg.norm(M, 2)))
    rng = np.random.Generator(np.random.Philox(seed))
    x_right = rng.standard_normal(m.L)
    x_left = rng.standard_normal(m.L)
    right = _null_vector(M, x_right, tol)
    left = _null_vector(M.T, x_left, tol)
    d0 = float(np.linalg.svd(M, compute_uv=False)[-1])
    return _assemble(m, left, right, d0)


def null_pair_svd(m: CouplingMatrix) -> ZeroModePair:
    """Zero-mode pair from the minimal singular triplet (no rank check)."""
    u, s, vh = np.linalg.svd(m.entries)
    return _assemble(m, u[:, -1].copy(), vh[-1].copy(), float(s[-1]))


def to_position(pair: ZeroModePair, basis: SineBasis) -> ZeroModePair:
    """Recompute ``psi`` from ``phi`` with the given sine basis."""
    if pair.phi_A.shape != (basis.L,) or pair.phi_B.shape != (basis.L,):
        raise ValueError(f"zero-mode vectors do not match basis size {basis.L}")
    return replace(pair, psi_A=basis.s @ pair.phi_A, psi_B=basis.s @ pair.phi_B)


def half_chain_weights(psi) -> tuple[float, float]:
    """Fractions of ``sum |psi|**2`` on sites ``l <= L//2`` and ``l > L - L//2``.

    For odd ``L`` the middle site belongs to neither half.
    """
    w = np.abs(np.asarray(psi, dtype=float)) ** 2
    total = w.sum()
    if total == 0:
        raise ValueError("zero vector has no weight")
    half = w.size // 2
    return float(w[:half].sum() / total), float(w[w.size - half:].sum() / total)


def dominant_edge(psi) -> Edge:
    left, right = half_chain_weights(psi)
    return "left" if left >= right else "right"


def _local_maxima(a: np.ndarray) -> np.ndarray:
    n = a.size
    if n == 1:
        return np.array([0])
    lo = np.concatenate([[-np.inf], a[:-1]])
    hi = np.concatenate([a[1:], [-np.inf]])
    return np.nonzero((a >= lo) & (a >= hi))[0]


def fit_decay(psi, edge: Edge = "left", envelope: bool = True) -> DecayFit:
    """Fit an exponential decay of ``|psi|`` away from one edge.

    Sites with ``|psi| <= 1e-12 * max|psi|`` are dropped.  With
    ``envelope=True`` only local maxima of ``|psi|`` enter the fit, which
    removes the oscillation under the envelope; when fewer than three
    maxima survive (a monotone profile) all remaining sites are used.
    """
    if edge not in ("left", "right"):
        raise ValueError(f"edge must be 'left' or 'right', got {edge!r}")
    a = np.abs(np.asarray(psi, dtype=float))
    peak = a.max() if a.size else 0.0
    if peak == 0:
        raise ValueError("cannot fit the decay of an all-zero vector")
    L = a.size
    dist = np.arange(L) if edge == "left" else np.arange(L)[::-1]
    keep = a > 1e-12 * peak
    sites = np.nonzero(keep)[0]
    if envelope:
        maxima = np.intersect1d(_local_maxima(a), sites)
        if maxima.size >= 3:
            sites = maxima
    if sites.size == 1:
        return DecayFit(0.0, float(a[sites[0]]), 1.0, edge, 1)

    x = dist[sites].astype(float)
    y = np.log(a[sites])
    slope, intercept = np.polyfit(x, y, 1)
    pred = slope * x + intercept
    ss_res = float(np.sum((y - pred) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else max(0.0, 1.0 - ss_res / ss_tot)
    if not slope < 0:
        raise ValueError(f"profile does not decay away from the {edge} edge (slope {slope:.3e})")
    return DecayFit(float(-1.0 / slope), float(np.exp(intercept)), r2, edge, int(sites.size))
