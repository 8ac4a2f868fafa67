"""Orthonormal type-I discrete sine transform as an explicit dense matrix.

    s[l, z] = sqrt(2/(L+1)) * sin(pi * l * z / (L+1)),   l, z = 1..L

The basis columns vanish at the virtual sites ``l = 0`` and ``l = L + 1``,
which is what encodes hard-wall boundaries.  ``s`` is symmetric and
orthogonal, hence its own inverse.  Storage is 0-based; the formula above
is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["SineBasis", "build_dst", "apply", "conjugate", "dst_entry"]


@dataclass(frozen=True)
class SineBasis:
    L: int
    s: np.ndarray

    def __post_init__(self):
        if self.s.shape != (self.L, self.L):
            raise ValueError(f"basis matrix must be {self.L}x{self.L}, got {self.s.shape}")
        self.s.setflags(write=False)


def _sin_ratio(n: np.ndarray, m: int) -> np.ndarray:
    """``sin(pi * n / m)`` for integer ``n``, exactly zero when ``m`` divides ``n``."""
    n = np.asarray(n) % (2 * m)
    out = np.sin(np.pi * n / m)
    return np.where(n % m == 0, 0.0, out)


def dst_entry(L: int, l: int, zeta: int) -> float:
    """Closed-form matrix element with 1-based ``l`` and ``zeta``.

    Also valid at ``l = 0`` and ``l = L + 1`` where it vanishes.
    """
    return float(np.sqrt(2.0 / (L + 1)) * _sin_ratio(np.asarray(l * zeta), L + 1))


def build_dst(L: int) -> SineBasis:
    if int(L) != L or L < 1:
        raise ValueError(f"L must be a positive integer, got {L!r}")
    L = int(L)
    idx = np.arange(1, L + 1)
    # the integer product l*zeta keeps s exactly symmetric
    s = np.sqrt(2.0 / (L + 1)) * _sin_ratio(np.outer(idx, idx), L + 1)
    return SineBasis(L=L, s=s)


def apply(basis: SineBasis, v) -> np.ndarray:
    """Return ``s @ v``.  Applying twice gives back ``v``."""
    v = np.asarray(v, dtype=float)
    if v.shape != (basis.L,):
        raise ValueError(f"expected a vector of length {basis.L}, got shape {v.shape}")
    return basis.s @ v


def conjugate(basis: SineBasis, m) -> np.ndarray:
    """Return ``s @ m @ s.T``, the operator ``m`` expressed in the other representation."""
    m = np.asarray(m, dtype=float)
    if m.shape != (basis.L, basis.L):
        raise ValueError(f"expected a {basis.L}x{basis.L} matrix, got shape {m.shape}")
    return basis.s @ m @ basis.s.T
