"""Parameter records for the uniform Kitaev chain and the eta-parameterization.

The coupling quadrant ``t >= 0, delta >= 0`` is folded onto a single angle

    t = E0 * cos(pi*eta/2)**2,    delta = E0 * sin(pi*eta/2)**2,

so that ``t + delta = E0`` and ``eta`` runs from free electrons (0) to a
pure pairing chain (1).  Chemical potentials are quoted as ``mu_tilde = mu/E0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "ChainParams",
    "EtaPoint",
    "Regime",
    "DEFAULT_WEAK_COUPLING_ETA",
    "from_eta",
    "to_eta",
    "classify_regime",
]

DEFAULT_WEAK_COUPLING_ETA = 0.15


@dataclass(frozen=True)
class ChainParams:
    """Uniform Kitaev chain of ``L`` sites.

    Attributes
    ----------
    L : int
        Number of lattice sites (>= 1).
    t : float
        Nearest-neighbour hopping (>= 0).
    delta : float
        p-wave pairing amplitude (>= 0).
    mu : float
        Chemical potential.
    """

    L: int
    t: float
    delta: float
    mu: float

    def __post_init__(self):
        if int(self.L) != self.L or self.L < 1:
            raise ValueError(f"L must be a positive integer, got {self.L!r}")
        if not (self.t >= 0):
            raise ValueError(f"hopping t must be >= 0, got {self.t!r}")
        if not (self.delta >= 0):
            raise ValueError(f"pairing delta must be >= 0, got {self.delta!r}")
        if not math.isfinite(self.mu):
            raise ValueError(f"mu must be finite, got {self.mu!r}")
        object.__setattr__(self, "L", int(self.L))

    @property
    def E0(self) -> float:
        return self.t + self.delta

    def with_mu(self, mu: float) -> "ChainParams":
        return ChainParams(self.L, self.t, self.delta, mu)


@dataclass(frozen=True)
class EtaPoint:
    """A point of the (eta, mu_tilde) plane at energy scale ``E0``."""

    eta: float
    mu_tilde: float
    E0: float = 1.0

    def __post_init__(self):
        if not (0.0 <= self.eta <= 1.0):
            raise ValueError(f"eta must lie in [0, 1], got {self.eta!r}")
        if not (self.E0 > 0):
            raise ValueError(f"E0 must be > 0, got {self.E0!r}")
        if not math.isfinite(self.mu_tilde):
            raise ValueError(f"mu_tilde must be finite, got {self.mu_tilde!r}")


class Regime(str, Enum):
    FREE = "free"
    WEAK_COUPLING = "weak_coupling"
    DIMERIZED = "dimerized"
    PAIRING_ONLY = "pairing_only"


def from_eta(p: EtaPoint, L: int) -> ChainParams:
    """Map an :class:`EtaPoint` to raw chain parameters for a chain of ``L`` sites.

    >>> c = from_eta(EtaPoint(0.5, 0.0, 1.0), L=3)
    >>> round(c.t, 12), round(c.delta, 12)
    (0.5, 0.5)
    """
    half_angle = 0.5 * math.pi * p.eta
    t = p.E0 * math.cos(half_angle) ** 2
    delta = p.E0 * math.sin(half_angle) ** 2
    return ChainParams(L=L, t=t, delta=delta, mu=p.mu_tilde * p.E0)


def to_eta(c: ChainParams) -> EtaPoint:
    """Inverse of :func:`from_eta`; ``L`` is dropped."""
    E0 = c.t + c.delta
    if E0 <= 0:
        raise ValueError("t and delta both vanish; eta is undefined")
    if c.t == 0:
        eta = 1.0
    else:
        eta = 2.0 / math.pi * math.atan(math.sqrt(c.delta / c.t))
    return EtaPoint(eta=min(max(eta, 0.0), 1.0), mu_tilde=c.mu / E0, E0=E0)


def classify_regime(p: EtaPoint, weak_threshold: float = DEFAULT_WEAK_COUPLING_ETA) -> Regime:
    """Label the coupling regime of ``p``.

    ``eta == 0`` is the free chain and ``eta == 1`` the pure pairing chain.
    Between them, ``eta <= weak_threshold`` counts as weak coupling and the
    rest as the dimerized regime.  The weak/dimerized border is a crossover,
    so the threshold is a knob rather than a derived constant.
    """
    if p.eta == 0.0:
        return Regime.FREE
    if p.eta == 1.0:
        return Regime.PAIRING_ONLY
    if p.eta <= weak_threshold:
        return Regime.WEAK_COUPLING
    return Regime.DIMERIZED
