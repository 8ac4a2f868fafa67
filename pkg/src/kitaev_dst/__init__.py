"""Finite Kitaev chain in the hard-wall sine basis.

Coupling matrices in position and momentum space, SVD phase
classification, weak-pairing perturbation theory and Majorana zero-mode
retrieval.
"""

from .model import ChainParams, EtaPoint, Regime, classify_regime, from_eta, to_eta
from .dst import SineBasis, apply, build_dst, conjugate
from .hamiltonian import (
    BdgRealSpace,
    CouplingMatrix,
    PbcDispersion,
    bdg_realspace,
    count_wrinkles,
    free_band,
    momentum_coupling,
    pbc_dispersion,
    pbc_gap_profile,
    position_coupling,
)
from .spectral import (
    ComplexSpectrum,
    PhaseDiagram,
    SingularSpectrum,
    analytic_boundary,
    complex_spectrum,
    scan_phase_diagram,
    singular_spectrum,
)
from .perturbation import (
    PerturbativeSpectrum,
    effective_hopping,
    effective_spectrum,
    third_order_spectrum,
    zero_mode_mu_predictions,
)
from .zeromode import (
    DecayFit,
    DegenerateNullSpaceError,
    NoZeroModeError,
    ZeroModePair,
    dominant_edge,
    fit_decay,
    half_chain_weights,
    null_pair_projection,
    null_pair_svd,
    to_position,
)

__version__ = "0.1.0"
