"""
Majorana zero modes
===================

A zero mode of one species is a right null vector of the coupling matrix,
its partner a left null vector.  Projecting a random vector off the rows
finds it without an SVD.
"""

# %%
import numpy as np

from kitaev_dst import (
    EtaPoint,
    fit_decay,
    from_eta,
    half_chain_weights,
    momentum_coupling,
    null_pair_projection,
    null_pair_svd,
)

m = momentum_coupling(from_eta(EtaPoint(0.3, 0.1), 51))
pair = null_pair_projection(m, seed=0)
ref = null_pair_svd(m)
print("d0:", pair.d0)
print("overlap with SVD:", abs(pair.psi_B @ ref.psi_B))
print("left/right weight of B:", half_chain_weights(pair.psi_B))
print("left/right weight of A:", half_chain_weights(pair.psi_A))

# %%
# The envelope of the oscillating amplitude decays exponentially.
fit_B = fit_decay(pair.psi_B, "left")
fit_A = fit_decay(pair.psi_A, "right")
print(f"xi_B={fit_B.xi:.3f} (r2={fit_B.r_squared:.4f})  xi_A={fit_A.xi:.3f} (r2={fit_A.r_squared:.4f})")

# %%
# At t = delta and mu = 0 each mode sits on a single end site.
sweet = null_pair_projection(momentum_coupling(from_eta(EtaPoint(0.5, 0.0), 51)))
print("sweet spot B:", np.flatnonzero(np.abs(sweet.psi_B) > 1e-12) + 1,
      "A:", np.flatnonzero(np.abs(sweet.psi_A) > 1e-12) + 1)

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    sites = np.arange(1, 52)
    plt.semilogy(sites, np.abs(pair.psi_A), "o-", label="A")
    plt.semilogy(sites, np.abs(pair.psi_B), "s-", label="B")
    plt.xlabel("site")
    plt.ylabel("|psi|")
    plt.legend()
    plt.savefig("zero_modes.png", dpi=120)
