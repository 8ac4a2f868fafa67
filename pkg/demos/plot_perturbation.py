"""
Weak-pairing band
=================

Second-order perturbation theory in the pairing narrows the band.  The
correction sum collapses to the band cosine, so the result is a free band
with hopping ``t - delta**2 / (2 t)``.
"""

# %%
import numpy as np

from kitaev_dst import (
    ChainParams,
    complex_spectrum,
    effective_spectrum,
    momentum_coupling,
    third_order_spectrum,
)

c = ChainParams(51, 1.0, 0.35, 0.0)
exact = complex_spectrum(momentum_coupling(c)).sorted_real_parts()
third = np.sort(third_order_spectrum(c).energies)
eff = np.sort(effective_spectrum(c).energies)
print("max deviation, perturbative:", np.abs(third - exact).max())
print("max deviation, effective band:", np.abs(eff - exact).max())

# %%
# The opposite sign of the correction widens the band instead and misses
# the exact levels by a large margin.
wide = np.sort(third_order_spectrum(c, correction_sign=-1).energies)
print("max deviation, widened band:", np.abs(wide - exact).max())

# %%
# The error falls as delta**4.
for delta in (0.1, 0.2, 0.4):
    cc = ChainParams(51, 1.0, delta, 0.0)
    ex = complex_spectrum(momentum_coupling(cc)).sorted_real_parts()
    print(delta, np.abs(np.sort(third_order_spectrum(cc).energies) - ex).max())
