"""
Phase diagram from the smallest singular value
==============================================

The smallest singular value ``d0`` of the coupling matrix is exponentially
small in the topological phase.  A scan over the interpolation parameter
``eta`` and the scaled chemical potential shows the region bounded by
``mu_tilde = +/- 2 cos(pi eta / 2)**2``.
"""

# %%
import numpy as np

from kitaev_dst import analytic_boundary, scan_phase_diagram

eta = np.linspace(0, 1, 51)
mu = np.linspace(-2.5, 2.5, 51)
pd = scan_phase_diagram(51, 1.0, eta, mu, threshold=1e-6)
print("topological fraction:", pd.labels.mean().round(3))

# %%
# Near the boundary the finite chain still has a visible gap; the label
# only flips once ``d0`` drops below the threshold.
row = np.searchsorted(eta, 0.5)
print("eta=0.5 boundary:", analytic_boundary(0.5)[0])
for m, d in zip(mu[25::4], pd.d0_grid[row, 25::4]):
    print(f"  mu_tilde={m:+.2f}  d0={d:.2e}")

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    plt.pcolormesh(mu, eta, np.log10(pd.d0_grid + 1e-17), shading="nearest")
    b = [analytic_boundary(e)[0] for e in eta]
    plt.plot(b, eta, "w--")
    plt.plot(np.negative(b), eta, "w--")
    plt.xlabel("mu_tilde")
    plt.ylabel("eta")
    plt.colorbar(label="log10 d0")
    plt.savefig("phase_diagram.png", dpi=120)
