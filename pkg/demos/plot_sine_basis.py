"""
Hard-wall sine basis
====================

The type-I sine transform diagonalises hopping on an open chain.  Its
columns vanish one site beyond either end, so they already satisfy the
hard-wall boundary condition.
"""

# %%
# Build the basis and check that it is its own inverse.
import numpy as np

from kitaev_dst import build_dst, conjugate, free_band, position_coupling, ChainParams

L = 12
basis = build_dst(L)
print("max |s s - 1| =", np.abs(basis.s @ basis.s - np.eye(L)).max())

# %%
# Without pairing the position matrix is tridiagonal.  Conjugating with the
# basis leaves only the band energies on the diagonal.
c = ChainParams(L, t=1.0, delta=0.0, mu=0.3)
m = conjugate(basis, position_coupling(c).entries)
print("off-diagonal leak:", np.abs(m - np.diag(np.diag(m))).max())
print("band:", np.round(free_band(c), 4))

# %%
# Optional plot of the three lowest modes.
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    sites = np.arange(0, L + 2)
    for zeta in (1, 2, 3):
        padded = np.concatenate([[0.0], basis.s[:, zeta - 1], [0.0]])
        plt.plot(sites, padded, "o-", label=f"zeta={zeta}")
    plt.xlabel("site")
    plt.legend()
    plt.savefig("sine_basis.png", dpi=120)
