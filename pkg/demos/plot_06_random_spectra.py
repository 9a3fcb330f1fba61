"""
Spectra of random Gaussian combinations of generators
=====================================================

Sample a few hundred matrices on the staircase (3,2,1), pool their
eigenvalues and compare with the standard normal.
"""
import numpy as np

from coxeter_spectra import ks_distance, monte_carlo
from coxeter_spectra.spectra import expected_moment

rep = monte_carlo((3, 2, 1), trials=400, seed=11, smax=4)
for s in range(1, 5):
    est, se = rep.moment(s)
    print(f"m{s} = {est:.4f} +- {se:.4f}   exact {expected_moment((3, 2, 1), s):.4f}")

print("KS to N(0,1):", ks_distance(rep.pooled))

# crude text histogram of the pooled spectrum
mass, edges = rep.hist_mass[1:-1], rep.hist_edges[1:-1]
for lo, m in zip(edges[::4], np.add.reduceat(mass, np.arange(0, len(mass), 4))):
    print(f"{lo:6.2f} {'#' * int(400 * m)}")
