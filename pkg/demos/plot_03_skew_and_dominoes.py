"""
Skew tableaux and domino chains
===============================

Skew counts from an integer determinant, and the signed domino sums that
tend to K^-r along staircases with odd gaps.
"""
from coxeter_spectra import SkewShape, skew_count
from coxeter_spectra.identities import (
    StaircaseSpec,
    eta_zero_lhs,
    k2_series,
    mn_convergence_probe,
    staircase_lhs,
)

print(skew_count(SkewShape((4, 3, 1), (2, 1))))

for r in range(6):
    print(r, eta_zero_lhs(3, r), k2_series(r), staircase_lhs(StaircaseSpec(3, (1, 0)), r))

# N = 2m + 1 for two rows with gap one
for row in mn_convergence_probe(StaircaseSpec(2), 2, [7, 11, 15, 19, 41]):
    print(row.n, row.ratio, float(row.deviation))
