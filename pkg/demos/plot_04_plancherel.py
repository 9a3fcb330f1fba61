"""
The one-transposition ratio under Plancherel measure
====================================================
"""
from math import comb

from coxeter_spectra import plancherel_moments

for n in range(2, 13):
    s = plancherel_moments(n)
    # variance is exactly 1 / C(n, 2)
    print(n, s.mean, s.variance, s.variance * comb(n, 2))
