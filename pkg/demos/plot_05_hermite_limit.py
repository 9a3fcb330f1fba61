"""
Hermite polynomials and the limiting moments
============================================

With H_n normalised so the leading coefficient is 1/n!, the limiting
moments are those of N(theta z, 1 - theta^2).
"""
from fractions import Fraction

import numpy as np

from coxeter_spectra import LimitParameters, gaussian_raw_moment, hermite, limit_moment

x = np.linspace(-2, 2, 5)
for n in range(4):
    print(n, hermite(n, x))

lp = LimitParameters(Fraction(1, 2), Fraction(3, 2))
for s in range(7):
    print(s, limit_moment(s, lp), gaussian_raw_moment(s, lp.theta * lp.z, 1 - lp.theta ** 2))
