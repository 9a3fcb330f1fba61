"""
Standard tableaux and the orthogonal generators
================================================

Enumerate the tableau basis of a shape, look at one generator matrix and
confirm the Coxeter relations numerically.
"""
import numpy as np

from coxeter_spectra import coxeter_audit, dimension, hook_data
from coxeter_spectra.representation import basis, generator

shape = (3, 2)
print("f =", dimension(shape), "hooks:", hook_data(shape).hooks)

# basis order: lexicographic in the row-reading word
for t in basis(shape):
    print(f"T[{t.index}]  {t.reading_word()}")

# (2,3) acts by 1/d on the diagonal and mixes pairs with distance |d| >= 2
np.set_printoptions(precision=3, suppress=True)
print(generator(shape, 2).to_dense())

rep = coxeter_audit(shape)
print("worst residual:", rep.worst)
