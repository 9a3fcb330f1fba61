"""
Character ratios on products of disjoint transpositions
=======================================================

Three routes to the same number: domino removal, closed forms in the
contents, and the trace of a word in the generators.
"""
from coxeter_spectra import conjugate, ratio_mn, ratio_one_transposition, ratio_two_transpositions
from coxeter_spectra.representation import trace_character

shape = (4, 2, 1)
print("r=1:", ratio_mn(shape, 1), ratio_one_transposition(shape))
print("r=2:", ratio_mn(shape, 2), ratio_two_transpositions(shape))
print("trace (1 2)(3 4):", trace_character(shape, [1, 3]))

# conjugating the shape flips the sign by (-1)^r
c = conjugate(shape)
for r in range(4):
    print(r, ratio_mn(shape, r), ratio_mn(c, r))
