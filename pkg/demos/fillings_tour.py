"""Permissible fillings, reading words, and dimension pairs.

A Hessenberg function h on {1..n} satisfies h(i) >= i and is weakly
increasing.  Filling a Young diagram with 1..n is permissible when every
horizontal adjacency k|j satisfies k <= h(j).  Each permissible filling
of the single-row shape is a flow-up basis candidate, and its dimension
pairs record the degree of the class it produces.
"""

from hesspin import (
    dimension_pairs,
    enumerate_permissible,
    hessenberg_334,
    omega,
    omega_inverse,
    reading_word,
    single_row,
    top_parts,
)
from hesspin.fillings import omega_word, permissibility_error, permissibility_violation

n = 5
h = hessenberg_334(n)
row = single_row(n)
print(f"h = {h}  (the 334 shape for n = {n})")

# A filling of the single row is just its reading word.  24315 is
# permissible for this h; 23415 is not, and the violation names the
# adjacency that fails.
good = ((2, 4, 3, 1, 5),)
bad = ((2, 3, 4, 1, 5),)
print(f"\n24315 permissible: {permissibility_violation(good, h) is None}")
print(f"23415 violation:   {permissibility_violation(bad, h)}")
print(f"  ... {permissibility_error(bad, h)}")

# Enumerating all permissible one-row fillings gives the torus fixed
# points of the Hessenberg variety, 3 * 2^(n-2) of them for this family.
fillings = enumerate_permissible(row, h)
print(f"\n{len(fillings)} permissible fillings of the single row (3 * 2^{n - 2} = {3 * 2 ** (n - 2)})")

# Multi-row shapes read columns left to right, bottom to top.
two_rows = ((1, 2, 3), (4, 5, 6))
print(f"\nreading word of {two_rows} is {reading_word(two_rows)}")

# A dimension pair (a, b) has b > a with b placed below-left of a, and
# b <= h(c) whenever some entry c sits directly right of a.  The counts
# x_l = #{(a, l)} collect into the vector x = (x_2, ..., x_n).
for word in ((2, 4, 3, 1, 5), (4, 3, 2, 1, 5)):
    filling = (word,)
    pairs = dimension_pairs(filling, h)
    x = top_parts(pairs, n)
    print(f"\nfilling {word}:")
    print(f"  dimension pairs {sorted(pairs)}")
    print(f"  x = {x}, total degree {sum(x)}")

# x determines a permutation omega(x) whose inversion tops are exactly
# the multiset the pairs describe; the assignment is a bijection.
x = (1, 2, 1, 0)
w = omega(x)
print(f"\nomega{x} = {w}, word {omega_word(x)}")
print(f"round trip: omega_inverse({w}) = {omega_inverse(w)}")
