"""Rolldowns, Betti numbers, and the pinball success conditions.

Each fixed point w rolls down to omega(x)^{-1}, where x counts the
dimension pairs of its filling.  Poset pinball succeeds when the
rolldowns are distinct, each sits below its fixed point in Bruhat order,
and their degrees reproduce the Betti numbers.
"""

from hesspin import (
    betti_numbers,
    hessenberg_334,
    hessenberg_full,
    hessenberg_identity,
    hessenberg_peterson,
    rolldown,
    rolldown_table,
    rolldown_word,
    single_row,
    verify_pinball,
)


def fmt_word(word):
    return " ".join(f"s_{i}" for i in word) if word else "e"


n = 5
h = hessenberg_334(n)
row = single_row(n)

# The fixed point 43215 rolls down by the reversed omega word of its
# dimension-pair vector x = (1, 2, 1, 0).
w = (4, 3, 2, 1, 5)
print(f"rolldown({''.join(map(str, w))}) = {rolldown(w, row, h)}"
      f"  via {fmt_word(rolldown_word(w, row, h))}")

# The full table, one rolldown per fixed point.
print(f"\nall {len(rolldown_table(row, h))} rolldowns for h = {h}:")
for point, roll in sorted(rolldown_table(row, h).items()):
    print(f"  {''.join(map(str, point))} -> {''.join(map(str, roll))}")

# Betti numbers by family: the 334 shape, the Peterson shape
# h(i) = min(i+1, n) with binomial Betti numbers, and the full flag
# h(i) = n with the Mahonian distribution.
print(f"\nBetti numbers, n = {n}:")
print(f"  334      {betti_numbers(row, h)}")
print(f"  Peterson {betti_numbers(row, hessenberg_peterson(n))}")
print(f"  flag     {betti_numbers(row, hessenberg_full(n))}")

# verify_pinball runs the three success checks and reports witnesses on
# failure.  Multi-row shapes with h = identity cover Springer fibers.
cases = [
    ("334, n=5", row, h),
    ("Peterson, n=6", single_row(6), hessenberg_peterson(6)),
    ("Springer (2,2)", (2, 2), hessenberg_identity(4)),
    ("Springer (3,1)", (3, 1), hessenberg_identity(4)),
    ("full flag, n=4", single_row(4), hessenberg_full(4)),
]
print()
for name, diagram, hh in cases:
    report = verify_pinball(diagram, hh)
    marks = ", ".join(f"{c.name}={'ok' if c.passed else 'FAIL'}" for c in report.checks())
    print(f"  {name:16s} passed={report.passed}  ({marks})")

# For the full flag every fixed point is its own rolldown.
flag = rolldown_table(single_row(4), hessenberg_full(4))
print(f"\nfull flag rolls to itself: {all(v == w for w, v in flag.items())}")
