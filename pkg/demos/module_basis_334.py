"""The 334 family end to end: classes, closed forms, and the basis theorem.

For h = (3, 3, 4, 5, ..., n, n) the fixed points split into four classes
determined by the first few entries of the inverse filling.  Every class
carries closed forms for the associated subset, a reduced word, the
rolldown, and the projected diagonal restriction; verify_334_theorem
checks all of them against the general machinery and confirms that the
rolldown classes form a poset-upper-triangular module basis.
"""

from collections import Counter

from hesspin import (
    associated_subset,
    catalog_reduced_word,
    classify,
    closed_form_restriction,
    fixed_points_334,
    rolldown_closed_form,
    verify_334_theorem,
)
from hesspin.hess334 import summand_census


def fmt_word(word):
    return " ".join(f"s_{i}" for i in word) if word else "e"


# The class census: 2^(n-1) Peterson-type points and 2^(n-3) points in
# each of the two non-Peterson classes.
for n in (4, 5, 6, 7):
    counts = Counter(classify(w).value for w in fixed_points_334(n))
    print(f"n = {n}: {dict(sorted(counts.items()))}")

# Three points at n = 8, one per flavor, sharing the same associated
# subset {1, 2, 3, 4, 6, 7} but with different rolldowns and words.
print("\nworked points at n = 8:")
for w in ((5, 4, 3, 2, 1, 8, 7, 6), (4, 5, 3, 2, 1, 8, 7, 6), (5, 1, 4, 3, 2, 8, 7, 6)):
    census = summand_census(w)
    print(f"  w = {''.join(map(str, w))}  [{classify(w).value}]")
    print(f"    subset    {sorted(associated_subset(w))}")
    print(f"    word      {fmt_word(catalog_reduced_word(w))}")
    print(f"    rolldown  {''.join(map(str, rolldown_closed_form(w)))}")
    plural = "s" if census.count != 1 else ""
    print(f"    p_roll(w) = {closed_form_restriction(w)}"
          f"  from {census.count} summand{plural} of {census.common}")

# The full verification: pinball success, matrix triangularity, and the
# structural facts relating Bruhat order to associated subsets.
for n in (4, 5, 6):
    report = verify_334_theorem(n)
    failed = [c.name for c in report.checks() if not c.passed]
    print(f"\nverify_334_theorem({n}): passed = {report.passed}"
          f"  ({len(report.points)} fixed points, {len(report.checks())} checks)")
    if failed:
        print(f"  failing: {failed}")

report = verify_334_theorem(5)
print("\nchecks at n = 5:")
for check in report.checks():
    print(f"  {'ok  ' if check.passed else 'FAIL'} {check.name}")
