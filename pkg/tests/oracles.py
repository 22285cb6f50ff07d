"""Brute-force reference implementations, deliberately unclever.

Everything here recomputes answers straight from definitions by exhaustive
enumeration, sharing as little code as possible with the library paths it
checks.  Slow on purpose; tests pick sizes accordingly.
"""

from itertools import combinations, permutations

from hesspin.billey import Polynomial
from hesspin.permutations import compose, identity, inversions, simple


def brute_fillings(diagram, h):
    """Permissible fillings by filtering every arrangement of 1..n."""
    n = sum(diagram)
    out = []
    for perm in permutations(range(1, n + 1)):
        rows = []
        k = 0
        for length in diagram:
            rows.append(tuple(perm[k : k + length]))
            k += length
        ok = all(
            row[i] <= h[row[i + 1] - 1]
            for row in rows
            for i in range(len(row) - 1)
        )
        if ok:
            out.append(tuple(rows))
    return out


def brute_dimension_pairs(filling, h):
    """Dimension pairs straight from the three defining clauses."""
    n = sum(len(row) for row in filling)
    pos = {
        filling[r][c]: (r, c)
        for r in range(len(filling))
        for c in range(len(filling[r]))
    }
    pairs = set()
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            ra, ca = pos[a]
            rb, cb = pos[b]
            if not (cb < ca or (cb == ca and rb > ra)):
                continue
            if ca + 1 < len(filling[ra]) and b > h[filling[ra][ca + 1] - 1]:
                continue
            pairs.add((a, b))
    return pairs


def inversion_tops(w):
    """(x_2, ..., x_n) where x_l counts inversions whose larger value is l."""
    counts = [0] * (len(w) + 1)
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                counts[w[i]] += 1
    return tuple(counts[2:])


def brute_root(b, j, n):
    """(lo, hi) with r(j+1, b) = t_lo - t_hi, prefix computed from scratch."""
    p = identity(n)
    for letter in b[:j]:
        p = compose(p, simple(letter, n))
    return p[b[j] - 1], p[b[j]]


def brute_sigma(v, w, b):
    """Billey's sum over plain position combinations, no pruning."""
    n = len(w)
    target = inversions(v)
    total = Polynomial.zero(n)
    for pos in combinations(range(len(b)), target):
        prod = identity(n)
        for j in pos:
            prod = compose(prod, simple(b[j], n))
        if prod != v:
            continue
        term = Polynomial.one(n)
        for j in pos:
            lo, hi = brute_root(b, j, n)
            term = term * (
                Polynomial.variable(lo, n) - Polynomial.variable(hi, n)
            )
        total = total + term
    return total


def brute_project(p, n):
    """(coefficient, degree) after t_i -> (n + 1 - i) t, by substitution."""
    if not p.terms:
        return (0, 0)
    degrees = {sum(e) for e in p.terms}
    assert len(degrees) == 1, "projection of a non-homogeneous value"
    coeff = 0
    for exps, c in p.terms.items():
        prod = c
        for i, e in enumerate(exps):
            prod *= (n - i) ** e
        coeff += prod
    return (coeff, degrees.pop()) if coeff else (0, 0)
