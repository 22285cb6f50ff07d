"""Restrictions of equivariant Schubert classes to permutation fixed points.

Everything here is exact: polynomials in t_1..t_n keep arbitrary-precision
integer coefficients in a sparse exponent-tuple map, and the rank-one
projection returns an exact (coefficient, degree) pair.

The restriction of the class of v to the fixed point w is a sum over the
reduced subwords of a reduced word b for w that multiply to v; the subword
occupying positions j_1 < ... < j_k contributes the product of the roots
``r(j, b) = s_{b_1} ... s_{b_{j-1}} (t_{b_j} - t_{b_j + 1})``.  The value
does not depend on the choice of b.

>>> sigma_restriction((2, 1, 3), (3, 2, 1))
t1 - t3
>>> project_s1(sigma_restriction((2, 1, 3), (3, 2, 1)))
S1Value(coeff=2, degree=1)

The projection sends t_i to (n + 1 - i) t, the weight ladder of the circle
inside the diagonal torus; a root t_l - t_k lands on (k - l) t.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .permutations import (
    Perm,
    Word,
    bruhat_leq,
    canonical_word,
    from_word,
    identity,
    inversions,
)

__all__ = [
    "Polynomial",
    "Root",
    "S1Value",
    "S1_ZERO",
    "billey_r",
    "roots_along_word",
    "reduced_subword_positions",
    "sigma_restriction",
    "project_s1",
    "p_restriction",
    "p_summands",
    "RestrictionMatrix",
    "restriction_matrix",
    "TriangularReport",
    "check_upper_triangular",
]


class Polynomial:
    """Sparse integer polynomial in t_1..t_nvars.

    Terms map exponent tuples to nonzero coefficients; the zero polynomial
    has no terms.

    >>> t1, t2 = Polynomial.variable(1, 3), Polynomial.variable(2, 3)
    >>> (t1 - t2) * (t1 + 2 * t2)
    t1^2 + t1*t2 - 2*t2^2
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[tuple[int, ...], int]] = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent tuple {exps} is not length {nvars}")
                if coeff:
                    clean[exps] = clean.get(exps, 0) + coeff
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, c: int, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        if not 1 <= i <= nvars:
            raise ValueError(f"t_{i} out of range for {nvars} variables")
        exps = tuple(1 if k == i - 1 else 0 for k in range(nvars))
        return cls(nvars, {exps: 1})

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, 0) + coeff
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return -(self - other)

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def degree(self) -> Optional[int]:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in a fixed order (descending lex on exponents)."""
        return sorted(self.terms.items(), reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            names = [
                f"t{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            ]
            mag = abs(coeff)
            body = "*".join(([str(mag)] if mag != 1 or not names else []) + names)
            parts.append(("-" if coeff < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


class Root(NamedTuple):
    """The linear form t_lower - t_upper."""

    lower: int
    upper: int

    def poly(self, nvars: int) -> Polynomial:
        return Polynomial.variable(self.lower, nvars) - Polynomial.variable(
            self.upper, nvars
        )

    def s1(self) -> int:
        """Coefficient of t after the projection t_i -> (n + 1 - i) t."""
        return self.upper - self.lower


class S1Value(NamedTuple):
    """An exact multiple of a power of t: coeff * t^degree."""

    coeff: int
    degree: int


S1_ZERO = S1Value(0, 0)


def billey_r(j: int, b: Sequence[int], n: int) -> Root:
    """The root r(j, b) = s_{b_1} ... s_{b_{j-1}} (t_{b_j} - t_{b_j+1}).

    >>> billey_r(2, (1, 2), 3)
    Root(lower=1, upper=3)
    """
    if not 1 <= j <= len(b):
        raise ValueError(f"position {j} out of range for word of length {len(b)}")
    return roots_along_word(tuple(b), n)[j - 1]


def roots_along_word(b: Word, n: int) -> tuple[Root, ...]:
    """All roots r(j, b) for j = 1..len(b), via running prefix products."""
    prefix = list(identity(n))
    roots = []
    for i in b:
        if not 1 <= i <= n - 1:
            raise ValueError(f"letter {i} out of range for S_{n}")
        roots.append(Root(prefix[i - 1], prefix[i]))
        # extend the prefix: right multiplication swaps entries i, i+1
        prefix[i - 1], prefix[i] = prefix[i], prefix[i - 1]
    return tuple(roots)


def reduced_subword_positions(b: Word, v: Perm) -> list[tuple[int, ...]]:
    """0-indexed position tuples of subwords of b multiplying to v reducedly.

    Since the subwords have exactly l(v) letters, every partial product must
    gain length letter by letter and stay below v in Bruhat order; both facts
    prune the search.
    """
    n = len(v)
    target = inversions(v)
    m = len(b)
    out: list[tuple[int, ...]] = []
    taken: list[int] = []

    def walk(j: int, u: tuple[int, ...]) -> None:
        if len(taken) == target:
            if u == v:
                out.append(tuple(taken))
            return
        if m - j < target - len(taken):
            return
        i = b[j]
        if u[i - 1] < u[i]:
            u2 = u[: i - 1] + (u[i], u[i - 1]) + u[i + 1 :]
            if bruhat_leq(u2, v):
                taken.append(j)
                walk(j + 1, u2)
                taken.pop()
        walk(j + 1, u)

    walk(0, identity(n))
    return out


def _checked_word(w: Perm, word: Optional[Sequence[int]]) -> Word:
    n = len(w)
    b = tuple(word) if word is not None else canonical_word(w)
    if len(b) != inversions(w) or from_word(n, b) != w:
        raise ValueError(f"{b} is not a reduced word for {w}")
    return b


def sigma_restriction(v: Perm, w: Perm, word: Optional[Sequence[int]] = None) -> Polynomial:
    """The full-torus restriction of v's class at w, in t_1..t_n.

    Zero exactly when v is not below w in Bruhat order.  Independent of the
    reduced word chosen for w, which may be supplied to steer the subword
    enumeration.
    """
    if len(v) != len(w):
        raise ValueError(f"size mismatch: {len(v)} vs {len(w)}")
    n = len(w)
    b = _checked_word(w, word)
    roots = [r.poly(n) for r in roots_along_word(b, n)]
    total = Polynomial.zero(n)
    for positions in reduced_subword_positions(b, v):
        term = Polynomial.one(n)
        for j in positions:
            term = term * roots[j]
        total = total + term
    return total


def project_s1(p: Polynomial) -> S1Value:
    """Evaluate a homogeneous polynomial under t_i -> (n + 1 - i) t.

    >>> project_s1(Polynomial(3, {(1, 0, 0): 1, (0, 0, 1): -1}))
    S1Value(coeff=2, degree=1)
    """
    if not p.terms:
        return S1_ZERO
    if not p.is_homogeneous():
        raise ValueError("projection of a non-homogeneous polynomial is not a monomial")
    n = p.nvars
    total = 0
    degree = 0
    for exps, coeff in p.terms.items():
        degree = sum(exps)
        weight = 1
        for idx, e in enumerate(exps):
            weight *= (n - idx) ** e
        total += coeff * weight
    if total == 0:
        return S1_ZERO
    return S1Value(total, degree)


def p_restriction(v: Perm, w: Perm, word: Optional[Sequence[int]] = None) -> S1Value:
    """The circle-projected restriction: project_s1 of sigma_restriction.

    Computed summand by summand without expanding polynomials.
    """
    total = sum(value.coeff for value in p_summands(v, w, word))
    if total == 0:
        return S1_ZERO
    return S1Value(total, inversions(v))


def p_summands(v: Perm, w: Perm, word: Optional[Sequence[int]] = None) -> tuple[S1Value, ...]:
    """The projected summands of the restriction, one per reduced subword.

    Order follows the lexicographic order of the subword position tuples.
    """
    if len(v) != len(w):
        raise ValueError(f"size mismatch: {len(v)} vs {len(w)}")
    n = len(w)
    b = _checked_word(w, word)
    weights = [r.s1() for r in roots_along_word(b, n)]
    target = inversions(v)
    out = []
    for positions in reduced_subword_positions(b, v):
        prod = 1
        for j in positions:
            prod *= weights[j]
        out.append(S1Value(prod, target))
    return tuple(out)


# ---------------------------------------------------------------------------
# Restriction matrices


@dataclass(frozen=True)
class RestrictionMatrix:
    """Matrix of projected restrictions p_{rolldown(row)}(column).

    Points label both axes, sorted lexicographically by one-line notation;
    ``values[i][j]`` restricts the class of ``rolldowns[i]`` to ``points[j]``.
    """

    points: tuple[Perm, ...]
    rolldowns: tuple[Perm, ...]
    values: tuple[tuple[S1Value, ...], ...]

    def index(self, w: Perm) -> int:
        return self.points.index(w)

    def entry(self, v: Perm, w: Perm) -> S1Value:
        return self.values[self.index(v)][self.index(w)]


def restriction_matrix(
    points: Iterable[Perm],
    rolldowns: Mapping[Perm, Perm],
    words: Optional[Mapping[Perm, Word]] = None,
    jobs: int = 1,
) -> RestrictionMatrix:
    """Projected restrictions of all rolldown classes at all fixed points.

    ``words`` optionally supplies a reduced word per column point (for
    instance a catalog word); columns without one use the canonical word.
    """
    pts = tuple(sorted(points))
    rolls = tuple(rolldowns[w] for w in pts)
    col_words = tuple(
        (words or {}).get(w, canonical_word(w)) for w in pts
    )

    def row(roll: Perm) -> tuple[S1Value, ...]:
        return tuple(
            p_restriction(roll, w, b) for w, b in zip(pts, col_words)
        )

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = tuple(pool.map(row, rolls))
    else:
        values = tuple(row(r) for r in rolls)
    return RestrictionMatrix(points=pts, rolldowns=rolls, values=values)


@dataclass(frozen=True)
class TriangularReport:
    """Poset upper triangularity of a restriction matrix."""

    diagonal_ok: bool
    diagonal_zeros: tuple[Perm, ...]
    vanishing_ok: bool
    vanishing_violations: tuple[tuple[Perm, Perm, S1Value], ...]

    @property
    def passed(self) -> bool:
        return self.diagonal_ok and self.vanishing_ok


def check_upper_triangular(matrix: RestrictionMatrix, bruhat=bruhat_leq) -> TriangularReport:
    """Diagonal entries must be nonzero; entry (v, w) must vanish unless v <= w.

    ``bruhat`` decides v <= w between the row and column fixed points.
    """
    diagonal_zeros = tuple(
        w
        for i, w in enumerate(matrix.points)
        if matrix.values[i][i] == S1_ZERO
    )
    violations = []
    for i, v in enumerate(matrix.points):
        for j, w in enumerate(matrix.points):
            if not bruhat(v, w) and matrix.values[i][j] != S1_ZERO:
                violations.append((v, w, matrix.values[i][j]))
    return TriangularReport(
        diagonal_ok=not diagonal_zeros,
        diagonal_zeros=diagonal_zeros,
        vanishing_ok=not violations,
        vanishing_violations=tuple(violations),
    )
