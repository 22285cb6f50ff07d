"""Rolldowns and Betti numbers for poset pinball on Hessenberg varieties.

The torus-fixed points carried by a (diagram, h) pair are the permutations
``w`` whose attached filling (reading word ``w^{-1}``) is permissible.  The
rolldown of a fixed point collects the dimension pairs of its filling into
the top-part vector x and returns ``omega(x)^{-1}``; its length equals the
number of dimension pairs.

``verify_pinball`` checks the three success conditions of Betti poset
pinball: rolldowns are pairwise distinct, each rolldown sits below its
fixed point in Bruhat order, and the rolldown length distribution matches
the Betti numbers.  Distinctness can fail for general (diagram, h); the
regular nilpotent rows (single-row diagram, any h) and the Springer rows
(h = identity) are the ones the report is expected to pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fillings import (
    Diagram,
    dimension_pairs,
    diagram_size,
    enumerate_permissible,
    filling_of_fixed_point,
    is_permissible,
    omega_word,
    permissibility_error,
    reading_word,
    top_parts,
    validate_diagram,
    validate_hessenberg,
)
from .permutations import (
    Perm,
    Word,
    bruhat_leq,
    from_word,
    inverse,
    inversions,
    validate,
)

__all__ = [
    "fixed_points",
    "is_fixed_point",
    "rolldown",
    "rolldown_word",
    "rolldown_table",
    "degree",
    "betti_numbers",
    "CheckResult",
    "PinballReport",
    "verify_pinball",
]


def fixed_points(diagram: Diagram, h: Sequence[int]) -> tuple[Perm, ...]:
    """The fixed points for (diagram, h), sorted by one-line notation."""
    points = [
        inverse(reading_word(f)) for f in enumerate_permissible(diagram, h)
    ]
    return tuple(sorted(points))


def is_fixed_point(w: Perm, diagram: Diagram, h: Sequence[int]) -> bool:
    return is_permissible(filling_of_fixed_point(w, diagram), h)


def _checked_filling(w: Perm, diagram: Diagram, h: Sequence[int]):
    w = validate(w)
    diagram = validate_diagram(diagram)
    h = validate_hessenberg(h)
    if len(h) != diagram_size(diagram):
        raise ValueError(f"h has length {len(h)}, diagram has {diagram_size(diagram)} boxes")
    filling = filling_of_fixed_point(w, diagram)
    if not is_permissible(filling, h):
        raise ValueError(
            f"{w} is not a fixed point for this (diagram, h): "
            + permissibility_error(filling, h)
        )
    return filling


def rolldown_word(w: Perm, diagram: Diagram, h: Sequence[int]) -> Word:
    """A reduced word for rolldown(w): the omega word of x, reversed.

    >>> rolldown_word((4, 3, 2, 1, 5), (5,), (3, 3, 4, 5, 5))
    (3, 1, 2, 1)
    """
    filling = _checked_filling(w, diagram, h)
    x = top_parts(dimension_pairs(filling, h), len(w))
    return tuple(reversed(omega_word(x)))


def rolldown(w: Perm, diagram: Diagram, h: Sequence[int]) -> Perm:
    """The rolldown omega(x)^{-1} of a fixed point w.

    >>> rolldown((4, 3, 2, 1, 5), (5,), (3, 3, 4, 5, 5))
    (4, 2, 1, 3, 5)
    """
    return from_word(len(w), rolldown_word(w, diagram, h))


def degree(w: Perm, diagram: Diagram, h: Sequence[int]) -> int:
    """The number of dimension pairs of w's filling (= length of rolldown)."""
    filling = _checked_filling(w, diagram, h)
    return len(dimension_pairs(filling, h))


def rolldown_table(diagram: Diagram, h: Sequence[int]) -> dict[Perm, Perm]:
    """Rolldowns of every fixed point, keyed in sorted fixed-point order."""
    return {w: rolldown(w, diagram, h) for w in fixed_points(diagram, h)}


def betti_numbers(diagram: Diagram, h: Sequence[int]) -> tuple[int, ...]:
    """b_k = number of permissible fillings with exactly k dimension pairs.

    The trailing entry is the top nonzero Betti number, so the tuple has
    length 1 + max degree.
    """
    counts: dict[int, int] = {}
    for f in enumerate_permissible(diagram, h):
        k = len(dimension_pairs(f, h))
        counts[k] = counts.get(k, 0) + 1
    top = max(counts)
    return tuple(counts.get(k, 0) for k in range(top + 1))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check, with witnesses for any failure."""

    name: str
    passed: bool
    witnesses: tuple = ()


@dataclass(frozen=True)
class PinballReport:
    """Results of the three pinball success conditions."""

    diagram: Diagram
    h: tuple[int, ...]
    betti: tuple[int, ...]
    rolldowns: tuple[tuple[Perm, Perm], ...]
    injective: bool
    collisions: tuple[tuple[Perm, tuple[Perm, ...]], ...]
    below_fixed_point: bool
    bruhat_failures: tuple[tuple[Perm, Perm], ...]
    betti_matched: bool
    betti_mismatches: tuple[tuple[int, int, int], ...]

    @property
    def passed(self) -> bool:
        return self.injective and self.below_fixed_point and self.betti_matched

    def checks(self) -> tuple[CheckResult, ...]:
        return (
            CheckResult("rolldowns-distinct", self.injective, self.collisions),
            CheckResult(
                "rolldown-below-fixed-point",
                self.below_fixed_point,
                self.bruhat_failures,
            ),
            CheckResult("betti-match", self.betti_matched, self.betti_mismatches),
        )


def verify_pinball(diagram: Diagram, h: Sequence[int]) -> PinballReport:
    """Check the pinball success conditions for (diagram, h) exhaustively."""
    diagram = validate_diagram(diagram)
    h = validate_hessenberg(h)
    table = rolldown_table(diagram, h)
    rolls = tuple(table.items())

    seen: dict[Perm, list[Perm]] = {}
    for w, r in rolls:
        seen.setdefault(r, []).append(w)
    collisions = tuple(
        (r, tuple(ws)) for r, ws in sorted(seen.items()) if len(ws) > 1
    )

    bruhat_failures = tuple(
        (w, r) for w, r in rolls if not bruhat_leq(r, w)
    )

    betti = betti_numbers(diagram, h)
    length_counts: dict[int, int] = {}
    for _, r in rolls:
        k = inversions(r)
        length_counts[k] = length_counts.get(k, 0) + 1
    top = max(len(betti) - 1, max(length_counts))
    betti_mismatches = tuple(
        (k, betti[k] if k < len(betti) else 0, length_counts.get(k, 0))
        for k in range(top + 1)
        if (betti[k] if k < len(betti) else 0) != length_counts.get(k, 0)
    )

    return PinballReport(
        diagram=diagram,
        h=h,
        betti=betti,
        rolldowns=rolls,
        injective=not collisions,
        collisions=collisions,
        below_fixed_point=not bruhat_failures,
        bruhat_failures=bruhat_failures,
        betti_matched=not betti_mismatches,
        betti_mismatches=betti_mismatches,
    )
