"""Restrictions over reduced subwords and the circle projection."""

import random

import pytest

from hesspin.billey import (
    S1_ZERO,
    Polynomial,
    Root,
    S1Value,
    billey_r,
    check_upper_triangular,
    p_restriction,
    p_summands,
    project_s1,
    reduced_subword_positions,
    restriction_matrix,
    roots_along_word,
    sigma_restriction,
)
from hesspin.permutations import (
    all_permutations,
    bruhat_leq,
    canonical_word,
    inversions,
    random_reduced_word,
)

from oracles import brute_project, brute_sigma


class TestPolynomial:
    def test_arithmetic(self):
        t1 = Polynomial.variable(1, 3)
        t2 = Polynomial.variable(2, 3)
        p = (t1 - t2) * (t1 + t2)
        assert p == t1 * t1 - t2 * t2
        assert p.degree() == 2
        assert p.is_homogeneous()
        assert not (p - p)
        assert (p - p).degree() is None

    def test_repr(self):
        t1, t2 = Polynomial.variable(1, 2), Polynomial.variable(2, 2)
        assert repr(t1 - t2) == "t1 - t2"
        assert repr(2 * t2 * t2 - t1) == "-t1 + 2*t2^2"
        assert repr(Polynomial.zero(2)) == "0"

    def test_constants(self):
        one = Polynomial.one(2)
        assert one + one == Polynomial.constant(2, 2)
        assert one * 0 == Polynomial.zero(2)


class TestRoots:
    def test_first_letters(self):
        assert billey_r(1, (2, 1), 3) == Root(2, 3)
        assert billey_r(2, (1, 2), 3) == Root(1, 3)

    def test_longest_word_roots(self):
        # along 1,2,1,3,2,1 every positive root appears exactly once
        roots = roots_along_word((1, 2, 1, 3, 2, 1), 4)
        assert roots == (
            Root(1, 2),
            Root(1, 3),
            Root(2, 3),
            Root(1, 4),
            Root(2, 4),
            Root(3, 4),
        )
        assert all(r.upper > r.lower for r in roots)

    def test_s1_weights(self):
        assert Root(1, 4).s1() == 3
        assert Root(1, 4).poly(4) == Polynomial.variable(1, 4) - Polynomial.variable(4, 4)


class TestSubwords:
    def test_identity_has_empty_subword(self):
        assert reduced_subword_positions((1, 2, 1), (1, 2, 3)) == [()]

    def test_full_word(self):
        w0 = (3, 2, 1)
        assert reduced_subword_positions((1, 2, 1), w0) == [(0, 1, 2)]

    def test_repeated_letter_gives_two_subwords(self):
        positions = reduced_subword_positions((1, 2, 1), (2, 1, 3))
        assert positions == [(0,), (2,)]


class TestSigma:
    def test_identity_class(self):
        for w in all_permutations(3):
            assert sigma_restriction((1, 2, 3), w) == Polynomial.one(3)

    def test_vanishing_iff_not_below(self):
        for v in all_permutations(4):
            for w in all_permutations(4):
                value = sigma_restriction(v, w)
                assert bool(value) == bruhat_leq(v, w), (v, w)

    def test_matches_brute_force_exhaustively(self):
        for v in all_permutations(4):
            for w in all_permutations(4):
                b = canonical_word(w)
                assert sigma_restriction(v, w, b) == brute_sigma(v, w, b)

    def test_word_independence_random_s5(self):
        rng = random.Random(20260817)
        perms = all_permutations(5)
        for _ in range(200):
            v, w = rng.choice(perms), rng.choice(perms)
            b = random_reduced_word(w, rng)
            assert sigma_restriction(v, w, b) == sigma_restriction(v, w)

    def test_diagonal_is_root_product(self):
        for w in all_permutations(4):
            value = sigma_restriction(w, w)
            expected = Polynomial.one(4)
            for root in roots_along_word(canonical_word(w), 4):
                expected = expected * root.poly(4)
            assert value == expected
            assert value.degree() == inversions(w)

    def test_rejects_non_reduced_word(self):
        with pytest.raises(ValueError, match="not a reduced word"):
            sigma_restriction((2, 1, 3), (2, 1, 3), (1, 1))

    def test_factorization_shortcut(self):
        # disjoint, non-adjacent supports: the second factor is invisible
        for v in all_permutations(3):
            v5 = v + (4, 5)
            for u in all_permutations(3):
                w_plain = u + (4, 5)
                w_swapped = u + (5, 4)
                assert sigma_restriction(v5, w_plain) == sigma_restriction(
                    v5, w_swapped
                )


class TestProjection:
    def test_example(self):
        p = Polynomial.variable(1, 3) - Polynomial.variable(3, 3)
        assert project_s1(p) == S1Value(2, 1)

    def test_zero(self):
        assert project_s1(Polynomial.zero(4)) == S1_ZERO

    def test_rejects_inhomogeneous(self):
        p = Polynomial.one(3) + Polynomial.variable(1, 3)
        with pytest.raises(ValueError):
            project_s1(p)

    def test_matches_brute_substitution(self):
        rng = random.Random(5)
        perms = all_permutations(4)
        for _ in range(100):
            v, w = rng.choice(perms), rng.choice(perms)
            sigma = sigma_restriction(v, w)
            assert tuple(project_s1(sigma)) == brute_project(sigma, 4)

    def test_positive_roots_never_cancel(self):
        # every summand has positive projection, so degree pins the sum
        for v in all_permutations(4):
            for w in all_permutations(4):
                if bruhat_leq(v, w):
                    value = p_restriction(v, w)
                    assert value.coeff > 0
                    assert value.degree == inversions(v)
                else:
                    assert p_restriction(v, w) == S1_ZERO


class TestSummands:
    def test_sum_matches_restriction(self):
        for v in all_permutations(4):
            for w in all_permutations(4):
                parts = p_summands(v, w)
                total = sum(s.coeff for s in parts)
                assert p_restriction(v, w).coeff == total

    def test_worked_diagonal_entry(self):
        w = (5, 4, 3, 2, 1, 8, 7, 6)
        roll = (5, 2, 1, 3, 4, 8, 6, 7)
        assert p_restriction(roll, w) == S1Value(144, 7)


class TestMatrix:
    def test_full_flag_s3_triangular(self):
        points = all_permutations(3)
        rolls = {w: w for w in points}
        matrix = restriction_matrix(points, rolls)
        report = check_upper_triangular(matrix)
        assert report.passed
        assert matrix.entry((1, 2, 3), (3, 2, 1)) == S1Value(1, 0)

    def test_negative_control(self):
        # rolling everything down to the longest element breaks the diagonal
        points = all_permutations(3)
        w0 = (3, 2, 1)
        rolls = {w: w0 for w in points}
        report = check_upper_triangular(restriction_matrix(points, rolls))
        assert not report.passed
        assert not report.diagonal_ok
        assert (1, 2, 3) in report.diagonal_zeros

    def test_jobs_do_not_change_values(self):
        points = all_permutations(3)
        rolls = {w: w for w in points}
        assert (
            restriction_matrix(points, rolls, jobs=3).values
            == restriction_matrix(points, rolls).values
        )
