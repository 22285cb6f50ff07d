"""Fixed point classes, catalog words, closed forms, and the basis theorem."""

import itertools
from collections import Counter

import pytest

from hesspin.billey import S1Value, p_restriction
from hesspin.hess334 import (
    FixedPointClass,
    Theorem334Report,
    associated_subset,
    catalog_reduced_word,
    classify,
    closed_form_restriction,
    consecutive_substrings,
    fixed_points_334,
    has_321_string,
    head,
    is_334_fixed_point,
    peterson_fixed_point,
    rolldown_closed_form,
    rolldown_closed_form_word,
    simple_summand_census,
    summand_census,
    tail,
    type_231_fixed_point,
    type_312_fixed_point,
    verify_334_theorem,
)
from hesspin.fillings import hessenberg_334
from hesspin.permutations import from_word, inversions, is_reduced_word
from hesspin.pinball import rolldown

PET_NO = FixedPointClass.PETERSON_NO_321
PET_321 = FixedPointClass.PETERSON_321
T312 = FixedPointClass.TYPE_312
T231 = FixedPointClass.TYPE_231


def _subsets(n):
    items = range(1, n)
    for k in range(n):
        yield from (frozenset(c) for c in itertools.combinations(items, k))


def _leading_subsets(n):
    return (s for s in _subsets(n) if {1, 2} <= s and min(s, default=0) == 1)


class TestMembership:
    def test_counts(self):
        for n in range(4, 8):
            points = fixed_points_334(n)
            assert len(points) == 3 * 2 ** (n - 2)
            counts = Counter(classify(w) for w in points)
            assert counts[PET_NO] + counts[PET_321] == 2 ** (n - 1)
            assert counts[T312] == 2 ** (n - 3)
            assert counts[T231] == 2 ** (n - 3)

    def test_is_fixed_point(self):
        assert is_334_fixed_point((4, 3, 2, 1))
        assert not is_334_fixed_point((2, 3, 4, 1))
        with pytest.raises(ValueError):
            is_334_fixed_point((3, 2, 1))

    def test_classify_rejects_non_fixed_points(self):
        with pytest.raises(ValueError, match="not a 334-type fixed point"):
            classify((2, 3, 4, 1))


class TestConstructorsPartition:
    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_classes_partition_fixed_points(self, n):
        built = {}
        for subset in _subsets(n):
            w = peterson_fixed_point(subset, n)
            built[w] = PET_321 if {1, 2} <= subset else PET_NO
        for subset in _leading_subsets(n):
            built[type_312_fixed_point(subset, n)] = T312
            built[type_231_fixed_point(subset, n)] = T231
        points = fixed_points_334(n)
        assert sorted(built) == list(points)
        for w in points:
            assert classify(w) == built[w], w

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_subsets_round_trip(self, n):
        for subset in _subsets(n):
            assert associated_subset(peterson_fixed_point(subset, n)) == subset
        for subset in _leading_subsets(n):
            assert associated_subset(type_312_fixed_point(subset, n)) == subset
            assert associated_subset(type_231_fixed_point(subset, n)) == subset

    def test_constructors_reject_bad_subsets(self):
        with pytest.raises(ValueError):
            peterson_fixed_point({0}, 4)
        with pytest.raises(ValueError):
            peterson_fixed_point({4}, 4)
        with pytest.raises(ValueError, match="must contain"):
            type_312_fixed_point({1, 3}, 5)
        with pytest.raises(ValueError, match="must contain"):
            type_231_fixed_point({2, 3}, 5)

    def test_321_string_matches_subset(self):
        for n in (4, 5, 6):
            for subset in _subsets(n):
                w = peterson_fixed_point(subset, n)
                assert has_321_string(w) == ({1, 2} <= subset)


class TestAssociatedSubsets:
    def test_worked_examples(self):
        expected = frozenset({1, 2, 3, 4, 6, 7})
        assert associated_subset((5, 4, 3, 2, 1, 8, 7, 6)) == expected
        assert associated_subset((4, 5, 3, 2, 1, 8, 7, 6)) == expected
        assert associated_subset((5, 1, 4, 3, 2, 8, 7, 6)) == expected

    def test_substring_decomposition(self):
        subset = frozenset({1, 2, 3, 4, 6, 7})
        assert consecutive_substrings(subset) == ((1, 4), (6, 7))
        assert head(subset, 1) == 4
        assert tail(subset, 4) == 1
        assert head(subset, 6) == 7
        with pytest.raises(ValueError):
            head(subset, 5)


class TestCatalogWords:
    def test_worked_examples(self):
        assert catalog_reduced_word((4, 3, 2, 1, 7, 6, 5)) == (1, 2, 1, 3, 2, 1, 5, 6, 5)
        assert catalog_reduced_word((3, 4, 2, 1, 7, 6, 5)) == (1, 2, 1, 3, 2, 5, 6, 5)
        assert catalog_reduced_word((4, 1, 3, 2, 7, 6, 5)) == (2, 3, 2, 1, 5, 6, 5)

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_words_are_reduced_for_their_point(self, n):
        for w in fixed_points_334(n):
            word = catalog_reduced_word(w)
            assert is_reduced_word(n, word)
            assert from_word(n, word) == w
            assert len(word) == inversions(w)


class TestRolldownClosedForms:
    def test_worked_examples_n8(self):
        assert rolldown_closed_form_word((5, 4, 3, 2, 1, 8, 7, 6)) == (7, 6, 4, 3, 1, 2, 1)
        assert rolldown_closed_form_word((4, 5, 3, 2, 1, 8, 7, 6)) == (7, 6, 4, 3, 1, 2)
        assert rolldown_closed_form_word((5, 1, 4, 3, 2, 8, 7, 6)) == (7, 6, 4, 3, 2, 1)

    def test_matches_dimension_pair_rolldown_n8_examples(self):
        h = hessenberg_334(8)
        for w in [
            (5, 4, 3, 2, 1, 8, 7, 6),
            (4, 5, 3, 2, 1, 8, 7, 6),
            (5, 1, 4, 3, 2, 8, 7, 6),
        ]:
            assert rolldown_closed_form(w) == rolldown(w, (8,), h)

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_matches_dimension_pair_rolldown(self, n):
        h = hessenberg_334(n)
        for w in fixed_points_334(n):
            assert rolldown_closed_form(w) == rolldown(w, (n,), h)

    def test_one_line_prefixes_n8(self):
        assert rolldown_closed_form((5, 4, 3, 2, 1, 8, 7, 6))[:5] == (5, 2, 1, 3, 4)
        assert rolldown_closed_form((4, 5, 3, 2, 1, 8, 7, 6))[:5] == (2, 5, 1, 3, 4)
        assert rolldown_closed_form((5, 1, 4, 3, 2, 8, 7, 6))[:5] == (5, 1, 2, 3, 4)

    def test_peterson_no_321_is_descending_word(self):
        for n in (4, 5, 6):
            for w in fixed_points_334(n):
                if classify(w) is PET_NO:
                    word = tuple(sorted(associated_subset(w), reverse=True))
                    assert rolldown_closed_form_word(w) == word


class TestClosedFormRestrictions:
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_matches_subword_evaluation(self, n):
        # canonical words here, independent of the catalog-word path
        for w in fixed_points_334(n):
            value = p_restriction(rolldown_closed_form(w), w)
            assert value == closed_form_restriction(w), w

    def test_degree_by_class(self):
        for n in (4, 5, 6):
            for w in fixed_points_334(n):
                size = len(associated_subset(w))
                expected = size + 1 if classify(w) is PET_321 else size
                assert closed_form_restriction(w).degree == expected

    def test_identity_restriction(self):
        assert closed_form_restriction((1, 2, 3, 4)) == S1Value(1, 0)

    def test_worked_value(self):
        assert closed_form_restriction((5, 4, 3, 2, 1, 8, 7, 6)) == S1Value(144, 7)


class TestSummandCensuses:
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_rolldown_summands(self, n):
        for w in fixed_points_334(n):
            census = summand_census(w)
            assert census.passed, (w, census)
            expected = (
                head(associated_subset(w), 1) - 1
                if classify(w) in (PET_321, T312)
                else 1
            )
            assert census.count == expected

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_simple_reflection_summands(self, n):
        for w in fixed_points_334(n):
            for row in simple_summand_census(w):
                assert row.passed, (w, row)

    def test_worked_example_counts(self):
        assert summand_census((5, 4, 3, 2, 1, 8, 7, 6)).count == 3
        assert summand_census((4, 5, 3, 2, 1, 8, 7, 6)).count == 3
        assert summand_census((5, 1, 4, 3, 2, 8, 7, 6)).count == 1
        census = summand_census((4, 3, 2, 1, 7, 6, 5))
        assert census.count == 2
        assert census.common == S1Value(12, 6)
        assert census.total == S1Value(24, 6)


class TestTheorem:
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_passes(self, n):
        report = verify_334_theorem(n)
        assert isinstance(report, Theorem334Report)
        assert report.passed
        names = [c.name for c in report.checks()]
        for required in (
            "rolldowns-distinct",
            "rolldown-below-fixed-point",
            "betti-match",
            "rolldown-closed-form",
            "diagonal-nonzero",
            "bruhat-vanishing",
            "rolldown-bruhat-equivalence",
            "containment-criterion",
            "forbidden-relations",
            "initial-segment-criterion",
            "summand-census",
        ):
            assert required in names

    def test_jobs_match_serial(self):
        serial = verify_334_theorem(4)
        parallel = verify_334_theorem(4, jobs=4)
        assert serial.matrix.values == parallel.matrix.values
        assert parallel.passed

    @pytest.mark.slow
    def test_passes_n7(self):
        assert verify_334_theorem(7).passed

    @pytest.mark.slow
    def test_passes_n8(self):
        assert verify_334_theorem(8, jobs=4).passed

    def test_rejects_small_n(self):
        with pytest.raises(ValueError, match="n >= 4"):
            verify_334_theorem(3)
