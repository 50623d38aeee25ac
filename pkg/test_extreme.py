"""
Extreme points of the max-doubly stochastic matrices: singleton structure,
enumeration against the exhaustive oracle, and block decompositions
"""

import itertools

import pytest

from conftest import EXTREME_REPRESENTATIVES_2, EXTREME_REPRESENTATIVES_3, zero_one_matrices
from errors import CapacityError, ClassificationError, ValidationError
from extreme import (
    Column,
    EntryClass,
    ExtremeDecomposition,
    Hook,
    Row,
    block_lists,
    decompose_extreme,
    enumerate_extreme,
    is_max_extreme,
    lowerable_entries,
    non_extremality_witness,
    realize,
    singleton_profile,
    zero_one_pattern,
)
from oracles import brute_extreme_points
from semiring import MaxMatrix, Permutation, permute
from stochastic import classify


def _all_permutations(n):
    return [Permutation(p) for p in itertools.permutations(range(n))]


class TestSingletons:
    def test_hook_profile(self):
        profile = singleton_profile(MaxMatrix([[1, 1], [1, 0]]))
        assert profile == {
            (0, 0): EntryClass.NON_SINGLETON,
            (0, 1): EntryClass.COLUMN_SINGLETON,
            (1, 0): EntryClass.ROW_SINGLETON,
        }

    def test_permutation_entries_are_both_singletons(self):
        profile = singleton_profile(MaxMatrix.identity(3))
        assert set(profile.values()) == {EntryClass.BOTH_SINGLETON}
        assert len(profile) == 3

    def test_fractional_entry_is_reported_one_based(self):
        with pytest.raises(ClassificationError) as excinfo:
            zero_one_pattern(MaxMatrix([[1, 0], [0.5, 1]]))
        assert (excinfo.value.row, excinfo.value.col, excinfo.value.value) == (1, 0, 0.5)
        assert "(2,1)" in str(excinfo.value)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_lowerable_entries_are_the_non_singletons(self, n):
        for E in zero_one_matrices(n):
            if not classify(E).doubly:
                continue
            non_singletons = sorted(
                pos for pos, kind in singleton_profile(E).items()
                if kind is EntryClass.NON_SINGLETON)
            assert lowerable_entries(E) == non_singletons


class TestExtremeTest:
    def test_sample_matrices(self, d1, d2):
        assert is_max_extreme(MaxMatrix.identity(3))
        assert not is_max_extreme(d1)
        assert not is_max_extreme(d2)

    @pytest.mark.parametrize("data", EXTREME_REPRESENTATIVES_3 + EXTREME_REPRESENTATIVES_2)
    def test_representatives_are_extreme(self, data):
        assert is_max_extreme(MaxMatrix(data))

    def test_non_doubly_stochastic_is_not_extreme(self):
        assert not is_max_extreme(MaxMatrix([[1, 0], [1, 0]]))
        assert not is_max_extreme(MaxMatrix([[1, 1], [1, 1]]))


class TestBlocks:
    def test_realizations(self):
        assert realize([Hook(2, 3)]) == MaxMatrix([[1, 1, 1], [1, 0, 0]])
        assert realize([Column(2), Row(2)]) == MaxMatrix([[1, 0, 0], [1, 0, 0], [0, 1, 1]])
        assert realize([Hook(2, 2), Column(1)]) == MaxMatrix([[1, 1, 0], [1, 0, 0], [0, 0, 1]])

    @pytest.mark.parametrize("make", [
        lambda: Hook(1, 3),
        lambda: Hook(3, 1),
        lambda: Column(0),
        lambda: Row(0),
    ])
    def test_degenerate_blocks_are_rejected(self, make):
        with pytest.raises(ValidationError):
            make()

    @pytest.mark.parametrize("blocks", [
        [],
        [Column(1), Hook(2, 2)],
        [Hook(2, 2), Hook(2, 2)],
    ])
    def test_invalid_block_lists(self, blocks):
        with pytest.raises(ValidationError):
            realize(blocks)

    def test_block_lists_for_two(self):
        assert sorted(block_lists(2), key=repr) == sorted(
            [(Column(1), Column(1)), (Hook(2, 2),)], key=repr)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_every_block_list_realizes_an_extreme_point(self, n):
        for blocks in block_lists(n):
            E = realize(blocks)
            assert E.shape == (n, n)
            assert is_max_extreme(E)


class TestEnumeration:
    def test_two_by_two(self):
        points = enumerate_extreme(2)
        assert len(points) == 6
        assert points == brute_extreme_points(2)

    def test_three_by_three_matches_the_oracle(self):
        points = enumerate_extreme(3)
        assert set(points) == set(brute_extreme_points(3))
        for data in EXTREME_REPRESENTATIVES_3:
            assert MaxMatrix(data) in points

    @pytest.mark.parametrize("n, representatives", [
        (2, EXTREME_REPRESENTATIVES_2),
        (3, EXTREME_REPRESENTATIVES_3),
    ])
    def test_orbits_of_the_representatives(self, n, representatives):
        perms = _all_permutations(n)
        orbit = {
            permute(MaxMatrix(data), p, q)
            for data in representatives for p in perms for q in perms
        }
        assert orbit == set(enumerate_extreme(n))

    def test_four_by_four_matches_the_oracle(self):
        assert set(enumerate_extreme(4)) == set(brute_extreme_points(4))

    def test_one_by_one(self):
        assert enumerate_extreme(1) == (MaxMatrix([[1.0]]),)

    def test_output_is_sorted_without_duplicates(self):
        points = enumerate_extreme(3)
        assert list(points) == sorted(set(points))

    def test_bounds(self):
        with pytest.raises(ValidationError):
            enumerate_extreme(0)
        with pytest.raises(CapacityError):
            enumerate_extreme(3, bound=2)


class TestDecomposition:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_round_trip(self, n):
        for E in enumerate_extreme(n):
            decomposition = decompose_extreme(E)
            assert decomposition.reconstruct() == E
            non_singletons = [
                kind for kind in singleton_profile(E).values()
                if kind is EntryClass.NON_SINGLETON]
            has_hook = any(isinstance(b, Hook) for b in decomposition.blocks)
            assert has_hook == (len(non_singletons) == 1)

    def test_column_and_row_example(self):
        E = MaxMatrix([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
        decomposition = decompose_extreme(E)
        assert decomposition.blocks == (Column(2), Row(2))
        assert decomposition.reconstruct() == E

    def test_blocks_are_in_canonical_order(self):
        E = permute(realize([Hook(2, 2), Column(2), Column(1), Row(2)]),
                    Permutation((5, 3, 0, 4, 1, 2)), Permutation((2, 0, 5, 1, 4, 3)))
        decomposition = decompose_extreme(E)
        assert decomposition.blocks == (Hook(2, 2), Column(2), Column(1), Row(2))
        assert decomposition.reconstruct() == E

    def test_document_uses_one_based_permutations(self):
        doc = ExtremeDecomposition(Permutation((1, 0)), (Column(1), Column(1)), Permutation((0, 1))).as_dict()
        assert doc == {
            "p_left": [2, 1],
            "blocks": [{"kind": "column", "m": 1}, {"kind": "column", "m": 1}],
            "p_right": [1, 2],
        }

    def test_rejects_non_extreme_input(self, d2):
        with pytest.raises(ValidationError):
            decompose_extreme(d2)


class TestNonExtremalityWitness:
    def _assert_valid(self, E, witness):
        assert classify(witness.d1).doubly
        assert classify(witness.d2).doubly
        assert witness.d1 != E and witness.d2 != E
        assert witness.combine() == E

    def test_fractional_entry(self, d1):
        witness = non_extremality_witness(d1)
        assert witness.alpha1 == 1.0
        assert witness.alpha2 == 0.5
        self._assert_valid(d1, witness)

    def test_two_non_singletons(self, d2):
        self._assert_valid(d2, non_extremality_witness(d2))

    @pytest.mark.parametrize("n", [2, 3])
    def test_exists_exactly_for_non_extreme_patterns(self, n):
        for E in zero_one_matrices(n):
            if not classify(E).doubly:
                continue
            witness = non_extremality_witness(E)
            if is_max_extreme(E):
                assert witness is None
            else:
                self._assert_valid(E, witness)

    def test_rejects_non_doubly_stochastic(self):
        with pytest.raises(ValidationError):
            non_extremality_witness(MaxMatrix([[0.5, 0], [0, 1]]))
