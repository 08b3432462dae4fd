"""
Tests for the Murnaghan-Nakayama character engine.
"""

import pytest

from algebra.char_cache import CharacterCache
from algebra.characters import CharQuery, CharacterEngine, rim_hook_removals
from algebra.errors import SizeMismatchError
from algebra.ev_sets import r_even_rows
from algebra.partitions import (
    Partition, centralizer_size, class_size, conjugate, hook_degree, partitions_of,
)


class TestCharQuery:
    """Test query validation."""

    def test_normalizes_to_partitions(self):
        """Test that raw sequences become Partition objects."""
        query = CharQuery.of([2, 1], (1, 1, 1))
        assert isinstance(query.mu, Partition)
        assert query.lam == (1, 1, 1)

    def test_size_mismatch(self):
        """Test that a query over different sizes is rejected."""
        with pytest.raises(SizeMismatchError):
            CharQuery.of((2,), (1,))


class TestRimHooks:
    """Test border strip removal on beta-sets."""

    def test_two_by_two_dominoes(self):
        """Test both domino removals from (2,2) and their heights."""
        removals = dict(rim_hook_removals((2, 2), 2))
        assert removals == {(1, 1): -1, (2,): 1}

    def test_no_strip_of_given_length(self):
        """Test that a shape without a strip of that length yields nothing."""
        assert list(rim_hook_removals((2, 1), 2)) == []

    def test_whole_row(self):
        """Test removal of a whole one-row shape."""
        assert list(rim_hook_removals((4,), 4)) == [((), 1)]


class TestCharacterValues:
    """Test character values against worked tables."""

    def test_trivial_character(self, engine):
        """Test that the trivial character is 1 on every class."""
        for lam in partitions_of(8):
            assert engine.chi((8,), lam) == 1

    @pytest.mark.parametrize("mu,lam,expected", [
        ((4, 4), (1,) * 8, 14),
        ((4, 2, 2), (2, 2, 2, 1, 1), 4),
        ((6, 2), (4, 2, 2), 2),
        ((4, 4), (2, 2, 2, 2), 6),
        ((2, 2), (2, 2), 2),
    ])
    def test_published_values(self, engine, mu, lam, expected):
        """Test character values from the worked partial tables."""
        assert engine.chi(mu, lam) == expected

    def test_degree_is_hook_count(self, engine):
        """Test that the identity class gives the hook length degree."""
        for mu in partitions_of(7):
            assert engine.chi(mu, (1,) * 7) == hook_degree(mu)

    def test_size_mismatch(self, engine):
        """Test that chi rejects shape and class of different sizes."""
        with pytest.raises(SizeMismatchError):
            engine.chi((3,), (2,))

    def test_empty_partition(self, engine):
        """Test the character of the empty shape."""
        assert engine.chi((), ()) == 1

    def test_s3_table(self, engine):
        """Test the full character table of S_3."""
        assert engine.character_table(3) == [
            [1, 1, 1],
            [-1, 0, 2],
            [1, -1, 1],
        ]

    def test_row_orthogonality(self, engine):
        """Test the first orthogonality relation for S_6."""
        shapes = partitions_of(6)
        for a in shapes:
            for b in shapes:
                inner = sum(
                    class_size(lam) * engine.chi(a, lam) * engine.chi(b, lam)
                    for lam in shapes
                )
                assert inner == (720 if a == b else 0)

    def test_column_orthogonality(self, engine):
        """Test that squared column entries sum to the centralizer size."""
        for lam in partitions_of(5):
            assert sum(engine.chi(mu, lam) ** 2 for mu in partitions_of(5)) == centralizer_size(lam)

    def test_sign_twist(self, engine):
        """Test chi of the conjugate shape against the sign of the class."""
        for lam in partitions_of(6):
            for mu in partitions_of(6):
                assert engine.sign_twist_holds(mu, lam)

    def test_conjugate_on_identity_class(self, engine):
        """Test that conjugate shapes share a degree."""
        assert engine.chi(conjugate((5, 1)), (1,) * 6) == engine.chi((5, 1), (1,) * 6)


class TestColumnSums:
    """Test column sums over R_3(8)."""

    def test_identity_class(self, engine):
        """Test the R_3(8) column sum on the identity class."""
        assert engine.chi_column_sum(r_even_rows(3, 8), (1,) * 8) == 91

    def test_fixed_point_free_involution(self, engine):
        """Test the R_3(8) column sum on the class (2,2,2,2)."""
        assert engine.chi_column_sum(r_even_rows(3, 8), (2, 2, 2, 2)) == 19

    def test_single_column(self, engine):
        """Test a column holding one shape."""
        assert engine.chi_column_sum([(8,)], (8,)) == 1

    def test_worker_count_does_not_change_sum(self, engine):
        """Test that threaded summation matches the serial sum."""
        column = r_even_rows(3, 10)
        serial = engine.chi_column_sum(column, (2, 2, 1, 1, 1, 1, 1, 1))
        fresh = CharacterEngine(CharacterCache())
        assert fresh.chi_column_sum(column, (2, 2, 1, 1, 1, 1, 1, 1), workers=4) == serial


class TestMemo:
    """Test that evaluations land in the cache."""

    def test_values_are_cached(self, engine):
        """Test that an evaluation is stored in the cache."""
        engine.chi((4, 4), (2, 2, 2, 2))
        assert ((4, 4), (2, 2, 2, 2)) in engine.cache

    def test_cached_value_is_reused(self):
        """Test that a preloaded cache value wins over recomputation."""
        cache = CharacterCache()
        cache.put(((2,), (2,)), 99)
        assert CharacterEngine(cache).chi((2,), (2,)) == 99
