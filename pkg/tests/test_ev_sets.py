"""
Tests for Ev multisets and the even row/column sets.
"""

import pytest

from algebra.errors import DomainError
from algebra.ev_sets import WeightedPartitions, ev, r_even_cols, r_even_rows, stabilization_report
from algebra.partitions import Partition, conjugate, partitions_of


class TestEv:
    """Test the Ev(lambda) construction."""

    def test_three_two_two(self):
        """Test Ev((3,2,2)) with its multiplicities."""
        assert ev((3, 2, 2)) == {
            (6, 4, 4): 1,
            (6, 4, 2, 2): 2,
            (6, 2, 2, 2, 2): 1,
            (4, 4, 3, 3): 1,
            (4, 3, 3, 2, 2): 2,
            (3, 3, 2, 2, 2, 2): 1,
        }

    def test_all_ones(self):
        """Test Ev((1,1,1,1)) and its binomial multiplicities."""
        result = ev((1, 1, 1, 1))
        assert result == {
            (2, 2, 2, 2): 1,
            (2, 2, 2, 1, 1): 4,
            (2, 2, 1, 1, 1, 1): 6,
            (2, 1, 1, 1, 1, 1, 1): 4,
            (1,) * 8: 1,
        }
        assert result.total_weight == 16

    def test_two_two(self):
        """Test Ev((2,2))."""
        assert ev((2, 2)) == {(4, 4): 1, (4, 2, 2): 2, (2, 2, 2, 2): 1}

    def test_single_part(self):
        """Test that one part r gives (2r) and (r,r)."""
        assert ev((5,)) == {(10,): 1, (5, 5): 1}

    def test_total_weight_is_power_of_two(self):
        """Test that the multiplicities sum to 2^l(lambda)."""
        for lam in partitions_of(6):
            assert ev(lam).total_weight == 2 ** len(lam)

    def test_every_entry_has_double_size(self):
        """Test that every entry has size 2|lambda|."""
        for lam in partitions_of(5):
            assert all(tilde.size == 10 for tilde in ev(lam))

    def test_empty_partition_rejected(self):
        """Test that Ev of the empty partition is rejected."""
        with pytest.raises(DomainError):
            ev(())


class TestWeightedPartitions:
    """Test the multiset container."""

    def test_rejects_nonpositive_multiplicity(self):
        """Test that multiplicities must be positive."""
        with pytest.raises(DomainError):
            WeightedPartitions({(2, 1): 0})

    def test_keys_become_partitions(self):
        """Test that raw tuple keys are stored as partitions."""
        weighted = WeightedPartitions({(2, 1): 3})
        assert weighted.partitions() == [Partition((2, 1))]
        assert weighted.multiplicity([2, 1]) == 3

    def test_missing_multiplicity(self):
        """Test that an absent partition has multiplicity 0."""
        assert ev((2,)).multiplicity((3, 1)) == 0

    def test_to_dict(self):
        """Test the serialized entry list."""
        assert ev((1,)).to_dict() == [
            {"partition": "2", "multiplicity": 1},
            {"partition": "1,1", "multiplicity": 1},
        ]


class TestEvenRows:
    """Test R_N(2n)."""

    def test_three_rows_of_ten(self):
        """Test R_3(10) in enumeration order."""
        assert r_even_rows(3, 10) == [(10,), (8, 2), (6, 4), (6, 2, 2), (4, 4, 2)]

    def test_three_rows_of_eight(self):
        """Test R_3(8) in enumeration order."""
        assert r_even_rows(3, 8) == [(8,), (6, 2), (4, 4), (4, 2, 2)]

    def test_single_row(self):
        """Test that one row allows only (2n)."""
        assert r_even_rows(1, 6) == [(6,)]

    def test_odd_size_rejected(self):
        """Test that an odd size is rejected."""
        with pytest.raises(DomainError):
            r_even_rows(3, 7)

    def test_nonpositive_N_rejected(self):
        """Test that N must be positive."""
        with pytest.raises(DomainError):
            r_even_rows(0, 4)


class TestEvenColumns:
    """Test R_N^c(2n)."""

    def test_four_rows_of_ten(self):
        """Test R_4^c(10)."""
        assert r_even_cols(4, 10) == [(5, 5), (4, 4, 1, 1), (3, 3, 2, 2)]

    @pytest.mark.parametrize("n", [1, 3, 4, 7])
    def test_two_rows_is_single_rectangle(self, n):
        """Test that two rows allow only (n,n)."""
        assert r_even_cols(2, 2 * n) == [(n, n)]

    def test_odd_N_rounds_down(self):
        """Test that an odd N behaves like N - 1."""
        assert r_even_cols(5, 8) == r_even_cols(4, 8)

    def test_one_row_is_empty(self):
        """Test that one row allows nothing."""
        assert r_even_cols(1, 6) == []

    def test_odd_size_rejected(self):
        """Test that an odd size is rejected."""
        with pytest.raises(DomainError):
            r_even_cols(2, 5)

    def test_conjugate_to_even_rows(self):
        """Test that at N = 2n the column set is the conjugate of the row set."""
        rows = set(r_even_rows(8, 8))
        assert {conjugate(mu) for mu in r_even_cols(8, 8)} == rows


class TestStabilization:
    """Test where the sets stop growing."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_report(self, n):
        """Test where both sets stop growing."""
        assert stabilization_report(n) == {
            "rows_stabilize_at_n": True,
            "cols_stabilize_at_2n": True,
            "conjugate_at_2n": True,
        }
