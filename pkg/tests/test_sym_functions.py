"""
Tests for monomial-basis arithmetic, Jacobi-Trudi inner products and
dual-Pieri chain counts.
"""

import pytest
import sympy
from sympy.utilities.iterables import multiset_permutations

from algebra.errors import SizeMismatchError
from algebra.ev_sets import r_even_rows
from algebra.partitions import Partition, partitions_of
from algebra.sym_functions import (
    SymFuncM, check_thm32, count_vertical_strip_chains, doubled_monomial_product,
    ev_signed_power_sum, inner_m_schur, inner_m_schur_sum, jacobi_trudi_h, m_power,
    m_product, power_to_m, shape_in, shape_is,
)


def monomial_poly(lam, symbols):
    """m_lam in finitely many variables, expanded with sympy."""
    padded = list(lam) + [0] * (len(symbols) - len(lam))
    return sum(
        sympy.prod([x ** e for x, e in zip(symbols, exponents)])
        for exponents in multiset_permutations(padded)
    )


def m_coefficients(expr, symbols):
    """Read m-basis coefficients off the dominant monomials of a symmetric polynomial."""
    coeffs = {}
    for exponents, value in sympy.Poly(expr, *symbols).as_dict().items():
        if list(exponents) == sorted(exponents, reverse=True):
            coeffs[Partition(e for e in exponents if e)] = int(value)
    return coeffs


class TestSymFuncM:
    """Test the monomial-basis container."""

    def test_zero_coefficients_dropped(self):
        """Test that zero coefficients are not stored."""
        f = SymFuncM(2, {(2,): 0, (1, 1): 3})
        assert f.coeffs == {(1, 1): 3}

    def test_degree_mismatch(self):
        """Test that every monomial must have the declared degree."""
        with pytest.raises(SizeMismatchError):
            SymFuncM(3, {(2,): 1})

    def test_add_and_sub(self):
        """Test addition and subtraction in the m-basis."""
        f = SymFuncM.monomial((2,)) + SymFuncM.monomial((1, 1))
        assert (f - SymFuncM.monomial((2,))) == SymFuncM.monomial((1, 1))

    def test_add_different_degrees(self):
        """Test that functions of different degrees do not add."""
        with pytest.raises(SizeMismatchError):
            SymFuncM.monomial((2,)) + SymFuncM.monomial((1,))

    def test_to_dict(self):
        """Test the serialized form with comma-text keys."""
        assert SymFuncM(2, {(1, 1): 2}).to_dict() == {"degree": 2, "coeffs": {"1,1": 2}}


class TestMonomialProduct:
    """Test structure constants of the m-basis."""

    def test_pairs_of_ones(self):
        """Test the product m_11 * m_11."""
        product = m_product(SymFuncM.monomial((1, 1)), SymFuncM.monomial((1, 1)))
        assert product.coeffs == {(2, 2): 1, (2, 1, 1): 2, (1, 1, 1, 1): 6}

    def test_squares(self):
        """Test the product m_2 * m_2."""
        product = m_product(SymFuncM.monomial((2,)), SymFuncM.monomial((2,)))
        assert product.coeffs == {(4,): 1, (2, 2): 2}

    def test_identity(self):
        """Test that m_empty is the multiplicative identity."""
        f = SymFuncM(3, {(2, 1): 4, (1, 1, 1): -1})
        assert m_product(f, SymFuncM.one()) == f
        assert SymFuncM.one() * f == f

    def test_commutative(self):
        """Test that the product is commutative."""
        a, b = SymFuncM.monomial((2, 1)), SymFuncM.monomial((3, 1, 1))
        assert a * b == b * a

    @pytest.mark.parametrize("alpha,beta", [
        ((2, 1), (1, 1)),
        ((2, 2), (2, 1)),
        ((3,), (1, 1, 1)),
        ((1, 1), (1, 1, 1)),
    ])
    def test_against_sympy_expansion(self, alpha, beta):
        """Test structure constants against an explicit sympy expansion."""
        width = len(alpha) + len(beta)
        symbols = sympy.symbols(f"x0:{width}")
        expected = m_coefficients(
            sympy.expand(monomial_poly(alpha, symbols) * monomial_poly(beta, symbols)), symbols
        )
        assert m_product(SymFuncM.monomial(alpha), SymFuncM.monomial(beta)).coeffs == expected


class TestPowerSums:
    """Test power sums and the signed Ev expansion."""

    def test_single_power_sum(self):
        """Test that p_5 is m_5."""
        assert power_to_m((5,)) == SymFuncM.monomial((5,))

    def test_ones(self):
        """Test p_1 squared in the m-basis."""
        assert power_to_m((1, 1)).coeffs == {(2,): 1, (1, 1): 2}

    def test_twos(self):
        """Test p_2 squared in the m-basis."""
        assert power_to_m((2, 2)).coeffs == {(4,): 1, (2, 2): 2}

    def test_signed_sum_of_one(self):
        """Test the signed power sum over Ev((1))."""
        assert ev_signed_power_sum((1,)).coeffs == {(1, 1): 2}

    def test_signed_sum_of_two(self):
        """Test the signed power sum over Ev((2))."""
        assert ev_signed_power_sum((2,)).coeffs == {(2, 2): 2}

    def test_three_two_two(self):
        """Test that the signed sum for (3,2,2) is 8 times the doubled monomial product."""
        expected = doubled_monomial_product((3, 2, 2)).scale(8)
        assert ev_signed_power_sum((3, 2, 2)) == expected

    def test_doubled_product_factors(self):
        """Test that the doubled product multiplies m_(c,c) over the parts."""
        expected = m_product(SymFuncM.monomial((3, 3)), m_power((2, 2), 2))
        assert doubled_monomial_product((3, 2, 2)) == expected

    @pytest.mark.parametrize("lam", [(1,), (2, 2), (3, 1), (2, 1, 1)])
    def test_check(self, lam):
        """Test the signed-sum identity on a few shapes."""
        assert check_thm32(lam)

    def test_check_every_partition_up_to_six(self):
        """Test the signed-sum identity on every partition up to n = 6."""
        assert all(check_thm32(lam) for n in range(1, 7) for lam in partitions_of(n))


class TestJacobiTrudi:
    """Test the h-expansion of Schur functions."""

    def test_single_row(self):
        """Test that a one-row Schur function is h_n."""
        assert jacobi_trudi_h((4,)) == {(4,): 1}

    def test_column_of_two(self):
        """Test the h-expansion of s_11."""
        assert jacobi_trudi_h((1, 1)) == {(1, 1): 1, (2,): -1}

    def test_square(self):
        """Test the h-expansion of s_22."""
        assert jacobi_trudi_h((2, 2)) == {(2, 2): 1, (3, 1): -1}

    def test_column_of_three(self):
        """Test the h-expansion of s_111."""
        assert jacobi_trudi_h((1, 1, 1)) == {(1, 1, 1): 1, (2, 1): -2, (3,): 1}

    def test_diagonal_coefficient_is_one(self):
        """Test that <m_mu, s_mu> is 1."""
        # the h-expansion of s_mu is unitriangular
        for mu in partitions_of(5):
            assert inner_m_schur(SymFuncM.monomial(mu), mu) == 1


class TestInnerProducts:
    """Test <f, s_mu> on published counts."""

    def test_five_domino_rectangle(self):
        """Test <m_11^5, s_(2^5)> = R(5)."""
        assert inner_m_schur(m_power((1, 1), 5), (2, 2, 2, 2, 2)) == 6

    def test_four_domino_rectangle(self):
        """Test <m_11^4, s_(2^4)> = R(4)."""
        assert inner_m_schur(m_power((1, 1), 4), (2, 2, 2, 2)) == 3

    def test_four_by_two(self):
        """Test <m_11^4, s_44>."""
        # s_44 = h_4^2 - h_5 h_3 and m_11^4 has no m_53 term
        assert inner_m_schur(m_power((1, 1), 4), (4, 4)) == 1

    def test_trivial(self):
        """Test <m_11, s_11>."""
        assert inner_m_schur(SymFuncM.monomial((1, 1)), (1, 1)) == 1

    def test_degree_mismatch(self):
        """Test that f and s_mu must have the same degree."""
        with pytest.raises(SizeMismatchError):
            inner_m_schur(SymFuncM.monomial((1, 1)), (3,))

    def test_sum_over_even_rows(self):
        """Test <m_11^4, sum of s_mu over R_3(8)> = R(4)."""
        assert inner_m_schur_sum(m_power((1, 1), 4), r_even_rows(3, 8)) == 3


class TestVerticalStripChains:
    """Test dual-Pieri chain counts against the inner products."""

    def test_domino_rectangle(self):
        """Test chains ending at (2^5)."""
        assert count_vertical_strip_chains(5, shape_is((2, 2, 2, 2, 2))) == 6

    def test_even_rows(self):
        """Test chains ending in R_3(8)."""
        assert count_vertical_strip_chains(4, shape_in(r_even_rows(3, 8))) == 3

    def test_first_step(self):
        """Test that one step reaches (1,1) once."""
        assert count_vertical_strip_chains(1, shape_is((1, 1))) == 1

    @pytest.mark.parametrize("mu", [(3, 3), (2, 2, 1, 1), (4, 2), (2, 2, 2)])
    def test_matches_inner_product(self, mu):
        """Test chain counts against Jacobi-Trudi inner products."""
        n = sum(mu) // 2
        assert count_vertical_strip_chains(n, shape_is(mu)) == inner_m_schur(m_power((1, 1), n), mu)
