"""
Truncated power series in q with exact rational coefficients, and the two
q-weighted sides of the Ev character-sum identity.
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from logger import get_logger

from algebra.errors import DomainError
from algebra.partitions import Partition, centralizer_size, partitions_of
from identity_lab import ColumnSums, strong_sides

logger = get_logger(__name__)


class TruncatedRationalSeries:
    """c_0 + c_1 q + ... + c_order q^order; products drop every higher term."""

    def __init__(self, order: int, coeffs: Optional[Sequence[Union[int, Fraction]]] = None):
        if order < 0:
            raise DomainError(f"series order must be nonnegative, got {order}")
        self.order = order
        values = [Fraction(c) for c in (coeffs or [])][: order + 1]
        self.coeffs: List[Fraction] = values + [Fraction(0)] * (order + 1 - len(values))

    @classmethod
    def one(cls, order: int) -> "TruncatedRationalSeries":
        return cls(order, [1])

    def _check(self, other: "TruncatedRationalSeries") -> None:
        if self.order != other.order:
            raise DomainError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedRationalSeries") -> "TruncatedRationalSeries":
        self._check(other)
        return TruncatedRationalSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedRationalSeries") -> "TruncatedRationalSeries":
        return self + other.scale(-1)

    def __mul__(self, other: "TruncatedRationalSeries") -> "TruncatedRationalSeries":
        self._check(other)
        product = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                product[i + j] += a * other.coeffs[j]
        return TruncatedRationalSeries(self.order, product)

    def scale(self, factor: Union[int, Fraction]) -> "TruncatedRationalSeries":
        return TruncatedRationalSeries(self.order, [factor * c for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedRationalSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __getitem__(self, power: int) -> Fraction:
        return self.coeffs[power]

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*q^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"TruncatedRationalSeries({' + '.join(terms) or '0'} + O(q^{self.order + 1}))"

    def to_dict(self) -> List[Fraction]:
        return list(self.coeffs)


def _alternating_geometric(part: int, order: int) -> TruncatedRationalSeries:
    """q^r / (1 + q^r) = sum_{k>=1} (-1)^(k-1) q^(rk)."""
    coeffs = [0] * (order + 1)
    for k, power in enumerate(range(part, order + 1, part)):
        coeffs[power] = -1 if k % 2 else 1
    return TruncatedRationalSeries(order, coeffs)


def g_series(lam: Iterable[int], order: int) -> TruncatedRationalSeries:
    """prod_j q^{lam_j} / (1 + q^{lam_j}) to the given order."""
    result = TruncatedRationalSeries.one(order)
    for part in Partition(lam):
        result = result * _alternating_geometric(part, order)
    return result


def conj_q_sides(
    N: int,
    order: int,
    sums: Optional[ColumnSums] = None,
) -> Tuple[TruncatedRationalSeries, TruncatedRationalSeries]:
    """
    Both q-weighted sides summed over n <= order; g_lambda = O(q^|lambda|)
    makes the truncation exact. The n = 0 term is the constant 1 on each side.
    """
    if N < 1 or order < 1:
        raise DomainError(f"N and order must be positive, got N={N}, order={order}")
    sums = sums or ColumnSums()
    lhs = TruncatedRationalSeries.one(order)
    rhs = TruncatedRationalSeries.one(order)
    for n in range(1, order + 1):
        for lam in partitions_of(n):
            report = strong_sides(lam, N, sums)
            if not report.lhs and not report.rhs:
                continue
            weighted = g_series(lam, order).scale(Fraction(1, centralizer_size(lam)))
            lhs = lhs + weighted.scale(report.lhs)
            rhs = rhs + weighted.scale(report.rhs)
        logger.debug(f"q-series N={N}: folded in n={n}")
    return lhs, rhs


def q_series_report(N: int, order: int, sums: Optional[ColumnSums] = None) -> Dict[str, Any]:
    lhs, rhs = conj_q_sides(N, order, sums)
    integral = lhs.is_integral and rhs.is_integral
    if not integral:
        logger.warning(f"q-series sides for N={N} have non-integral coefficients")
    return {
        "N": N,
        "order": order,
        "lhs_coeffs": lhs.coeffs,
        "rhs_coeffs": rhs.coeffs,
        "equal": lhs == rhs,
        "integral": integral,
    }
