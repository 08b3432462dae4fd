"""
The multiset Ev(lambda) and the column sets R_N(2n), R_N^c(2n).
"""

from itertools import product
from math import comb
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from logger import get_logger

from .errors import DomainError
from .partitions import Partition, conjugate, partitions_of

logger = get_logger(__name__)


class WeightedPartitions:
    """
    Partitions with positive multiplicities, kept in reverse-lexicographic order.
    """

    def __init__(self, entries: Optional[Dict[Tuple[int, ...], int]] = None):
        merged: Dict[Partition, int] = {}
        for partition, multiplicity in (entries or {}).items():
            if multiplicity <= 0:
                raise DomainError(f"multiplicities must be positive, got {multiplicity} for {partition}")
            key = Partition(partition)
            merged[key] = merged.get(key, 0) + multiplicity
        self._entries = dict(sorted(merged.items(), reverse=True))

    def items(self) -> Iterator[Tuple[Partition, int]]:
        return iter(self._entries.items())

    def partitions(self) -> List[Partition]:
        return list(self._entries)

    def multiplicity(self, partition: Iterable[int]) -> int:
        return self._entries.get(Partition(partition), 0)

    @property
    def total_weight(self) -> int:
        return sum(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WeightedPartitions):
            return self._entries == other._entries
        if isinstance(other, dict):
            return self._entries == {Partition(k): v for k, v in other.items()}
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"({p}): {m}" for p, m in self._entries.items())
        return f"WeightedPartitions({{{body}}})"

    def to_dict(self) -> List[Dict[str, object]]:
        return [
            {"partition": str(partition), "multiplicity": multiplicity}
            for partition, multiplicity in self._entries.items()
        ]


def ev(lam: Iterable[int]) -> WeightedPartitions:
    """
    Build Ev(lam): every part c is either doubled to 2c or duplicated to (c, c).

    Choices are grouped per distinct part size: doubling k of the d copies of
    c can be done in binom(d, k) ways, so the result has one entry per choice
    vector rather than 2^{l(lam)} tuples.

    Raises:
        DomainError: for the empty partition
    """
    lam = Partition(lam)
    if not lam:
        raise DomainError("Ev is defined for partitions of size at least 1")

    groups = []
    for part, count in sorted(lam.multiplicities().items(), reverse=True):
        groups.append([
            ((2 * part,) * k + (part,) * (2 * (count - k)), comb(count, k))
            for k in range(count + 1)
        ])

    entries: Dict[Partition, int] = {}
    for choice in product(*groups):
        parts = [p for chunk, _ in choice for p in chunk]
        weight = 1
        for _, ways in choice:
            weight *= ways
        key = Partition.from_parts(parts)
        entries[key] = entries.get(key, 0) + weight
    return WeightedPartitions(entries)


def _require_even(two_n: int) -> int:
    if two_n < 0 or two_n % 2:
        raise DomainError(f"column sets need an even nonnegative size, got {two_n}")
    return two_n // 2


def r_even_rows(N: int, two_n: int) -> List[Partition]:
    """R_N(2n): partitions of 2n with at most N parts, every part even."""
    n = _require_even(two_n)
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    return [Partition(2 * p for p in nu) for nu in partitions_of(n, max_length=N)]


def r_even_cols(N: int, two_n: int) -> List[Partition]:
    """R_N^c(2n): partitions of 2n with at most N parts, every column even."""
    n = _require_even(two_n)
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    return [
        Partition(p for p in nu for _ in range(2))
        for nu in partitions_of(n, max_length=N // 2)
    ]


def stabilization_report(n: int) -> Dict[str, bool]:
    """
    Check where R_N(2n) and R_N^c(2n) stop growing and that they are
    conjugate once both have stabilized.
    """
    two_n = 2 * n
    rows_stable = all(r_even_rows(N, two_n) == r_even_rows(n, two_n) for N in range(n, 2 * n + 3))
    cols_stable = all(r_even_cols(N, two_n) == r_even_cols(two_n, two_n) for N in range(two_n, two_n + 3))
    rows = set(r_even_rows(two_n, two_n))
    conjugates = {conjugate(mu) for mu in r_even_cols(two_n, two_n)}
    report = {
        "rows_stabilize_at_n": rows_stable,
        "cols_stabilize_at_2n": cols_stable,
        "conjugate_at_2n": rows == conjugates,
    }
    logger.debug(f"Stabilization for 2n={two_n}: {report}")
    return report
