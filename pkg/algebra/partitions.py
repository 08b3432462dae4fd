"""
Integer partitions: the canonical index type for characters, conjugacy
classes and symmetric-function bases.
"""

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .errors import PartitionError


class Partition(tuple):
    """
    A weakly decreasing tuple of positive integers.

    Partition is a tuple subclass, so it hashes and compares like the plain
    tuple of its parts and can be used directly as a dictionary key.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int):
                raise PartitionError(f"parts must be integers, got {part!r}")
            if part <= 0:
                raise PartitionError(f"parts must be positive, got {parts}")
        for left, right in zip(parts, parts[1:]):
            if left < right:
                raise PartitionError(f"parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order; zero parts are dropped."""
        return cls(sorted((p for p in parts if p != 0), reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Dict[int, int]:
        """Map each distinct part to the number of times it occurs."""
        return dict(Counter(self))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def parse_partition(text: str, allow_exponents: bool = False) -> Partition:
    """
    Parse the comma text format, e.g. ``"5,2,1"``.

    Args:
        text: Comma separated parts; the empty string is the empty partition
        allow_exponents: Accept shorthand such as ``"3^2,2^3,1"``

    Returns:
        The canonical partition

    Raises:
        PartitionError: if the text is malformed or not weakly decreasing
    """
    text = text.strip()
    if not text:
        return Partition()

    parts: List[int] = []
    for token in text.split(","):
        token = token.strip()
        if "^" in token:
            if not allow_exponents:
                raise PartitionError(f"exponent shorthand not accepted here: {text!r}")
            base, _, exponent = token.partition("^")
            value, count = _parse_int(base, text), _parse_int(exponent, text)
            if count < 0:
                raise PartitionError(f"negative exponent in {text!r}")
            parts.extend([value] * count)
        else:
            parts.append(_parse_int(token, text))
    return Partition(parts)


def _parse_int(token: str, text: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise PartitionError(f"not an integer {token!r} in partition {text!r}") from None


def _generate(n: int, max_part: int, max_length: Optional[int]) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    next_length = None if max_length is None else max_length - 1
    for first in range(min(n, max_part), 0, -1):
        for rest in _generate(n - first, first, next_length):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int, max_length: Optional[int]) -> Tuple[Partition, ...]:
    return tuple(Partition(p) for p in _generate(n, n, max_length))


def partitions_of(n: int, max_length: Optional[int] = None) -> List[Partition]:
    """
    All partitions of n in reverse-lexicographic order.

    Args:
        n: Nonnegative integer
        max_length: Optional bound on the number of parts

    Returns:
        List of partitions, largest first part first
    """
    if n < 0:
        raise PartitionError(f"cannot partition a negative number: {n}")
    return list(_partitions_cached(n, max_length))


def partition_count(n: int) -> int:
    """The partition function p(n)."""
    return len(_partitions_cached(n, None))


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose the Young diagram."""
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def centralizer_size(lam: Iterable[int]) -> int:
    """z_lambda = prod_j j^{m_j} m_j!"""
    z = 1
    for part, count in Partition(lam).multiplicities().items():
        z *= part ** count * factorial(count)
    return z


def class_size(lam: Iterable[int]) -> int:
    """Number of permutations of cycle type lam."""
    lam = Partition(lam)
    return factorial(lam.size) // centralizer_size(lam)


def hook_lengths(mu: Iterable[int]) -> List[List[int]]:
    mu = Partition(mu)
    columns = conjugate(mu)
    return [
        [mu[i] - j + columns[j] - i - 1 for j in range(mu[i])]
        for i in range(len(mu))
    ]


@lru_cache(maxsize=None)
def _hook_degree(mu: Tuple[int, ...]) -> int:
    product = 1
    for row in hook_lengths(mu):
        for hook in row:
            product *= hook
    return factorial(sum(mu)) // product


def hook_degree(mu: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape mu (hook-length formula)."""
    return _hook_degree(tuple(Partition(mu)))
