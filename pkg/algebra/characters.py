"""
Irreducible characters of the symmetric groups via the Murnaghan-Nakayama rule.
"""

from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from logger import get_logger

from .char_cache import CharacterCache
from .errors import SizeMismatchError
from .partitions import Partition, conjugate, hook_degree, partitions_of

logger = get_logger(__name__)


class CharQuery(NamedTuple):
    """A character value request: irreducible mu evaluated on cycle type lam."""

    mu: Partition
    lam: Partition

    @classmethod
    def of(cls, mu: Iterable[int], lam: Iterable[int]) -> "CharQuery":
        mu, lam = Partition(mu), Partition(lam)
        if mu.size != lam.size:
            raise SizeMismatchError(
                f"character chi^{mu} needs a class of size {mu.size}, got {lam} of size {lam.size}"
            )
        return cls(mu, lam)


def rim_hook_removals(mu: Sequence[int], k: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """
    Every way of removing a border strip of length k from mu.

    Works on the beta-set of mu: a strip of length k is a bead moving from
    position b to the free position b - k, and its height is the number of
    beads jumped over.

    Yields:
        (remaining shape, (-1)^height)
    """
    length = len(mu)
    beta = [mu[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    for bead in beta:
        target = bead - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for other in beta if target < other < bead)
        moved = sorted([other for other in beta if other != bead] + [target], reverse=True)
        parts = (moved[i] - (length - 1 - i) for i in range(length))
        yield tuple(p for p in parts if p > 0), (-1 if height % 2 else 1)


class CharacterEngine:
    """
    Memoized Murnaghan-Nakayama evaluator.

    Cycles of the class are stripped in decreasing order, so every memo key is
    (shape, suffix of the sorted cycle type) and suffixes are shared widely
    across the Ev multisets.
    """

    def __init__(self, cache: Optional[CharacterCache] = None):
        self.cache = cache if cache is not None else CharacterCache()

    def chi(self, mu: Iterable[int], lam: Iterable[int]) -> int:
        """
        Exact value of the irreducible character chi^mu on cycle type lam.

        Raises:
            SizeMismatchError: if |mu| != |lam|
        """
        query = CharQuery.of(mu, lam)
        return self._evaluate(tuple(query.mu), tuple(query.lam))

    def _evaluate(self, mu: Tuple[int, ...], lam: Tuple[int, ...]) -> int:
        if not lam:
            return 1
        key = (mu, lam)
        cached = self.cache.get(key)
        if cached is not None:
            return cached

        if lam[0] == 1:
            value = hook_degree(mu)
        else:
            value = 0
            rest = lam[1:]
            for shape, sign in rim_hook_removals(mu, lam[0]):
                value += sign * self._evaluate(shape, rest)

        self.cache.put(key, value)
        return value

    def chi_column_sum(self, mus: Sequence[Iterable[int]], lam: Iterable[int], workers: int = 1) -> int:
        """Sum of chi(mu, lam) over the given mus."""
        from parallel_runner import ordered_sum

        lam = Partition(lam)
        mus = list(mus)
        logger.debug(f"Column sum over {len(mus)} characters at {lam}, cache size {len(self.cache)}")
        return ordered_sum(lambda mu: self.chi(mu, lam), mus, workers)

    def character_table(self, n: int) -> List[List[int]]:
        """Rows indexed by characters, columns by classes, both in partitions_of(n) order."""
        shapes = partitions_of(n)
        return [[self.chi(mu, lam) for lam in shapes] for mu in shapes]

    def sign_twist_holds(self, mu: Iterable[int], lam: Iterable[int]) -> bool:
        """(-1)^{l(lam)} chi^mu_lam == chi^{mu'}_lam, valid when |lam| is even."""
        mu, lam = Partition(mu), Partition(lam)
        sign = -1 if len(lam) % 2 else 1
        return sign * self.chi(mu, lam) == self.chi(conjugate(mu), lam)


# Process-wide engine; the CLI warm-loads and saves its cache.
default_engine = CharacterEngine()


def chi(mu: Iterable[int], lam: Iterable[int]) -> int:
    return default_engine.chi(mu, lam)


def chi_column_sum(mus: Sequence[Iterable[int]], lam: Iterable[int], workers: int = 1) -> int:
    return default_engine.chi_column_sum(mus, lam, workers)


def character_table(n: int) -> List[List[int]]:
    return default_engine.character_table(n)
