"""
Motzkin and Riordan paths, three-candidate ballot sequences, and standard
tableaux, with the bijections between them.

Paths are strings over U/F/D, ballots strings over A/B/C, tableaux tuples of rows.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import DomainError
from .partitions import Partition, hook_degree, partitions_of

STEP_LETTERS = "UFD"
VOTE_LETTERS = "ABC"


@dataclass(frozen=True)
class LatticePath:
    """A Motzkin path: U/F/D steps never below the axis and ending on it."""

    steps: str

    def __post_init__(self):
        height = 0
        for step in self.steps:
            if step not in STEP_LETTERS:
                raise DomainError(f"path step must be one of {STEP_LETTERS}, got {step!r}")
            height += {"U": 1, "F": 0, "D": -1}[step]
            if height < 0:
                raise DomainError(f"path {self.steps} goes below the axis")
        if height:
            raise DomainError(f"path {self.steps} ends at height {height}")

    @property
    def is_riordan(self) -> bool:
        """True when no flat step sits on the axis."""
        height = 0
        for step in self.steps:
            if step == "F" and height == 0:
                return False
            height += {"U": 1, "F": 0, "D": -1}[step]
        return True

    @property
    def ups(self) -> int:
        return self.steps.count("U")

    @property
    def flats(self) -> int:
        return self.steps.count("F")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps


@dataclass(frozen=True)
class BallotSequence:
    """Votes over A/B/C where every prefix has #A >= #B >= #C."""

    votes: str

    def __post_init__(self):
        counts = [0, 0, 0]
        for vote in self.votes:
            if vote not in VOTE_LETTERS:
                raise DomainError(f"vote must be one of {VOTE_LETTERS}, got {vote!r}")
            counts[VOTE_LETTERS.index(vote)] += 1
            if not counts[0] >= counts[1] >= counts[2]:
                raise DomainError(f"{self.votes} breaks the ballot condition")

    def counts(self) -> Tuple[int, int, int]:
        return tuple(self.votes.count(letter) for letter in VOTE_LETTERS)

    @property
    def matching_parity(self) -> bool:
        a, b, c = self.counts()
        return a % 2 == b % 2 == c % 2

    def __len__(self) -> int:
        return len(self.votes)

    def __str__(self) -> str:
        return self.votes


@dataclass(frozen=True)
class StandardTableau:
    """Rows increasing left to right, columns top to bottom, entries 1..n."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows if row)
        object.__setattr__(self, "rows", rows)
        for row in rows:
            for entry in row:
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise DomainError(f"tableau entries must be integers, got {entry!r}")
        lengths = [len(row) for row in rows]
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
            raise DomainError(f"row lengths {lengths} are not a partition")
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise DomainError(f"tableau entries must be 1..{len(entries)}")
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if c and row[c - 1] >= entry:
                    raise DomainError(f"row {r + 1} does not increase: {row}")
                if r and rows[r - 1][c] >= entry:
                    raise DomainError(f"column {c + 1} does not increase at row {r + 1}")

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def columns(self) -> List[Tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(row[c] for row in self.rows if len(row) > c) for c in range(width)]

    def to_dict(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


# Path enumeration

def _walk(n: int, riordan: bool) -> Iterator[str]:
    """Depth-first generation with height pruning; order U < F < D per position."""
    steps: List[str] = []

    def extend(height: int) -> Iterator[str]:
        remaining = n - len(steps)
        if remaining == 0:
            if height == 0:
                yield "".join(steps)
            return
        if height + 1 <= remaining - 1:
            steps.append("U")
            yield from extend(height + 1)
            steps.pop()
        if height <= remaining - 1 and not (riordan and height == 0):
            steps.append("F")
            yield from extend(height)
            steps.pop()
        if height > 0:
            steps.append("D")
            yield from extend(height - 1)
            steps.pop()

    yield from extend(0)


def motzkin_enumerate(n: int) -> List[LatticePath]:
    if n < 0:
        raise DomainError(f"path length must be nonnegative, got {n}")
    return [LatticePath(steps) for steps in _walk(n, riordan=False)]


def riordan_enumerate(n: int) -> List[LatticePath]:
    if n < 0:
        raise DomainError(f"path length must be nonnegative, got {n}")
    return [LatticePath(steps) for steps in _walk(n, riordan=True)]


def _count_paths(n: int, riordan: bool) -> int:
    # heights[h] = number of prefixes ending at height h
    heights = [1]
    for _ in range(n):
        following = [0] * (len(heights) + 1)
        for h, count in enumerate(heights):
            if not count:
                continue
            following[h + 1] += count
            if h > 0 or not riordan:
                following[h] += count
            if h > 0:
                following[h - 1] += count
        heights = following
    return heights[0]


def motzkin_count(n: int) -> int:
    """M(n), counted by a height transfer table."""
    if n < 0:
        raise DomainError(f"path length must be nonnegative, got {n}")
    return _count_paths(n, riordan=False)


def riordan_count(n: int) -> int:
    """R(n), counted by a height transfer table."""
    if n < 0:
        raise DomainError(f"path length must be nonnegative, got {n}")
    return _count_paths(n, riordan=True)


def riordan_refined_counts(n: int) -> Dict[Tuple[int, int], int]:
    """Number of Riordan paths of length n keyed by (flats, ups)."""
    counts: Dict[Tuple[int, int], int] = {}
    for path in riordan_enumerate(n):
        key = (path.flats, path.ups)
        counts[key] = counts.get(key, 0) + 1
    return dict(sorted(counts.items()))


def hook_shape(k: int, m: int) -> Partition:
    """The shape (k, k, 1^m)."""
    return Partition((k, k) + (1,) * m) if k else Partition((1,) * m)


def is_hook_shape(shape: Partition) -> bool:
    """True for (k, k, 1^m) with k >= 1, the shapes reached from Riordan paths."""
    return len(shape) >= 2 and shape[0] == shape[1] and all(part == 1 for part in shape[2:])


# Riordan paths and tableaux of shape (k, k, 1^m)

def riordan_to_tableau(path: LatticePath) -> StandardTableau:
    """
    Send a Riordan path with k ups and m flats to a tableau of shape (k, k, 1^m).

    Row one holds the U positions. The remaining positions, smallest first,
    start row two; the other entries are matched in order with the non-U
    steps before the final D, an F landing in the first column and a D
    extending row two.

    Raises:
        DomainError: if the path is not Riordan
    """
    if not isinstance(path, LatticePath):
        path = LatticePath(str(path))
    if not path.is_riordan:
        raise DomainError(f"{path} is not a Riordan path")
    if not path.steps:
        return StandardTableau(())

    positions = range(1, len(path) + 1)
    top = tuple(i for i in positions if path.steps[i - 1] == "U")
    rest = [i for i in positions if path.steps[i - 1] != "U"]
    labels = [path.steps[i - 1] for i in rest[:-1]]

    second = [rest[0]]
    column = []
    for entry, label in zip(rest[1:], labels):
        if label == "F":
            column.append((entry,))
        else:
            second.append(entry)
    return StandardTableau((top, tuple(second)) + tuple(column))


def tableau_to_riordan(tableau: StandardTableau) -> LatticePath:
    """
    Inverse of riordan_to_tableau.

    Raises:
        DomainError: if the shape is not (k, k, 1^m) or the result is not Riordan
    """
    rows = tableau.rows
    if not rows:
        return LatticePath("")
    k = len(rows[0])
    if len(rows) < 2 or len(rows[1]) != k or any(len(row) != 1 for row in rows[2:]):
        raise DomainError(f"shape {tableau.shape} is not of the form (k, k, 1^m)")

    n = tableau.size
    steps = [""] * (n + 1)
    for entry in rows[0]:
        steps[entry] = "U"
    steps[n] = "D"

    flats = {row[0] for row in rows[2:]}
    remaining = sorted(set(rows[1][1:]) | flats)
    empty = [i for i in range(1, n) if not steps[i]]
    for position, entry in zip(empty, remaining):
        steps[position] = "F" if entry in flats else "D"

    path = LatticePath("".join(steps[1:]))
    if not path.is_riordan:
        raise DomainError(f"tableau {tableau.to_dict()} gives non-Riordan path {path}")
    return path


# Riordan paths and two-column tableaux of shape (2^n)

def riordan_to_domino_tableau(path: LatticePath) -> StandardTableau:
    """
    Fill shape (2^n): step i places 2i-1 and 2i. U stacks both in column one,
    D stacks both in column two, F puts one box at the foot of each column
    with the smaller entry in the upper of the two rows.
    """
    if not isinstance(path, LatticePath):
        path = LatticePath(str(path))
    if not path.is_riordan:
        raise DomainError(f"{path} is not a Riordan path")

    first: List[int] = []
    second: List[int] = []
    for i, step in enumerate(path.steps, start=1):
        low, high = 2 * i - 1, 2 * i
        if step == "U":
            first.extend((low, high))
        elif step == "D":
            second.extend((low, high))
        else:
            second.append(low)
            first.append(high)
    return StandardTableau(tuple(zip(first, second)))


def domino_tableau_to_riordan(tableau: StandardTableau) -> LatticePath:
    """Read a shape (2^n) tableau back into its Riordan path."""
    rows = tableau.rows
    if any(len(row) != 2 for row in rows):
        raise DomainError(f"shape {tableau.shape} is not a two-column rectangle")
    column_of = {entry: c for row in rows for c, entry in enumerate(row)}

    steps = []
    for i in range(1, len(rows) + 1):
        pair = (column_of[2 * i - 1], column_of[2 * i])
        if pair == (0, 0):
            steps.append("U")
        elif pair == (1, 1):
            steps.append("D")
        elif pair == (1, 0):
            steps.append("F")
        else:
            raise DomainError(f"entries {2 * i - 1}, {2 * i} are not placed by a path step")

    path = LatticePath("".join(steps))
    if not path.is_riordan:
        raise DomainError(f"tableau {tableau.to_dict()} gives non-Riordan path {path}")
    return path


# Ballot sequences

def _ballots(n: int) -> Iterator[str]:
    votes: List[str] = []
    counts = [0, 0, 0]

    def extend() -> Iterator[str]:
        if len(votes) == n:
            yield "".join(votes)
            return
        for index, letter in enumerate(VOTE_LETTERS):
            if index and counts[index] >= counts[index - 1]:
                continue
            votes.append(letter)
            counts[index] += 1
            yield from extend()
            counts[index] -= 1
            votes.pop()

    yield from extend()


def ballot_enumerate(n: int) -> List[BallotSequence]:
    if n < 0:
        raise DomainError(f"ballot length must be nonnegative, got {n}")
    return [BallotSequence(votes) for votes in _ballots(n)]


def matching_parity_count(n: int) -> int:
    """r(n): ballot sequences of length n whose three vote counts share a parity."""
    return sum(1 for ballot in ballot_enumerate(n) if ballot.matching_parity)


def ballot_parity_completion(ballot: BallotSequence) -> BallotSequence:
    """
    Append the one candidate whose vote count has the odd parity out.

    Raises:
        DomainError: if the ballot already has matching parity
    """
    if ballot.matching_parity:
        raise DomainError(f"{ballot} already has matching parity")
    parities = [count % 2 for count in ballot.counts()]
    odd_one = next(i for i in range(3) if parities.count(parities[i]) == 1)
    return BallotSequence(ballot.votes + VOTE_LETTERS[odd_one])


def ballot_to_tableau(ballot: BallotSequence) -> StandardTableau:
    """Vote i for candidate j puts entry i in row j."""
    rows: List[List[int]] = [[], [], []]
    for i, vote in enumerate(ballot.votes, start=1):
        rows[VOTE_LETTERS.index(vote)].append(i)
    return StandardTableau(tuple(tuple(row) for row in rows))


_PIERI_ROWS = {"A": (0, 1), "B": (0, 2), "C": (1, 2)}


def ballot_to_pieri_tableau(ballot: BallotSequence) -> StandardTableau:
    """
    Dual-Pieri filling of size 2n: vote i places 2i-1 and 2i in rows
    (1, 2) for A, (1, 3) for B, (2, 3) for C.
    """
    rows: List[List[int]] = [[], [], []]
    for i, vote in enumerate(ballot.votes, start=1):
        upper, lower = _PIERI_ROWS[vote]
        rows[upper].append(2 * i - 1)
        rows[lower].append(2 * i)
    return StandardTableau(tuple(tuple(row) for row in rows))


# Degree sums

def _same_parity(parts: Sequence[int]) -> bool:
    padded = list(parts) + [0] * (3 - len(parts))
    return padded[0] % 2 == padded[1] % 2 == padded[2] % 2


def parity_shapes(n: int) -> List[Partition]:
    """Partitions of n with at most three rows, all three row lengths (zeros included) of one parity."""
    return [lam for lam in partitions_of(n, max_length=3) if _same_parity(lam)]


def sum_f_X(n: int) -> int:
    return sum(hook_degree(lam) for lam in parity_shapes(n))


def sum_f_Y(n: int) -> int:
    return sum(hook_degree(hook_shape(k, n - 2 * k)) for k in range(1, n // 2 + 1))
