"""
Symmetric functions in the monomial basis, Hall inner products against Schur
functions through the Jacobi-Trudi determinant, and dual-Pieri chain counts.
"""

from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Callable, Collection, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from logger import get_logger

from .errors import SizeMismatchError
from .ev_sets import ev
from .partitions import Partition

logger = get_logger(__name__)


class SymFuncM:
    """
    A homogeneous symmetric function sum_lambda c_lambda m_lambda.

    Zero coefficients are never stored; every key has size ``degree``.
    """

    def __init__(self, degree: int, coeffs: Optional[Dict[Tuple[int, ...], int]] = None):
        self.degree = degree
        self.coeffs: Dict[Partition, int] = {}
        for partition, value in (coeffs or {}).items():
            key = Partition(partition)
            if key.size != degree:
                raise SizeMismatchError(f"m_{key} does not have degree {degree}")
            if value:
                self.coeffs[key] = value

    @classmethod
    def one(cls) -> "SymFuncM":
        return cls(0, {(): 1})

    @classmethod
    def monomial(cls, lam: Iterable[int]) -> "SymFuncM":
        lam = Partition(lam)
        return cls(lam.size, {lam: 1})

    def scale(self, factor: int) -> "SymFuncM":
        return SymFuncM(self.degree, {k: factor * v for k, v in self.coeffs.items()})

    def __add__(self, other: "SymFuncM") -> "SymFuncM":
        if self.degree != other.degree and self.coeffs and other.coeffs:
            raise SizeMismatchError(f"cannot add degree {self.degree} to degree {other.degree}")
        degree = self.degree if self.coeffs else other.degree
        total = dict(self.coeffs)
        for key, value in other.coeffs.items():
            total[key] = total.get(key, 0) + value
        return SymFuncM(degree, total)

    def __sub__(self, other: "SymFuncM") -> "SymFuncM":
        return self + other.scale(-1)

    def __mul__(self, other: "SymFuncM") -> "SymFuncM":
        return m_product(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFuncM):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = " + ".join(f"{v}*m[{k}]" for k, v in sorted(self.coeffs.items(), reverse=True))
        return f"SymFuncM({self.degree}: {terms or '0'})"

    def to_dict(self) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "coeffs": {str(k): v for k, v in sorted(self.coeffs.items(), reverse=True)},
        }


def _orbit_size(vector: Sequence[int]) -> int:
    """Number of distinct rearrangements of vector."""
    size = factorial(len(vector))
    counts: Dict[int, int] = {}
    for entry in vector:
        counts[entry] = counts.get(entry, 0) + 1
    for count in counts.values():
        size //= factorial(count)
    return size


def _distinct_placements(width: int, parts: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """All distinct vectors of the given width whose nonzero entries are parts."""
    groups: Dict[int, int] = {}
    for part in parts:
        groups[part] = groups.get(part, 0) + 1
    values = sorted(groups.items(), reverse=True)

    def place(index: int, vector: List[int], free: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if index == len(values):
            yield tuple(vector)
            return
        value, count = values[index]
        for chosen in combinations(free, count):
            for pos in chosen:
                vector[pos] = value
            remaining = tuple(pos for pos in free if pos not in chosen)
            yield from place(index + 1, vector, remaining)
            for pos in chosen:
                vector[pos] = 0

    yield from place(0, [0] * width, tuple(range(width)))


@lru_cache(maxsize=None)
def _monomial_product(alpha: Tuple[int, ...], beta: Tuple[int, ...]) -> Tuple[Tuple[Partition, int], ...]:
    """
    Structure constants of m_alpha * m_beta.

    Fix alpha padded with zeros to width l(alpha) + l(beta) and merge every
    distinct placement of beta into it. A target nu is hit N_nu times, and
    counting pairs over the symmetric group orbit gives
    coefficient(nu) = |orbit(alpha)| * N_nu / |orbit(nu)|.
    """
    if len(beta) > len(alpha):
        alpha, beta = beta, alpha
    width = len(alpha) + len(beta)
    padded = alpha + (0,) * len(beta)

    hits: Dict[Partition, int] = {}
    for placement in _distinct_placements(width, beta):
        nu = Partition.from_parts(a + b for a, b in zip(padded, placement))
        hits[nu] = hits.get(nu, 0) + 1

    alpha_orbit = _orbit_size(padded)
    result = []
    for nu, count in hits.items():
        nu_orbit = _orbit_size(tuple(nu) + (0,) * (width - len(nu)))
        numerator = alpha_orbit * count
        if numerator % nu_orbit:
            raise ArithmeticError(f"non-integral structure constant for m_{alpha} * m_{beta} at {nu}")
        result.append((nu, numerator // nu_orbit))
    return tuple(sorted(result, reverse=True))


def m_product(a: SymFuncM, b: SymFuncM) -> SymFuncM:
    """Exact product of two m-basis expansions."""
    total: Dict[Partition, int] = {}
    for alpha, ca in a.coeffs.items():
        for beta, cb in b.coeffs.items():
            for nu, structure in _monomial_product(tuple(alpha), tuple(beta)):
                total[nu] = total.get(nu, 0) + ca * cb * structure
    return SymFuncM(a.degree + b.degree, total)


def m_power(lam: Iterable[int], exponent: int) -> SymFuncM:
    """m_lam ** exponent by iterated multiplication."""
    base = SymFuncM.monomial(lam)
    result = SymFuncM.one()
    for _ in range(exponent):
        result = m_product(result, base)
    return result


def power_to_m(lam: Iterable[int]) -> SymFuncM:
    """p_lam in the m-basis; p_r = m_(r)."""
    result = SymFuncM.one()
    for part in Partition(lam):
        result = m_product(result, SymFuncM.monomial((part,)))
    return result


def doubled_monomial_product(lam: Iterable[int]) -> SymFuncM:
    """prod_i m_(lam_i, lam_i)."""
    result = SymFuncM.one()
    for part in Partition(lam):
        result = m_product(result, SymFuncM.monomial((part, part)))
    return result


def ev_signed_power_sum(lam: Iterable[int]) -> SymFuncM:
    """sum over Ev(lam), with multiplicity, of (-1)^{l} p_{lam~}."""
    lam = Partition(lam)
    total = SymFuncM(2 * lam.size)
    for tilde, multiplicity in ev(lam).items():
        sign = -1 if len(tilde) % 2 else 1
        total = total + power_to_m(tilde).scale(sign * multiplicity)
    return total


def check_thm32(lam: Iterable[int]) -> bool:
    """Coefficientwise check of the signed Ev power-sum identity against 2^r prod m_(c,c)."""
    lam = Partition(lam)
    left = ev_signed_power_sum(lam)
    right = doubled_monomial_product(lam).scale(2 ** len(lam))
    holds = left == right
    if not holds:
        logger.warning(f"Signed Ev power-sum identity fails for {lam}")
    return holds


def jacobi_trudi_h(mu: Iterable[int]) -> Dict[Partition, int]:
    """
    Expand s_mu = det(h_{mu_i - i + j}) as an integer combination of h_nu.

    Subscripts of each product are sorted into nu with zeros dropped; a
    negative subscript kills its product.
    """
    mu = Partition(mu)
    rows = len(mu)

    @lru_cache(maxsize=None)
    def expand(row: int, used: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
        if row == rows:
            return (((), 1),)
        terms: Dict[Tuple[int, ...], int] = {}
        for col in range(rows):
            if used >> col & 1:
                continue
            index = mu[row] - row + col
            if index < 0:
                continue
            # inversions against earlier rows that took a larger column
            sign = -1 if bin(used >> (col + 1)).count("1") % 2 else 1
            for subscripts, coef in expand(row + 1, used | (1 << col)):
                key = tuple(sorted(subscripts + ((index,) if index else ()), reverse=True))
                terms[key] = terms.get(key, 0) + sign * coef
        return tuple((key, value) for key, value in terms.items() if value)

    return {Partition(key): value for key, value in sorted(expand(0, 0), reverse=True)}


def inner_m_schur(f: SymFuncM, mu: Iterable[int]) -> int:
    """
    Hall inner product <f, s_mu> using <m_lambda, h_nu> = delta.

    Raises:
        SizeMismatchError: if deg f != |mu|
    """
    mu = Partition(mu)
    if f.coeffs and f.degree != mu.size:
        raise SizeMismatchError(f"<f, s_{mu}> needs deg f = {mu.size}, got {f.degree}")
    return sum(coef * f.coeffs.get(nu, 0) for nu, coef in jacobi_trudi_h(mu).items())


def inner_m_schur_sum(f: SymFuncM, mus: Collection[Iterable[int]]) -> int:
    """<f, sum of s_mu over mus>."""
    return sum(inner_m_schur(f, mu) for mu in mus)


ShapeFilter = Callable[[Partition], bool]


def shape_is(target: Iterable[int]) -> ShapeFilter:
    target = Partition(target)
    return lambda shape: shape == target


def shape_in(targets: Iterable[Iterable[int]]) -> ShapeFilter:
    allowed = {Partition(t) for t in targets}
    return lambda shape: shape in allowed


def count_vertical_strip_chains(n: int, final_filter: ShapeFilter) -> int:
    """
    Count chains from the empty shape where each step adds two boxes in
    different rows, ending after n steps on a shape accepted by final_filter.
    """
    level: Dict[Tuple[int, ...], int] = {(): 1}
    for _ in range(n):
        following: Dict[Tuple[int, ...], int] = {}
        for shape, count in level.items():
            rows = list(shape) + [0, 0]
            for i, j in combinations(range(len(rows)), 2):
                grown = rows[:]
                grown[i] += 1
                grown[j] += 1
                if all(grown[k] >= grown[k + 1] for k in range(len(grown) - 1)):
                    key = tuple(p for p in grown if p)
                    following[key] = following.get(key, 0) + count
        level = following
    return sum(count for shape, count in level.items() if final_filter(Partition(shape)))
