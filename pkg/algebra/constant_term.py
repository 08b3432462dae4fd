"""
Sparse Laurent polynomials in up to three variables and the constant-term
evaluations built on them: the character formula, trinomial and Riordan
numbers, and the single-part-size sums A_c(d), B_c(d).

Negative exponents are never expanded against each other. Every quotient
by a monomial is applied as a shift before extracting a single coefficient.
"""

from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from logger import get_logger

from .errors import DomainError, SizeMismatchError
from .ev_sets import ev, r_even_rows
from .partitions import Partition

logger = get_logger(__name__)

MAX_ARITY = 3

Exponent = Tuple[int, ...]


class LaurentPoly:
    """Exponent vector -> integer coefficient, with zero coefficients trimmed."""

    def __init__(self, arity: int, terms: Optional[Dict[Exponent, int]] = None):
        if not 1 <= arity <= MAX_ARITY:
            raise DomainError(f"arity must be between 1 and {MAX_ARITY}, got {arity}")
        self.arity = arity
        self.terms: Dict[Exponent, int] = {}
        for exponent, coef in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != arity:
                raise DomainError(f"exponent {exponent} does not have arity {arity}")
            if coef:
                self.terms[exponent] = coef

    @classmethod
    def constant(cls, arity: int, value: int = 1) -> "LaurentPoly":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coef: int = 1) -> "LaurentPoly":
        return cls(len(exponent), {tuple(exponent): coef})

    @classmethod
    def variable(cls, arity: int, index: int, power: int = 1) -> "LaurentPoly":
        exponent = [0] * arity
        exponent[index] = power
        return cls(arity, {tuple(exponent): 1})

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        _check_arity(self, other)
        total = dict(self.terms)
        for exponent, coef in other.terms.items():
            total[exponent] = total.get(exponent, 0) + coef
        return LaurentPoly(self.arity, total)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_mul(self, other)

    def __pow__(self, k: int) -> "LaurentPoly":
        return lp_pow(self, k)

    def scale(self, factor: int) -> "LaurentPoly":
        return LaurentPoly(self.arity, {e: factor * c for e, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly(arity={self.arity}, terms={len(self.terms)})"


def _check_arity(a: LaurentPoly, b: LaurentPoly) -> None:
    if a.arity != b.arity:
        raise DomainError(f"arity mismatch: {a.arity} vs {b.arity}")


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    _check_arity(a, b)
    product: Dict[Exponent, int] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            product[key] = product.get(key, 0) + ca * cb
    return LaurentPoly(a.arity, product)


def lp_pow(a: LaurentPoly, k: int) -> LaurentPoly:
    """a ** k by repeated squaring."""
    if k < 0:
        raise DomainError(f"exponent must be nonnegative, got {k}")
    result = LaurentPoly.constant(a.arity)
    base = a
    while k:
        if k & 1:
            result = lp_mul(result, base)
        k >>= 1
        if k:
            base = lp_mul(base, base)
    return result


def lp_ct(a: LaurentPoly) -> int:
    """Coefficient of the all-zero exponent vector."""
    return a.coefficient((0,) * a.arity)


# Character values as constant terms

def vandermonde(arity: int) -> LaurentPoly:
    """prod_{i<j} (x_i - x_j), the numerator of prod_{i<j} (1 - x_j/x_i) times x^delta."""
    terms: Dict[Exponent, int] = {}
    delta = tuple(range(arity - 1, -1, -1))
    for perm in permutations(range(arity)):
        inversions = sum(1 for i in range(arity) for j in range(i + 1, arity) if perm[i] > perm[j])
        exponent = tuple(delta[perm[i]] for i in range(arity))
        terms[exponent] = -1 if inversions % 2 else 1
    return LaurentPoly(arity, terms)


def power_sum_poly(lam: Iterable[int], arity: int) -> LaurentPoly:
    """p_lam(x_1, ..., x_arity)."""
    result = LaurentPoly.constant(arity)
    for part in Partition(lam):
        p_r = LaurentPoly(arity, {
            tuple(part if i == j else 0 for j in range(arity)): 1 for i in range(arity)
        })
        result = lp_mul(result, p_r)
    return result


def _shift(mu: Sequence[int], arity: int) -> Exponent:
    padded = list(mu) + [0] * (arity - len(mu))
    return tuple(padded[i] + arity - 1 - i for i in range(arity))


def chi_via_ct(mu: Iterable[int], lam: Iterable[int]) -> int:
    """
    ct[ prod_{i<j}(1 - x_j/x_i) * prod_j p_{lam_j}(x) / x^mu ] with l(mu) variables.

    Multiplying through by x^delta turns the quotient into the Vandermonde
    product, so the value is the coefficient of x^(mu + delta) in a_delta * p_lam.

    Raises:
        SizeMismatchError: if |mu| != |lam|
        DomainError: if l(mu) > 3
    """
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise SizeMismatchError(f"character chi^{mu} needs a class of size {mu.size}, got {lam}")
    if len(mu) > MAX_ARITY:
        raise DomainError(f"constant-term characters support at most {MAX_ARITY} rows, got {mu}")
    arity = max(len(mu), 1)
    kernel = lp_mul(vandermonde(arity), power_sum_poly(lam, arity))
    shifted = lp_mul(kernel, LaurentPoly.monomial(tuple(-e for e in _shift(mu, arity))))
    return lp_ct(shifted)


def ct_character_column(lam: Iterable[int], mus: Sequence[Iterable[int]]) -> List[int]:
    """
    chi(mu, lam) for every mu with at most three rows, sharing one kernel
    a_delta * p_lam in three variables.
    """
    lam = Partition(lam)
    kernel = lp_mul(vandermonde(MAX_ARITY), power_sum_poly(lam, MAX_ARITY))
    values = []
    for mu in mus:
        mu = Partition(mu)
        if mu.size != lam.size:
            raise SizeMismatchError(f"character chi^{mu} needs a class of size {mu.size}, got {lam}")
        if len(mu) > MAX_ARITY:
            raise DomainError(f"constant-term characters support at most {MAX_ARITY} rows, got {mu}")
        values.append(kernel.coefficient(_shift(mu, MAX_ARITY)))
    return values


# Trinomial and Riordan numbers

@lru_cache(maxsize=None)
def trinomial(n: int, k: int) -> int:
    """Coefficient of x^k in (1 + x + x^2)^n; zero outside 0 <= k <= 2n."""
    if n < 0 or k < 0 or k > 2 * n:
        return 0
    return sum(comb(n, j) * comb(n - j, k - 2 * j) for j in range(k // 2 + 1) if k - 2 * j <= n - j)


def central_trinomial(d: int) -> int:
    return trinomial(d, d)


def _spread_trinomial(c: int, d: int) -> LaurentPoly:
    """(x^-c + 1 + x^c)^d."""
    base = LaurentPoly(1, {(-c,): 1, (0,): 1, (c,): 1})
    return lp_pow(base, d)


def riordan_via_ct(d: int) -> int:
    """R(d) = ct[(1 - x)(1/x + 1 + x)^d]."""
    if d < 0:
        raise DomainError(f"d must be nonnegative, got {d}")
    one_minus_x = LaurentPoly(1, {(0,): 1, (1,): -1})
    return lp_ct(lp_mul(one_minus_x, _spread_trinomial(1, d)))


# Single-part-size sums

class WeakComposition3(NamedTuple):
    """mu1 >= mu2 >= mu3 >= 0."""

    mu1: int
    mu2: int
    mu3: int

    @property
    def size(self) -> int:
        return self.mu1 + self.mu2 + self.mu3


def weak_compositions3(n: int) -> List[WeakComposition3]:
    """All weakly decreasing triples of nonnegative integers summing to n."""
    triples = []
    for mu1 in range(n, -1, -1):
        for mu2 in range(min(mu1, n - mu1), -1, -1):
            mu3 = n - mu1 - mu2
            if mu3 <= mu2:
                triples.append(WeakComposition3(mu1, mu2, mu3))
    return triples


A_MODES = ("chars", "closed")
B_MODES = ("chars", "closed", "ct_intermediate")


def _check_cd(c: int, d: int) -> Partition:
    if c < 1 or d < 1:
        raise DomainError(f"c and d must be positive, got c={c}, d={d}")
    return Partition((c,) * d)


def _engine(engine):
    if engine is None:
        from .characters import default_engine
        return default_engine
    return engine


def A_c(c: int, d: int, mode: str = "chars", engine=None) -> int:
    """
    Sum of chi^{(cd, cd)} over Ev((c^d)) with multiplicities.

    The closed mode evaluates 2^d * ct[(1 - x)(x^-c + 1 + x^c)^d].
    """
    lam = _check_cd(c, d)
    if mode == "chars":
        n = c * d
        engine = _engine(engine)
        return sum(
            multiplicity * engine.chi((n, n), tilde)
            for tilde, multiplicity in ev(lam).items()
        )
    if mode == "closed":
        one_minus_x = LaurentPoly(1, {(0,): 1, (1,): -1})
        return 2 ** d * lp_ct(lp_mul(one_minus_x, _spread_trinomial(c, d)))
    raise DomainError(f"unknown mode {mode!r}, expected one of {A_MODES}")


def B_c(c: int, d: int, mode: str = "chars", engine=None) -> int:
    """
    Signed sum of the R_3(2cd) column characters over Ev((c^d)).

    Raises:
        DomainError: for the closed mode with c = 1, where the value is
            2^d * R(d) and comes from the Riordan path count instead
    """
    lam = _check_cd(c, d)
    n = c * d
    if mode == "chars":
        engine = _engine(engine)
        column = r_even_rows(3, 2 * n)
        total = 0
        for tilde, multiplicity in ev(lam).items():
            sign = -1 if len(tilde) % 2 else 1
            total += sign * multiplicity * sum(engine.chi(mu, tilde) for mu in column)
        return total
    if mode == "closed":
        if c == 1:
            raise DomainError("closed form B_c needs c > 1; B_1(d) = 2^d * R(d), use riordan_count")
        return 2 ** d * central_trinomial(d)
    if mode == "ct_intermediate":
        # (x1^c x2^c + x2^c x3^c + x3^c x1^c)^d against every doubled weak composition
        doubled_pairs = LaurentPoly(3, {(c, c, 0): 1, (0, c, c): 1, (c, 0, c): 1})
        kernel = lp_mul(lp_pow(doubled_pairs, d), vandermonde(3))
        logger.debug(f"B_{c}({d}) constant-term kernel has {len(kernel.terms)} terms")
        total = sum(
            kernel.coefficient(_shift((2 * mu.mu1, 2 * mu.mu2, 2 * mu.mu3), 3))
            for mu in weak_compositions3(n)
        )
        return 2 ** d * total
    raise DomainError(f"unknown mode {mode!r}, expected one of {B_MODES}")
