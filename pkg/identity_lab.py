"""
Identity lab for evchar.
Evaluates both sides of the Ev character-sum identities, reproduces the
worked partial character tables and regenerates the counterexample reports.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from logger import get_logger

from algebra.characters import CharacterEngine, default_engine
from algebra.errors import DomainError, GuardError
from algebra.ev_sets import WeightedPartitions, ev, r_even_cols, r_even_rows
from algebra.partitions import Partition, centralizer_size, partitions_of
from parallel_runner import map_ordered

logger = get_logger(__name__)

Number = Union[int, Fraction]


@dataclass
class IdentityReport:
    """Both sides of one identity instance; difference is always lhs - rhs."""

    parameters: Dict[str, Any]
    lhs: Number
    rhs: Number
    breakdown: Optional[List[Dict[str, Any]]] = None
    notes: List[str] = field(default_factory=list)

    @property
    def difference(self) -> Number:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.difference == 0

    def to_dict(self) -> Dict[str, Any]:
        report = {
            "parameters": self.parameters,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "difference": self.difference,
            "holds": self.holds,
        }
        if self.breakdown is not None:
            report["per_column_breakdown"] = self.breakdown
        if self.notes:
            report["notes"] = self.notes
        return report


def _sign(tilde: Sequence[int]) -> int:
    return -1 if len(tilde) % 2 else 1


class ColumnSums:
    """
    Memo of sum_{mu in columns} chi(mu, tilde), shared across partitions
    whose Ev multisets overlap. Missing sums are computed with map_ordered,
    so totals do not depend on the worker count.
    """

    def __init__(self, engine: Optional[CharacterEngine] = None, workers: int = 1):
        self.engine = engine if engine is not None else default_engine
        self.workers = workers
        self._sums: Dict[Tuple[Partition, Tuple[Partition, ...]], int] = {}

    def get(self, tildes: Iterable[Partition], columns: Sequence[Partition]) -> Dict[Partition, int]:
        columns = tuple(columns)
        tildes = list(tildes)
        missing = [t for t in tildes if (t, columns) not in self._sums]
        if missing:
            values = map_ordered(
                lambda tilde: sum(self.engine.chi(mu, tilde) for mu in columns),
                missing,
                self.workers,
            )
            for tilde, value in zip(missing, values):
                self._sums[(tilde, columns)] = value
        return {t: self._sums[(t, columns)] for t in tildes}


def _sides(
    ev_set: WeightedPartitions,
    lhs_columns: Sequence[Partition],
    rhs_columns: Sequence[Partition],
    sums: ColumnSums,
) -> Tuple[int, int, List[Dict[str, Any]]]:
    tildes = ev_set.partitions()
    lhs_sums = sums.get(tildes, lhs_columns)
    rhs_sums = sums.get(tildes, rhs_columns)
    lhs = rhs = 0
    breakdown = []
    for tilde, multiplicity in ev_set.items():
        lhs += _sign(tilde) * multiplicity * lhs_sums[tilde]
        rhs += multiplicity * rhs_sums[tilde]
        breakdown.append({
            "tilde": tilde,
            "multiplicity": multiplicity,
            "sign": _sign(tilde),
            "lhs_column_sum": lhs_sums[tilde],
            "rhs_column_sum": rhs_sums[tilde],
        })
    return lhs, rhs, breakdown


def _check_N(N: int) -> None:
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")


def strong_sides(lam: Iterable[int], N: int, sums: Optional[ColumnSums] = None) -> IdentityReport:
    """
    Alternating R_{2N+1}(2n) side against the R^c_{2N}(2n) side for one lambda.
    """
    _check_N(N)
    lam = Partition(lam)
    sums = sums or ColumnSums()
    two_n = 2 * lam.size
    lhs, rhs, breakdown = _sides(ev(lam), r_even_rows(2 * N + 1, two_n), r_even_cols(2 * N, two_n), sums)
    return IdentityReport({"lambda": lam, "N": N}, lhs, rhs, breakdown)


def strong_sweep(n: int, N: int, sums: Optional[ColumnSums] = None) -> List[IdentityReport]:
    """strong_sides for every lambda of n, in partitions_of order."""
    sums = sums or ColumnSums()
    logger.info(f"Sweeping the per-partition identity over partitions of {n} at N={N}")
    return [strong_sides(lam, N, sums) for lam in partitions_of(n)]


def holding_partitions(n: int, N: int, sums: Optional[ColumnSums] = None) -> List[Partition]:
    return [report.parameters["lambda"] for report in strong_sweep(n, N, sums) if report.holds]


def q1_sides(n: int, N: int, sums: Optional[ColumnSums] = None) -> IdentityReport:
    """Both 1/z_lambda weighted sums over lambda of n, as exact rationals."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    _check_N(N)
    sums = sums or ColumnSums()
    lhs = rhs = Fraction(0)
    for lam in partitions_of(n):
        report = strong_sides(lam, N, sums)
        weight = Fraction(1, centralizer_size(lam))
        lhs += weight * report.lhs
        rhs += weight * report.rhs
    report = IdentityReport({"n": n, "N": N}, lhs, rhs)
    if lhs.denominator != 1 or rhs.denominator != 1:
        report.notes.append("non-integral side")
        logger.warning(f"Weighted sums for n={n}, N={N} are not integers: {lhs}, {rhs}")
    logger.debug(f"q1 n={n} N={N}: lhs={lhs} rhs={rhs}")
    return report


def q1_sweep(n_max: int, sums: Optional[ColumnSums] = None) -> List[IdentityReport]:
    """q1_sides for all 1 <= N <= n <= n_max."""
    sums = sums or ColumnSums()
    return [q1_sides(n, N, sums) for n in range(1, n_max + 1) for N in range(1, n + 1)]


def conj_n1_check(lam: Iterable[int], sums: Optional[ColumnSums] = None) -> IdentityReport:
    """The N = 1 identity, whose right side is the single column (n, n)."""
    lam = Partition(lam)
    sums = sums or ColumnSums()
    n = lam.size
    lhs, rhs, breakdown = _sides(ev(lam), r_even_rows(3, 2 * n), [Partition((n, n))], sums)
    return IdentityReport({"lambda": lam, "N": 1}, lhs, rhs, breakdown)


def conj_n1_sweep(n_max: int, sums: Optional[ColumnSums] = None) -> List[IdentityReport]:
    sums = sums or ColumnSums()
    return [conj_n1_check(lam, sums) for n in range(1, n_max + 1) for lam in partitions_of(n)]


def closed_form_value(n: int) -> int:
    """binom(n/2 + 2, 2) for even n, zero for odd n."""
    return comb(n // 2 + 2, 2) if n % 2 == 0 else 0


def closed_form_sum(n: int, sums: Optional[ColumnSums] = None) -> IdentityReport:
    """
    z-weighted sum of the (n, n) column over every Ev(lambda), lambda of n,
    against the conjectured closed form. The z-weighted alternating R_3 side
    rides along in the parameters.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    sums = sums or ColumnSums()
    column_side = alternating_side = Fraction(0)
    for lam in partitions_of(n):
        report = conj_n1_check(lam, sums)
        weight = Fraction(1, centralizer_size(lam))
        column_side += weight * report.rhs
        alternating_side += weight * report.lhs
    return IdentityReport(
        {"n": n, "alternating_side": alternating_side},
        column_side,
        closed_form_value(n),
    )


# Worked tables

TABLE_PARTITIONS = {1: Partition((1, 1, 1, 1)), 2: Partition((2, 2))}


@dataclass
class ReproducedTable:
    """Partial character table: rows R_3(2n), columns Ev(lambda) in ascending order."""

    lam: Partition
    rows: List[Partition]
    columns: List[Partition]
    cells: List[List[int]]
    multiplicities: List[int]

    @property
    def column_sums(self) -> List[int]:
        return [sum(row[j] for row in self.cells) for j in range(len(self.columns))]

    @property
    def weights(self) -> List[int]:
        return [_sign(col) * m for col, m in zip(self.columns, self.multiplicities)]

    @property
    def totals(self) -> List[int]:
        return [s * w for s, w in zip(self.column_sums, self.weights)]

    @property
    def grand_total(self) -> int:
        return sum(self.totals)

    @property
    def unsigned_row_total(self) -> int:
        """Multiplicity-weighted sum along the (n, n) row."""
        n = self.lam.size
        row = self.cells[self.rows.index(Partition((n, n)))]
        return sum(value * m for value, m in zip(row, self.multiplicities))

    def cell(self, mu: Iterable[int], tilde: Iterable[int]) -> int:
        return self.cells[self.rows.index(Partition(mu))][self.columns.index(Partition(tilde))]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": self.lam,
            "rows": self.rows,
            "columns": self.columns,
            "cells": self.cells,
            "column_sums": self.column_sums,
            "multiplicities": self.multiplicities,
            "weights": self.weights,
            "totals": self.totals,
            "grand_total": self.grand_total,
            "unsigned_row_total": self.unsigned_row_total,
        }

    def csv_rows(self) -> Tuple[List[str], List[List[Any]]]:
        header = ["mu"] + [str(col) for col in self.columns]
        body: List[List[Any]] = [[str(mu)] + row for mu, row in zip(self.rows, self.cells)]
        body.append(["column_sum"] + self.column_sums)
        body.append(["weight"] + self.weights)
        body.append(["total"] + self.totals)
        return header, body


def reproduce_table(which: int, engine: Optional[CharacterEngine] = None) -> ReproducedTable:
    if which not in TABLE_PARTITIONS:
        raise DomainError(f"table must be one of {sorted(TABLE_PARTITIONS)}, got {which}")
    engine = engine if engine is not None else default_engine
    lam = TABLE_PARTITIONS[which]
    ev_set = ev(lam)
    columns = sorted(ev_set.partitions())
    rows = r_even_rows(3, 2 * lam.size)
    cells = [[engine.chi(mu, tilde) for tilde in columns] for mu in rows]
    return ReproducedTable(lam, rows, columns, cells, [ev_set.multiplicity(c) for c in columns])


# Counterexamples

def counterexample_report(lam: Iterable[int], N: int, sums: Optional[ColumnSums] = None) -> Dict[str, Any]:
    """
    Columns that enter each side when moving from N - 1 to N, with their
    signed contributions, next to the identity reports at both levels.
    """
    if N < 2:
        raise DomainError(f"counterexample reports compare against level N - 1, need N >= 2, got {N}")
    lam = Partition(lam)
    sums = sums or ColumnSums()
    two_n = 2 * lam.size
    ev_set = ev(lam)

    previous_rows = set(r_even_rows(2 * N - 1, two_n))
    previous_cols = set(r_even_cols(2 * N - 2, two_n))
    new_lhs = [mu for mu in r_even_rows(2 * N + 1, two_n) if mu not in previous_rows]
    new_rhs = [mu for mu in r_even_cols(2 * N, two_n) if mu not in previous_cols]

    lhs_delta, rhs_delta, _ = _sides(ev_set, new_lhs, new_rhs, sums)
    before = strong_sides(lam, N - 1, sums)
    after = strong_sides(lam, N, sums)
    if after.difference - before.difference != lhs_delta - rhs_delta:
        raise GuardError(f"column contributions for {lam} at N={N} do not account for the change")

    return {
        "lambda": lam,
        "N": N,
        "new_lhs_columns": new_lhs,
        "new_rhs_columns": new_rhs,
        "lhs_contribution": lhs_delta,
        "rhs_contribution": rhs_delta,
        "difference_before": before.difference,
        "difference": after.difference,
        "holds": after.holds,
        "orientation": "lhs - rhs, derived from the column contributions",
    }


# Reduced N = 1 sides by three independent oracles

def three_way_reduced_sides(lam: Iterable[int], engine: Optional[CharacterEngine] = None) -> Dict[str, Tuple[int, int]]:
    """
    <prod m_(c,c), sum_{mu in R_3(2n)} s_mu> and <prod m_(c,c), s_(2^n)> computed
    from Murnaghan-Nakayama characters, constant-term characters and the
    Jacobi-Trudi inner product. The character routes evaluate the Ev sums
    against (n, n), which the sign twist turns into (2^n), and divide by 2^l(lam).
    """
    from algebra.constant_term import ct_character_column
    from algebra.sym_functions import doubled_monomial_product, inner_m_schur, inner_m_schur_sum

    lam = Partition(lam)
    engine = engine if engine is not None else default_engine
    n = lam.size
    rows = r_even_rows(3, 2 * n)
    pair = Partition((n, n))
    scale = 2 ** len(lam)

    mn_lhs = mn_rhs = ct_lhs = ct_rhs = 0
    for tilde, multiplicity in ev(lam).items():
        signed = _sign(tilde) * multiplicity
        mn_lhs += signed * sum(engine.chi(mu, tilde) for mu in rows)
        mn_rhs += multiplicity * engine.chi(pair, tilde)
        column = ct_character_column(tilde, rows + [pair])
        ct_lhs += signed * sum(column[:-1])
        ct_rhs += multiplicity * column[-1]

    product = doubled_monomial_product(lam)
    return {
        "murnaghan_nakayama": (mn_lhs // scale, mn_rhs // scale),
        "constant_term": (ct_lhs // scale, ct_rhs // scale),
        "jacobi_trudi": (inner_m_schur_sum(product, rows), inner_m_schur(product, (2,) * n)),
    }
