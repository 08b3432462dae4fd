"""
Acceptance suite for evchar.
Runs the published values and identities as named checks, with bounds taken
from the suite section of the user configuration.
"""

import time
from dataclasses import dataclass
from math import factorial
from typing import Any, Callable, Dict, List, Optional, Tuple

from tqdm import tqdm

from algebra.characters import CharacterEngine, default_engine
from algebra.constant_term import A_c, B_c, central_trinomial, riordan_via_ct, trinomial
from algebra.ev_sets import r_even_rows
from algebra.partitions import Partition, centralizer_size, hook_degree, partitions_of
from algebra.paths import (
    LatticePath, StandardTableau, hook_shape, matching_parity_count, motzkin_count,
    riordan_count, riordan_enumerate, riordan_refined_counts, riordan_to_tableau,
    sum_f_X, sum_f_Y, tableau_to_riordan, riordan_to_domino_tableau, domino_tableau_to_riordan,
)
from algebra.sym_functions import (
    check_thm32, count_vertical_strip_chains, inner_m_schur, m_power, shape_in, shape_is,
)
from config_manager import get_suite_config
from identity_lab import (
    ColumnSums, closed_form_sum, conj_n1_check, holding_partitions, q1_sides,
    reproduce_table, strong_sides, three_way_reduced_sides,
)
from logger import get_logger
from q_series import conj_q_sides

logger = get_logger(__name__)

PRINTED_N1_SERIES = [1, 0, 3, -4, 9, -12, 22, -36, 60, -88, 135]

N8_HOLDING = {
    Partition(p) for p in [(8,), (7, 1), (6, 2), (6, 1, 1), (4, 2, 1, 1), (2, 2, 2, 1, 1)]
}

WIDE_COUNTEREXAMPLE = Partition((3, 3, 2, 2, 2, 1))
WIDE_DIFFERENCES = {3: -5184, 4: -7488, 5: -2368}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    @property
    def milliseconds(self) -> int:
        return int(round(self.seconds * 1000))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "milliseconds": self.milliseconds,
        }


Outcome = Tuple[bool, str]


class AcceptanceSuite:
    """The acceptance checks, sharing one engine and one column-sum memo."""

    def __init__(self, bounds: Dict[str, Any], engine: Optional[CharacterEngine] = None, workers: int = 1):
        self.bounds = bounds
        self.engine = engine if engine is not None else default_engine
        self.sums = ColumnSums(self.engine, workers)

    def checks(self) -> List[Tuple[str, Callable[[], Outcome]]]:
        checks = [
            ("table_1", self.check_table_1),
            ("table_2", self.check_table_2),
            ("q1_sweep", self.check_q1_sweep),
            ("strong_sweep", self.check_strong_sweep),
            ("conj_n1_sweep", self.check_conj_n1),
            ("single_part_sums", self.check_single_part_sums),
            ("riordan_suite", self.check_riordan_suite),
            ("riordan_tableau_bijection", self.check_bijection),
            ("signed_power_sum_identity", self.check_thm32),
            ("jacobi_trudi_oracle", self.check_jacobi_trudi),
            ("q_series", self.check_q_series),
            ("character_properties", self.check_character_properties),
            ("degree_sums", self.check_degree_sums),
            ("closed_form", self.check_closed_form),
        ]
        if self.bounds.get("counterexamples"):
            checks.append(("wide_counterexample", self.check_wide_counterexample))
        return checks

    def check_table_1(self) -> Outcome:
        table = reproduce_table(1, self.engine)
        ok = (
            table.column_sums == [91, 19, 7, 7, 19]
            and table.weights == [1, -4, 6, -4, 1]
            and table.totals == [91, -76, 42, -28, 19]
            and table.grand_total == 48
            and table.unsigned_row_total == 48
            and table.cell((4, 2, 2), (2, 1, 1, 1, 1, 1, 1)) == 4
        )
        return ok, f"column sums {table.column_sums}, grand total {table.grand_total}"

    def check_table_2(self) -> Outcome:
        table = reproduce_table(2, self.engine)
        ok = (
            table.column_sums == [19, 5, 3]
            and table.weights == [1, -2, 1]
            and table.grand_total == 12
            and table.unsigned_row_total == 12
        )
        return ok, f"column sums {table.column_sums}, grand total {table.grand_total}"

    def check_q1_sweep(self) -> Outcome:
        n_max = self.bounds["q1_n_max"]
        failures = [
            (n, N) for n in range(1, min(n_max, 11) + 1) for N in range(1, n + 1)
            if not q1_sides(n, N, self.sums).holds
        ]
        detail = f"weighted identity holds for n <= {min(n_max, 11)}" if not failures else f"fails at {failures}"
        if n_max >= 12:
            low = [q1_sides(12, N, self.sums) for N in (1, 2)]
            third = q1_sides(12, 3, self.sums)
            twelve_ok = all(r.holds for r in low) and (third.lhs, third.rhs) == (1040, 1041)
            detail += f"; n=12, N=3: {third.lhs} vs {third.rhs}"
            return not failures and twelve_ok, detail
        return not failures, detail

    def check_strong_sweep(self) -> Outcome:
        n_max = self.bounds["strong_n_max"]
        failures = [
            (lam, N) for n in range(1, min(n_max, 7) + 1) for N in range(1, n + 1)
            for lam in partitions_of(n) if not strong_sides(lam, N, self.sums).holds
        ]
        ok = not failures
        detail = f"per-partition identity holds for n <= {min(n_max, 7)}" if ok else f"fails at {failures}"
        if n_max >= 8:
            holding = set(holding_partitions(8, 3, self.sums))
            differences = {N: strong_sides((5, 2, 1), N, self.sums).difference for N in range(1, 9)}
            expected = {N: (8 if N == 3 else 0) for N in range(1, 9)}
            ok = ok and holding == N8_HOLDING and differences == expected
            detail += f"; n=8, N=3 holds for {len(holding)} partitions; (5,2,1) differences {differences}"
        return ok, detail

    def check_wide_counterexample(self) -> Outcome:
        differences = {N: strong_sides(WIDE_COUNTEREXAMPLE, N, self.sums).difference for N in range(1, 13)}
        expected = {N: WIDE_DIFFERENCES.get(N, 0) for N in range(1, 13)}
        return differences == expected, f"differences {differences}"

    def check_conj_n1(self) -> Outcome:
        n_max = self.bounds["conj_n1_n_max"]
        failures = [
            lam for n in range(1, n_max + 1) for lam in partitions_of(n)
            if not conj_n1_check(lam, self.sums).holds
        ]
        return not failures, f"N=1 identity for n <= {n_max}" + (f" fails for {failures}" if failures else "")

    def check_single_part_sums(self) -> Outcome:
        mismatches = []
        for d in range(1, self.bounds["riordan_d_max"] + 1):
            expected = 2 ** d * riordan_count(d)
            values = (A_c(1, d, "chars", self.engine), A_c(1, d, "closed"), B_c(1, d, "chars", self.engine))
            if any(v != expected for v in values):
                mismatches.append((1, d, values, expected))
        for c in (2, 3):
            for d in range(1, self.bounds["trinomial_d_max"] + 1):
                expected = 2 ** d * central_trinomial(d)
                values = (A_c(c, d, "chars", self.engine), A_c(c, d, "closed"),
                          B_c(c, d, "chars", self.engine), B_c(c, d, "closed"))
                if d <= self.bounds["ct_intermediate_d_max"]:
                    values += (B_c(c, d, "ct_intermediate"),)
                if any(v != expected for v in values):
                    mismatches.append((c, d, values, expected))
        return not mismatches, "A_c and B_c agree across modes" if not mismatches else f"mismatches {mismatches}"

    def check_riordan_suite(self) -> Outcome:
        n_max = self.bounds["path_n_max"]
        bad = []
        for n in range(1, n_max + 1):
            r = riordan_count(n)
            hooks = sum(hook_degree(hook_shape(k, n - 2 * k)) for k in range(1, n // 2 + 1))
            values = (riordan_via_ct(n), trinomial(n, n) - trinomial(n, n - 1), hooks, matching_parity_count(n))
            if any(v != r for v in values) or motzkin_count(n) != r + riordan_count(n + 1):
                bad.append(n)
        chains_ok = all(
            count_vertical_strip_chains(n, shape_is((2,) * n)) == riordan_count(n)
            and count_vertical_strip_chains(n, shape_in(r_even_rows(3, 2 * n))) == matching_parity_count(n)
            for n in range(1, min(n_max, 8) + 1)
        )
        ok = not bad and chains_ok and riordan_count(4) == 3 and riordan_count(5) == 6
        return ok, f"Riordan identities for n <= {n_max}" + (f" fail at {bad}" if bad else "")

    def check_bijection(self) -> Outcome:
        n_max = self.bounds["bijection_n_max"]
        for n in range(n_max + 1):
            for path in riordan_enumerate(n):
                if tableau_to_riordan(riordan_to_tableau(path)) != path:
                    return False, f"roundtrip fails on {path}"
                if domino_tableau_to_riordan(riordan_to_domino_tableau(path)) != path:
                    return False, f"domino roundtrip fails on {path}"
            for (m, k), count in riordan_refined_counts(n).items():
                if count != hook_degree(hook_shape(k, m)):
                    return False, f"refined count for m={m}, k={k} at n={n} is {count}"
        example = riordan_to_tableau(LatticePath("UUFDFDUFD"))
        expected = StandardTableau(((1, 2, 7), (3, 5, 8), (4,), (6,), (9,)))
        return example == expected, f"roundtrip and refined counts for n <= {n_max}"

    def check_thm32(self) -> Outcome:
        n_max = self.bounds["thm32_n_max"]
        failures = [lam for n in range(1, n_max + 1) for lam in partitions_of(n) if not check_thm32(lam)]
        return not failures, f"coefficientwise equality for n <= {n_max}" + (f" fails for {failures}" if failures else "")

    def check_jacobi_trudi(self) -> Outcome:
        n_max = self.bounds["jacobi_trudi_n_max"]
        bad = [
            n for n in range(1, n_max + 1)
            if inner_m_schur(m_power((1, 1), n), (2,) * n) != riordan_count(n)
        ]
        disagreements = []
        for n in range(1, self.bounds["three_way_n_max"] + 1):
            for lam in partitions_of(n):
                sides = three_way_reduced_sides(lam, self.engine)
                if len(set(sides.values())) != 1:
                    disagreements.append((lam, sides))
        ok = not bad and not disagreements
        return ok, "three oracles agree" if ok else f"bad n {bad}, disagreements {disagreements}"

    def check_q_series(self) -> Outcome:
        order = self.bounds["qseries_order"]
        lhs, rhs = conj_q_sides(1, order, self.sums)
        printed = PRINTED_N1_SERIES[: order + 1]
        ok = lhs.coeffs == printed and rhs.coeffs == printed
        lhs2, rhs2 = conj_q_sides(2, self.bounds["qseries_n2_order"], self.sums)
        ok = ok and lhs2 == rhs2
        return ok, f"N=1 through q^{order}: {[str(c) for c in lhs.coeffs]}"

    def check_character_properties(self) -> Outcome:
        for n in range(1, self.bounds["orthogonality_n_max"] + 1):
            shapes = partitions_of(n)
            table = self.engine.character_table(n)
            weights = [centralizer_size(lam) for lam in shapes]
            for i in range(len(shapes)):
                for j in range(i, len(shapes)):
                    inner = sum(
                        table[i][c] * table[j][c] * factorial(n) // weights[c] for c in range(len(shapes))
                    )
                    if inner != (factorial(n) if i == j else 0):
                        return False, f"row orthogonality fails for {shapes[i]}, {shapes[j]}"
        for two_n in range(2, self.bounds["sign_twist_n_max"] + 1, 2):
            shapes = partitions_of(two_n)
            if not all(self.engine.sign_twist_holds(mu, lam) for mu in shapes for lam in shapes):
                return False, f"sign twist fails at size {two_n}"
        for n in range(1, self.bounds["hook_n_max"] + 1):
            if sum(hook_degree(mu) ** 2 for mu in partitions_of(n)) != factorial(n):
                return False, f"squared degrees do not sum to {n}!"
            if any(_branching_degree(tuple(mu)) != hook_degree(mu) for mu in partitions_of(n)):
                return False, f"hook formula disagrees with corner removal at n={n}"
        return True, "orthogonality, sign twist and degrees"

    def check_degree_sums(self) -> Outcome:
        n_max = self.bounds["path_n_max"]
        bad = [n for n in range(1, n_max + 1) if not sum_f_X(n) == sum_f_Y(n) == riordan_count(n)]
        return not bad, f"parity-shape and hook-shape degree sums for n <= {n_max}" + (f" fail at {bad}" if bad else "")

    def check_closed_form(self) -> Outcome:
        n_max = self.bounds["closed_form_n_max"]
        bad = []
        for n in range(1, n_max + 1):
            report = closed_form_sum(n, self.sums)
            if not report.holds or report.parameters["alternating_side"] != report.rhs:
                bad.append((n, str(report.lhs), report.rhs))
        return not bad, f"closed form for n <= {n_max}" + (f" fails at {bad}" if bad else "")

    def run(self, progress: bool = True) -> List[CheckResult]:
        results = []
        checks = self.checks()
        for name, check in tqdm(checks, desc="Acceptance checks", unit="check", disable=not progress):
            start = time.perf_counter()
            try:
                passed, detail = check()
            except Exception as e:
                logger.error(f"Check {name} raised: {e}")
                passed, detail = False, f"raised {type(e).__name__}: {e}"
            elapsed = time.perf_counter() - start
            level = "info" if passed else "warning"
            getattr(logger, level)(f"{name}: {'passed' if passed else 'FAILED'} in {elapsed:.2f}s")
            results.append(CheckResult(name, passed, detail, elapsed))
        return results


def _branching_degree(shape: Tuple[int, ...], memo: Optional[Dict[Tuple[int, ...], int]] = None) -> int:
    """Count standard tableaux by removing the largest entry from each corner."""
    memo = {} if memo is None else memo
    if sum(shape) <= 1:
        return 1
    if shape in memo:
        return memo[shape]
    total = 0
    for i, part in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < part:
            smaller = tuple(p for p in shape[:i] + (part - 1,) + shape[i + 1:] if p)
            total += _branching_degree(smaller, memo)
    memo[shape] = total
    return total


def run_suite(
    level: str = "quick",
    engine: Optional[CharacterEngine] = None,
    workers: int = 1,
    progress: bool = True,
) -> List[CheckResult]:
    """Run every acceptance check at the bounds configured for level."""
    bounds = get_suite_config(level)
    logger.info(f"Running {level} acceptance suite")
    return AcceptanceSuite(bounds, engine, workers).run(progress)
