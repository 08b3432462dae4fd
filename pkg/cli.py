#!/usr/bin/env python3
"""
evchar CLI - exact symmetric-group character sums over Ev multisets and the
even row/column sets, with the identity lab and acceptance suite.
"""

import json
from typing import Any, List, Optional, Sequence, Tuple

import click

from acceptance import run_suite
from algebra.characters import default_engine
from algebra.constant_term import A_MODES, B_MODES, A_c, B_c, chi_via_ct, riordan_via_ct
from algebra.errors import CacheFormatError, EvcharError, GuardError, PartitionError
from algebra.ev_sets import ev, r_even_cols, r_even_rows
from algebra.partitions import Partition, parse_partition, partitions_of
from algebra.paths import (
    LatticePath, StandardTableau, ballot_enumerate, domino_tableau_to_riordan, is_hook_shape,
    matching_parity_count, motzkin_count, riordan_count, riordan_enumerate,
    riordan_refined_counts, riordan_to_domino_tableau, riordan_to_tableau,
    sum_f_X, sum_f_Y, tableau_to_riordan,
)
from algebra.sym_functions import check_thm32, doubled_monomial_product, ev_signed_power_sum
from config_manager import (
    DEFAULT_CONFIG, OUTPUT_FORMATS, RunConfig, get_logging_config, get_run_config, reset_config,
    show_config, update_config,
)
from identity_lab import (
    ColumnSums, closed_form_sum, conj_n1_check, conj_n1_sweep, counterexample_report, q1_sides,
    reproduce_table, strong_sides,
)
from logger import get_logger, setup_logger
from q_series import q_series_report
from utils.report_io import dump_json, render_text, table_to_csv

logger = get_logger("cli")

USAGE_EXIT = 2
GUARD_EXIT = 3


class EvcharCommandError(click.ClickException):
    """A library error surfaced with its exit status."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class EvcharGroup(click.Group):
    """Maps evchar exceptions onto exit statuses for every subcommand."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except (GuardError, CacheFormatError) as e:
            logger.debug(f"Guard tripped: {e}")
            raise EvcharCommandError(str(e), GUARD_EXIT) from e
        except EvcharError as e:
            raise EvcharCommandError(str(e), USAGE_EXIT) from e


class PartitionType(click.ParamType):
    """Comma text, with exponent shorthand such as 3^2,2^3,1."""

    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return parse_partition(value, allow_exponents=True)
        except PartitionError as e:
            self.fail(str(e), param, ctx)


PARTITION = PartitionType()


def _run(ctx: click.Context) -> RunConfig:
    return ctx.find_root().obj["run"]


def _guard(ctx: click.Context, n: int) -> None:
    max_n = _run(ctx).max_n
    if n > max_n:
        raise GuardError(f"n = {n} exceeds --max-n {max_n}")


def _sums(ctx: click.Context) -> ColumnSums:
    return ctx.find_root().obj["sums"]


def emit(ctx: click.Context, payload: Any, table: Optional[Tuple[Sequence[Any], List[List[Any]]]] = None) -> None:
    """
    Write a report to stdout in the configured format.

    CSV uses the given table when there is one and key/value rows otherwise.
    """
    output = _run(ctx).output
    if output == "json":
        click.echo(dump_json(payload))
    elif output == "text":
        click.echo(render_text(payload))
    else:
        if table is None:
            items = payload.items() if isinstance(payload, dict) else enumerate(payload)
            table = (["key", "value"], [[key, value] for key, value in items])
        click.echo(table_to_csv(*table), nl=False)


@click.group(cls=EvcharGroup)
@click.option('--max-n', type=int, default=None, help='Refuse sizes above this n (guard, exit 3)')
@click.option('--workers', type=int, default=None, help='Worker threads for column sums')
@click.option('--cache', 'cache_path', type=click.Path(dir_okay=False), default=None,
              help='Character cache file to warm-load and save (default: $EVCHAR_CACHE)')
@click.option('--output', type=click.Choice(OUTPUT_FORMATS), default=None, help='Report format')
@click.option('--verbose', '-v', is_flag=True, help='Verbose logging')
@click.option('--log-file', type=click.Path(dir_okay=False), default=None, help='Also log to this file')
@click.pass_context
def main(ctx, max_n, workers, cache_path, output, verbose, log_file):
    """Exact character sums over Ev(lambda) and the even row/column sets."""
    logging_config = get_logging_config()
    setup_logger(
        level="DEBUG" if verbose else logging_config.get("level", "INFO"),
        log_file=log_file or logging_config.get("log_file"),
    )

    try:
        run = get_run_config(max_n=max_n, workers=workers, cache_path=cache_path, output=output)
    except ValueError as e:
        raise click.UsageError(str(e)) from e

    if run.cache_path:
        default_engine.cache.load(run.cache_path)

        def save_cache():
            try:
                default_engine.cache.save(run.cache_path)
            except OSError as e:
                logger.error(f"Failed to save character cache: {e}")

        ctx.call_on_close(save_cache)

    ctx.obj = {"run": run, "sums": ColumnSums(default_engine, run.workers)}
    logger.debug(f"Run configuration: {run}")


@main.command()
@click.option('--mu', type=PARTITION, help='Irreducible character')
@click.option('--lambda', 'lam', type=PARTITION, help='Cycle type')
@click.option('--table', 'table_n', type=int, default=None, help='Print the full character table of S_n')
@click.pass_context
def char(ctx, mu, lam, table_n):
    """Character value chi^mu(lambda)."""
    if table_n is not None:
        _guard(ctx, table_n)
        shapes = partitions_of(table_n)
        cells = default_engine.character_table(table_n)
        header = ["mu"] + [str(s) for s in shapes]
        emit(
            ctx,
            {"n": table_n, "classes": shapes, "characters": shapes, "values": cells},
            (header, [[str(s)] + row for s, row in zip(shapes, cells)]),
        )
        return
    if mu is None or lam is None:
        raise click.UsageError("char needs --mu and --lambda, or --table N")
    _guard(ctx, lam.size)
    value = default_engine.chi(mu, lam)
    report = {"mu": mu, "lambda": lam, "value": value}
    if len(mu) <= 3:
        report["constant_term_value"] = chi_via_ct(mu, lam)
    emit(ctx, report)


@main.command(name="ev")
@click.option('--lambda', 'lam', type=PARTITION, required=True)
@click.pass_context
def ev_command(ctx, lam):
    """The Ev(lambda) multiset with multiplicities."""
    _guard(ctx, lam.size)
    ev_set = ev(lam)
    emit(
        ctx,
        {"lambda": lam, "entries": ev_set, "total_weight": ev_set.total_weight},
        (["partition", "multiplicity"], [[p, m] for p, m in ev_set.items()]),
    )


@main.command()
@click.option('--N', 'N', type=int, required=True)
@click.option('--two-n', type=int, required=True, help='Size 2n of the partitions')
@click.option('--cols', is_flag=True, help='Even columns instead of even rows')
@click.pass_context
def columns(ctx, N, two_n, cols):
    """R_N(2n), or R_N^c(2n) with --cols."""
    _guard(ctx, two_n // 2)
    shapes = r_even_cols(N, two_n) if cols else r_even_rows(N, two_n)
    emit(
        ctx,
        {"N": N, "two_n": two_n, "kind": "cols" if cols else "rows", "partitions": shapes},
        (["partition"], [[s] for s in shapes]),
    )


@main.command()
@click.option('--which', type=click.Choice(["1", "2"]), required=True)
@click.pass_context
def table(ctx, which):
    """Reproduce a worked partial character table."""
    reproduced = reproduce_table(int(which), default_engine)
    emit(ctx, reproduced, reproduced.csv_rows())


@main.command(name="verify-strong")
@click.option('--lambda', 'lam', type=PARTITION, required=True)
@click.option('--N', 'N', type=int, required=True)
@click.pass_context
def verify_strong(ctx, lam, N):
    """Alternating R_{2N+1} side against the R^c_{2N} side for one lambda."""
    _guard(ctx, lam.size)
    emit(ctx, strong_sides(lam, N, _sums(ctx)))


@main.command()
@click.option('--lambda', 'lam', type=PARTITION, required=True)
@click.option('--N', 'N', type=int, required=True)
@click.pass_context
def counterexample(ctx, lam, N):
    """Columns entering each side between N - 1 and N, with their contributions."""
    _guard(ctx, lam.size)
    emit(ctx, counterexample_report(lam, N, _sums(ctx)))


@main.command(name="verify-q1")
@click.option('--n', 'n', type=int, required=True)
@click.option('--N', 'N', type=int, required=True)
@click.pass_context
def verify_q1(ctx, n, N):
    """The 1/z_lambda weighted sums over all lambda of n."""
    _guard(ctx, n)
    emit(ctx, q1_sides(n, N, _sums(ctx)))


@main.command(name="verify-n1")
@click.option('--lambda', 'lam', type=PARTITION, default=None)
@click.option('--all-n', type=int, default=None, help='Every lambda of size at most this n')
@click.pass_context
def verify_n1(ctx, lam, all_n):
    """The N = 1 identity against the single (n, n) column."""
    if (lam is None) == (all_n is None):
        raise click.UsageError("verify-n1 needs exactly one of --lambda and --all-n")
    if lam is not None:
        _guard(ctx, lam.size)
        emit(ctx, conj_n1_check(lam, _sums(ctx)))
        return
    _guard(ctx, all_n)
    reports = conj_n1_sweep(all_n, _sums(ctx))
    failing = [r.parameters["lambda"] for r in reports if not r.holds]
    emit(
        ctx,
        {"n_max": all_n, "checked": len(reports), "failing": failing, "holds": not failing},
        (
            ["lambda", "lhs", "rhs", "holds"],
            [[r.parameters["lambda"], r.lhs, r.rhs, r.holds] for r in reports],
        ),
    )


@main.command(name="closed-form")
@click.option('--n', 'n', type=int, required=True)
@click.pass_context
def closed_form(ctx, n):
    """z-weighted (n, n) column sum against binom(n/2 + 2, 2)."""
    _guard(ctx, n)
    emit(ctx, closed_form_sum(n, _sums(ctx)))


@main.command()
@click.option('--n', 'n', type=int, required=True)
@click.option('--enumerate', 'list_paths', is_flag=True, help='List every Riordan path')
@click.pass_context
def riordan(ctx, n, list_paths):
    """Riordan number R(n) with its cross-checks."""
    _guard(ctx, n)
    report = {
        "n": n,
        "riordan": riordan_count(n),
        "constant_term": riordan_via_ct(n),
        "motzkin": motzkin_count(n),
        "sum_f_Y": sum_f_Y(n),
        "refined_counts": riordan_refined_counts(n),
    }
    if list_paths:
        report["paths"] = [str(path) for path in riordan_enumerate(n)]
    emit(ctx, report)


@main.command()
@click.option('--n', 'n', type=int, required=True)
@click.option('--enumerate', 'list_ballots', is_flag=True, help='List the matching-parity ballots')
@click.pass_context
def ballot(ctx, n, list_ballots):
    """Ballot sequences whose vote counts share a parity."""
    _guard(ctx, n)
    count = matching_parity_count(n)
    report = {"n": n, "matching_parity": count, "sum_f_X": sum_f_X(n), "equal": count == sum_f_X(n)}
    if list_ballots:
        report["ballots"] = [str(b) for b in ballot_enumerate(n) if b.matching_parity]
    emit(ctx, report)


@main.command()
@click.option('--path', 'path_text', default=None, help='Riordan path over U/F/D')
@click.option('--tableau', 'tableau_json', default=None, help='Rows as JSON, e.g. [[1,2],[3,4]]')
@click.option('--kind', type=click.Choice(["auto", "hook", "domino"]), default="auto",
              help='Inverse for --tableau; auto prefers (k,k,1^m) over (2^n)')
@click.pass_context
def bijection(ctx, path_text, tableau_json, kind):
    """Riordan paths to and from tableaux of shape (k,k,1^m) and (2^n)."""
    if (path_text is None) == (tableau_json is None):
        raise click.UsageError("bijection needs exactly one of --path and --tableau")
    if path_text is not None:
        path = LatticePath(path_text.strip().upper())
        _guard(ctx, len(path))
        emit(ctx, {
            "path": str(path),
            "hook_tableau": riordan_to_tableau(path),
            "domino_tableau": riordan_to_domino_tableau(path),
        })
        return

    try:
        rows = json.loads(tableau_json)
    except json.JSONDecodeError as e:
        raise click.BadParameter(f"not valid JSON: {e}", param_hint="--tableau") from e
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise click.BadParameter("expected a list of rows", param_hint="--tableau")
    tableau = StandardTableau(tuple(tuple(row) for row in rows))
    _guard(ctx, tableau.size)
    if kind == "auto":
        kind = "hook" if not tableau.rows or is_hook_shape(tableau.shape) else "domino"
    if kind == "hook":
        path = tableau_to_riordan(tableau)
    else:
        path = domino_tableau_to_riordan(tableau)
    emit(ctx, {"tableau": tableau, "shape": tableau.shape, "kind": kind, "path": str(path)})


@main.command()
@click.option('--lambda', 'lam', type=PARTITION, required=True)
@click.pass_context
def thm32(ctx, lam):
    """Signed power-sum expansion over Ev(lambda) against prod m_(c,c)."""
    _guard(ctx, lam.size)
    emit(ctx, {
        "lambda": lam,
        "signed_power_sum": ev_signed_power_sum(lam),
        "doubled_monomial_product": doubled_monomial_product(lam),
        "holds": check_thm32(lam),
    })


@main.command()
@click.option('--c', 'c', type=int, required=True)
@click.option('--d', 'd', type=int, required=True)
@click.option('--mode', type=click.Choice(A_MODES), default="chars")
@click.pass_context
def acd(ctx, c, d, mode):
    """A_c(d): the (cd, cd) character summed over Ev((c^d))."""
    _guard(ctx, c * d)
    emit(ctx, {"c": c, "d": d, "mode": mode, "value": A_c(c, d, mode, default_engine)})


@main.command()
@click.option('--c', 'c', type=int, required=True)
@click.option('--d', 'd', type=int, required=True)
@click.option('--mode', type=click.Choice(B_MODES), default="chars")
@click.pass_context
def bcd(ctx, c, d, mode):
    """B_c(d): signed R_3(2cd) column sums over Ev((c^d))."""
    _guard(ctx, c * d)
    emit(ctx, {"c": c, "d": d, "mode": mode, "value": B_c(c, d, mode, default_engine)})


@main.command()
@click.option('--N', 'N', type=int, required=True)
@click.option('--order', type=int, required=True, help='Truncation order in q')
@click.pass_context
def qseries(ctx, N, order):
    """Both q-weighted sides up to q^order."""
    _guard(ctx, order)
    report = q_series_report(N, order, _sums(ctx))
    emit(
        ctx,
        report,
        (
            ["power", "lhs", "rhs"],
            [[i, a, b] for i, (a, b) in enumerate(zip(report["lhs_coeffs"], report["rhs_coeffs"]))],
        ),
    )


@main.command()
@click.option('--level', type=click.Choice(["quick", "full"]), default="quick")
@click.option('--no-progress', is_flag=True, help='Hide the progress bar')
@click.pass_context
def suite(ctx, level, no_progress):
    """Run the acceptance checks; exit 3 when any check fails."""
    results = run_suite(level, default_engine, _run(ctx).workers, progress=not no_progress)
    passed = sum(1 for r in results if r.passed)
    emit(
        ctx,
        {"level": level, "passed": passed, "failed": len(results) - passed, "checks": results},
        (
            ["name", "passed", "milliseconds", "detail"],
            [[r.name, r.passed, r.milliseconds, r.detail] for r in results],
        ),
    )
    if passed != len(results):
        ctx.exit(GUARD_EXIT)


@main.command()
@click.option('--show', is_flag=True, help='Show current configuration')
@click.option('--reset', is_flag=True, help='Reset configuration to defaults')
@click.option('--set', 'assignments', multiple=True, metavar='SECTION.KEY=VALUE',
              help='Store a value; VALUE is read as JSON, else kept as text')
def config(show, reset, assignments):
    """Show, reset or update the user configuration."""
    updates = [_parse_assignment(text) for text in assignments]
    if reset:
        if not reset_config():
            raise click.ClickException("failed to reset configuration")
        logger.info("Configuration reset to defaults")
    for section, key, value in updates:
        if not update_config(section, key, value):
            raise click.ClickException(f"failed to store {section}.{key}")
        logger.info(f"Set {section}.{key} = {value!r}")
    if show or not (reset or updates):
        click.echo(show_config())


def _parse_assignment(text: str) -> Tuple[str, str, Any]:
    target, sep, raw = text.partition("=")
    section, dot, key = target.strip().partition(".")
    if not sep or not dot or not key:
        raise click.BadParameter(f"expected SECTION.KEY=VALUE, got {text!r}", param_hint="--set")
    if section not in DEFAULT_CONFIG:
        raise click.BadParameter(
            f"unknown section {section!r}; choose from {', '.join(DEFAULT_CONFIG)}", param_hint="--set"
        )
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return section, key, value


if __name__ == '__main__':
    main()
