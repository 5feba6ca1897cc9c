"""Command line interface for :mod:`pypersuade`.

Every command reads a game document and prints a report on standard output,
either as indented text (``--format human``) or as a JSON document
(``--format json``). Invalid input exits with status 2 and a message naming
the offending field.
"""

import functools
import json
import logging
import sys
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any, TextIO, TypeVar

import click

from pypersuade.concavify.envelope import equilibrium_interval
from pypersuade.concavify.witness import equilibrium_witness
from pypersuade.credibility.robustness import robustness_verdict
from pypersuade.diagnostics.genericity import genericity_check
from pypersuade.diagnostics.ordered import ordered_check
from pypersuade.diagnostics.pubr import potentially_unique_actions, theorem1_verdict
from pypersuade.diagnostics.ties import global_checks, no_relevant_ties
from pypersuade.diagnostics.verdict import analyze
from pypersuade.exports.data_tables import write_table
from pypersuade.exports.data_tables.credibility import CredibilityTableBuilder
from pypersuade.exports.data_tables.figure import emit_figure
from pypersuade.exports.reports import (
    Document,
    credibility_report,
    format_human,
    genericity_entry,
    global_entry,
    interval_report,
    oracle_report,
    ordered_entry,
    pubr_report,
    verdict_report,
    witness_report,
)
from pypersuade.game.constants import DEFAULT_CHI_GRID, DEFAULT_EPSILON
from pypersuade.game.errors import BeliefError, GameValidationError, PersuasionError, SoundnessError
from pypersuade.game.loader import load_game_file
from pypersuade.game.model import Belief, GameSpec
from pypersuade.game.rationals import parse_rational
from pypersuade.oracle.grid import brute_force_interval
from pypersuade.version import get_version

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


class InputError(click.ClickException):
    """Invalid game, prior or parameter; exits with the usage status."""

    exit_code = 2


def handle_errors(command: F) -> F:
    """Turn input errors raised by the library into :class:`InputError`."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except SoundnessError:
            raise
        except PersuasionError as e:
            raise InputError(str(e)) from e

    return wrapper  # type: ignore[return-value]


def parse_prior(text: str, game: GameSpec) -> Belief:
    """Parse ``--prior``: comma-separated probabilities, or one probability of the second state."""
    parts = [part for part in text.split(",") if part.strip()]
    values = [parse_rational(part.strip(), "prior") for part in parts]
    try:
        if len(values) == 1 and game.n_states == 2:
            return Belief.binary(values[0])
        belief = Belief(tuple(values))
        game.check_belief(belief)
    except BeliefError as e:
        raise GameValidationError(str(e), "prior") from e
    return belief


def parse_edge(text: str) -> tuple[int, int]:
    """Parse ``--edge i,j``."""
    try:
        first, second = (int(part) for part in text.split(","))
    except ValueError as e:
        raise GameValidationError(f"expected two state indices 'i,j', got {text!r}", "edge") from e
    return first, second


def emit(document: Document, output_format: str, stream: TextIO | None = None) -> None:
    """Write a report in the requested format."""
    if output_format == "json":
        click.echo(json.dumps(document, indent=2, sort_keys=True), file=stream)
    else:
        click.echo("\n".join(format_human(document)), file=stream)


def game_options(command: F) -> F:
    """Options shared by every command: the game file, a prior override, format and parallelism."""
    decorators = [
        click.argument("game_path", type=click.Path(exists=True, dir_okay=False, path_type=Path)),
        click.option("--prior", help="Prior override: 'p1,p2,...' or, for two states, the second state's probability."),
        click.option(
            "--format",
            "output_format",
            type=click.Choice(["human", "json"]),
            default="human",
            show_default=True,
            help="Report format.",
        ),
        click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes."),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command


def _load(game_path: Path, prior: str | None) -> tuple[GameSpec, Belief]:
    game = load_game_file(game_path)
    return game, game.prior if prior is None else parse_prior(prior, game)


@click.group()
@click.version_option(version=get_version())
@click.option("-v", "--verbose", count=True, help="Log INFO with -v, DEBUG with -vv.")
def main(verbose: int) -> None:
    """Exact sender payoffs and uniqueness diagnostics for Bayesian persuasion games."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


@main.command()
@game_options
@handle_errors
def interval(game_path: Path, prior: str | None, output_format: str, jobs: int) -> None:
    """The equilibrium payoff interval [w-hat, v-hat] at the prior."""
    game, belief = _load(game_path, prior)
    emit(interval_report(game, equilibrium_interval(game, belief)), output_format)


@main.command("analyze")
@game_options
@handle_errors
def analyze_command(game_path: Path, prior: str | None, output_format: str, jobs: int) -> None:
    """Uniqueness verdict with its evidence and the exact interval."""
    game, belief = _load(game_path, prior)
    emit(verdict_report(game, analyze(game, belief, jobs=jobs)), output_format)


@main.group()
def check() -> None:
    """Run a single test of the uniqueness battery."""


@check.command()
@game_options
@handle_errors
def pubr(game_path: Path, prior: str | None, output_format: str, jobs: int) -> None:
    """Potentially unique best responses and the PUBR theorem."""
    game, belief = _load(game_path, prior)
    actions = potentially_unique_actions(game, belief.support)
    emit(pubr_report(game, actions, theorem1_verdict(game, belief)), output_format)


@check.command()
@game_options
@handle_errors
def generic(game_path: Path, prior: str | None, output_format: str, jobs: int) -> None:
    """Genericity of the receiver's payoffs."""
    game, _ = _load(game_path, prior)
    emit(genericity_entry(game, genericity_check(game, jobs=jobs)), output_format)


@check.command()
@game_options
@click.option("--seed", type=int, default=0, show_default=True, help="Seed of the sampling fallback.")
@handle_errors
def ordered(game_path: Path, prior: str | None, output_format: str, jobs: int, seed: int) -> None:
    """Hypotheses of the ordered-model uniqueness theorem."""
    game, belief = _load(game_path, prior)
    emit(ordered_entry(game, ordered_check(game, belief, seed=seed)), output_format)


@check.command("global")
@game_options
@handle_errors
def global_command(game_path: Path, prior: str | None, output_format: str, jobs: int) -> None:
    """Whether w-hat dominates v on the whole simplex."""
    game, _ = _load(game_path, prior)
    emit(global_entry(game, global_checks(game, jobs=jobs)), output_format)


@check.command()
@game_options
@handle_errors
def ties(game_path: Path, prior: str | None, output_format: str, jobs: int) -> None:
    """Whether the sender is indifferent among the receiver's tied best responses."""
    game, _ = _load(game_path, prior)
    emit({"no_relevant_ties": no_relevant_ties(game)}, output_format)


@main.command()
@game_options
@click.option("--target", required=True, help="Sender payoff to realize, e.g. 1/4.")
@handle_errors
def witness(game_path: Path, prior: str | None, output_format: str, jobs: int, target: str) -> None:
    """An equilibrium whose sender payoff is exactly the target."""
    game, belief = _load(game_path, prior)
    result = equilibrium_witness(game, belief, parse_rational(target, "target"))
    emit(witness_report(game, result), output_format)


@main.command()
@game_options
@click.option("--chi", "chis", multiple=True, help="Credibility level in [0, 1]; repeatable.")
@click.option("--epsilon", default=str(DEFAULT_EPSILON), show_default=True, help="Slack of the committed policy.")
@click.option("--table", is_flag=True, help="Print the (chi, bound) table as comma-separated text.")
@handle_errors
def credibility(
    game_path: Path,
    prior: str | None,
    output_format: str,
    jobs: int,
    chis: tuple[str, ...],
    epsilon: str,
    table: bool,
) -> None:
    """Lower bounds on sender payoffs under partial credibility."""
    game, belief = _load(game_path, prior)
    grid: tuple[Fraction, ...] = (
        tuple(parse_rational(chi, "chi") for chi in chis) if chis else DEFAULT_CHI_GRID
    )
    report = robustness_verdict(game, belief, chi_grid=grid, epsilon=parse_rational(epsilon, "epsilon"))
    if table:
        builder = CredibilityTableBuilder(report)
        write_table(builder.build_credibility_table(), builder.fieldnames, sys.stdout)
    else:
        emit(credibility_report(game, report), output_format)


@main.command()
@click.argument("game_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--n", "n", type=int, default=401, show_default=True, help="Evenly spaced positions.")
@click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True, path_type=Path),
    help="Output CSV path, created only once the table is computed; standard output by default.",
)
@click.option("--edge", help="States 'i,j' spanning the sampled edge; required beyond two states.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes.")
@click.option("--progress", is_flag=True, help="Show a progress bar.")
@handle_errors
def figure(game_path: Path, n: int, out: Path | None, edge: str | None, jobs: int, progress: bool) -> None:
    """Tabulate v, w, v-hat and w-hat along an edge of the simplex."""
    game = load_game_file(game_path)
    pair = None if edge is None else parse_edge(edge)
    emit_figure(game, n, sys.stdout if out is None else out, edge=pair, jobs=jobs, progress=progress)
    if pair is not None:
        first, second = pair
        click.echo(
            f"slice from {game.states[first].name} (mu=0) to {game.states[second].name} (mu=1)",
            err=True,
        )


@main.command()
@game_options
@click.option("--n", "n", type=int, default=200, show_default=True, help="Grid resolution.")
@click.option("--exact/--no-exact", default=True, show_default=True, help="Also report the exact interval.")
@click.option("--progress", is_flag=True, help="Show a progress bar.")
@handle_errors
def oracle(
    game_path: Path, prior: str | None, output_format: str, jobs: int, n: int, exact: bool, progress: bool
) -> None:
    """Brute-force grid approximation of the payoff interval."""
    game, belief = _load(game_path, prior)
    grid = brute_force_interval(game, belief, n, progress=progress)
    reference = equilibrium_interval(game, belief) if exact else None
    emit(oracle_report(game, grid, reference), output_format)


if __name__ == "__main__":
    main()
