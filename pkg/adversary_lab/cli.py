"""
Command-line interface for the adversary workbench.

Usage:
    adversary-lab simulate --algorithm family=grover,N=4,iterations=1 --family search --n 4
    adversary-lab trace    --family search --n 16 --algorithm family=grover,iterations=3
    adversary-lab bound    --family counting --n 8 --eps 1/2
    adversary-lab bs       --truth-table or3.tt
    adversary-lab sweep    experiments/*.cfg

Exit codes: 0 all checks hold, 1 a checked inequality failed, 2 usage or I/O error.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Annotated, Any, Optional

from dotenv import load_dotenv

load_dotenv()

import typer  # noqa: E402
from rich.console import Console  # noqa: E402
from rich.table import Table  # noqa: E402

from adversary_lab.features.query_model import OracleConvention  # noqa: E402
from adversary_lab.features.reporting import (  # noqa: E402
    CommandKind,
    CommandOutcome,
    ExitCode,
    OutputFormat,
    build_config,
    run_command,
    run_sweep,
    write_outcome,
)
from adversary_lab.platform.errors import AdversaryLabError  # noqa: E402
from adversary_lab.platform.observability.run_context import new_run_id, set_run_id  # noqa: E402
from adversary_lab.platform.observability.smart_logger import SmartLogger  # noqa: E402

app = typer.Typer(
    name="adversary-lab",
    help="Quantum query-model simulator and adversary lower-bound workbench",
    add_completion=False,
)

# reports go to stdout, everything for humans to stderr
console = Console(stderr=True)

AlgorithmOpt = Annotated[Optional[str], typer.Option("--algorithm", help='e.g. "family=grover,N=4,iterations=1"')]
FamilyOpt = Annotated[Optional[str], typer.Option("--family", help="search|andofors|counting|perminv|parity|majority")]
SizeOpt = Annotated[Optional[int], typer.Option("--n", help="input length N")]
EpsOpt = Annotated[Optional[str], typer.Option("--eps", help="exact rational, e.g. 1/2")]
IterationsOpt = Annotated[Optional[int], typer.Option("--iterations", help="Grover iterations")]
ConventionOpt = Annotated[Optional[OracleConvention], typer.Option("--convention", case_sensitive=False)]
RelationOpt = Annotated[Optional[Path], typer.Option("--relation-file", help="relation file (X, Y, R)")]
TruthTableOpt = Annotated[Optional[Path], typer.Option("--truth-table", help="truth-table file")]
TolOpt = Annotated[Optional[float], typer.Option("--tol", help="slack for inequality checks")]
BoundOpt = Annotated[Optional[float], typer.Option("--bound", help="per-query decrease bound to test")]
SeedOpt = Annotated[Optional[int], typer.Option("--seed", help="seed for random algorithms")]
OutOpt = Annotated[Optional[Path], typer.Option("--out", "-o", help="report path (stdout when omitted)")]
FormatOpt = Annotated[Optional[OutputFormat], typer.Option("--format", case_sensitive=False)]
ConfigOpt = Annotated[Optional[Path], typer.Option("--config", "-c", help="experiment config file")]


def print_summary(title: str, outcome: CommandOutcome) -> None:
    table = Table(title=title, show_header=False)
    table.add_column("key", style="cyan")
    table.add_column("value")
    for key, value in outcome.summary:
        style = "red" if "FAIL" in value else None
        table.add_row(key, value, style=style)
    console.print(table)
    if outcome.exit_code is ExitCode.VIOLATION:
        console.print("[bold red]At least one checked inequality failed.[/bold red]")


def _execute(command: CommandKind, config_path: Optional[Path], flags: dict[str, Any]) -> None:
    set_run_id(new_run_id(command.value))
    try:
        config = build_config(command, flags, config_path)
        outcome = run_command(config)
        text = write_outcome(outcome, config)
    except (AdversaryLabError, OSError) as exc:
        SmartLogger.log("ERROR", "Command failed", category=f"adversary_lab.cli.{command.value}.error",
                        params={"error": str(exc)})
        console.print(f"[bold red]error:[/bold red] {exc}")
        raise typer.Exit(int(ExitCode.USAGE)) from None
    if text is not None:
        sys.stdout.write(text)
    print_summary(command.value, outcome)
    raise typer.Exit(int(outcome.exit_code))


@app.command()
def simulate(
    algorithm: AlgorithmOpt = None,
    family: FamilyOpt = None,
    n: SizeOpt = None,
    eps: EpsOpt = None,
    iterations: IterationsOpt = None,
    convention: ConventionOpt = None,
    truth_table: TruthTableOpt = None,
    seed: SeedOpt = None,
    out: OutOpt = None,
    format: FormatOpt = None,  # noqa: A002
    config: ConfigOpt = None,
):
    """
    Run an algorithm on every input of f and report success probabilities and eps.
    """
    _execute(CommandKind.SIMULATE, config, {
        "algorithm": algorithm, "family": family, "n": n, "eps": eps, "iterations": iterations,
        "convention": convention, "truth_table": truth_table, "seed": seed, "out": out, "format": format,
    })


@app.command()
def trace(
    algorithm: AlgorithmOpt = None,
    family: FamilyOpt = None,
    n: SizeOpt = None,
    eps: EpsOpt = None,
    iterations: IterationsOpt = None,
    convention: ConventionOpt = None,
    relation_file: RelationOpt = None,
    truth_table: TruthTableOpt = None,
    tol: TolOpt = None,
    bound: BoundOpt = None,
    seed: SeedOpt = None,
    out: OutOpt = None,
    format: FormatOpt = None,  # noqa: A002
    config: ConfigOpt = None,
):
    """
    Record the progress measure S_0..S_T and check the lower-bound chain on it.
    """
    _execute(CommandKind.TRACE, config, {
        "algorithm": algorithm, "family": family, "n": n, "eps": eps, "iterations": iterations,
        "convention": convention, "relation_file": relation_file, "truth_table": truth_table,
        "tol": tol, "bound": bound, "seed": seed, "out": out, "format": format,
    })


@app.command()
def bound(
    family: FamilyOpt = None,
    n: SizeOpt = None,
    eps: EpsOpt = None,
    relation_file: RelationOpt = None,
    truth_table: TruthTableOpt = None,
    tol: TolOpt = None,
    seed: SeedOpt = None,
    out: OutOpt = None,
    format: FormatOpt = None,  # noqa: A002
    config: ConfigOpt = None,
):
    """
    Enumerate a relation's degrees and report both adversary bounds.

    With --truth-table, search small functions for the best relation.
    """
    _execute(CommandKind.BOUND, config, {
        "family": family, "n": n, "eps": eps, "relation_file": relation_file,
        "truth_table": truth_table, "tol": tol, "seed": seed, "out": out, "format": format,
    })


@app.command()
def bs(
    truth_table: TruthTableOpt = None,
    tol: TolOpt = None,
    out: OutOpt = None,
    format: FormatOpt = None,  # noqa: A002
    config: ConfigOpt = None,
):
    """
    Block sensitivity of a total Boolean function and the matching adversary bound.
    """
    _execute(CommandKind.BS, config, {
        "truth_table": truth_table, "tol": tol, "out": out, "format": format,
    })


@app.command()
def sweep(
    paths: Annotated[list[Path], typer.Argument(help="experiment config files")],
    workers: Annotated[Optional[int], typer.Option("--workers", help="parallel experiments")] = None,
):
    """
    Run several experiment configs concurrently; each writes its own report.
    """
    set_run_id(new_run_id("sweep"))
    results = run_sweep(paths, workers=workers)
    table = Table(title="sweep", show_header=True)
    table.add_column("config", style="cyan")
    table.add_column("exit")
    table.add_column("report / error", style="dim")
    for path, code, detail in results:
        table.add_row(str(path), str(int(code)), detail)
    console.print(table)
    raise typer.Exit(max((int(code) for _, code, _ in results), default=0))


def main():
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
