"""Command-line interface.

Usage:
    python -m scripts.tradeledger deploy
    python -m scripts.tradeledger --fee-source table report
    python -m scripts.tradeledger --format tsv run src/data/canonical_lc.scenario
    python -m scripts.tradeledger hash src/data/documents/bill_of_lading.txt

Exit codes: 0 success, 1 scenario/config error, 2 unexpected revert.
"""
from __future__ import annotations

import logging
import sys
from pathlib import Path

import click

from src.config import AppConfig, ConfigError, FeeSource, OutputFormat, load_config
from src.contracts import ContractKind
from src.db.connection import get_connection
from src.db.receipts_repo import ReceiptsRepo
from src.docstore import DocStore, hash_file
from src.gasmodel.report import (
    cost_report,
    deployment_report,
    render_cost_text,
    render_cost_tsv,
    render_deployment_text,
    render_deployment_tsv,
)
from src.gasmodel.schedule import GasModelError, load_schedule
from src.ledger import Ledger
from src.scenario import ScenarioError, execute, parse_file, render_text, render_tsv
from src.scenario.canonical import run_canonical
from src.shared.address import Address

log = logging.getLogger("cli")

EXIT_ERROR = 1
EXIT_UNEXPECTED_REVERT = 2
DEPLOYER = Address.derive(b"tradeledger-deployer")


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%H:%M:%S",
        stream=sys.stderr,
        force=True,
    )


def _fail(message: str) -> None:
    click.echo(f"Error: {message}", err=True)
    sys.exit(EXIT_ERROR)


@click.group()
@click.option("--config", "config_path", type=click.Path(path_type=Path), default=None,
              help="Chain config file (key=value). Overrides TRADELEDGER_CONFIG.")
@click.option("--schedule", "schedule_path", type=click.Path(path_type=Path), default=None,
              help="Gas schedule CSV. Overrides TRADELEDGER_SCHEDULE.")
@click.option("--fee-source", type=click.Choice([f.value for f in FeeSource]), default=None,
              help="Row fees from metered gas or from the schedule's table_fee_eth column.")
@click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]), default=None,
              help="Output format.")
@click.option("--store", "store_root", type=click.Path(path_type=Path), default=None,
              help="Docstore directory for attached documents. Overrides TRADELEDGER_STORE.")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging (DEBUG level)")
@click.pass_context
def cli(ctx, config_path, schedule_path, fee_source, output_format, store_root, verbose):
    """Gas-metered trade-finance ledger simulator."""
    _setup_logging(verbose)
    try:
        config = load_config(
            config_path=config_path,
            schedule_path=schedule_path,
            store_root=store_root,
            fee_source=fee_source,
            output_format=output_format,
        )
        schedule = load_schedule(config.schedule_path)
    except (ConfigError, GasModelError) as e:
        _fail(str(e))
    ctx.obj = (config, schedule)


def _tsv(config: AppConfig) -> bool:
    return config.report.output_format is OutputFormat.TSV


@cli.command()
@click.pass_obj
def deploy(obj):
    """Deploy all three contracts on a fresh ledger and print their cost."""
    config, schedule = obj
    ledger = Ledger(config.chain, schedule)
    for kind in ContractKind:
        ledger.deploy_contract(kind, DEPLOYER)
    report = deployment_report(ledger.receipts, config.chain)
    click.echo(render_deployment_tsv(report) if _tsv(config) else render_deployment_text(report), nl=False)


@cli.command()
@click.argument("scenario_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--archive", "archive_path", type=click.Path(path_type=Path), default=None,
              help="Append the run's receipts to this SQLite archive. Overrides TRADELEDGER_DB.")
@click.pass_obj
def run(obj, scenario_file: Path, archive_path: Path | None):
    """Execute a scenario file and print its report."""
    config, schedule = obj
    store = DocStore(config.docstore.root)
    try:
        script = parse_file(scenario_file)
        report = execute(script, config.chain, schedule, config.report.fee_source, store)
    except ScenarioError as e:
        _fail(f"{scenario_file}: {e}")

    archive_path = archive_path or config.db_path
    if archive_path is not None:
        conn = get_connection(archive_path)
        try:
            repo = ReceiptsRepo(conn)
            run_id = repo.insert_run(str(scenario_file), config.chain, report.duration_s, report.settled)
            repo.insert_receipts(run_id, list(report.receipts))
            repo.commit()
        finally:
            conn.close()
        log.info(f"Archived run {run_id} ({len(report.receipts)} receipts) to {archive_path}")

    click.echo(render_tsv(report, config.chain) if _tsv(config) else render_text(report), nl=False)
    if report.unexpected_reverts:
        click.echo(f"{report.unexpected_reverts} step(s) reverted unexpectedly", err=True)
        sys.exit(EXIT_UNEXPECTED_REVERT)


@cli.command()
@click.option("--archive", "archive_path", type=click.Path(path_type=Path), default=None,
              help="Report the latest archived run instead of re-running the canonical scenario.")
@click.pass_obj
def report(obj, archive_path: Path | None):
    """Per-function cost table for the canonical scenario."""
    config, schedule = obj
    archive_path = archive_path or config.db_path
    if archive_path is not None:
        if not Path(archive_path).exists():
            _fail(f"archive {archive_path} does not exist")
        conn = get_connection(archive_path)
        try:
            repo = ReceiptsRepo(conn)
            run_id = repo.latest_run_id()
            if run_id is None:
                _fail(f"archive {archive_path} holds no runs")
            chain = repo.get_run_chain(run_id)
            receipts = repo.load_receipts(run_id)
        finally:
            conn.close()
        try:
            cost = cost_report(receipts, config.report.fee_source, schedule, chain)
        except GasModelError as e:
            _fail(str(e))
    else:
        cost = run_canonical(config.chain, schedule, config.report.fee_source).cost
    click.echo(render_cost_tsv(cost) if _tsv(config) else render_cost_text(cost), nl=False)


@cli.command("hash")
@click.argument("file_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
def hash_cmd(file_path: Path):
    """Print the content hash of a file's bytes."""
    click.echo(hash_file(file_path).hex)


def main() -> None:
    cli(prog_name="tradeledger")
