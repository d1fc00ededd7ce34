"""Per-function cost reports and the deployment (migration) cost summary.

Rows follow the schedule file's function order. In gas mode a row's fee is
gas × gas price; in table mode it is the fee printed in the schedule's
table_fee_eth column. Totals sum exact wei and round to USD once.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from src.config import ChainConfig, FeeSource
from src.gasmodel.fees import FeeModel
from src.gasmodel.schedule import GasSchedule
from src.ledger.types import Receipt
from src.shared import units

log = logging.getLogger("gasmodel")

TOTAL_PLACES = 4


@dataclass(frozen=True)
class CostRow:
    contract: str
    function: str
    gas: int
    calls: int
    fee_wei: int
    usd_micro: int
    usd: str
    view: bool = False

    @property
    def fee_eth(self) -> str:
        """Exact fee in ETH; a row is never rounded."""
        return units.format_eth(self.fee_wei)


@dataclass(frozen=True)
class ContractTotal:
    contract: str
    fee_wei: int
    usd_micro: int
    usd: str


@dataclass(frozen=True)
class CostReport:
    rows: tuple[CostRow, ...]
    totals: dict[str, ContractTotal]
    fee_source: FeeSource
    gas_price_eth: str

    def row(self, function_name: str) -> CostRow:
        for r in self.rows:
            if r.function == function_name:
                return r
        raise KeyError(function_name)


@dataclass(frozen=True)
class DeploymentRow:
    contract: str
    address: str
    gas: int
    fee_wei: int

    @property
    def fee_eth(self) -> str:
        return units.format_eth(self.fee_wei)


@dataclass(frozen=True)
class DeploymentReport:
    rows: tuple[DeploymentRow, ...]
    total_gas: int
    total_fee_wei: int
    usd_display: str
    usd_full: str

    @property
    def total_fee_eth(self) -> str:
        return units.format_eth(self.total_fee_wei)


def _row_fee(schedule: GasSchedule, model: FeeModel, function: str, gas: int, calls: int,
             fee_source: FeeSource) -> int:
    if calls == 0:
        return 0
    if fee_source is FeeSource.TABLE:
        table_fee = schedule.entry(function).table_fee_wei
        if table_fee is not None:
            return table_fee
        log.warning(f"{function}: no table fee in schedule, using metered gas")
    return model.fee_wei(gas)


def totals_by_contract(rows: Iterable[CostRow], chain: ChainConfig) -> dict[str, ContractTotal]:
    """Per-contract totals: exact wei sum, USD rounded once at the end."""
    sums: dict[str, int] = {}
    for r in rows:
        sums[r.contract] = sums.get(r.contract, 0) + r.fee_wei
    rate = chain.eth_usd_rate_micro
    return {
        contract: ContractTotal(
            contract=contract,
            fee_wei=fee,
            usd_micro=units.usd_micro(fee, rate),
            usd=units.usd_display(fee, rate, TOTAL_PLACES),
        )
        for contract, fee in sums.items()
    }


def cost_report(receipts: Iterable[Receipt], fee_source: FeeSource | str,
                schedule: GasSchedule, chain: ChainConfig | None = None) -> CostReport:
    """One row per schedule function; row gas is the first call's metered gas."""
    fee_source = FeeSource(fee_source)
    chain = chain or ChainConfig()
    model = FeeModel(schedule, chain)

    first_gas: dict[str, int] = {}
    calls: dict[str, int] = {}
    for r in receipts:
        if r.is_deploy:
            continue
        schedule.entry(r.function_name)  # UnknownFunction for unscheduled calls
        first_gas.setdefault(r.function_name, r.gas_used)
        calls[r.function_name] = calls.get(r.function_name, 0) + 1

    rows = []
    for entry in schedule.entries.values():
        n = calls.get(entry.function, 0)
        gas = first_gas.get(entry.function, 0)
        fee = _row_fee(schedule, model, entry.function, gas, n, fee_source)
        rows.append(CostRow(
            contract=entry.contract,
            function=entry.function,
            gas=gas,
            calls=n,
            fee_wei=fee,
            usd_micro=model.usd(fee),
            usd=model.usd_display(fee),
            view=entry.view,
        ))
    return CostReport(
        rows=tuple(rows),
        totals=totals_by_contract(rows, chain),
        fee_source=fee_source,
        gas_price_eth=model.gas_price_eth_display,
    )


def deployment_report(receipts: Iterable[Receipt], chain: ChainConfig | None = None) -> DeploymentReport:
    chain = chain or ChainConfig()
    rows = tuple(
        DeploymentRow(contract=r.contract_kind, address=r.contract_id.hex, gas=r.gas_used, fee_wei=r.fee_wei)
        for r in receipts if r.is_deploy
    )
    total_fee = sum(r.fee_wei for r in rows)
    return DeploymentReport(
        rows=rows,
        total_gas=sum(r.gas for r in rows),
        total_fee_wei=total_fee,
        usd_display=units.usd_display(total_fee, chain.eth_usd_rate_micro, 2),
        usd_full=units.usd_display(total_fee, chain.eth_usd_rate_micro, 6),
    )


# --- rendering ---

def render_cost_text(report: CostReport) -> str:
    lines = []
    lines.append("=" * 78)
    lines.append(f"CONTRACT FUNCTION COSTS (fee source: {report.fee_source.value})")
    lines.append("=" * 78)
    lines.append(f"  {'Contract':<15} {'Function':<29} {'Gas':>7} {'Fee (ETH)':>11} {'USD':>6} {'Calls':>5}")
    lines.append(f"  {'-'*15} {'-'*29} {'-'*7} {'-'*11} {'-'*6} {'-'*5}")
    for r in report.rows:
        lines.append(f"  {r.contract:<15} {r.function:<29} {r.gas:>7} {r.fee_eth:>11} {r.usd:>6} {r.calls:>5}")
    lines.append("")
    lines.append(f"  Gas price: {report.gas_price_eth} ETH")
    lines.append(f"  {'Contract':<15} {'Total (USD)':>12}")
    for t in report.totals.values():
        lines.append(f"  {t.contract:<15} {t.usd:>12}")
    return "\n".join(lines) + "\n"


def render_cost_tsv(report: CostReport) -> str:
    out = ["contract\tfunction\tcalls\tgas\tgas_price_eth\tfee_eth\tusd"]
    for r in report.rows:
        out.append(f"{r.contract}\t{r.function}\t{r.calls}\t{r.gas}\t{report.gas_price_eth}\t{r.fee_eth}\t{r.usd}")
    for t in report.totals.values():
        out.append(f"{t.contract}\tTOTAL\t\t\t\t{units.format_eth(t.fee_wei)}\t{t.usd}")
    return "\n".join(out) + "\n"


def render_deployment_text(report: DeploymentReport) -> str:
    lines = []
    lines.append("=" * 78)
    lines.append("CONTRACT DEPLOYMENT COSTS")
    lines.append("=" * 78)
    lines.append(f"  {'Contract':<15} {'Address':<42} {'Gas':>8} {'Fee (ETH)':>12}")
    lines.append(f"  {'-'*15} {'-'*42} {'-'*8} {'-'*12}")
    for r in report.rows:
        lines.append(f"  {r.contract:<15} {r.address:<42} {r.gas:>8} {r.fee_eth:>12}")
    lines.append("")
    lines.append(f"  Total: {report.total_fee_eth} ETH ({report.total_gas} gas)")
    lines.append(f"  USD:   {report.usd_display} ({report.usd_full})")
    return "\n".join(lines) + "\n"


def render_deployment_tsv(report: DeploymentReport) -> str:
    out = ["contract\taddress\tgas\tfee_eth"]
    for r in report.rows:
        out.append(f"{r.contract}\t{r.address}\t{r.gas}\t{r.fee_eth}")
    out.append(f"TOTAL\t\t{report.total_gas}\t{report.total_fee_eth}")
    out.append(f"USD\t\t\t{report.usd_full}")
    return "\n".join(out) + "\n"
