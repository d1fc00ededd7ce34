"""Scenario report rendering (aligned text and TSV)."""
from __future__ import annotations

from src.config import ChainConfig
from src.gasmodel.report import render_cost_text
from src.scenario.runner import ScenarioReport
from src.shared import units
from src.shared.time_utils import format_duration

TSV_HEADER = "contract\tfunction\tgas\tfee_eth\tusd\tlatency_s"


def render_tsv(report: ScenarioReport, chain: ChainConfig | None = None) -> str:
    """One row per mined transaction, deployments included (function DEPLOY)."""
    rate = (chain or ChainConfig()).eth_usd_rate_micro
    out = [TSV_HEADER]
    for step in report.steps:
        r = step.receipt
        if r is None:
            continue
        out.append(
            f"{r.contract_kind}\t{step.function}\t{r.gas_used}\t{units.format_eth(r.fee_wei)}"
            f"\t{units.usd_display(r.fee_wei, rate)}\t{r.latency_s}"
        )
    return "\n".join(out) + "\n"


def render_text(report: ScenarioReport) -> str:
    lines = []
    lines.append("=" * 78)
    lines.append("SCENARIO STEPS")
    lines.append("=" * 78)
    lines.append(f"  {'Line':>4} {'Contract':<15} {'Function':<29} {'Status':<26} {'Gas':>7} {'Lat':>4}")
    lines.append(f"  {'-'*4} {'-'*15} {'-'*29} {'-'*26} {'-'*7} {'-'*4}")
    for s in report.steps:
        if s.function is None:
            continue
        if s.receipt is not None:
            status = s.receipt.status_label
            gas, lat = str(s.receipt.gas_used), str(s.receipt.latency_s)
        else:
            status, gas, lat = f"view -> {s.output}", "0", "-"
        if not s.ok:
            status = "!" + status
        lines.append(
            f"  {s.line:>4} {s.contract_kind or '':<15} {s.function:<29} {status[:26]:<26} {gas:>7} {lat:>4}"
        )
    lines.append("")
    lines.append(render_cost_text(report.cost).rstrip("\n"))
    lines.append("")
    d = report.deployment
    lines.append(f"  Deployment: {d.total_fee_eth} ETH, {d.usd_display} USD ({d.usd_full})")
    lines.append(f"  Transactions: {len(report.receipts)} ({len(report.call_receipts)} calls)")
    lines.append(f"  Max cycle latency: {report.max_latency_s}s")
    lines.append(f"  Simulated duration: {format_duration(report.duration_s)}")
    lines.append(f"  Settlement ready: {'yes' if report.settled else 'no'}")
    lines.append(f"  Unexpected reverts: {report.unexpected_reverts}")
    return "\n".join(lines) + "\n"
