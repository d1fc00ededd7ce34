"""Throughput measurement: flood a fresh ledger and measure block usage and latency."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from src.config import ChainConfig
from src.contracts import ContractKind
from src.gasmodel.schedule import GasSchedule
from src.ledger.chain import Ledger
from src.shared.address import Address

log = logging.getLogger("ledger")

FLOOD_SENDER = Address.derive(b"throughput-flood")
FLOOD_FUNCTION = "orderExists"


@dataclass(frozen=True)
class ThroughputSample:
    n_txs: int
    blocks_used: int
    first_confirm_s: int
    last_confirm_s: int
    max_latency_s: int
    tps: Fraction

    @property
    def tps_display(self) -> str:
        return f"{float(self.tps):.2f}"


def measure_throughput(config: ChainConfig | None = None, n_txs: int = 225,
                       schedule: GasSchedule | None = None) -> ThroughputSample:
    """Submit n_txs zero-gas view calls at t=0 and mine them all.

    Effective TPS is confirmed txs over the span from t=0 to the last
    confirming block.
    """
    if n_txs < 1:
        raise ValueError("n_txs must be >= 1")
    ledger = Ledger(config, schedule)
    sales, deploy_receipt = ledger.deploy_contract(ContractKind.SALES, FLOOD_SENDER, time_s=0)
    start = ledger.clock_s
    tx_ids = [ledger.call(FLOOD_SENDER, sales, FLOOD_FUNCTION, f"flood-{i}", time_s=start)
              for i in range(n_txs)]
    last = ledger.mine_until(tx_ids[-1])
    receipts = [ledger.receipt_of(t) for t in tx_ids]
    blocks_used = len({r.block_index for r in receipts})
    span = last.confirm_time_s - start
    sample = ThroughputSample(
        n_txs=n_txs,
        blocks_used=blocks_used,
        first_confirm_s=receipts[0].confirm_time_s - start,
        last_confirm_s=span,
        max_latency_s=max(r.latency_s for r in receipts),
        tps=Fraction(n_txs, span),
    )
    log.info(f"Throughput: {n_txs} txs in {blocks_used} blocks, {sample.tps_display} TPS")
    return sample
