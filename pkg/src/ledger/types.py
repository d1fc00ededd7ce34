"""Ledger value types: transactions, receipts, blocks, events."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from src.shared.address import Address

DEPLOY_TARGET = "DEPLOY"


class TxStatus(str, Enum):
    CONFIRMED = "Confirmed"
    REVERTED = "Reverted"


@dataclass(frozen=True)
class Transaction:
    """A metered contract call (or deployment) waiting for a block.

    target is a contract address, or DEPLOY_TARGET with function_name set to
    the contract kind being deployed. tx_id is assigned by Ledger.submit.
    """
    sender: Address
    target: Address | str
    function_name: str
    args: tuple = ()
    payload_len: int = 0
    submit_time_s: int = 0
    tx_id: int = 0

    @property
    def is_deploy(self) -> bool:
        return self.target == DEPLOY_TARGET


@dataclass(frozen=True)
class Receipt:
    tx_id: int
    status: TxStatus
    gas_used: int
    fee_wei: int
    block_index: int
    confirm_time_s: int
    submit_time_s: int
    sender: Address
    contract_id: Address
    contract_kind: str
    function_name: str
    payload_len: int = 0
    revert_reason: str | None = None
    output: Any = None

    @property
    def latency_s(self) -> int:
        return self.confirm_time_s - self.submit_time_s

    @property
    def reverted(self) -> bool:
        return self.status is TxStatus.REVERTED

    @property
    def is_deploy(self) -> bool:
        return self.function_name == self.contract_kind

    @property
    def status_label(self) -> str:
        if self.reverted:
            return f"Reverted({self.revert_reason})"
        return self.status.value


@dataclass(frozen=True)
class Block:
    index: int
    timestamp_s: int
    tx_ids: tuple[int, ...] = ()


@dataclass(frozen=True)
class LedgerEvent:
    block_index: int
    contract_id: Address
    name: str
    data: dict = field(default_factory=dict, compare=True, hash=False)
