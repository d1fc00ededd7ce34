"""Deterministic single-chain simulator.

Transactions queue FIFO and are drained into blocks on an integer-second
clock. Block k closes at k × block_interval_s and takes at most
tps × block_interval_s transactions, each submitted strictly before the
boundary. Every executed call is metered from the gas schedule, reverted
calls included.
"""
from __future__ import annotations

import dataclasses
import logging
from collections import deque
from typing import Any

from src.config import ChainConfig
from src.contracts import Contract, ContractKind, ContractRevert, create_contract
from src.gasmodel.fees import FeeModel
from src.gasmodel.schedule import GasSchedule, default_schedule
from src.ledger.errors import ClockRegression, NotAView, Pending, UnknownContract, UnknownTx
from src.ledger.types import DEPLOY_TARGET, Block, LedgerEvent, Receipt, Transaction, TxStatus
from src.shared.address import ZERO_ADDRESS, Address
from src.shared.time_utils import block_index, boundaries_between, next_boundary

log = logging.getLogger("ledger")


class Ledger:
    """Single-threaded ledger. No internal locking.

    Usage:
        ledger = Ledger()
        sales, _ = ledger.deploy_contract(ContractKind.SALES, alice, time_s=0)
        tx_id = ledger.call(alice, sales, "setSalesContract", alice, bob, time_s=ledger.clock_s)
        receipt = ledger.mine_until(tx_id)
    """

    def __init__(self, config: ChainConfig | None = None, schedule: GasSchedule | None = None):
        self.config = config or ChainConfig()
        self.schedule = schedule or default_schedule()
        self.fees = FeeModel(self.schedule, self.config)
        self.clock_s = 0
        self.total_fees_wei = 0
        self._last_submit_s = 0
        self._next_tx_id = 1
        self._pending: deque[Transaction] = deque()
        self._txs: dict[int, Transaction] = {}
        self._receipts: dict[int, Receipt] = {}
        self._blocks: list[Block] = []
        self._events: list[LedgerEvent] = []
        self._contracts: dict[Address, Contract] = {}
        self._deploy_nonce: dict[Address, int] = {}
        self._fees_by_sender: dict[Address, int] = {}

    # --- queries ---

    @property
    def blocks(self) -> tuple[Block, ...]:
        return tuple(self._blocks)

    @property
    def events(self) -> tuple[LedgerEvent, ...]:
        return tuple(self._events)

    @property
    def receipts(self) -> list[Receipt]:
        """Receipts in tx_id order."""
        return [self._receipts[k] for k in sorted(self._receipts)]

    @property
    def pending_count(self) -> int:
        return len(self._pending)

    @property
    def fees_by_sender(self) -> dict[Address, int]:
        return dict(self._fees_by_sender)

    def contract(self, contract_id: Address) -> Contract:
        try:
            return self._contracts[contract_id]
        except KeyError:
            raise UnknownContract(contract_id) from None

    def receipt_of(self, tx_id: int) -> Receipt:
        receipt = self._receipts.get(tx_id)
        if receipt is not None:
            return receipt
        if tx_id in self._txs:
            raise Pending(tx_id)
        raise UnknownTx(tx_id)

    # --- submission ---

    def submit(self, tx: Transaction) -> int:
        if tx.submit_time_s < self.clock_s or tx.submit_time_s < self._last_submit_s:
            raise ClockRegression(
                f"submit at t={tx.submit_time_s} but clock is {self.clock_s}"
                f" and last submission was t={self._last_submit_s}"
            )
        if tx.is_deploy:
            self.schedule.deployment_gas(ContractKind(tx.function_name).value)
        else:
            self.contract(tx.target)
            self.schedule.entry(tx.function_name)

        tx = dataclasses.replace(tx, tx_id=self._next_tx_id)
        self._next_tx_id += 1
        self._last_submit_s = tx.submit_time_s
        self._txs[tx.tx_id] = tx
        self._pending.append(tx)
        log.debug(f"Queued tx {tx.tx_id}: {tx.function_name} from {tx.sender} at t={tx.submit_time_s}")
        return tx.tx_id

    def call(self, sender: Address, contract_id: Address, function_name: str, *args: Any,
             time_s: int | None = None) -> int:
        """Submit a contract call; payload length comes from the function's ABI."""
        contract = self.contract(contract_id)
        spec = contract.functions.get(function_name)
        payload_len = spec.payload_len(args) if spec is not None else 0
        return self.submit(Transaction(
            sender=sender,
            target=contract_id,
            function_name=function_name,
            args=tuple(args),
            payload_len=payload_len,
            submit_time_s=self.clock_s if time_s is None else time_s,
        ))

    def view(self, contract_id: Address, function_name: str, *args: Any,
             caller: Address = ZERO_ADDRESS) -> Any:
        """Evaluate a view function between blocks, at zero gas and without a receipt."""
        contract = self.contract(contract_id)
        spec = contract.spec(function_name)
        if not spec.view:
            raise NotAView(function_name)
        return contract.execute(caller, function_name, args)

    def deploy_contract(self, kind: ContractKind | str, sender: Address,
                        time_s: int | None = None) -> tuple[Address, Receipt]:
        """Deploy and mine until confirmed; the new contract starts uninitialized."""
        kind = ContractKind(kind)
        tx_id = self.submit(Transaction(
            sender=sender,
            target=DEPLOY_TARGET,
            function_name=kind.value,
            submit_time_s=self.clock_s if time_s is None else time_s,
        ))
        receipt = self.mine_until(tx_id)
        return receipt.contract_id, receipt

    # --- block production ---

    def advance_to(self, time_s: int) -> list[Receipt]:
        if time_s < self.clock_s:
            raise ClockRegression(f"cannot advance clock from {self.clock_s} back to {time_s}")
        interval = self.config.block_interval_s
        produced: list[Receipt] = []
        for boundary in boundaries_between(self.clock_s, time_s, interval):
            produced.extend(self._produce_block(boundary))
        self.clock_s = time_s
        return produced

    def mine_until(self, tx_id: int) -> Receipt:
        """Advance block by block until tx_id has a receipt."""
        if tx_id not in self._txs:
            raise UnknownTx(tx_id)
        while tx_id not in self._receipts:
            self.advance_to(next_boundary(self.clock_s, self.config.block_interval_s))
        return self._receipts[tx_id]

    def _produce_block(self, boundary: int) -> list[Receipt]:
        index = block_index(boundary, self.config.block_interval_s)
        capacity = self.config.block_capacity
        receipts: list[Receipt] = []
        # submit times are non-decreasing, so eligible txs form a queue prefix
        while self._pending and len(receipts) < capacity and self._pending[0].submit_time_s < boundary:
            receipts.append(self._execute(self._pending.popleft(), index, boundary))
        self._blocks.append(Block(index=index, timestamp_s=boundary, tx_ids=tuple(r.tx_id for r in receipts)))
        if receipts:
            log.info(f"Block {index} at t={boundary}s: {len(receipts)} txs")
        return receipts

    def _execute(self, tx: Transaction, index: int, boundary: int) -> Receipt:
        if tx.is_deploy:
            receipt = self._execute_deploy(tx, index, boundary)
        else:
            receipt = self._execute_call(tx, index, boundary)
        self._receipts[tx.tx_id] = receipt
        self.total_fees_wei += receipt.fee_wei
        self._fees_by_sender[tx.sender] = self._fees_by_sender.get(tx.sender, 0) + receipt.fee_wei
        log.debug(f"tx {tx.tx_id} {receipt.function_name} {receipt.status_label} gas={receipt.gas_used}")
        return receipt

    def _execute_deploy(self, tx: Transaction, index: int, boundary: int) -> Receipt:
        kind = ContractKind(tx.function_name)
        nonce = self._deploy_nonce.get(tx.sender, 0)
        self._deploy_nonce[tx.sender] = nonce + 1
        address = Address.derive(b"deploy", tx.sender.raw, nonce.to_bytes(8, "big"))
        self._contracts[address] = create_contract(kind, address)
        gas = self.schedule.deployment_gas(kind.value)
        log.info(f"Deployed {kind.value} at {address}")
        return Receipt(
            tx_id=tx.tx_id,
            status=TxStatus.CONFIRMED,
            gas_used=gas,
            fee_wei=self.fees.fee_wei(gas),
            block_index=index,
            confirm_time_s=boundary,
            submit_time_s=tx.submit_time_s,
            sender=tx.sender,
            contract_id=address,
            contract_kind=kind.value,
            function_name=kind.value,
            output=address,
        )

    def _execute_call(self, tx: Transaction, index: int, boundary: int) -> Receipt:
        contract = self._contracts[tx.target]
        gas = self.schedule.gas_for(tx.function_name, tx.payload_len)
        snapshot = contract.snapshot()
        status, reason, output = TxStatus.CONFIRMED, None, None
        try:
            output = contract.execute(tx.sender, tx.function_name, tx.args)
        except ContractRevert as e:
            contract.restore(snapshot)
            status, reason = TxStatus.REVERTED, e.reason
            log.info(f"tx {tx.tx_id} {tx.function_name} reverted: {reason} ({e})")
        for name, data in contract.drain_events():
            self._events.append(LedgerEvent(block_index=index, contract_id=contract.contract_id, name=name, data=data))
        return Receipt(
            tx_id=tx.tx_id,
            status=status,
            gas_used=gas,
            fee_wei=self.fees.fee_wei(gas),
            block_index=index,
            confirm_time_s=boundary,
            submit_time_s=tx.submit_time_s,
            sender=tx.sender,
            contract_id=contract.contract_id,
            contract_kind=contract.kind.value,
            function_name=tx.function_name,
            payload_len=tx.payload_len,
            revert_reason=reason,
            output=output,
        )
