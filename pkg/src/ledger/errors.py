"""Ledger-level errors (contract reverts live in src.contracts.errors)."""
from __future__ import annotations


class LedgerError(Exception):
    pass


class UnknownContract(LedgerError):
    def __init__(self, target):
        super().__init__(f"no contract deployed at {target}")
        self.target = target


class UnknownTx(LedgerError):
    def __init__(self, tx_id: int):
        super().__init__(f"transaction {tx_id} was never submitted")
        self.tx_id = tx_id


class Pending(LedgerError):
    """Transaction is queued but not yet mined."""

    def __init__(self, tx_id: int):
        super().__init__(f"transaction {tx_id} is pending")
        self.tx_id = tx_id


class ClockRegression(LedgerError):
    """Submission or advance earlier than the simulated clock allows."""
    pass


class NotAView(LedgerError):
    def __init__(self, function_name: str):
        super().__init__(f"{function_name} mutates state; submit it as a transaction")
        self.function_name = function_name
