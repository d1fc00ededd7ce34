from src.ledger.chain import Ledger
from src.ledger.errors import ClockRegression, LedgerError, NotAView, Pending, UnknownContract, UnknownTx
from src.ledger.simulation import ThroughputSample, measure_throughput
from src.ledger.types import DEPLOY_TARGET, Block, LedgerEvent, Receipt, Transaction, TxStatus

__all__ = [
    "DEPLOY_TARGET",
    "Block",
    "ClockRegression",
    "Ledger",
    "LedgerError",
    "LedgerEvent",
    "NotAView",
    "Pending",
    "Receipt",
    "ThroughputSample",
    "Transaction",
    "TxStatus",
    "UnknownContract",
    "UnknownTx",
    "measure_throughput",
]
