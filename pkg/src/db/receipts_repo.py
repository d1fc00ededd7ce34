"""Archive of scenario runs and their receipts."""
from __future__ import annotations

import sqlite3

from src.config import ChainConfig
from src.ledger.types import Receipt, TxStatus
from src.shared.address import Address


class ReceiptsRepo:
    def __init__(self, conn: sqlite3.Connection):
        self.conn = conn

    def insert_run(
        self,
        scenario: str,
        chain: ChainConfig,
        duration_s: int = 0,
        settled: bool = False,
    ) -> int:
        """Insert a run header and return its id."""
        cur = self.conn.execute(
            """INSERT INTO runs
               (scenario, gas_price_wei, tps, block_interval_s, eth_usd_rate_micro, duration_s, settled)
               VALUES (?, ?, ?, ?, ?, ?, ?)""",
            (scenario, str(chain.gas_price_wei), chain.tps, chain.block_interval_s,
             chain.eth_usd_rate_micro, duration_s, int(settled)),
        )
        return cur.lastrowid

    def insert_receipt(self, run_id: int, r: Receipt) -> None:
        self.conn.execute(
            """INSERT OR IGNORE INTO receipts
               (run_id, tx_id, status, revert_reason, gas_used, fee_wei, block_index,
                submit_time_s, confirm_time_s, sender, contract_id, contract_kind,
                function_name, payload_len)
               VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)""",
            (run_id, r.tx_id, r.status.value, r.revert_reason, r.gas_used, str(r.fee_wei),
             r.block_index, r.submit_time_s, r.confirm_time_s, r.sender.hex,
             r.contract_id.hex, r.contract_kind, r.function_name, r.payload_len),
        )

    def insert_receipts(self, run_id: int, receipts: list[Receipt]) -> None:
        for r in receipts:
            self.insert_receipt(run_id, r)

    def latest_run_id(self) -> int | None:
        row = self.conn.execute("SELECT MAX(id) FROM runs").fetchone()
        return row[0] if row else None

    def get_run_chain(self, run_id: int) -> ChainConfig | None:
        """Chain parameters the run was executed under."""
        row = self.conn.execute(
            """SELECT gas_price_wei, tps, block_interval_s, eth_usd_rate_micro
               FROM runs WHERE id = ?""",
            (run_id,),
        ).fetchone()
        if row is None:
            return None
        return ChainConfig(gas_price_wei=int(row[0]), tps=row[1],
                           block_interval_s=row[2], eth_usd_rate_micro=row[3])

    def load_receipts(self, run_id: int) -> list[Receipt]:
        rows = self.conn.execute(
            """SELECT tx_id, status, revert_reason, gas_used, fee_wei, block_index,
                      submit_time_s, confirm_time_s, sender, contract_id, contract_kind,
                      function_name, payload_len
               FROM receipts WHERE run_id = ? ORDER BY tx_id""",
            (run_id,),
        ).fetchall()
        return [
            Receipt(
                tx_id=row[0],
                status=TxStatus(row[1]),
                revert_reason=row[2],
                gas_used=row[3],
                fee_wei=int(row[4]),
                block_index=row[5],
                submit_time_s=row[6],
                confirm_time_s=row[7],
                sender=Address.from_hex(row[8]),
                contract_id=Address.from_hex(row[9]),
                contract_kind=row[10],
                function_name=row[11],
                payload_len=row[12],
            )
            for row in rows
        ]

    def commit(self) -> None:
        self.conn.commit()
