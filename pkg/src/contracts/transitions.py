"""Loader for the transition-table data file.

Each row maps (contract, state, role, action) to either a result state or
a revert reason. `*` in the state or role column matches anything; lookup
prefers the most specific row: (state, role), (state, *), (*, role), (*, *).
Lines starting with `#` are comments.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

from src.config import TRANSITION_TABLE_PATH
from src.contracts.errors import REVERT_REASONS

WILDCARD = "*"
COLUMNS = ("contract", "state", "role", "action", "result_state_or_error")


class TransitionTableError(Exception):
    pass


@dataclass(frozen=True)
class Outcome:
    result: str

    @property
    def is_revert(self) -> bool:
        return self.result in REVERT_REASONS


class TransitionTable:
    def __init__(self, rows: dict[tuple[str, str, str, str], str]):
        self._rows = dict(rows)

    def __len__(self) -> int:
        return len(self._rows)

    def actions(self, contract: str) -> set[str]:
        return {a for (c, _, _, a) in self._rows if c == contract}

    def lookup(self, contract: str, state: str, role: str, action: str) -> Outcome:
        for s, r in ((state, role), (state, WILDCARD), (WILDCARD, role), (WILDCARD, WILDCARD)):
            result = self._rows.get((contract, s, r, action))
            if result is not None:
                return Outcome(result)
        raise KeyError(f"no transition for {contract} {action} in state {state!r} as {role}")


def parse_transition_table(text: str, source: str = "<string>") -> TransitionTable:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    reader = csv.DictReader(io.StringIO("\n".join(lines)))
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise TransitionTableError(f"{source}: header must be {','.join(COLUMNS)}")
    rows: dict[tuple[str, str, str, str], str] = {}
    for n, rec in enumerate(reader, start=2):
        key = (rec["contract"], rec["state"], rec["role"], rec["action"])
        if key in rows:
            raise TransitionTableError(f"{source}: duplicate row {key} (data line {n})")
        rows[key] = rec["result_state_or_error"]
    return TransitionTable(rows)


def load_transition_table(path: Path = TRANSITION_TABLE_PATH) -> TransitionTable:
    path = Path(path)
    return parse_transition_table(path.read_text("utf-8"), source=str(path))
