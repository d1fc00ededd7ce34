"""Gas schedule: per-function base gas, variable-payload flags, deployment gas.

File format (CSV, one row per function in report order):

    contract,function,base_gas,variable,ref_payload_len,table_fee_eth,view

Rows whose function is DEPLOY carry a contract kind's deployment gas. The
row `*,GAS_PER_CHAR,<gas>,...` sets the gas charged per payload character.
"""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass, field
from decimal import Decimal
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.config import DEFAULT_SCHEDULE_PATH
from src.shared.units import format_eth, parse_eth

log = logging.getLogger("gasmodel")

DEPLOY = "DEPLOY"
GAS_PER_CHAR = "GAS_PER_CHAR"
DEFAULT_GAS_PER_CHAR = 625
HEADER = ["contract", "function", "base_gas", "variable",
          "ref_payload_len", "table_fee_eth", "view"]


class GasModelError(Exception):
    pass


class UnknownFunction(GasModelError):
    """Function has no entry in the gas schedule."""

    def __init__(self, function_name: str):
        super().__init__(f"no gas schedule entry for {function_name!r}")
        self.function_name = function_name


class ScheduleError(GasModelError):
    """Malformed or inconsistent schedule file."""
    pass


@dataclass(frozen=True)
class ScheduleEntry:
    contract: str
    function: str
    base_gas: int
    variable: bool = False
    ref_payload_len: int = 0
    table_fee_wei: int | None = None
    view: bool = False


@dataclass(frozen=True)
class GasSchedule:
    """Immutable gas schedule. `entries` preserves file order."""
    entries: dict[str, ScheduleEntry]
    deploy_gas: dict[str, int]
    gas_per_char: int = DEFAULT_GAS_PER_CHAR
    deploy_table_fee_wei: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.gas_per_char <= 0:
            raise ScheduleError("gas per character must be > 0")
        for e in self.entries.values():
            if e.base_gas < 0 or e.ref_payload_len < 0:
                raise ScheduleError(f"{e.function}: negative gas or payload length")
            if e.view and (e.base_gas != 0 or e.variable):
                raise ScheduleError(f"{e.function}: view functions must be fixed at 0 gas")
            if not e.variable and e.ref_payload_len != 0:
                raise ScheduleError(f"{e.function}: ref_payload_len set on a fixed function")

    def entry(self, function_name: str) -> ScheduleEntry:
        try:
            return self.entries[function_name]
        except KeyError:
            raise UnknownFunction(function_name) from None

    def gas_for(self, function_name: str, payload_len: int = 0) -> int:
        """Base gas plus gas_per_char per payload character for variable functions, base gas otherwise."""
        if payload_len < 0:
            raise ValueError("payload_len must be >= 0")
        e = self.entry(function_name)
        if e.variable:
            return e.base_gas + payload_len * self.gas_per_char
        return e.base_gas

    def reference_gas(self, function_name: str) -> int:
        """Gas at the calibration payload length."""
        e = self.entry(function_name)
        return self.gas_for(function_name, e.ref_payload_len)

    def deployment_gas(self, kind: str) -> int:
        try:
            return self.deploy_gas[kind]
        except KeyError:
            raise UnknownFunction(f"{DEPLOY}:{kind}") from None

    def functions_of(self, contract: str) -> list[ScheduleEntry]:
        return [e for e in self.entries.values() if e.contract == contract]

    @property
    def contracts(self) -> list[str]:
        seen: list[str] = []
        for e in self.entries.values():
            if e.contract not in seen:
                seen.append(e.contract)
        return seen


class ScheduleRow(BaseModel):
    """One validated CSV row."""
    model_config = ConfigDict(extra="forbid")

    contract: str = Field(min_length=1)
    function: str = Field(min_length=1)
    base_gas: int = Field(ge=0)
    variable: bool = False
    ref_payload_len: int = Field(0, ge=0)
    table_fee_eth: Decimal | None = None
    view: bool = False

    @field_validator("table_fee_eth", mode="before")
    @classmethod
    def _blank_is_none(cls, v):
        if isinstance(v, str) and not v.strip():
            return None
        return v

    @property
    def table_fee_wei(self) -> int | None:
        if self.table_fee_eth is None:
            return None
        try:
            return parse_eth(str(self.table_fee_eth))
        except ValueError:
            raise ScheduleError(f"{self.function}: table fee not representable in wei") from None


def parse_schedule(text: str, source: str = "<schedule>") -> GasSchedule:
    reader = csv.DictReader(io.StringIO(text), restkey="extra")
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != HEADER:
        raise ScheduleError(f"{source}: header must be {','.join(HEADER)}")

    entries: dict[str, ScheduleEntry] = {}
    deploy_gas: dict[str, int] = {}
    deploy_fees: dict[str, int] = {}
    gas_per_char = DEFAULT_GAS_PER_CHAR

    for lineno, raw in enumerate(reader, start=2):
        try:
            row = ScheduleRow.model_validate(
                {k.strip(): v if isinstance(v, list) else (v or "").strip() for k, v in raw.items()}
            )
        except ValidationError as e:
            first = e.errors()[0]
            loc = ".".join(str(p) for p in first["loc"])
            raise ScheduleError(f"{source}:{lineno}: {loc}: {first['msg']}") from None

        if row.function == GAS_PER_CHAR:
            gas_per_char = row.base_gas
        elif row.function == DEPLOY:
            if row.contract in deploy_gas:
                raise ScheduleError(f"{source}:{lineno}: duplicate DEPLOY row for {row.contract}")
            deploy_gas[row.contract] = row.base_gas
            if row.table_fee_wei is not None:
                deploy_fees[row.contract] = row.table_fee_wei
        else:
            if row.function in entries:
                raise ScheduleError(f"{source}:{lineno}: duplicate function {row.function!r}")
            entries[row.function] = ScheduleEntry(
                contract=row.contract,
                function=row.function,
                base_gas=row.base_gas,
                variable=row.variable,
                ref_payload_len=row.ref_payload_len,
                table_fee_wei=row.table_fee_wei,
                view=row.view,
            )

    log.debug(f"Loaded schedule {source}: {len(entries)} functions, {len(deploy_gas)} deployments")
    return GasSchedule(
        entries=entries,
        deploy_gas=deploy_gas,
        gas_per_char=gas_per_char,
        deploy_table_fee_wei=deploy_fees,
    )


def load_schedule(path: Path) -> GasSchedule:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ScheduleError(f"cannot read gas schedule {path}: {e}") from None
    return parse_schedule(text, source=str(path))


def default_schedule() -> GasSchedule:
    return load_schedule(DEFAULT_SCHEDULE_PATH)


def render_schedule(schedule: GasSchedule) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    writer.writerow(["*", GAS_PER_CHAR, schedule.gas_per_char, "false", 0, "", "false"])
    for kind, gas in schedule.deploy_gas.items():
        fee = schedule.deploy_table_fee_wei.get(kind)
        writer.writerow([kind, DEPLOY, gas, "false", 0,
                         "" if fee is None else format_eth(fee), "false"])
    for e in schedule.entries.values():
        writer.writerow([
            e.contract, e.function, e.base_gas,
            "true" if e.variable else "false",
            e.ref_payload_len,
            "" if e.table_fee_wei is None else format_eth(e.table_fee_wei),
            "true" if e.view else "false",
        ])
    return buf.getvalue()


def write_schedule(schedule: GasSchedule, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_schedule(schedule), encoding="utf-8")
