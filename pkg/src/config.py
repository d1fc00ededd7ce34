"""Central configuration for the trade-ledger simulator.

Chain parameters, gas schedule location, docstore and report settings as
frozen dataclasses, with environment variable overrides and a flat
key=value chain-config file.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_SCHEDULE_PATH = DATA_DIR / "gas_schedule.csv"
DEFAULT_CHAIN_CONFIG_PATH = DATA_DIR / "chain.conf"
CANONICAL_SCENARIO_PATH = DATA_DIR / "canonical_lc.scenario"
TRANSITION_TABLE_PATH = DATA_DIR / "transition_table_v1.csv"


class ConfigError(Exception):
    """Invalid chain-config file or setting."""
    pass


class FeeSource(str, Enum):
    GAS = "gas"
    TABLE = "table"


class OutputFormat(str, Enum):
    TEXT = "text"
    TSV = "tsv"


@dataclass(frozen=True)
class ChainConfig:
    gas_price_wei: int = 10**9
    tps: int = 15
    block_interval_s: int = 15
    eth_usd_rate_micro: int = 550_750_000

    def __post_init__(self):
        if self.tps < 1:
            raise ConfigError("tps must be >= 1")
        if self.block_interval_s < 1:
            raise ConfigError("block_interval_s must be >= 1")
        if self.gas_price_wei < 0 or self.eth_usd_rate_micro < 0:
            raise ConfigError("gas_price_wei and eth_usd_rate_micro must be >= 0")

    @property
    def block_capacity(self) -> int:
        return self.tps * self.block_interval_s


@dataclass(frozen=True)
class DocStoreConfig:
    root: Path | None = None


@dataclass(frozen=True)
class ReportConfig:
    fee_source: FeeSource = FeeSource.GAS
    output_format: OutputFormat = OutputFormat.TEXT


@dataclass
class AppConfig:
    chain: ChainConfig = field(default_factory=ChainConfig)
    schedule_path: Path = DEFAULT_SCHEDULE_PATH
    docstore: DocStoreConfig = field(default_factory=DocStoreConfig)
    report: ReportConfig = field(default_factory=ReportConfig)
    db_path: Path | None = None


class _ChainConfigFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    gas_price_wei: int = Field(10**9, ge=0)
    tps: int = Field(15, ge=1)
    block_interval_s: int = Field(15, ge=1)
    eth_usd_rate_micro: int = Field(550_750_000, ge=0)


def parse_chain_config(text: str, source: str = "<chain config>") -> ChainConfig:
    """Parse flat key=value text; missing keys take defaults, unknown keys fail."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(f"{source}:{lineno}: expected key=value, got {raw.strip()!r}")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        values[key] = value.replace("_", "")

    try:
        parsed = _ChainConfigFile.model_validate(values, strict=False)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or '?'}: {err['msg']}"
            for err in e.errors()
        )
        raise ConfigError(f"{source}: {problems}") from None

    return ChainConfig(**parsed.model_dump())


def load_chain_config(path: Path) -> ChainConfig:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read chain config {path}: {e}") from None
    return parse_chain_config(text, source=str(path))


def load_config(
    env_file: Path | None = None,
    config_path: Path | None = None,
    schedule_path: Path | None = None,
    store_root: Path | None = None,
    db_path: Path | None = None,
    fee_source: FeeSource | str | None = None,
    output_format: OutputFormat | str | None = None,
) -> AppConfig:
    """Load configuration from .env + environment, with explicit overrides.

    Args:
        env_file: Path to .env file. If None, searches project root.
        config_path: Chain-config file; overrides TRADELEDGER_CONFIG.
        schedule_path: Gas schedule CSV; overrides TRADELEDGER_SCHEDULE.
        store_root: Docstore directory; overrides TRADELEDGER_STORE.
        db_path: Receipt archive; overrides TRADELEDGER_DB.
    """
    if env_file and env_file.exists():
        load_dotenv(env_file)
    else:
        for candidate in [Path(".env"), Path(__file__).parent.parent / ".env"]:
            if candidate.exists():
                load_dotenv(candidate)
                break

    if config_path is None and os.environ.get("TRADELEDGER_CONFIG"):
        config_path = Path(os.environ["TRADELEDGER_CONFIG"])
    if schedule_path is None and os.environ.get("TRADELEDGER_SCHEDULE"):
        schedule_path = Path(os.environ["TRADELEDGER_SCHEDULE"])
    if store_root is None and os.environ.get("TRADELEDGER_STORE"):
        store_root = Path(os.environ["TRADELEDGER_STORE"])
    if db_path is None and os.environ.get("TRADELEDGER_DB"):
        db_path = Path(os.environ["TRADELEDGER_DB"])

    chain = load_chain_config(config_path) if config_path else ChainConfig()

    return AppConfig(
        chain=chain,
        schedule_path=schedule_path or DEFAULT_SCHEDULE_PATH,
        docstore=DocStoreConfig(root=store_root),
        report=ReportConfig(
            fee_source=FeeSource(fee_source or FeeSource.GAS),
            output_format=OutputFormat(output_format or OutputFormat.TEXT),
        ),
        db_path=db_path,
    )
