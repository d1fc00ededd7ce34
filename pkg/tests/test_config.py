"""Tests for chain-config parsing and environment overrides."""
from __future__ import annotations

import os
from pathlib import Path

import pytest

from src.config import (
    DEFAULT_CHAIN_CONFIG_PATH,
    DEFAULT_SCHEDULE_PATH,
    ChainConfig,
    ConfigError,
    FeeSource,
    OutputFormat,
    load_chain_config,
    load_config,
    parse_chain_config,
)


class TestParseChainConfig:
    def test_shipped_file_matches_defaults(self):
        assert load_chain_config(DEFAULT_CHAIN_CONFIG_PATH) == ChainConfig()

    def test_missing_keys_take_defaults(self):
        chain = parse_chain_config("tps = 30  # faster chain\n")
        assert chain.tps == 30
        assert chain.block_interval_s == 15
        assert chain.block_capacity == 450

    def test_underscores_in_numbers(self):
        assert parse_chain_config("eth_usd_rate_micro = 1_000_000").eth_usd_rate_micro == 10**6

    @pytest.mark.parametrize("text, fragment", [
        ("tps 15", "expected key=value"),
        ("tps = 15\ntps = 16", "duplicate key"),
        ("gas_limit = 5", "gas_limit"),
        ("tps = fast", "tps"),
        ("block_interval_s = 0", "block_interval_s"),
        ("gas_price_wei = -1", "gas_price_wei"),
    ])
    def test_errors(self, text, fragment):
        with pytest.raises(ConfigError) as info:
            parse_chain_config(text, source="test.conf")
        assert fragment in str(info.value)
        assert str(info.value).startswith("test.conf")

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_chain_config(tmp_path / "missing.conf")

    def test_direct_construction_validates(self):
        with pytest.raises(ConfigError):
            ChainConfig(tps=0)


class TestLoadConfig:
    def test_defaults(self, mocker, tmp_path):
        mocker.patch.dict(os.environ, {}, clear=True)
        config = load_config(env_file=tmp_path / "absent.env")
        assert config.chain == ChainConfig()
        assert config.schedule_path == DEFAULT_SCHEDULE_PATH
        assert config.report.fee_source is FeeSource.GAS
        assert config.report.output_format is OutputFormat.TEXT
        assert config.db_path is None
        assert config.docstore.root is None

    def test_environment_overrides(self, mocker, tmp_path):
        conf = tmp_path / "chain.conf"
        conf.write_text("tps = 5\n")
        mocker.patch.dict(os.environ, {
            "TRADELEDGER_CONFIG": str(conf),
            "TRADELEDGER_SCHEDULE": "/tmp/schedule.csv",
            "TRADELEDGER_STORE": "/tmp/store",
            "TRADELEDGER_DB": "/tmp/runs.db",
        })
        config = load_config()
        assert config.chain.tps == 5
        assert config.schedule_path == Path("/tmp/schedule.csv")
        assert config.docstore.root == Path("/tmp/store")
        assert config.db_path == Path("/tmp/runs.db")

    def test_explicit_arguments_win(self, mocker, tmp_path):
        mocker.patch.dict(os.environ, {"TRADELEDGER_DB": "/tmp/env.db"})
        config = load_config(db_path=tmp_path / "arg.db", fee_source="table", output_format="tsv")
        assert config.db_path == tmp_path / "arg.db"
        assert config.report.fee_source is FeeSource.TABLE
        assert config.report.output_format is OutputFormat.TSV

    def test_env_file(self, mocker, tmp_path):
        mocker.patch.dict(os.environ, {}, clear=True)
        env = tmp_path / ".env"
        env.write_text(f"TRADELEDGER_STORE={tmp_path / 'docs'}\n")
        config = load_config(env_file=env)
        assert config.docstore.root == tmp_path / "docs"
