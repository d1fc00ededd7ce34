"""Shared test fixtures: in-memory archive DB, schedule, ledger, actors."""
from __future__ import annotations

import sqlite3

import pytest

from src.config import ChainConfig
from src.db.connection import apply_schema
from src.gasmodel.schedule import default_schedule
from src.ledger import Ledger
from src.shared.address import Address

BUYER = Address.from_hex("0x1000000000000000000000000000000000000001")
SELLER = Address.from_hex("0x2000000000000000000000000000000000000002")
BANK = Address.from_hex("0x3000000000000000000000000000000000000003")
OUTSIDER = Address.from_hex("0x4000000000000000000000000000000000000004")


@pytest.fixture
def mem_conn():
    """In-memory SQLite connection with schema applied."""
    conn = sqlite3.connect(":memory:")
    apply_schema(conn)
    yield conn
    conn.close()


@pytest.fixture(scope="session")
def schedule():
    return default_schedule()


@pytest.fixture
def chain():
    return ChainConfig()


@pytest.fixture
def ledger(schedule, chain):
    return Ledger(chain, schedule)


@pytest.fixture
def actors():
    return {"buyer": BUYER, "seller": SELLER, "bank": BANK, "outsider": OUTSIDER}
