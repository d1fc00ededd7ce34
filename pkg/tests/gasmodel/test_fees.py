"""Tests for fee computation and USD conversion."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.config import ChainConfig
from src.gasmodel.fees import FeeModel
from src.shared import units

# schedule rows whose table_fee_eth disagrees with their own gas column
INCONSISTENT_ROWS = {"addDocument", "initializeContract"}


@pytest.fixture
def model(schedule, chain):
    return FeeModel(schedule, chain)


def test_fee_wei_examples(model):
    assert model.fee_wei(106384) == 106_384_000_000_000
    assert model.fee_wei(0) == 0
    assert units.format_eth(model.fee_wei(176983)) == "0.000176983"


def test_fee_wei_rejects_negative_gas(model):
    with pytest.raises(ValueError):
        model.fee_wei(-1)


def test_usd_examples(model):
    assert model.usd_display(106_384 * 10**9) == "0.06"
    assert model.usd_display(0) == "0.00"
    assert model.usd_display(2_466_648 * 10**9) == "1.36"
    assert model.usd(2_466_648 * 10**9) == 1_358_506


def test_quote_add_order(model):
    q = model.quote("addOrder", payload_len=64)
    assert q.gas == 176983
    assert q.fee_wei == 176_983 * 10**9
    assert q.fee_eth_display == "0.000176983"
    assert q.usd_display == "0.10"


def test_quote_exact_at_large_gas_price(schedule):
    model = FeeModel(schedule, ChainConfig(gas_price_wei=10**25 + 1))
    q = model.quote("addOrder", payload_len=64)
    assert q.fee_wei == 176_983 * (10**25 + 1)
    assert q.fee_eth_display == "1769830000000.000000000000176983"


def test_gas_column_recomputes_inconsistent_rows(model):
    assert model.quote("addDocument").fee_eth_display == "0.000068518"
    assert model.quote("initializeContract").usd_display == "0.09"


def _printed_places(fee_wei: int) -> int:
    for places in range(19):
        if fee_wei % 10 ** (18 - places) == 0:
            return places
    raise AssertionError("unreachable")


def test_gas_fees_match_printed_fees(schedule, model):
    matched = 0
    for name, entry in schedule.entries.items():
        fee = model.quote(name, entry.ref_payload_len).fee_wei
        assert fee == schedule.reference_gas(name) * 10**9
        places = _printed_places(entry.table_fee_wei)
        rounded = units.div_half_up(fee, 10 ** (18 - places)) * 10 ** (18 - places)
        if name in INCONSISTENT_ROWS:
            continue
        assert rounded == entry.table_fee_wei, name
        matched += 1
    assert matched == 14


def test_views_cost_nothing(schedule, model):
    for entry in schedule.entries.values():
        if entry.view:
            q = model.quote(entry.function, 1000)
            assert q.fee_wei == 0
            assert q.usd_display == "0.00"


@given(a=st.integers(min_value=0, max_value=10**9), b=st.integers(min_value=0, max_value=10**9))
def test_fee_is_linear(schedule, a, b):
    model = FeeModel(schedule, ChainConfig())
    assert model.fee_wei(a + b) == model.fee_wei(a) + model.fee_wei(b)


def test_zero_gas_price(schedule):
    model = FeeModel(schedule, ChainConfig(gas_price_wei=0))
    assert model.quote("setSalesContract").fee_wei == 0
    assert model.gas_price_eth_display == "0"


def test_gas_price_display(model):
    assert model.gas_price_eth_display == "0.000000001"
