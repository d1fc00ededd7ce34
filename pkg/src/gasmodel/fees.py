"""Transaction fee computation: gas × gas price in wei, and USD conversion."""
from __future__ import annotations

from dataclasses import dataclass

from src.config import ChainConfig
from src.gasmodel.schedule import GasSchedule
from src.shared import units


@dataclass(frozen=True)
class FeeQuote:
    gas: int
    fee_wei: int
    fee_eth_display: str
    usd_micro: int
    # cents, rounded half-up from the exact fee rather than from usd_micro
    usd_display: str


class FeeModel:
    """Fee arithmetic for one (schedule, chain config) pair.

    Usage:
        model = FeeModel(default_schedule(), ChainConfig())
        model.quote("addOrder", payload_len=64).fee_eth_display  # "0.000176983"
    """

    def __init__(self, schedule: GasSchedule, chain: ChainConfig | None = None):
        self.schedule = schedule
        self.chain = chain or ChainConfig()

    def gas_for(self, function_name: str, payload_len: int = 0) -> int:
        return self.schedule.gas_for(function_name, payload_len)

    def fee_wei(self, gas: int) -> int:
        if gas < 0:
            raise ValueError("gas must be >= 0")
        return gas * self.chain.gas_price_wei

    def usd(self, fee_wei: int) -> int:
        """Micro-USD, half-up at the discarded digit."""
        return units.usd_micro(units.require_wei(fee_wei), self.chain.eth_usd_rate_micro)

    def usd_display(self, fee_wei: int, places: int = 2) -> str:
        return units.usd_display(units.require_wei(fee_wei), self.chain.eth_usd_rate_micro, places)

    def quote_gas(self, gas: int) -> FeeQuote:
        fee = self.fee_wei(gas)
        return FeeQuote(
            gas=gas,
            fee_wei=fee,
            fee_eth_display=units.format_eth(fee),
            usd_micro=self.usd(fee),
            usd_display=self.usd_display(fee),
        )

    def quote(self, function_name: str, payload_len: int = 0) -> FeeQuote:
        return self.quote_gas(self.gas_for(function_name, payload_len))

    @property
    def gas_price_eth_display(self) -> str:
        return units.format_eth(self.chain.gas_price_wei)
