"""The shipped reference letter-of-credit scenario."""
from __future__ import annotations

from src.config import CANONICAL_SCENARIO_PATH, ChainConfig, FeeSource
from src.docstore import DocStore
from src.gasmodel.schedule import GasSchedule
from src.scenario.parser import parse_file
from src.scenario.runner import ScenarioReport, execute
from src.scenario.script import ScenarioScript


def canonical_lc_scenario() -> ScenarioScript:
    """Deploy all three contracts, then drive one order through to settlement."""
    return parse_file(CANONICAL_SCENARIO_PATH)


def run_canonical(config: ChainConfig | None = None, schedule: GasSchedule | None = None,
                  fee_source: FeeSource | str = FeeSource.GAS, store: DocStore | None = None) -> ScenarioReport:
    return execute(canonical_lc_scenario(), config, schedule, fee_source, store)
