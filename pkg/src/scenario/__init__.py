from src.scenario.canonical import canonical_lc_scenario, run_canonical
from src.scenario.errors import (
    ArgumentTypeMismatch,
    ArityMismatch,
    ScenarioError,
    ScenarioRuntimeError,
    ScenarioSyntaxError,
    UndeclaredActor,
    UndeclaredContract,
    UndeclaredVariable,
    UnknownContractFunction,
)
from src.scenario.parser import parse, parse_file
from src.scenario.report import render_text, render_tsv
from src.scenario.runner import ScenarioReport, ScenarioRunner, StepResult, execute
from src.scenario.script import ScenarioScript

__all__ = [
    "ArgumentTypeMismatch",
    "ArityMismatch",
    "ScenarioError",
    "ScenarioReport",
    "ScenarioRunner",
    "ScenarioRuntimeError",
    "ScenarioScript",
    "ScenarioSyntaxError",
    "StepResult",
    "UndeclaredActor",
    "UndeclaredContract",
    "UndeclaredVariable",
    "UnknownContractFunction",
    "canonical_lc_scenario",
    "execute",
    "parse",
    "parse_file",
    "render_text",
    "render_tsv",
    "run_canonical",
]
