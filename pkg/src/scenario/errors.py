"""Scenario errors. Every error carries a 1-based line and column."""
from __future__ import annotations


class ScenarioError(Exception):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class ScenarioSyntaxError(ScenarioError):
    pass


class UndeclaredActor(ScenarioError):
    pass


class UndeclaredContract(ScenarioError):
    pass


class UndeclaredVariable(ScenarioError):
    pass


class UnknownContractFunction(ScenarioError):
    pass


class ArityMismatch(ScenarioError):
    pass


class ArgumentTypeMismatch(ScenarioError):
    pass


class ScenarioRuntimeError(ScenarioError):
    """A step could not be carried out (e.g. an attached file is missing)."""
    pass
