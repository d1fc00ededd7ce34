"""Typed scenario steps and pretty-printing back to script text."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from src.contracts import ContractKind
from src.shared.address import Address

_BARE_PATH = re.compile(r'[^\s"#]+')


@dataclass(frozen=True)
class StrArg:
    value: str

    def render(self) -> str:
        return quote(self.value)


@dataclass(frozen=True)
class IntArg:
    value: int

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class ActorRef:
    name: str

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class VarRef:
    name: str

    def render(self) -> str:
        return f"${self.name}"


Arg = Union[StrArg, IntArg, ActorRef, VarRef]


def quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


@dataclass(frozen=True)
class Deploy:
    kind: ContractKind
    name: str
    actor: str
    line: int = field(default=0, compare=False)

    def render(self) -> str:
        return f"deploy {self.kind.value} as {self.name} by {self.actor}"


@dataclass(frozen=True)
class Call:
    actor: str
    contract: str
    function: str
    args: tuple[Arg, ...] = ()
    payload_len: int = 0
    view: bool = False
    expect_revert: str | None = None
    line: int = field(default=0, compare=False)

    def render(self) -> str:
        text = f"{self.actor} > {self.contract}.{self.function}({', '.join(a.render() for a in self.args)})"
        if self.expect_revert:
            text += f" expect-revert {self.expect_revert}"
        return text


@dataclass(frozen=True)
class AttachFile:
    actor: str
    path: str
    var: str
    line: int = field(default=0, compare=False)

    def render(self) -> str:
        path = self.path if _BARE_PATH.fullmatch(self.path) else quote(self.path)
        return f"attach {self.actor} {path} as {self.var}"


@dataclass(frozen=True)
class Advance:
    seconds: int
    line: int = field(default=0, compare=False)

    def render(self) -> str:
        return f"advance {self.seconds}"


Step = Union[Deploy, Call, AttachFile, Advance]


@dataclass(frozen=True)
class ScenarioScript:
    actors: dict[str, Address] = field(default_factory=dict)
    steps: tuple[Step, ...] = ()
    # attach paths resolve against this directory
    base_dir: Path | None = field(default=None, compare=False)

    @property
    def contracts(self) -> dict[str, ContractKind]:
        return {s.name: s.kind for s in self.steps if isinstance(s, Deploy)}

    @property
    def transaction_count(self) -> int:
        """Mutating calls submitted as transactions (deployments excluded)."""
        return sum(1 for s in self.steps if isinstance(s, Call) and not s.view)

    @property
    def deployment_count(self) -> int:
        return sum(1 for s in self.steps if isinstance(s, Deploy))

    def pretty(self) -> str:
        lines = [f"actor {name} {addr.hex}" for name, addr in self.actors.items()]
        lines.extend(step.render() for step in self.steps)
        return "\n".join(lines) + ("\n" if lines else "")
