"""Execute a parsed scenario on a fresh ledger and collect its report.

Sequential-dependency model: each transactional step is submitted at the
current clock and mined before the next step runs, so every step waits
for the block that confirms its predecessor. View calls run between
blocks at zero gas. Reverts are recorded, never fatal.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from src.config import ChainConfig, FeeSource
from src.contracts import SETTLEMENT_READY, ContractRevert
from src.docstore import ContentHash, DocStore
from src.gasmodel.report import CostReport, DeploymentReport, cost_report, deployment_report
from src.gasmodel.schedule import GasSchedule, default_schedule
from src.ledger import Ledger, Receipt
from src.scenario.errors import ScenarioRuntimeError
from src.scenario.script import ActorRef, Advance, Arg, AttachFile, Call, Deploy, IntArg, ScenarioScript, StrArg, VarRef
from src.shared.address import Address

log = logging.getLogger("scenario")


@dataclass(frozen=True)
class StepResult:
    line: int
    statement: str
    contract: str | None = None
    contract_kind: str | None = None
    function: str | None = None
    receipt: Receipt | None = None
    output: str | None = None
    expect_revert: str | None = None
    ok: bool = True

    @property
    def reverted(self) -> bool:
        return self.receipt is not None and self.receipt.reverted


@dataclass(frozen=True)
class ScenarioReport:
    steps: tuple[StepResult, ...]
    receipts: tuple[Receipt, ...]
    cost: CostReport
    deployment: DeploymentReport
    latencies_s: tuple[int, ...]
    duration_s: int
    settled: bool
    contract_states: dict[str, dict] = field(default_factory=dict)

    @property
    def unexpected_reverts(self) -> int:
        return sum(1 for s in self.steps if not s.ok)

    @property
    def max_latency_s(self) -> int:
        return max(self.latencies_s, default=0)

    @property
    def total_fee_wei(self) -> int:
        return sum(r.fee_wei for r in self.receipts)

    @property
    def call_receipts(self) -> tuple[Receipt, ...]:
        return tuple(r for r in self.receipts if not r.is_deploy)


def _render_output(value) -> str | None:
    if value is None:
        return None
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (Address, ContentHash)):
        return value.hex
    return str(value)


class ScenarioRunner:
    def __init__(self, script: ScenarioScript, config: ChainConfig | None = None,
                 schedule: GasSchedule | None = None, store: DocStore | None = None):
        self.script = script
        self.config = config or ChainConfig()
        self.schedule = schedule or default_schedule()
        self.store = store if store is not None else DocStore()
        self.ledger = Ledger(self.config, self.schedule)
        self.contracts: dict[str, Address] = {}
        self.vars: dict[str, ContentHash] = {}

    def run(self, fee_source: FeeSource | str = FeeSource.GAS) -> ScenarioReport:
        results = []
        for step in self.script.steps:
            if isinstance(step, Deploy):
                results.append(self._deploy(step))
            elif isinstance(step, Call):
                results.append(self._view(step) if step.view else self._call(step))
            elif isinstance(step, AttachFile):
                results.append(self._attach(step))
            elif isinstance(step, Advance):
                self.ledger.advance_to(self.ledger.clock_s + step.seconds)
                results.append(StepResult(line=step.line, statement=step.render()))

        receipts = tuple(r.receipt for r in results if r.receipt is not None)
        settled = any(e.name == SETTLEMENT_READY for e in self.ledger.events)
        report = ScenarioReport(
            steps=tuple(results),
            receipts=receipts,
            cost=cost_report(receipts, fee_source, self.schedule, self.config),
            deployment=deployment_report(receipts, self.config),
            latencies_s=tuple(r.latency_s for r in receipts),
            duration_s=self.ledger.clock_s,
            settled=settled,
            contract_states={name: self.ledger.contract(addr).state_dict()
                             for name, addr in self.contracts.items()},
        )
        log.info(
            f"Scenario done: {len(receipts)} txs, {report.duration_s}s simulated, "
            f"settled={settled}, unexpected reverts={report.unexpected_reverts}"
        )
        return report

    def _resolve(self, arg: Arg):
        if isinstance(arg, ActorRef):
            return self.script.actors[arg.name]
        if isinstance(arg, VarRef):
            return self.vars[arg.name]
        if isinstance(arg, (StrArg, IntArg)):
            return arg.value
        raise TypeError(f"unsupported argument {arg!r}")

    def _deploy(self, step: Deploy) -> StepResult:
        address, receipt = self.ledger.deploy_contract(step.kind, self.script.actors[step.actor])
        self.contracts[step.name] = address
        log.debug(f"line {step.line}: deployed {step.kind.value} as {step.name} at {address}")
        return StepResult(
            line=step.line,
            statement=step.render(),
            contract=step.name,
            contract_kind=step.kind.value,
            function="DEPLOY",
            receipt=receipt,
            output=address.hex,
        )

    def _call(self, step: Call) -> StepResult:
        args = tuple(self._resolve(a) for a in step.args)
        tx_id = self.ledger.call(self.script.actors[step.actor], self.contracts[step.contract],
                                 step.function, *args)
        receipt = self.ledger.mine_until(tx_id)
        if step.expect_revert:
            ok = receipt.revert_reason == step.expect_revert
        else:
            ok = not receipt.reverted
        if not ok:
            log.warning(f"line {step.line}: {step.function} {receipt.status_label}, expected "
                        f"{'Reverted(' + step.expect_revert + ')' if step.expect_revert else 'Confirmed'}")
        return StepResult(
            line=step.line,
            statement=step.render(),
            contract=step.contract,
            contract_kind=receipt.contract_kind,
            function=step.function,
            receipt=receipt,
            output=_render_output(receipt.output),
            expect_revert=step.expect_revert,
            ok=ok,
        )

    def _view(self, step: Call) -> StepResult:
        args = tuple(self._resolve(a) for a in step.args)
        contract_id = self.contracts[step.contract]
        reason = None
        try:
            output = _render_output(self.ledger.view(contract_id, step.function, *args,
                                                     caller=self.script.actors[step.actor]))
        except ContractRevert as e:
            reason = e.reason
            output = f"Reverted({reason})"
        ok = reason == step.expect_revert
        if not ok:
            log.warning(f"line {step.line}: {step.function} returned {output}")
        return StepResult(
            line=step.line,
            statement=step.render(),
            contract=step.contract,
            contract_kind=self.ledger.contract(contract_id).kind.value,
            function=step.function,
            output=output,
            expect_revert=step.expect_revert,
            ok=ok,
        )

    def _attach(self, step: AttachFile) -> StepResult:
        path = Path(step.path)
        if not path.is_absolute() and self.script.base_dir is not None:
            path = self.script.base_dir / path
        try:
            digest = self.store.put_file(path)
        except OSError as e:
            raise ScenarioRuntimeError(step.line, 1, f"cannot attach {step.path}: {e.strerror}") from None
        self.vars[step.var] = digest
        log.debug(f"line {step.line}: attached {path} as ${step.var} = {digest.hex}")
        return StepResult(line=step.line, statement=step.render(), output=digest.hex)


def execute(script: ScenarioScript, config: ChainConfig | None = None, schedule: GasSchedule | None = None,
            fee_source: FeeSource | str = FeeSource.GAS, store: DocStore | None = None) -> ScenarioReport:
    return ScenarioRunner(script, config, schedule, store).run(fee_source)
