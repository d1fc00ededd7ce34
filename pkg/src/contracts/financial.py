"""Financial agreement: three parties, unanimous confirmation."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from src.contracts.base import Contract, ContractKind, abi
from src.contracts.errors import (
    AlreadyConfirmed,
    AlreadyInitialized,
    DuplicateParty,
    NotInitialized,
    NotParty,
)
from src.shared.address import Address


class AgreementStatus(str, Enum):
    UNSET = "Unset"
    PROPOSED = "Proposed"
    CONFIRMED = "Confirmed"


@dataclass
class FinancialAgreementState:
    # (applicant, financier, beneficiary)
    parties: tuple[Address, ...] = ()
    confirmations: set[Address] = field(default_factory=set)
    status: AgreementStatus = AgreementStatus.UNSET


class FinancialContract(Contract):
    kind = ContractKind.FINANCIAL
    state: FinancialAgreementState

    def initial_state(self) -> FinancialAgreementState:
        return FinancialAgreementState()

    @abi("setFinancialAgreementParties", "address", "address", "address")
    def set_parties(self, caller: Address, applicant: Address, financier: Address,
                    beneficiary: Address) -> None:
        if self.state.status is not AgreementStatus.UNSET:
            raise AlreadyInitialized("agreement parties already set")
        parties = (applicant, financier, beneficiary)
        if len(set(parties)) != len(parties):
            raise DuplicateParty("agreement parties must be distinct")
        self.state.parties = parties
        self.state.confirmations = set()
        self.state.status = AgreementStatus.PROPOSED

    @abi("confirmAgreement")
    def confirm_agreement(self, caller: Address) -> None:
        if self.state.status is AgreementStatus.UNSET:
            raise NotInitialized("agreement parties not set")
        if caller not in self.state.parties:
            raise NotParty(f"{caller} is not a party")
        if caller in self.state.confirmations:
            raise AlreadyConfirmed(f"{caller} already confirmed")
        self.state.confirmations.add(caller)
        if self.state.confirmations == set(self.state.parties):
            self.state.status = AgreementStatus.CONFIRMED
            self.emit("AgreementConfirmed", parties=[p.hex for p in self.state.parties])
