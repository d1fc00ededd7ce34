"""Letter of credit: the beneficiary lodges trade documents, the issuing bank
validates them, and the credit settles once every required document type
has at least one validated document.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from src.contracts.base import Contract, ContractKind, abi
from src.contracts.errors import (
    AlreadyInitialized,
    AlreadyValid,
    BadState,
    DuplicateParty,
    IndexOutOfRange,
    NoRequiredDocs,
    NoSuchDocument,
    NotBeneficiary,
    NotInitialized,
    NotIssuingBank,
    ZeroAmount,
)
from src.docstore import ContentHash
from src.shared.address import Address

SETTLEMENT_READY = "SettlementReady"


class CreditStatus(str, Enum):
    UNSET = "Unset"
    ISSUED = "Issued"
    DOCUMENTS_COMPLETE = "DocumentsComplete"


@dataclass
class TradeDocument:
    doc_id: int
    content_hash: ContentHash
    doc_type: str
    valid: bool = False


@dataclass
class LetterOfCreditState:
    applicant: Address | None = None
    beneficiary: Address | None = None
    issuing_bank: Address | None = None
    amount: int = 0
    required_doc_types: frozenset[str] = frozenset()
    documents: list[TradeDocument] = field(default_factory=list)
    status: CreditStatus = CreditStatus.UNSET

    def validated_types(self) -> set[str]:
        return {d.doc_type for d in self.documents if d.valid}

    def missing_types(self) -> set[str]:
        return set(self.required_doc_types) - self.validated_types()


class LetterOfCreditContract(Contract):
    kind = ContractKind.LETTER_OF_CREDIT
    state: LetterOfCreditState

    def initial_state(self) -> LetterOfCreditState:
        return LetterOfCreditState()

    def _document(self, doc_id: int) -> TradeDocument:
        if not 0 <= doc_id < len(self.state.documents):
            raise NoSuchDocument(f"document {doc_id}")
        return self.state.documents[doc_id]

    @abi("initializeContract", "address", "address", "address", "int", "doc_types")
    def initialize(self, caller: Address, applicant: Address, beneficiary: Address,
                   issuing_bank: Address, amount: int, required_doc_types: frozenset[str]) -> None:
        if self.state.status is not CreditStatus.UNSET:
            raise AlreadyInitialized("letter of credit already issued")
        if len({applicant, beneficiary, issuing_bank}) != 3:
            raise DuplicateParty("applicant, beneficiary and bank must be distinct")
        if amount <= 0:
            raise ZeroAmount(f"credit amount {amount}")
        if not required_doc_types:
            raise NoRequiredDocs("at least one document type is required")
        s = self.state
        s.applicant, s.beneficiary, s.issuing_bank = applicant, beneficiary, issuing_bank
        s.amount = amount
        s.required_doc_types = frozenset(required_doc_types)
        s.status = CreditStatus.ISSUED

    @abi("addDocument", "hash", "string")
    def add_document(self, caller: Address, content_hash: ContentHash, doc_type: str) -> int:
        if self.state.status is CreditStatus.UNSET:
            raise NotInitialized("letter of credit not issued")
        if caller != self.state.beneficiary:
            raise NotBeneficiary(f"{caller} is not the beneficiary")
        if self.state.status is CreditStatus.DOCUMENTS_COMPLETE:
            raise BadState("documents already complete")
        doc_id = len(self.state.documents)
        self.state.documents.append(TradeDocument(doc_id=doc_id, content_hash=content_hash, doc_type=doc_type))
        return doc_id

    @abi("getNumberOfDocuments", view=True)
    def number_of_documents(self, caller: Address) -> int:
        return len(self.state.documents)

    @abi("getDocumentID", "int", view=True)
    def document_id(self, caller: Address, index: int) -> ContentHash:
        if not 0 <= index < len(self.state.documents):
            raise IndexOutOfRange(f"index {index} of {len(self.state.documents)}")
        return self.state.documents[index].content_hash

    @abi("IsDocumentValid", "int", view=True)
    def is_document_valid(self, caller: Address, doc_id: int) -> bool:
        return self._document(doc_id).valid

    @abi("validateDocument", "int")
    def validate_document(self, caller: Address, doc_id: int) -> None:
        if self.state.status is CreditStatus.UNSET:
            raise NotInitialized("letter of credit not issued")
        if caller != self.state.issuing_bank:
            raise NotIssuingBank(f"{caller} is not the issuing bank")
        doc = self._document(doc_id)
        if doc.valid:
            raise AlreadyValid(f"document {doc_id}")
        doc.valid = True
        if self.state.status is CreditStatus.ISSUED and not self.state.missing_types():
            self.state.status = CreditStatus.DOCUMENTS_COMPLETE
            self.emit(SETTLEMENT_READY, amount=self.state.amount, beneficiary=self.state.beneficiary.hex)
