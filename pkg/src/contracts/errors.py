"""Contract revert reasons. A revert's reason string is its class name."""
from __future__ import annotations


class ContractRevert(Exception):
    @property
    def reason(self) -> str:
        return type(self).__name__


class AlreadyInitialized(ContractRevert):
    pass


class NotInitialized(ContractRevert):
    pass


class SameParty(ContractRevert):
    pass


class DuplicateParty(ContractRevert):
    pass


class NotBuyer(ContractRevert):
    pass


class NotSeller(ContractRevert):
    pass


class NotParty(ContractRevert):
    pass


class NotBeneficiary(ContractRevert):
    pass


class NotIssuingBank(ContractRevert):
    pass


class DuplicateOrder(ContractRevert):
    pass


class NoSuchOrder(ContractRevert):
    pass


class DuplicateInvoice(ContractRevert):
    pass


class NoSuchInvoice(ContractRevert):
    pass


class BadState(ContractRevert):
    """Entity is not in a state that permits the call."""
    pass


class ZeroAmount(ContractRevert):
    pass


class AlreadyConfirmed(ContractRevert):
    pass


class NoRequiredDocs(ContractRevert):
    pass


class NoSuchDocument(ContractRevert):
    pass


class AlreadyValid(ContractRevert):
    pass


class IndexOutOfRange(ContractRevert):
    pass


class NoSuchFunction(ContractRevert):
    pass


class BadArguments(ContractRevert):
    pass


REVERT_REASONS: dict[str, type[ContractRevert]] = {
    cls.__name__: cls for cls in ContractRevert.__subclasses__()
}
