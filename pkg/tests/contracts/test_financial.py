"""Example tests for the Financial agreement contract."""
import pytest

from src.contracts import FinancialContract
from src.contracts.errors import AlreadyConfirmed, AlreadyInitialized, DuplicateParty, NotInitialized, NotParty
from src.contracts.financial import AgreementStatus
from src.shared.address import Address
from tests.conftest import BANK, BUYER, OUTSIDER, SELLER


@pytest.fixture
def agreement():
    contract = FinancialContract(Address.derive(b"financial"))
    contract.execute(BANK, "setFinancialAgreementParties", (BUYER, BANK, SELLER))
    return contract


def test_confirm_before_parties_set():
    contract = FinancialContract(Address.derive(b"fresh"))
    with pytest.raises(NotInitialized):
        contract.execute(BUYER, "confirmAgreement", ())


def test_parties_must_be_distinct():
    contract = FinancialContract(Address.derive(b"fresh"))
    with pytest.raises(DuplicateParty):
        contract.execute(BANK, "setFinancialAgreementParties", (BUYER, BANK, BUYER))
    assert contract.state.status is AgreementStatus.UNSET


def test_parties_set_once(agreement):
    with pytest.raises(AlreadyInitialized):
        agreement.execute(BANK, "setFinancialAgreementParties", (BUYER, BANK, OUTSIDER))


def test_unanimous_confirmation(agreement):
    agreement.execute(BUYER, "confirmAgreement", ())
    agreement.execute(SELLER, "confirmAgreement", ())
    assert agreement.state.status is AgreementStatus.PROPOSED
    assert agreement.drain_events() == []
    agreement.execute(BANK, "confirmAgreement", ())
    assert agreement.state.status is AgreementStatus.CONFIRMED
    [(name, data)] = agreement.drain_events()
    assert name == "AgreementConfirmed"
    assert data["parties"] == [BUYER.hex, BANK.hex, SELLER.hex]


def test_outsider_cannot_confirm(agreement):
    with pytest.raises(NotParty):
        agreement.execute(OUTSIDER, "confirmAgreement", ())


def test_double_confirmation(agreement):
    agreement.execute(BUYER, "confirmAgreement", ())
    with pytest.raises(AlreadyConfirmed):
        agreement.execute(BUYER, "confirmAgreement", ())
    assert agreement.state.confirmations == {BUYER}
