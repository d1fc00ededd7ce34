from src.contracts.base import Contract, ContractKind, FunctionSpec, ParamType, abi
from src.contracts.errors import REVERT_REASONS, ContractRevert
from src.contracts.financial import FinancialContract
from src.contracts.letter_of_credit import SETTLEMENT_READY, LetterOfCreditContract
from src.contracts.sales import SalesContract
from src.shared.address import Address

CONTRACT_CLASSES: dict[ContractKind, type[Contract]] = {
    ContractKind.SALES: SalesContract,
    ContractKind.FINANCIAL: FinancialContract,
    ContractKind.LETTER_OF_CREDIT: LetterOfCreditContract,
}


def create_contract(kind: ContractKind | str, contract_id: Address) -> Contract:
    return CONTRACT_CLASSES[ContractKind(kind)](contract_id)


def function_spec(kind: ContractKind | str, function_name: str) -> FunctionSpec | None:
    return CONTRACT_CLASSES[ContractKind(kind)].functions.get(function_name)


__all__ = [
    "CONTRACT_CLASSES",
    "REVERT_REASONS",
    "SETTLEMENT_READY",
    "Contract",
    "ContractKind",
    "ContractRevert",
    "FinancialContract",
    "FunctionSpec",
    "LetterOfCreditContract",
    "ParamType",
    "SalesContract",
    "abi",
    "create_contract",
    "function_spec",
]
