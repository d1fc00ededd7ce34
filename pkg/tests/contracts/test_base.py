"""Tests for ABI declarations, argument coercion and state snapshots."""
import pytest

from src.contracts import ContractKind, ParamType, SalesContract, create_contract, function_spec
from src.contracts.base import coerce_arg
from src.contracts.errors import REVERT_REASONS, BadArguments, NoSuchFunction
from src.docstore import ContentHash
from src.shared.address import Address
from tests.conftest import BUYER, SELLER


class TestAbi:
    def test_functions_collected_per_class(self):
        assert set(SalesContract.functions) == {
            "setSalesContract", "addOrder", "confirmOrder", "cancelOrder",
            "receiveOrder", "orderExists", "createInvoice", "confirmInvoice",
        }

    def test_spec_fields(self):
        spec = function_spec(ContractKind.SALES, "addOrder")
        assert spec.params == (ParamType.STRING, ParamType.STRING)
        assert spec.payload_arg == 1
        assert spec.payload_len(("PO-1", "abcd")) == 4
        assert function_spec("LetterOfCredit", "getDocumentID").view is True

    def test_payload_len_tolerates_malformed_args(self):
        spec = function_spec(ContractKind.SALES, "addOrder")
        assert spec.payload_len(("PO-1",)) == 0
        assert spec.payload_len(("PO-1", 7)) == 0
        assert function_spec(ContractKind.SALES, "confirmOrder").payload_len(("PO-1",)) == 0
        assert function_spec(ContractKind.SALES, "transfer") is None

    def test_unknown_function_reverts(self):
        contract = create_contract(ContractKind.FINANCIAL, Address.derive(b"x"))
        with pytest.raises(NoSuchFunction):
            contract.execute(BUYER, "addOrder", ("a", "b"))

    def test_wrong_arity_reverts(self):
        contract = create_contract(ContractKind.SALES, Address.derive(b"x"))
        with pytest.raises(BadArguments):
            contract.execute(BUYER, "setSalesContract", (BUYER,))

    def test_revert_reasons_registry(self):
        assert REVERT_REASONS["BadState"]().reason == "BadState"
        assert "ContractRevert" not in REVERT_REASONS


class TestCoercion:
    @pytest.mark.parametrize("param, value", [
        (ParamType.ADDRESS, "0x12"),
        (ParamType.ADDRESS, 7),
        (ParamType.INT, True),
        (ParamType.INT, "5"),
        (ParamType.STRING, 5),
        (ParamType.HASH, "zz" * 32),
        (ParamType.DOC_TYPES, 3),
    ])
    def test_rejects(self, param, value):
        with pytest.raises(BadArguments):
            coerce_arg(param, value)

    def test_accepts(self):
        assert coerce_arg(ParamType.ADDRESS, BUYER.hex.upper().replace("0X", "0x")) == BUYER
        assert coerce_arg(ParamType.HASH, "ab" * 32) == ContentHash(bytes([0xAB]) * 32)
        assert coerce_arg(ParamType.DOC_TYPES, "a, b,,a") == frozenset({"a", "b"})
        assert coerce_arg(ParamType.DOC_TYPES, ["x"]) == frozenset({"x"})


class TestState:
    def test_hash_tracks_state(self):
        a = create_contract(ContractKind.SALES, Address.derive(b"a"))
        b = create_contract(ContractKind.SALES, Address.derive(b"b"))
        assert a.state_hash() == b.state_hash()
        a.execute(BUYER, "setSalesContract", (BUYER, SELLER))
        assert a.state_hash() != b.state_hash()

    def test_snapshot_restore(self):
        contract = create_contract(ContractKind.SALES, Address.derive(b"a"))
        contract.execute(BUYER, "setSalesContract", (BUYER, SELLER))
        snap = contract.snapshot()
        before = contract.state_hash()
        contract.execute(BUYER, "addOrder", ("PO-1", "x"))
        contract.emit("Noise")
        contract.restore(snap)
        assert contract.state_hash() == before
        assert contract.drain_events() == []

    def test_state_dict_is_json_shaped(self):
        contract = create_contract(ContractKind.SALES, Address.derive(b"a"))
        contract.execute(BUYER, "setSalesContract", (BUYER, SELLER))
        contract.execute(BUYER, "addOrder", ("PO-1", "x"))
        state = contract.state_dict()
        assert state["buyer"] == BUYER.hex
        assert state["orders"]["PO-1"]["status"] == "Created"
