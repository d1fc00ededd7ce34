"""Tests for the scenario parser and pretty-printer."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.config import CANONICAL_SCENARIO_PATH
from src.contracts import ContractKind
from src.scenario import (
    ArgumentTypeMismatch,
    ArityMismatch,
    ScenarioError,
    ScenarioSyntaxError,
    UndeclaredActor,
    UndeclaredContract,
    UndeclaredVariable,
    UnknownContractFunction,
    parse,
    parse_file,
)
from src.scenario.parser import MAX_ADVANCE_S
from src.scenario.script import ActorRef, Advance, AttachFile, Call, Deploy, IntArg, StrArg, VarRef

PRELUDE = (
    "actor buyer 0x1000000000000000000000000000000000000001\n"
    "actor seller 0x2000000000000000000000000000000000000002\n"
    "deploy Sales as sc\n"
    "deploy LetterOfCredit as lc by seller\n"
)


def _error(text):
    with pytest.raises(ScenarioError) as info:
        parse(PRELUDE + text)
    return info.value


class TestStatements:
    def test_empty_input(self):
        script = parse("")
        assert script.steps == ()
        assert script.actors == {}
        assert script.pretty() == ""

    def test_comments_and_blank_lines(self):
        script = parse("# header\n\n   \t\n# trailing")
        assert script.steps == ()

    def test_deploy_defaults_to_first_actor(self):
        script = parse(PRELUDE)
        assert script.steps[0] == Deploy(kind=ContractKind.SALES, name="sc", actor="buyer")
        assert script.steps[1].actor == "seller"
        assert script.contracts == {"sc": ContractKind.SALES, "lc": ContractKind.LETTER_OF_CREDIT}

    def test_call_arguments(self):
        script = parse(PRELUDE + 'buyer > sc.setSalesContract(buyer, "0x2000000000000000000000000000000000000002")\n'
                       'seller > sc.createInvoice("INV-1", "PO-1", -3) expect-revert ZeroAmount  # late\n')
        first, second = script.steps[2:]
        assert first.args == (ActorRef("buyer"), StrArg("0x2000000000000000000000000000000000000002"))
        assert second.args == (StrArg("INV-1"), StrArg("PO-1"), IntArg(-3))
        assert second.expect_revert == "ZeroAmount"
        assert second.line == 6

    def test_payload_length_of_variable_function(self):
        desc = "x" * 64
        script = parse(PRELUDE + f'buyer > sc.addOrder("PO-1", "{desc}")\n')
        assert script.steps[-1].payload_len == 64

    def test_string_escapes(self):
        script = parse(PRELUDE + r'buyer > sc.addOrder("P\"O", "a\\b")' + "\n")
        assert script.steps[-1].args == (StrArg('P"O'), StrArg("a\\b"))
        assert script.steps[-1].payload_len == 3

    def test_view_flag(self):
        script = parse(PRELUDE + 'buyer > sc.orderExists("PO-1")\n')
        assert script.steps[-1].view is True
        assert script.transaction_count == 0
        assert script.deployment_count == 2

    def test_attach_and_variable(self):
        script = parse(PRELUDE + 'attach seller "my docs/inv.txt" as inv\nseller > lc.addDocument($inv, "invoice")\n')
        assert script.steps[2] == AttachFile(actor="seller", path="my docs/inv.txt", var="inv")
        assert script.steps[3].args[0] == VarRef("inv")

    def test_hash_literal(self):
        script = parse(PRELUDE + f'seller > lc.addDocument("{"ab" * 32}", "invoice")\n')
        assert isinstance(script.steps[-1], Call)

    def test_advance(self):
        assert parse("advance 30").steps == (Advance(30),)

    def test_crlf_lines(self):
        script = parse(PRELUDE.replace("\n", "\r\n"))
        assert len(script.steps) == 2

    def test_bytes_input(self):
        assert parse(PRELUDE.encode("utf-8")) == parse(PRELUDE)


class TestErrors:
    def test_arity_mismatch_points_at_call(self):
        err = _error('\nbuyer > sc.confirmOrder("PO-1", "PO-2")\n')
        assert isinstance(err, ArityMismatch)
        assert err.line == 6
        assert err.column == len("buyer > sc.confirmOrder") + 1

    def test_undeclared_actor(self):
        err = _error('carol > sc.confirmOrder("PO-1")')
        assert isinstance(err, UndeclaredActor)
        assert (err.line, err.column) == (5, 1)

    def test_undeclared_actor_argument(self):
        assert isinstance(_error("buyer > sc.setSalesContract(buyer, carol)"), UndeclaredActor)

    def test_undeclared_contract(self):
        err = _error('buyer > fa.confirmAgreement()')
        assert isinstance(err, UndeclaredContract)
        assert err.column == 9

    def test_unknown_function(self):
        assert isinstance(_error("buyer > sc.confirmAgreement()"), UnknownContractFunction)

    def test_argument_type(self):
        err = _error('buyer > sc.createInvoice("INV-1", "PO-1", "100")')
        assert isinstance(err, ArgumentTypeMismatch)
        assert err.column == len('buyer > sc.createInvoice("INV-1", "PO-1", ') + 1

    def test_undeclared_variable(self):
        assert isinstance(_error('seller > lc.addDocument($nope, "invoice")'), UndeclaredVariable)

    @pytest.mark.parametrize("text", [
        'buyer > sc.addOrder("PO-1, "x")',
        "buyer > sc.orderExists(PO-1",
        "buyer sc.orderExists()",
        'buyer > sc.cancelOrder("PO-1") expect-revert NotAReason',
        "deploy Escrow as e",
        "deploy Sales as sc",
        "actor buyer 0x1000000000000000000000000000000000000009",
        "actor as 0x1000000000000000000000000000000000000009",
        "actor carol 0x12",
        "advance -1",
        "advance 10 seconds",
        'buyer > sc.addOrder("\\q", "x")',
    ])
    def test_syntax_errors(self, text):
        assert isinstance(_error(text), ScenarioSyntaxError)

    def test_invalid_utf8_position(self):
        with pytest.raises(ScenarioSyntaxError) as info:
            parse(b"advance 1\nadv\xffance 2\n")
        assert (info.value.line, info.value.column) == (2, 4)

    def test_message_carries_position(self):
        assert str(_error("advance x")).startswith("line 5, column 9:")

    def test_advance_is_bounded(self):
        assert parse(f"advance {MAX_ADVANCE_S}").steps == (Advance(MAX_ADVANCE_S),)
        err = _error("advance 1000000000000000")
        assert isinstance(err, ScenarioSyntaxError)
        assert (err.line, err.column) == (5, 9)


class TestRoundTrip:
    def test_canonical_pretty_print_round_trips(self):
        script = parse_file(CANONICAL_SCENARIO_PATH)
        assert parse(script.pretty()) == script

    def test_quoted_path_round_trips(self):
        script = parse(PRELUDE + 'attach seller "a b/c.txt" as doc\n')
        assert parse(script.pretty()) == script


@settings(max_examples=500, deadline=None)
@given(text=st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=200))
def test_parser_is_total(text):
    try:
        parse(PRELUDE + text)
    except ScenarioError as e:
        assert e.line >= 1 and e.column >= 1
