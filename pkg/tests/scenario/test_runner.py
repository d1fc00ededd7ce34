"""Tests for scenario execution and reports."""
import pytest

from src.config import DATA_DIR, ChainConfig, FeeSource
from src.docstore import DocStore, hash_file
from src.scenario import ScenarioRuntimeError, execute, parse, render_text, render_tsv, run_canonical
from src.scenario.report import TSV_HEADER

ACTORS = (
    "actor buyer 0x1000000000000000000000000000000000000001\n"
    "actor seller 0x2000000000000000000000000000000000000002\n"
)


@pytest.fixture(scope="module")
def canonical(schedule):
    return run_canonical(ChainConfig(), schedule)


class TestCanonical:
    def test_settles(self, canonical):
        assert canonical.settled
        assert canonical.unexpected_reverts == 0

    def test_counts(self, canonical):
        assert len(canonical.receipts) == 19
        assert len(canonical.call_receipts) == 16
        assert sum(1 for r in canonical.receipts if r.reverted) == 1

    def test_every_step_waits_one_block(self, canonical):
        assert set(canonical.latencies_s) == {15}
        assert canonical.max_latency_s == 15
        assert canonical.duration_s == 285

    def test_totals(self, canonical):
        assert {c: t.usd for c, t in canonical.cost.totals.items()} == {
            "Sales": "0.3156",
            "Financial": "0.0948",
            "LetterOfCredit": "0.1560",
        }
        assert canonical.cost.row("addOrder").gas == 176983

    def test_deployment(self, canonical):
        d = canonical.deployment
        assert d.total_fee_eth == "0.002466648"
        assert d.usd_display == "1.36"
        assert d.usd_full == "1.358506"

    def test_final_states(self, canonical):
        states = canonical.contract_states
        assert states["sc"]["orders"]["PO-1"]["status"] == "Received"
        assert states["sc"]["invoices"]["INV-1"]["status"] == "Confirmed"
        assert states["fa"]["status"] == "Confirmed"
        assert states["lc"]["status"] == "DocumentsComplete"

    def test_attached_documents_on_chain(self, canonical):
        digest = hash_file(DATA_DIR / "documents" / "commercial_invoice.txt")
        [doc0, _] = canonical.contract_states["lc"]["documents"]
        assert doc0["content_hash"] == digest.hex
        assert doc0["valid"] is True

    def test_view_outputs(self, canonical):
        outputs = {s.function: s.output for s in canonical.steps if s.receipt is None and s.function}
        assert outputs["getNumberOfDocuments"] == "2"
        assert outputs["orderExists"] == "true"
        assert outputs["IsDocumentValid"] == "false"

    def test_table_mode(self, schedule):
        report = run_canonical(ChainConfig(), schedule, FeeSource.TABLE)
        assert {c: t.usd for c, t in report.cost.totals.items()} == {
            "Sales": "0.3156",
            "Financial": "0.0948",
            "LetterOfCredit": "0.2157",
        }

    def test_tsv_is_byte_identical_across_runs(self, schedule, canonical):
        again = run_canonical(ChainConfig(), schedule)
        assert render_tsv(canonical) == render_tsv(again)
        lines = render_tsv(canonical).splitlines()
        assert lines[0] == TSV_HEADER
        assert lines[1] == "Sales\tDEPLOY\t1385540\t0.00138554\t0.76\t15"
        assert len(lines) == 20

    def test_text_report(self, canonical):
        text = render_text(canonical)
        assert "Settlement ready: yes" in text
        assert "Simulated duration: 4m45s" in text
        assert "0.002466648 ETH, 1.36 USD (1.358506)" in text

    def test_persisting_store(self, schedule, tmp_path):
        store = DocStore(tmp_path)
        run_canonical(ChainConfig(), schedule, store=store)
        assert len(list(tmp_path.iterdir())) == 2


class TestScenarios:
    def test_views_only_costs_nothing(self, schedule):
        script = parse(ACTORS + 'deploy Sales as sc\nseller > sc.orderExists("PO-1")\n')
        report = execute(script, ChainConfig(), schedule)
        assert report.cost.totals["Sales"].fee_wei == 0
        assert report.steps[-1].output == "false"
        assert len(report.call_receipts) == 0

    def test_unexpected_revert_is_recorded(self, schedule):
        script = parse(ACTORS + 'deploy Sales as sc\nseller > sc.addOrder("PO-1", "x")\n')
        report = execute(script, ChainConfig(), schedule)
        assert report.unexpected_reverts == 1
        assert report.steps[-1].receipt.revert_reason == "NotInitialized"
        assert report.steps[-1].receipt.gas_used == 136983 + 625

    def test_expected_revert_is_ok(self, schedule):
        script = parse(
            ACTORS + "deploy Financial as fa\n"
            "actor bank 0x3000000000000000000000000000000000000003\n"
            "buyer > fa.setFinancialAgreementParties(buyer, bank, seller)\n"
            "buyer > fa.confirmAgreement()\n"
            "buyer > fa.confirmAgreement() expect-revert AlreadyConfirmed\n"
        )
        report = execute(script, ChainConfig(), schedule)
        assert report.unexpected_reverts == 0
        assert report.steps[-1].receipt.status_label == "Reverted(AlreadyConfirmed)"

    def test_wrong_expected_reason_counts(self, schedule):
        script = parse(ACTORS + 'deploy Sales as sc\nbuyer > sc.confirmOrder("PO-1") expect-revert NoSuchOrder\n')
        report = execute(script, ChainConfig(), schedule)
        assert report.unexpected_reverts == 1

    def test_advance_moves_clock(self, schedule):
        script = parse(ACTORS + "deploy Sales as sc\nadvance 100\n")
        assert execute(script, ChainConfig(), schedule).duration_s == 115

    def test_missing_attachment(self, schedule, tmp_path):
        script = parse(ACTORS + "attach seller missing.txt as doc\n", base_dir=tmp_path)
        with pytest.raises(ScenarioRuntimeError) as info:
            execute(script, ChainConfig(), schedule)
        assert info.value.line == 3

    def test_attachment_relative_to_base_dir(self, schedule, tmp_path):
        (tmp_path / "doc.txt").write_bytes(b"invoice")
        script = parse(ACTORS + "attach seller doc.txt as doc\n", base_dir=tmp_path)
        report = execute(script, ChainConfig(), schedule)
        assert report.steps[0].output == hash_file(tmp_path / "doc.txt").hex
