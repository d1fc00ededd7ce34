"""Entry point for the trade-ledger simulator CLI.

Usage:
    python -m scripts.tradeledger deploy
    python -m scripts.tradeledger --fee-source table report
    python -m scripts.tradeledger run src/data/canonical_lc.scenario
    python -m scripts.tradeledger hash <file>
"""
from __future__ import annotations

import sys
from pathlib import Path

# Ensure project root is on path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.cli import main

if __name__ == "__main__":
    main()
