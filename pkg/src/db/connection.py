"""SQLite connection for the receipt archive (WAL mode, schema applied on open)."""
from __future__ import annotations

import logging
import sqlite3
from pathlib import Path

log = logging.getLogger("db")

SCHEMA_PATH = Path(__file__).parent / "schema.sql"
MEMORY = ":memory:"


def apply_schema(conn: sqlite3.Connection) -> None:
    conn.executescript(SCHEMA_PATH.read_text(encoding="utf-8"))
    conn.commit()


def get_connection(db_path: Path | str) -> sqlite3.Connection:
    """Open (creating if needed) an archive database.

    Args:
        db_path: Database file, or ":memory:" for a throwaway archive.
    """
    if str(db_path) != MEMORY:
        db_path = Path(db_path)
        db_path.parent.mkdir(parents=True, exist_ok=True)
    conn = sqlite3.connect(str(db_path))
    conn.execute("PRAGMA journal_mode=WAL")
    conn.execute("PRAGMA foreign_keys=ON")
    apply_schema(conn)
    log.debug(f"Opened receipt archive {db_path}")
    return conn
