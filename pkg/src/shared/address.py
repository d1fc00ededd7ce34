"""20-byte account and contract addresses."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

ADDRESS_BYTES = 20


@dataclass(frozen=True, order=True)
class Address:
    """Opaque 20-byte identifier, rendered as 0x-prefixed lowercase hex."""
    raw: bytes

    def __post_init__(self):
        if not isinstance(self.raw, bytes) or len(self.raw) != ADDRESS_BYTES:
            raise ValueError(f"address must be {ADDRESS_BYTES} bytes")

    @classmethod
    def from_hex(cls, text: str) -> Address:
        """Parse "0x" + 40 hex digits (case-insensitive)."""
        if not text.startswith(("0x", "0X")) or len(text) != 2 + 2 * ADDRESS_BYTES:
            raise ValueError(f"not a 20-byte hex address: {text!r}")
        try:
            return cls(bytes.fromhex(text[2:]))
        except ValueError:
            raise ValueError(f"not a 20-byte hex address: {text!r}") from None

    @classmethod
    def derive(cls, *parts: bytes) -> Address:
        """Deterministic address from arbitrary seed bytes."""
        return cls(hashlib.sha256(b"".join(parts)).digest()[:ADDRESS_BYTES])

    @property
    def hex(self) -> str:
        return "0x" + self.raw.hex()

    def __str__(self) -> str:
        return self.hex

    def __repr__(self) -> str:
        return f"Address({self.hex})"


ZERO_ADDRESS = Address(bytes(ADDRESS_BYTES))
