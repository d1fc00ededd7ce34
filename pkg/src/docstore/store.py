"""Content-addressed, immutable document store.

Documents are identified by the SHA-256 digest of their bytes: equal bytes
give equal identities, any change gives a new one. Bundles combine ordered
document hashes into a Merkle root (a small Merkle DAG over stored blobs).

In memory by default; with a root directory every blob is also written to
`<root>/<hex digest>` and every bundle node to `<root>/<hex root>.bundle`.
"""
from __future__ import annotations

import hashlib
import logging
import os
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path

log = logging.getLogger("docstore")

DIGEST_BYTES = 32
_LEAF = b"\x00"
_NODE = b"\x01"


class DocStoreError(Exception):
    pass


class NotFound(DocStoreError):
    def __init__(self, digest: ContentHash):
        super().__init__(f"no stored content for {digest}")
        self.digest = digest


class EmptyBundle(DocStoreError):
    pass


@dataclass(frozen=True, order=True)
class ContentHash:
    digest: bytes

    def __post_init__(self):
        if not isinstance(self.digest, bytes) or len(self.digest) != DIGEST_BYTES:
            raise ValueError(f"content hash must be {DIGEST_BYTES} bytes")

    @classmethod
    def of(cls, data: bytes) -> ContentHash:
        return cls(hashlib.sha256(data).digest())

    @classmethod
    def from_hex(cls, text: str) -> ContentHash:
        if len(text) != 2 * DIGEST_BYTES:
            raise ValueError(f"not a 64-char hex digest: {text!r}")
        try:
            return cls(bytes.fromhex(text))
        except ValueError:
            raise ValueError(f"not a 64-char hex digest: {text!r}") from None

    @property
    def hex(self) -> str:
        return self.digest.hex()

    def __str__(self) -> str:
        return self.hex

    def __repr__(self) -> str:
        return f"ContentHash({self.hex[:12]}…)"


@dataclass(frozen=True)
class StoredDocument:
    hash: ContentHash
    data: bytes

    @property
    def size(self) -> int:
        return len(self.data)

    def verify(self) -> bool:
        return ContentHash.of(self.data) == self.hash


def merkle_root(leaves: list[ContentHash]) -> ContentHash:
    """Pairwise SHA-256 over leaf nodes in order; an odd last node is promoted.

    Leaf nodes are H(0x00 || digest) so a single-leaf bundle differs from
    its only document; inner nodes are H(0x01 || left || right).
    """
    if not leaves:
        raise EmptyBundle("cannot bundle zero documents")
    level = [hashlib.sha256(_LEAF + h.digest).digest() for h in leaves]
    while len(level) > 1:
        nxt = []
        for i in range(0, len(level) - 1, 2):
            nxt.append(hashlib.sha256(_NODE + level[i] + level[i + 1]).digest())
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return ContentHash(level[0])


def _encode_node(leaves: list[ContentHash]) -> bytes:
    return "".join(f"{h.hex}\n" for h in leaves).encode("ascii")


def _decode_node(node: bytes) -> list[ContentHash]:
    return [ContentHash.from_hex(line) for line in node.decode("ascii").split()]


class DocStore:
    """Thread-safe content-addressed blob store with optional directory backing.

    A bundle node is stored under its Merkle root as the newline-separated hex
    digests of its leaves, in order. Leaves may be documents or other bundles.
    """

    def __init__(self, root: Path | None = None):
        self.root = Path(root) if root is not None else None
        self._blobs: dict[ContentHash, bytes] = {}
        self._nodes: dict[ContentHash, bytes] = {}
        self._lock = threading.Lock()
        if self.root is not None:
            self.root.mkdir(parents=True, exist_ok=True)

    def __len__(self) -> int:
        with self._lock:
            return len(self._blobs) + len(self._nodes)

    def __contains__(self, digest: ContentHash) -> bool:
        with self._lock:
            if digest in self._blobs or digest in self._nodes:
                return True
        if self.root is None:
            return False
        return self._blob_path(digest).exists() or self._node_path(digest).exists()

    def put(self, data: bytes) -> ContentHash:
        data = bytes(data)
        digest = ContentHash.of(data)
        with self._lock:
            if digest in self._blobs:
                return digest
            self._blobs[digest] = data
            if self.root is not None:
                self._write_atomic(self.root / digest.hex, data)
        log.debug(f"put {digest.hex} ({len(data)} bytes)")
        return digest

    def get(self, digest: ContentHash) -> bytes:
        """Document bytes, or a bundle node's leaf listing."""
        with self._lock:
            data = self._blobs.get(digest)
            if data is None:
                data = self._nodes.get(digest)
        if data is not None:
            return data
        if self.root is not None:
            for path, cache in ((self._blob_path(digest), self._blobs), (self._node_path(digest), self._nodes)):
                if path.exists():
                    data = path.read_bytes()
                    with self._lock:
                        cache.setdefault(digest, data)
                    return data
        raise NotFound(digest)

    def document(self, digest: ContentHash) -> StoredDocument:
        return StoredDocument(hash=digest, data=self.get(digest))

    def is_bundle(self, digest: ContentHash) -> bool:
        with self._lock:
            if digest in self._nodes:
                return True
        return self.root is not None and self._node_path(digest).exists()

    def verify(self, digest: ContentHash) -> bool:
        """Recompute the digest of the stored bytes (on-disk copy if persisted).

        A bundle node verifies when its listed leaves hash back to its root.
        """
        if self.is_bundle(digest):
            try:
                return merkle_root(_decode_node(self._read_node(digest))) == digest
            except (ValueError, EmptyBundle):
                return False
        path = self._blob_path(digest)
        if path is not None and path.exists():
            return ContentHash.of(path.read_bytes()) == digest
        return self.document(digest).verify()

    def bundle(self, hashes: list[ContentHash]) -> ContentHash:
        if not hashes:
            raise EmptyBundle("cannot bundle zero documents")
        for h in hashes:
            if h not in self:
                raise NotFound(h)
        root = merkle_root(list(hashes))
        node = _encode_node(hashes)
        with self._lock:
            self._nodes.setdefault(root, node)
            if self.root is not None:
                self._write_atomic(self._node_path(root), node)
        log.debug(f"bundle {root.hex} over {len(hashes)} leaves")
        return root

    def bundle_leaves(self, root: ContentHash) -> list[ContentHash]:
        return _decode_node(self._read_node(root))

    def put_file(self, path: Path) -> ContentHash:
        return self.put(Path(path).read_bytes())

    def _read_node(self, root: ContentHash) -> bytes:
        with self._lock:
            node = self._nodes.get(root)
        if node is not None:
            return node
        if self.root is not None and self._node_path(root).exists():
            node = self._node_path(root).read_bytes()
            with self._lock:
                self._nodes.setdefault(root, node)
            return node
        raise NotFound(root)

    def _blob_path(self, digest: ContentHash) -> Path | None:
        return None if self.root is None else self.root / digest.hex

    def _node_path(self, digest: ContentHash) -> Path | None:
        return None if self.root is None else self.root / f"{digest.hex}.bundle"

    @staticmethod
    def _write_atomic(path: Path, data: bytes) -> None:
        if path.exists():
            return
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
        try:
            with os.fdopen(fd, "wb") as f:
                f.write(data)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def hash_file(path: Path) -> ContentHash:
    """Digest of a file's bytes, without storing it."""
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            h.update(chunk)
    return ContentHash(h.digest())
