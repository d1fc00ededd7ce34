from src.docstore.store import (
    ContentHash,
    DocStore,
    DocStoreError,
    EmptyBundle,
    NotFound,
    StoredDocument,
    hash_file,
    merkle_root,
)

__all__ = [
    "ContentHash",
    "DocStore",
    "DocStoreError",
    "EmptyBundle",
    "NotFound",
    "StoredDocument",
    "hash_file",
    "merkle_root",
]
