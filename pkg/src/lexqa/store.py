"""On-disk document store with a partition cache.

Documents are keyed by content hash, so uploading identical content twice
yields the same id. Partitions are cached per (max_span_tokens, counter
mode, ruleset) and are a pure-function memo: recomputing from the stored
text must reproduce the cache exactly. Manifest updates are
write-temp-then-rename, and writes are serialized behind one lock;
readers never mutate the store.
"""

from __future__ import annotations

import json
import os
import re
import threading
from pathlib import Path

from .chunker import ContextSpan, span_from_dict, span_to_dict
from .engine import PreparedDocument, QAEngine, content_doc_id
from .report import utc_timestamp


class DocumentNotFound(Exception):
    def __init__(self, doc_id: str):
        super().__init__(f"no document with id {doc_id!r}")
        self.doc_id = doc_id


def _safe_key(key: str) -> str:
    return re.sub(r"[^\w.-]", "_", key)


class DocumentStore:
    def __init__(self, root: str | Path, engine: QAEngine):
        self.root = Path(root)
        self.engine = engine
        self._lock = threading.Lock()
        self.root.mkdir(parents=True, exist_ok=True)
        (self.root / "texts").mkdir(exist_ok=True)
        (self.root / "partitions").mkdir(exist_ok=True)
        self._manifest = self._load_manifest()

    # -- manifest ----------------------------------------------------------

    @property
    def _manifest_path(self) -> Path:
        return self.root / "manifest.json"

    def _load_manifest(self) -> dict:
        if self._manifest_path.exists():
            return json.loads(self._manifest_path.read_text(encoding="utf-8"))
        return {"documents": {}}

    def _write_manifest(self) -> None:
        _atomic_write_json(self._manifest_path, self._manifest)

    # -- documents ---------------------------------------------------------

    def has(self, doc_id: str) -> bool:
        return doc_id in self._manifest["documents"]

    def upload(self, title: str, text: str, source_uri: str = "") -> str:
        """Store, normalize, and partition a document; idempotent on content."""
        doc_id = content_doc_id(title, text)
        with self._lock:
            if self.has(doc_id):
                return doc_id
            prepared = self.engine.prepare(title, text, doc_id=doc_id, source_uri=source_uri)
            text_file = self.root / "texts" / f"{doc_id}.txt"
            _atomic_write_text(text_file, text)
            entry = {
                "title": title,
                "source_uri": source_uri,
                "text_file": f"texts/{doc_id}.txt",
                "created_at": utc_timestamp(),
                "sentence_count": len(prepared.doc.sentences) if prepared.doc else None,
                "partitions": {},
            }
            self._manifest["documents"][doc_id] = entry
            self._store_partition(doc_id, entry, self.engine.max_span_tokens, prepared.spans)
            self._write_manifest()
        return doc_id

    def document_text(self, doc_id: str) -> str:
        entry = self._entry(doc_id)
        return (self.root / entry["text_file"]).read_text(encoding="utf-8")

    def list_documents(self) -> list[dict]:
        key = self._cache_key(self.engine.max_span_tokens)
        out = []
        for doc_id, entry in sorted(self._manifest["documents"].items()):
            partition = entry["partitions"].get(key)
            out.append(
                {
                    "doc_id": doc_id,
                    "title": entry["title"],
                    "source_uri": entry["source_uri"],
                    "created_at": entry["created_at"],
                    "sentence_count": entry["sentence_count"],
                    "span_count": partition["span_count"] if partition else None,
                }
            )
        return out

    def _entry(self, doc_id: str) -> dict:
        try:
            return self._manifest["documents"][doc_id]
        except KeyError:
            raise DocumentNotFound(doc_id) from None

    # -- partitions --------------------------------------------------------

    def _cache_key(self, max_span_tokens: int) -> str:
        cfg = self.engine.partition_config()
        return _safe_key(f"{max_span_tokens}-{cfg['counter_mode']}-{cfg['ruleset_id']}")

    def _partition_path(self, doc_id: str, key: str) -> Path:
        return self.root / "partitions" / doc_id / f"{key}.json"

    def _store_partition(
        self, doc_id: str, entry: dict, max_span_tokens: int, spans: list[ContextSpan]
    ) -> None:
        key = self._cache_key(max_span_tokens)
        config = dict(self.engine.partition_config(), max_span_tokens=max_span_tokens)
        payload = {
            "doc_id": doc_id,
            "partition_config": config,
            "spans": [span_to_dict(s) for s in spans],
        }
        path = self._partition_path(doc_id, key)
        path.parent.mkdir(parents=True, exist_ok=True)
        _atomic_write_json(path, payload)
        entry["partitions"][key] = {"span_count": len(spans), "config": config}

    def spans_for(self, doc_id: str, max_span_tokens: int | None = None) -> list[ContextSpan]:
        """Cached spans for the given limit, computing and caching on miss."""
        entry = self._entry(doc_id)
        limit = max_span_tokens or self.engine.max_span_tokens
        key = self._cache_key(limit)
        path = self._partition_path(doc_id, key)
        if path.exists():
            payload = json.loads(path.read_text(encoding="utf-8"))
            return [span_from_dict(d) for d in payload["spans"]]
        text = self.document_text(doc_id)
        prepared = self.engine.prepare(
            entry["title"], text, doc_id=doc_id, max_span_tokens=limit
        )
        with self._lock:
            self._store_partition(doc_id, entry, limit, prepared.spans)
            self._write_manifest()
        return prepared.spans

    def get_prepared(self, doc_id: str) -> PreparedDocument:
        """A PreparedDocument over cached spans; ready for answer()."""
        entry = self._entry(doc_id)
        spans = self.spans_for(doc_id)
        return PreparedDocument(doc_id=doc_id, title=entry["title"], spans=spans)


def _atomic_write_text(path: Path, text: str) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _atomic_write_json(path: Path, data: dict) -> None:
    _atomic_write_text(path, json.dumps(data, ensure_ascii=False, indent=1))
