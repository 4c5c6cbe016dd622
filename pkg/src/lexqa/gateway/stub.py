"""Deterministic offline gateway backend.

Similarity is the Jaccard coefficient of lowercased, punctuation-stripped
token sets; answer extraction returns the context sentence with the
highest Jaccard overlap against the question. No model, no randomness:
identical inputs give identical outputs across processes and runs, which
makes the full pipeline runnable and testable with no model server.
"""

from __future__ import annotations

from ..ingestion import split_sentences, word_count, word_tokens
from .base import QAResult

STUB_SIMILARITY_MODEL = "stub-jaccard"
STUB_QA_MODEL = "stub-best-overlap"


def jaccard(a: set[str], b: set[str]) -> float:
    """|a ∩ b| / |a ∪ b|; 0.0 when either set is empty."""
    if not a or not b:
        return 0.0
    return len(a & b) / len(a | b)


class StubGateway:
    """In-process stand-in for a model backend, wire-compatible with the real one."""

    def similarity(self, question: str, candidates: list[str]) -> list[float]:
        q = set(word_tokens(question))
        return [jaccard(q, set(word_tokens(c))) for c in candidates]

    def qa(self, question: str, context: str) -> QAResult:
        q = set(word_tokens(question))
        best = None
        best_score = 0.0
        for sentence in split_sentences(context):
            score = jaccard(q, set(word_tokens(sentence.text)))
            if best is None or score > best_score:
                best, best_score = sentence, score
        if best is None or best_score == 0.0:
            return QAResult(0, 0, 0.0)
        return QAResult(best.char_start, best.char_end, best_score)

    def token_count(self, text: str) -> int:
        return word_count(text)

    def health(self) -> dict:
        return {
            "status": "ok",
            "models": {"similarity": STUB_SIMILARITY_MODEL, "qa": STUB_QA_MODEL},
        }
