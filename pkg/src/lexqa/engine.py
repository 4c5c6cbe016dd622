"""End-to-end pipeline orchestration shared by the CLI and the HTTP service.

prepare() runs the preprocessing half (normalize, sentence-split,
partition into token-bounded spans); answer() runs the query half (score
all spans, rank, extract an answer per top span, assemble the report).
Preparation is cacheable; answering is read-only over it.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .chunker import ContextSpan, partition
from .extraction import extract_answer
from .gateway.stub import StubGateway
from .ingestion import (
    GATEWAY_COUNTER,
    WORD_COUNTER,
    AbbreviationRuleset,
    NormalizedDocument,
    RawDocument,
    build_normalized_document,
    default_ruleset,
    make_token_counter,
)
from .ranking import rank_spans
from .report import QueryReport, assemble_report
from .scoring import (
    CROSS_ENCODER_SCORER_ID,
    STUB_SCORER_ID,
    CorpusStatistics,
    build_corpus_statistics,
    score_span_semantic,
    score_span_tfidf,
)

SCORERS = ("cross", "tfidf", "stub")
DEFAULT_N = 5
DEFAULT_MAX_SPAN_TOKENS = 512


def content_doc_id(title: str, text: str) -> str:
    """Stable document id from content, so identical uploads collide on purpose."""
    digest = hashlib.sha256(f"{title}\x00{text}".encode("utf-8")).hexdigest()
    return digest[:16]


@dataclass
class PreparedDocument:
    doc_id: str
    title: str
    spans: list[ContextSpan]
    doc: NormalizedDocument | None = None
    _stats: CorpusStatistics | None = field(default=None, repr=False)

    def corpus_stats(self) -> CorpusStatistics:
        if self._stats is None:
            self._stats = build_corpus_statistics(self.spans)
        return self._stats


class QAEngine:
    """Runs the full question-answering pipeline over one document at a time.

    `gateway` is the remote model backend; when absent, the deterministic
    stub supplies extraction so the tfidf and stub scorers work fully
    offline. The `cross` scorer requires a configured gateway.
    """

    def __init__(
        self,
        gateway=None,
        *,
        ruleset: AbbreviationRuleset | None = None,
        max_span_tokens: int = DEFAULT_MAX_SPAN_TOKENS,
        counter_mode: str = WORD_COUNTER,
        default_n: int = DEFAULT_N,
    ):
        if counter_mode == GATEWAY_COUNTER and gateway is None:
            raise ValueError("gateway token counting requires a configured gateway")
        self.gateway = gateway
        self.ruleset = ruleset or default_ruleset()
        self.max_span_tokens = max_span_tokens
        self.counter_mode = counter_mode
        self.default_n = default_n
        self._stub = StubGateway()

    def partition_config(self) -> dict:
        """The configuration spans (and gold span ids) depend on."""
        return {
            "max_span_tokens": self.max_span_tokens,
            "counter_mode": self.counter_mode,
            "ruleset_id": self.ruleset.ruleset_id,
        }

    def prepare(
        self,
        title: str,
        text: str,
        *,
        doc_id: str | None = None,
        source_uri: str = "",
        max_span_tokens: int | None = None,
    ) -> PreparedDocument:
        doc_id = doc_id or content_doc_id(title, text)
        raw = RawDocument(doc_id=doc_id, title=title, source_uri=source_uri, raw_text=text)
        doc = build_normalized_document(raw, self.ruleset)
        counter = make_token_counter(self.counter_mode, self.gateway)
        spans = partition(doc, max_span_tokens or self.max_span_tokens, counter)
        return PreparedDocument(doc_id=doc_id, title=title, spans=spans, doc=doc)

    def answer(
        self,
        prepared: PreparedDocument,
        question: str,
        *,
        n: int | None = None,
        scorer: str = "tfidf",
        generated_at: str | None = None,
    ) -> QueryReport:
        if not question.strip():
            raise ValueError("question is empty")
        n = self.default_n if n is None else n
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        if scorer not in SCORERS:
            raise ValueError(f"unknown scorer {scorer!r}; expected one of {SCORERS}")

        if scorer == "cross":
            if self.gateway is None:
                raise ValueError("scorer 'cross' requires a configured gateway")
            scores = [
                score_span_semantic(question, span, self.gateway, CROSS_ENCODER_SCORER_ID)
                for span in prepared.spans
            ]
            scorer_id = CROSS_ENCODER_SCORER_ID
            extraction_gateway = self.gateway
        elif scorer == "stub":
            scores = [
                score_span_semantic(question, span, self._stub, STUB_SCORER_ID)
                for span in prepared.spans
            ]
            scorer_id = STUB_SCORER_ID
            extraction_gateway = self._stub
        else:
            stats = prepared.corpus_stats()
            scores = [score_span_tfidf(question, span, stats) for span in prepared.spans]
            scorer_id = scores[0].scorer_id if scores else "tfidf"
            extraction_gateway = self.gateway or self._stub

        ranked = rank_spans(scores, prepared.spans, n)
        answers = [extract_answer(question, rs.span, extraction_gateway) for rs in ranked]
        return assemble_report(
            question,
            ranked,
            answers,
            doc_id=prepared.doc_id,
            doc_title=prepared.title,
            scorer_id=scorer_id,
            n=n,
            generated_at=generated_at,
        )
