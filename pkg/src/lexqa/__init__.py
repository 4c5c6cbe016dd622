"""lexqa: question answering over legal and regulatory documents."""

from .chunker import ContextSpan, partition
from .engine import QAEngine, PreparedDocument, content_doc_id
from .extraction import ExtractedAnswer, extract_answer
from .gateway import HttpGateway, StubGateway
from .ingestion import (
    NormalizedDocument,
    RawDocument,
    Sentence,
    build_normalized_document,
    count_tokens,
    default_ruleset,
    load_ruleset,
    normalize_text,
    split_sentences,
)
from .ranking import RankedSpan, rank_spans
from .report import QueryReport, assemble_report, render
from .scoring import (
    CorpusStatistics,
    RelevanceScore,
    build_corpus_statistics,
    score_span_semantic,
    score_span_tfidf,
)

__version__ = "0.1.0"

__all__ = [
    "ContextSpan",
    "partition",
    "QAEngine",
    "PreparedDocument",
    "content_doc_id",
    "ExtractedAnswer",
    "extract_answer",
    "HttpGateway",
    "StubGateway",
    "NormalizedDocument",
    "RawDocument",
    "Sentence",
    "build_normalized_document",
    "count_tokens",
    "default_ruleset",
    "load_ruleset",
    "normalize_text",
    "split_sentences",
    "RankedSpan",
    "rank_spans",
    "QueryReport",
    "assemble_report",
    "render",
    "CorpusStatistics",
    "RelevanceScore",
    "build_corpus_statistics",
    "score_span_semantic",
    "score_span_tfidf",
    "__version__",
]
