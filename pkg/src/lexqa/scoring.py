"""Question-span relevance scoring.

Two scorers share one strategy: score every sentence of a span against
the question and give the span the maximum sentence score, since only a
portion of a span is expected to contain the answer. The semantic scorer
delegates sentence similarity to the model gateway; the TF-IDF scorer is
a self-contained cosine baseline (raw term frequency, smoothed inverse
document frequency over the document's spans, L2-normalized vectors).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .chunker import ContextSpan
from .gateway.base import GatewayError
from .ingestion import word_tokens

CROSS_ENCODER_SCORER_ID = "cross-encoder"
STUB_SCORER_ID = "stub-jaccard"
# The variant is pinned in the identifier so stored scores stay comparable.
TFIDF_SCORER_ID = "tfidf(tf=raw,idf=smooth+1,norm=l2,unit=max-sentence)"


@dataclass(frozen=True)
class RelevanceScore:
    span_id: str
    score: float
    scorer_id: str


@dataclass(frozen=True)
class CorpusStatistics:
    """Per-term span frequencies over one document's context spans."""

    n_spans: int
    document_frequency: Mapping[str, int]

    @property
    def vocabulary(self) -> set[str]:
        return set(self.document_frequency)


def build_corpus_statistics(spans: Sequence[ContextSpan]) -> CorpusStatistics:
    """df(term) = number of spans containing the term at least once."""
    if not spans:
        raise ValueError("corpus statistics need at least one span")
    df: Counter[str] = Counter()
    for span in spans:
        df.update(set(word_tokens(span.text)))
    return CorpusStatistics(n_spans=len(spans), document_frequency=dict(df))


def score_span_semantic(
    question: str,
    span: ContextSpan,
    gateway,
    scorer_id: str = CROSS_ENCODER_SCORER_ID,
) -> RelevanceScore:
    """Maximum gateway similarity between the question and any span sentence."""
    if not span.sentence_texts:
        raise ValueError(f"span {span.span_id} has no sentences")
    try:
        scores = gateway.similarity(question, list(span.sentence_texts))
    except GatewayError as err:
        err.span_id = span.span_id
        raise
    return RelevanceScore(span_id=span.span_id, score=max(scores), scorer_id=scorer_id)


def score_span_tfidf(
    question: str,
    span: ContextSpan,
    stats: CorpusStatistics,
) -> RelevanceScore:
    """Maximum TF-IDF cosine between the question and any span sentence."""
    if not span.sentence_texts:
        raise ValueError(f"span {span.span_id} has no sentences")
    q_vec = tfidf_vector(word_tokens(question), stats)
    best = 0.0
    for sentence in span.sentence_texts:
        s_vec = tfidf_vector(word_tokens(sentence), stats)
        best = max(best, _dot(q_vec, s_vec))
    # Guard the [0, 1] invariant against float round-off only.
    return RelevanceScore(span_id=span.span_id, score=min(best, 1.0), scorer_id=TFIDF_SCORER_ID)


def smoothed_idf(term: str, stats: CorpusStatistics) -> float:
    """ln((1 + N) / (1 + df)) + 1; terms unseen in the corpus have df = 0."""
    df = stats.document_frequency.get(term, 0)
    return math.log((1 + stats.n_spans) / (1 + df)) + 1.0


def tfidf_vector(tokens: Sequence[str], stats: CorpusStatistics) -> dict[str, float]:
    """L2-normalized sparse vector of raw-count TF times smoothed IDF."""
    counts = Counter(tokens)
    vec = {term: count * smoothed_idf(term, stats) for term, count in counts.items()}
    norm = math.sqrt(sum(w * w for w in vec.values()))
    if norm == 0.0:
        return {}
    return {term: w / norm for term, w in vec.items()}


def _dot(a: dict[str, float], b: dict[str, float]) -> float:
    if len(b) < len(a):
        a, b = b, a
    return sum(w * b.get(term, 0.0) for term, w in a.items())
