"""Shared test helpers: random corpora and the brute-force TF-IDF oracle."""

from __future__ import annotations

import math
import random

from lexqa.chunker import ContextSpan


def random_document(rng: random.Random) -> str:
    """Plain text with varied paragraph, sentence, and word lengths.

    Occasionally emits a very long sentence so single-sentence bisection is
    exercised even at large token limits.
    """
    paragraphs = []
    for _ in range(rng.randint(1, 6)):
        sentences = []
        for _ in range(rng.randint(1, 8)):
            roll = rng.random()
            if roll < 0.01:
                n_words = rng.randint(520, 700)
            elif roll < 0.07:
                n_words = rng.randint(40, 90)
            else:
                n_words = rng.randint(1, 30)
            words = [f"w{rng.randint(0, 400)}" for _ in range(n_words)]
            sentences.append(" ".join(words) + rng.choice([".", "?", "!", ";"]))
        paragraphs.append(" ".join(sentences))
    return "\n\n".join(paragraphs)


def make_span(
    span_id: str,
    ordinal: int,
    sentence_texts: list[str],
    doc_id: str = "doc",
) -> ContextSpan:
    """A standalone span for scorer tests; offsets are self-referential."""
    text = " ".join(sentence_texts)
    return ContextSpan(
        span_id=span_id,
        doc_id=doc_id,
        ordinal=ordinal,
        char_start=0,
        char_end=len(text),
        text=text,
        sentence_start=0,
        sentence_end=len(sentence_texts),
        token_count=len(text.split()),
        sentence_texts=tuple(sentence_texts),
    )


def random_toy_corpus(rng: random.Random) -> tuple[list[ContextSpan], str]:
    """Up to 10 spans over a vocabulary of up to 20 terms, plus a question."""
    vocab = [f"t{i}" for i in range(rng.randint(3, 20))]
    spans = []
    for i in range(rng.randint(1, 10)):
        sentences = [
            " ".join(rng.choices(vocab, k=rng.randint(1, 8)))
            for _ in range(rng.randint(1, 3))
        ]
        spans.append(make_span(f"toy:{i}", i, sentences))
    question = " ".join(rng.choices(vocab + ["unknownterm"], k=rng.randint(1, 6)))
    return spans, question


def dense_tfidf_cosine(
    question_tokens: list[str],
    sentence_tokens: list[str],
    span_token_lists: list[list[str]],
) -> float:
    """Brute-force dense-vector TF-IDF cosine, independent of the sparse path.

    Enumerates the full vocabulary, builds dense weight lists, and divides
    the raw dot product by both norms at the end.
    """
    vocab = sorted(
        set(question_tokens)
        | set(sentence_tokens)
        | {t for tokens in span_token_lists for t in tokens}
    )
    n_spans = len(span_token_lists)

    def idf(term: str) -> float:
        df = sum(1 for tokens in span_token_lists if term in tokens)
        return math.log((1 + n_spans) / (1 + df)) + 1.0

    q = [question_tokens.count(t) * idf(t) for t in vocab]
    s = [sentence_tokens.count(t) * idf(t) for t in vocab]
    q_norm = math.sqrt(sum(x * x for x in q))
    s_norm = math.sqrt(sum(x * x for x in s))
    if q_norm == 0.0 or s_norm == 0.0:
        return 0.0
    return sum(a * b for a, b in zip(q, s)) / (q_norm * s_norm)
