"""Partition a normalized document into token-bounded context spans.

The document is first divided at paragraph boundaries (blank lines). A
paragraph that fits the token limit becomes one span; an oversized
paragraph is bisected at the sentence boundary whose left side is closest
to half the paragraph's token count, recursively, until every piece fits.
A single sentence that alone exceeds the limit is bisected the same way at
whitespace boundaries. Split points depend only on the text, never on the
limit, so lowering the limit can only refine the partition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, asdict
from typing import Callable

from .ingestion import NormalizedDocument, Sentence, word_count

_NON_WS = re.compile(r"\S+")

TokenCounter = Callable[[str], int]


@dataclass(frozen=True)
class ContextSpan:
    """A contiguous, token-bounded slice of a document; the retrieval unit.

    `sentence_start`/`sentence_end` is the half-open range of sentence
    ordinals anchored in this span; when an oversized sentence is cut into
    several spans, only the piece containing the sentence's start claims its
    ordinal, so each sentence belongs to exactly one span. `sentence_texts`
    holds the scoring units: the covered sentences, or the span text itself
    for a sub-sentence piece.
    """

    span_id: str
    doc_id: str
    ordinal: int
    char_start: int
    char_end: int
    text: str
    sentence_start: int
    sentence_end: int
    token_count: int
    sentence_texts: tuple[str, ...]

    @property
    def sentence_indices(self) -> range:
        return range(self.sentence_start, self.sentence_end)


def span_to_dict(span: ContextSpan) -> dict:
    data = asdict(span)
    data["sentence_texts"] = list(span.sentence_texts)
    return data


def span_from_dict(data: dict) -> ContextSpan:
    return ContextSpan(
        span_id=data["span_id"],
        doc_id=data["doc_id"],
        ordinal=data["ordinal"],
        char_start=data["char_start"],
        char_end=data["char_end"],
        text=data["text"],
        sentence_start=data["sentence_start"],
        sentence_end=data["sentence_end"],
        token_count=data["token_count"],
        sentence_texts=tuple(data["sentence_texts"]),
    )


def partition(
    doc: NormalizedDocument,
    max_span_tokens: int = 512,
    counter: TokenCounter = word_count,
) -> list[ContextSpan]:
    """Cut a document into ordered, non-overlapping spans of at most
    `max_span_tokens` tokens under `counter`.

    Pure function: identical inputs yield identical spans.
    """
    if max_span_tokens < 1:
        raise ValueError(f"max_span_tokens must be >= 1, got {max_span_tokens}")
    if not doc.sentences:
        raise ValueError(f"document {doc.doc_id!r} has no sentences")

    pieces: list[_Piece] = []
    for lo, hi in _paragraph_groups(doc):
        _split_sentence_run(doc, lo, hi, max_span_tokens, counter, pieces)

    spans = []
    for ordinal, piece in enumerate(pieces):
        text = doc.normalized_text[piece.char_start : piece.char_end]
        spans.append(
            ContextSpan(
                span_id=f"{doc.doc_id}:{ordinal}",
                doc_id=doc.doc_id,
                ordinal=ordinal,
                char_start=piece.char_start,
                char_end=piece.char_end,
                text=text,
                sentence_start=piece.sentence_start,
                sentence_end=piece.sentence_end,
                token_count=counter(text),
                sentence_texts=piece.sentence_texts,
            )
        )
    return spans


@dataclass
class _Piece:
    char_start: int
    char_end: int
    sentence_start: int
    sentence_end: int
    sentence_texts: tuple[str, ...]


def _paragraph_groups(doc: NormalizedDocument) -> list[tuple[int, int]]:
    """Half-open sentence-index ranges, one per paragraph."""
    groups = []
    start = 0
    for i in range(1, len(doc.sentences)):
        gap = doc.normalized_text[doc.sentences[i - 1].char_end : doc.sentences[i].char_start]
        if gap.count("\n") >= 2:
            groups.append((start, i))
            start = i
    groups.append((start, len(doc.sentences)))
    return groups


def _split_sentence_run(
    doc: NormalizedDocument,
    lo: int,
    hi: int,
    limit: int,
    counter: TokenCounter,
    out: list[_Piece],
) -> None:
    """Recursively bisect sentences[lo:hi] until every piece fits the limit."""
    sents = doc.sentences
    run_text = doc.normalized_text[sents[lo].char_start : sents[hi - 1].char_end]
    if counter(run_text) <= limit:
        out.append(
            _Piece(
                char_start=sents[lo].char_start,
                char_end=sents[hi - 1].char_end,
                sentence_start=lo,
                sentence_end=hi,
                sentence_texts=tuple(s.text for s in sents[lo:hi]),
            )
        )
        return
    if hi - lo == 1:
        _split_word_run(doc, sents[lo], limit, counter, out)
        return

    prefix = [0]
    for s in sents[lo:hi]:
        prefix.append(prefix[-1] + counter(s.text))
    cut = lo + _best_cut(prefix)
    _split_sentence_run(doc, lo, cut, limit, counter, out)
    _split_sentence_run(doc, cut, hi, limit, counter, out)


def _split_word_run(
    doc: NormalizedDocument,
    sentence: Sentence,
    limit: int,
    counter: TokenCounter,
    out: list[_Piece],
) -> None:
    """Bisect one oversized sentence at whitespace boundaries."""
    words = [
        (sentence.char_start + m.start(), sentence.char_start + m.end())
        for m in _NON_WS.finditer(sentence.text)
    ]
    prefix = [0]
    for start, end in words:
        prefix.append(prefix[-1] + counter(doc.normalized_text[start:end]))
    _split_words(doc, sentence, words, prefix, 0, len(words), limit, counter, out)


def _split_words(
    doc: NormalizedDocument,
    sentence: Sentence,
    words: list[tuple[int, int]],
    prefix: list[int],
    lo: int,
    hi: int,
    limit: int,
    counter: TokenCounter,
    out: list[_Piece],
) -> None:
    char_start = words[lo][0]
    char_end = words[hi - 1][1]
    text = doc.normalized_text[char_start:char_end]
    # A single word is indivisible; emitted as-is even if a subword counter
    # still reports it over the limit.
    if hi - lo == 1 or counter(text) <= limit:
        anchors_sentence = char_start == sentence.char_start
        out.append(
            _Piece(
                char_start=char_start,
                char_end=char_end,
                sentence_start=sentence.index,
                sentence_end=sentence.index + 1 if anchors_sentence else sentence.index,
                sentence_texts=(text,),
            )
        )
        return
    shifted = [prefix[i] - prefix[lo] for i in range(lo, hi + 1)]
    cut = lo + _best_cut(shifted)
    _split_words(doc, sentence, words, prefix, lo, cut, limit, counter, out)
    _split_words(doc, sentence, words, prefix, cut, hi, limit, counter, out)


def _best_cut(prefix: list[int]) -> int:
    """Index 1..n-1 whose prefix sum is closest to half the total; earliest wins ties."""
    total = prefix[-1]
    best = 1
    best_dist = abs(2 * prefix[1] - total)
    for i in range(2, len(prefix) - 1):
        dist = abs(2 * prefix[i] - total)
        if dist < best_dist:
            best, best_dist = i, dist
    return best
