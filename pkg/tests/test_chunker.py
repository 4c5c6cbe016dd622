"""Partitioning: token bound, coverage, ordering, determinism, refinement."""

import random

import pytest

from conftest import random_document
from lexqa.chunker import partition, span_from_dict, span_to_dict
from lexqa.ingestion import (
    AbbreviationRuleset,
    RawDocument,
    build_normalized_document,
    word_count,
)

NO_RULES = AbbreviationRuleset("none", ())


def prepare(text: str):
    raw = RawDocument("doc", "title", "", text)
    return build_normalized_document(raw, NO_RULES)


def sentence_of(n_words: int, prefix: str) -> str:
    words = [f"{prefix}{i}" for i in range(n_words - 1)]
    return " ".join(words + ["end."])


class TestPartitionBasics:
    def test_small_paragraph_is_one_span(self):
        doc = prepare("one two three four five six seven eight nine ten.")
        spans = partition(doc, 512)
        assert len(spans) == 1
        assert spans[0].text == doc.normalized_text
        assert spans[0].token_count == 10
        assert spans[0].sentence_indices == range(0, 1)

    def test_four_200token_sentences_bisect_into_two_spans(self):
        text = " ".join(sentence_of(200, f"s{i}w") for i in range(4))
        doc = prepare(text)
        assert len(doc.sentences) == 4
        assert word_count(doc.normalized_text) == 800
        spans = partition(doc, 512)
        assert len(spans) == 2
        assert [s.token_count for s in spans] == [400, 400]
        assert [(s.sentence_start, s.sentence_end) for s in spans] == [(0, 2), (2, 4)]

    def test_paragraphs_never_merge(self):
        doc = prepare("First paragraph here.\n\nSecond paragraph here.")
        spans = partition(doc, 512)
        assert len(spans) == 2

    def test_oversized_sentence_bisected_at_whitespace(self):
        # One 10-word sentence at limit 3; hand-run of the bisection:
        # 10 -> 5+5 -> (2+3) + (2+3).
        doc = prepare("a1 a2 a3 a4 a5 a6 a7 a8 a9 end.")
        spans = partition(doc, 3)
        assert [s.token_count for s in spans] == [2, 3, 2, 3]
        assert [s.text for s in spans] == [
            "a1 a2",
            "a3 a4 a5",
            "a6 a7",
            "a8 a9 end.",
        ]
        # Only the piece containing the sentence start claims its ordinal.
        assert [(s.sentence_start, s.sentence_end) for s in spans] == [
            (0, 1),
            (0, 0),
            (0, 0),
            (0, 0),
        ]

    def test_tie_breaks_choose_earlier_boundary(self):
        # Sentence token counts [2, 2, 2] at limit 4: cutting after sentence 0
        # and after sentence 1 are equidistant from the midpoint.
        doc = prepare("a b. c d. e f.")
        spans = partition(doc, 4)
        assert [(s.sentence_start, s.sentence_end) for s in spans] == [(0, 1), (1, 3)]

    def test_rejects_bad_limit(self):
        doc = prepare("Hello.")
        with pytest.raises(ValueError):
            partition(doc, 0)

    def test_rejects_empty_document(self):
        doc = prepare("Hello.")
        empty = type(doc)(
            doc_id="doc", normalized_text="", sentences=(), abbreviation_ruleset_id="none"
        )
        with pytest.raises(ValueError):
            partition(empty, 512)

    def test_span_ids_and_ordinals(self):
        doc = prepare("a b. c d. e f.")
        spans = partition(doc, 2)
        assert [s.ordinal for s in spans] == [0, 1, 2]
        assert [s.span_id for s in spans] == ["doc:0", "doc:1", "doc:2"]

    def test_serialization_roundtrip(self):
        doc = prepare("a b. c d.\n\ne f.")
        for span in partition(doc, 2):
            assert span_from_dict(span_to_dict(span)) == span


def assert_invariants(doc, spans, limit):
    assert [s.ordinal for s in spans] == list(range(len(spans)))
    covered = []
    prev_end = -1
    for span in spans:
        assert span.char_start > prev_end or prev_end == -1
        assert span.char_start >= prev_end
        prev_end = span.char_end
        assert span.char_start < span.char_end
        assert span.text == doc.normalized_text[span.char_start : span.char_end]
        assert span.token_count == word_count(span.text)
        assert span.token_count <= limit
        covered.extend(span.sentence_indices)
    assert covered == list(range(len(doc.sentences)))


class TestPartitionProperties:
    def test_invariants_on_random_documents(self):
        rng = random.Random(42)
        for _ in range(60):
            doc = prepare(random_document(rng))
            for limit in (4, 16, 64, 512):
                assert_invariants(doc, partition(doc, limit), limit)

    def test_determinism(self):
        rng = random.Random(7)
        for _ in range(20):
            doc = prepare(random_document(rng))
            assert partition(doc, 32) == partition(doc, 32)

    def test_monotone_refinement(self):
        rng = random.Random(11)
        for _ in range(30):
            doc = prepare(random_document(rng))
            counts = [len(partition(doc, limit)) for limit in (512, 256, 128, 64, 32, 16, 8)]
            assert counts == sorted(counts)
