"""Relevance scoring: corpus statistics, TF-IDF vs. brute-force oracle, semantic max."""

import random

import pytest

from conftest import dense_tfidf_cosine, make_span, random_toy_corpus
from lexqa.gateway import GatewayConnectionError, StubGateway
from lexqa.ingestion import word_tokens
from lexqa.scoring import (
    STUB_SCORER_ID,
    TFIDF_SCORER_ID,
    build_corpus_statistics,
    score_span_semantic,
    score_span_tfidf,
    smoothed_idf,
)


class TestCorpusStatistics:
    def test_df_counts_spans_not_occurrences(self):
        spans = [make_span("s0", 0, ["a b"]), make_span("s1", 1, ["a c"])]
        stats = build_corpus_statistics(spans)
        assert stats.n_spans == 2
        assert stats.document_frequency == {"a": 2, "b": 1, "c": 1}

    def test_single_span(self):
        stats = build_corpus_statistics([make_span("s0", 0, ["x"])])
        assert stats.n_spans == 1
        assert stats.document_frequency == {"x": 1}

    def test_repeated_term_in_one_span(self):
        stats = build_corpus_statistics([make_span("s0", 0, ["A a"])])
        assert stats.document_frequency == {"a": 1}

    def test_df_bounds(self):
        rng = random.Random(3)
        spans, _ = random_toy_corpus(rng)
        stats = build_corpus_statistics(spans)
        for term, df in stats.document_frequency.items():
            assert 1 <= df <= stats.n_spans

    def test_requires_spans(self):
        with pytest.raises(ValueError):
            build_corpus_statistics([])


class TestTfidfScoring:
    def test_identical_question_scores_one(self):
        span = make_span("s0", 0, ["the breach must be notified"])
        stats = build_corpus_statistics([span, make_span("s1", 1, ["other words"])])
        got = score_span_tfidf("the breach must be notified", span, stats)
        assert got.score == pytest.approx(1.0)
        assert got.scorer_id == TFIDF_SCORER_ID

    def test_disjoint_question_scores_zero(self):
        span = make_span("s0", 0, ["alpha beta"])
        stats = build_corpus_statistics([span])
        assert score_span_tfidf("gamma delta", span, stats).score == 0.0

    def test_empty_question_scores_zero(self):
        span = make_span("s0", 0, ["alpha beta"])
        stats = build_corpus_statistics([span])
        assert score_span_tfidf("...", span, stats).score == 0.0

    def test_matches_dense_oracle_on_fixed_corpus(self):
        spans = [
            make_span("s0", 0, ["data breach must be notified", "fines apply"]),
            make_span("s1", 1, ["the supply of digital content"]),
            make_span("s2", 2, ["data subject rights", "data transfers"]),
        ]
        stats = build_corpus_statistics(spans)
        span_tokens = [word_tokens(s.text) for s in spans]
        question = "data breach"
        for span in spans:
            expected = max(
                dense_tfidf_cosine(word_tokens(question), word_tokens(sent), span_tokens)
                for sent in span.sentence_texts
            )
            got = score_span_tfidf(question, span, stats).score
            assert got == pytest.approx(expected, abs=1e-9)

    def test_matches_dense_oracle_on_random_corpora(self):
        rng = random.Random(17)
        for _ in range(25):
            spans, question = random_toy_corpus(rng)
            stats = build_corpus_statistics(spans)
            span_tokens = [word_tokens(s.text) for s in spans]
            for span in spans:
                expected = max(
                    dense_tfidf_cosine(word_tokens(question), word_tokens(sent), span_tokens)
                    for sent in span.sentence_texts
                )
                got = score_span_tfidf(question, span, stats).score
                assert got == pytest.approx(expected, abs=1e-9)

    def test_unknown_question_terms_use_zero_df_idf(self):
        import math

        stats = build_corpus_statistics([make_span("s0", 0, ["a"])])
        assert smoothed_idf("unseen", stats) == pytest.approx(math.log(2) + 1)

    def test_scores_in_range_and_sentence_permutation_invariant(self):
        rng = random.Random(23)
        for _ in range(20):
            spans, question = random_toy_corpus(rng)
            stats = build_corpus_statistics(spans)
            for span in spans:
                score = score_span_tfidf(question, span, stats).score
                assert 0.0 <= score <= 1.0
                shuffled = list(span.sentence_texts)
                rng.shuffle(shuffled)
                permuted = make_span(span.span_id, span.ordinal, shuffled)
                assert score_span_tfidf(question, permuted, stats).score == pytest.approx(
                    score
                )


class TestSemanticScoring:
    def test_max_of_singleton(self):
        class Gateway:
            def similarity(self, question, candidates):
                return [0.8]

        span = make_span("s0", 0, ["only sentence"])
        got = score_span_semantic("q", span, Gateway())
        assert got.score == 0.8

    def test_maximum_over_sentences(self):
        class Gateway:
            def similarity(self, question, candidates):
                return [0.2, 0.9, 0.4]

        span = make_span("s0", 0, ["a", "b", "c"])
        assert score_span_semantic("q", span, Gateway()).score == 0.9

    def test_stub_gateway_best_sentence(self):
        span = make_span("s0", 0, ["the data breach must be notified", "fines apply"])
        got = score_span_semantic(
            "data breach notification", span, StubGateway(), STUB_SCORER_ID
        )
        assert got.score == pytest.approx(2 / 7)
        assert got.scorer_id == STUB_SCORER_ID

    def test_gateway_error_tagged_with_span(self):
        class Gateway:
            def similarity(self, question, candidates):
                raise GatewayConnectionError("down")

        span = make_span("s9", 9, ["text"])
        with pytest.raises(GatewayConnectionError) as err:
            score_span_semantic("q", span, Gateway())
        assert err.value.span_id == "s9"

    def test_sentence_permutation_invariant(self):
        span = make_span("s0", 0, ["a b c", "c d", "e"])
        reverse = make_span("s0", 0, ["e", "c d", "a b c"])
        stub = StubGateway()
        got_a = score_span_semantic("c d e", span, stub).score
        got_b = score_span_semantic("c d e", reverse, stub).score
        assert got_a == got_b
