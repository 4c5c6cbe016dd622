"""Normalization, sentence splitting, and token counting."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexqa.ingestion import (
    AbbreviationRuleset,
    RawDocument,
    build_normalized_document,
    count_tokens,
    default_ruleset,
    load_ruleset,
    make_token_counter,
    normalize_text,
    split_sentences,
    word_count,
    word_tokens,
)

RULES = AbbreviationRuleset("test", ("Art.", "No.", "e.g."))


class TestNormalizeText:
    def test_art_becomes_art(self):
        assert normalize_text("Art. 33 GDPR", RULES) == "Art 33 GDPR"

    def test_empty_input(self):
        assert normalize_text("", RULES) == ""

    def test_multiple_rules_final_number_untouched(self):
        # "4." is not a listed abbreviation, so its period stays.
        got = normalize_text("See No. 5, e.g. Art. 4.", RULES)
        assert got == "See No 5, e.g Art 4."

    def test_whole_token_matching(self):
        rules = AbbreviationRuleset("t", ("art.",))
        assert normalize_text("Part. 5", rules) == "Part. 5"
        assert normalize_text("art. 5", rules) == "art 5"

    def test_case_sensitive(self):
        assert normalize_text("art. 33", RULES) == "art. 33"

    def test_matches_inside_brackets(self):
        assert normalize_text("(Art. 5)", RULES) == "(Art 5)"

    def test_not_matched_when_glued_to_word(self):
        assert normalize_text("Art.5", RULES) == "Art.5"

    def test_multi_dot_abbreviation_needs_own_boundary(self):
        # "b." inside "a.b." is not a whole token.
        rules = AbbreviationRuleset("t", ("b.",))
        assert normalize_text("a.b. x", rules) == "a.b. x"

    def test_at_end_of_text(self):
        assert normalize_text("per Art.", RULES) == "per Art"

    @given(st.text(max_size=200))
    def test_idempotent_on_arbitrary_text(self, text):
        ruleset = default_ruleset()
        once = normalize_text(text, ruleset)
        assert normalize_text(once, ruleset) == once

    @given(
        st.lists(
            st.sampled_from(
                ["Art.", "No.", "Nos.", "e.g.", "4.", "data", "breach.", "(Art.",
                 "Art.)", "x", ".", "..", "i.e.", "etc.", "No"]
            ),
            max_size=30,
        )
    )
    def test_idempotent_on_legal_shaped_text(self, words):
        text = " ".join(words)
        once = normalize_text(text, RULES)
        assert normalize_text(once, RULES) == once


class TestSplitSentences:
    def test_single_sentence(self):
        sentences = split_sentences("Hello.")
        assert len(sentences) == 1
        assert sentences[0].index == 0
        assert sentences[0].text == "Hello."
        assert (sentences[0].char_start, sentences[0].char_end) == (0, 6)

    def test_two_sentences(self):
        text = "The controller shall notify. The processor shall assist."
        got = [s.text for s in split_sentences(text)]
        assert got == [
            "The controller shall notify.",
            "The processor shall assist.",
        ]

    def test_normalization_prevents_oversplit(self):
        normalized = "Art 33 applies without undue delay. Art 34 applies to the data subject."
        raw = "Art. 33 applies without undue delay. Art. 34 applies to the data subject."
        assert len(split_sentences(normalized)) == 2
        assert len(split_sentences(raw)) == 4

    def test_whitespace_only(self):
        assert split_sentences("   \n\t  ") == []
        assert split_sentences("") == []

    def test_paragraph_break_without_terminator(self):
        got = [s.text for s in split_sentences("first block\n\nsecond block")]
        assert got == ["first block", "second block"]

    def test_semicolon_and_question_terminators(self):
        got = [s.text for s in split_sentences("Is it due? It is; see below!")]
        assert got == ["Is it due?", "It is;", "see below!"]

    def test_decimal_number_not_split(self):
        got = [s.text for s in split_sentences("The rate is 3.5 percent. Next.")]
        assert got == ["The rate is 3.5 percent.", "Next."]

    def test_terminator_run_stays_in_sentence(self):
        got = [s.text for s in split_sentences("Wait... Done.")]
        assert got == ["Wait...", "Done."]

    @given(st.text(max_size=300))
    @settings(max_examples=200)
    def test_offsets_order_and_coverage(self, text):
        sentences = split_sentences(text)
        last_end = -1
        for i, s in enumerate(sentences):
            assert s.index == i
            assert s.char_start < s.char_end
            assert s.char_start >= last_end
            last_end = s.char_end
            assert text[s.char_start : s.char_end] == s.text
            assert s.text == s.text.strip()
        joined = "".join(s.text for s in sentences)
        assert _drop_ws(joined) == _drop_ws(text)


def _drop_ws(text: str) -> str:
    return "".join(ch for ch in text if not ch.isspace())


class TestCountTokens:
    def test_empty(self):
        assert count_tokens("") == 0

    def test_three_words(self):
        assert count_tokens("personal data breach") == 3

    def test_punctuation_glued(self):
        assert count_tokens("Art 33(1)") == 2

    @given(st.text(alphabet=st.characters(max_codepoint=0x2FF), max_size=80), st.text(alphabet=st.characters(max_codepoint=0x2FF), max_size=80))
    def test_concatenation_additive(self, a, b):
        assert word_count(f"{a} {b}") == word_count(a) + word_count(b)

    def test_gateway_mode(self):
        class Gateway:
            def token_count(self, text):
                return 2 * len(text.split())

        assert count_tokens("a b", mode="gateway", gateway=Gateway()) == 4
        counter = make_token_counter("gateway", Gateway())
        assert counter("a b c") == 6

    def test_gateway_mode_requires_gateway(self):
        with pytest.raises(ValueError):
            count_tokens("x", mode="gateway")
        with pytest.raises(ValueError):
            make_token_counter("gateway")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            count_tokens("x", mode="bytes")


class TestRulesets:
    def test_load_ruleset(self, tmp_path):
        rules_file = tmp_path / "abbr.txt"
        rules_file.write_text("# comment\nArt.\n\nNo.\nbare\n", encoding="utf-8")
        ruleset = load_ruleset(rules_file)
        assert ruleset.abbreviations == ("Art.", "No.")
        assert ruleset.ruleset_id.startswith("abbr-")

    def test_default_ruleset(self):
        ruleset = default_ruleset()
        assert "Art." in ruleset.abbreviations
        assert "e.g." in ruleset.abbreviations
        assert ruleset.ruleset_id == "legal-default-v1"


class TestDocumentBuild:
    def test_build_normalized_document(self):
        raw = RawDocument("d1", "t", "file:x", "Art. 1 applies. Art. 2 does not.")
        doc = build_normalized_document(raw, RULES)
        assert doc.doc_id == "d1"
        assert doc.abbreviation_ruleset_id == "test"
        assert doc.normalized_text == "Art 1 applies. Art 2 does not."
        assert [s.text for s in doc.sentences] == ["Art 1 applies.", "Art 2 does not."]
        for s in doc.sentences:
            assert doc.normalized_text[s.char_start : s.char_end] == s.text

    def test_empty_document_rejected(self):
        with pytest.raises(ValueError):
            RawDocument("d1", "t", "", "   ")


class TestWordTokens:
    def test_lowercase_and_punctuation(self):
        assert word_tokens("The Data-Breach, notified!") == ["the", "data", "breach", "notified"]

    def test_numbers_kept(self):
        assert word_tokens("Art 33(1)") == ["art", "33", "1"]

    def test_random_doc_roundtrip(self):
        rng = random.Random(5)
        from conftest import random_document

        text = random_document(rng)
        assert all(t == t.lower() for t in word_tokens(text))
