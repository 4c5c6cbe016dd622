"""Text preprocessing for legal documents.

Loads plain-text documents, strips terminal periods from known
abbreviations ("Art." becomes "Art") so that sentence splitting does not
break on them, splits the normalized text into offset-tracked sentences,
and counts tokens either by whitespace heuristic or by delegating to a
model gateway's tokenizer.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

DEFAULT_RULESET_ID = "legal-default-v1"

# Sentence terminators; paragraph breaks (blank lines) also end a sentence.
SENTENCE_TERMINATORS = frozenset(".?!;")

WORD_COUNTER = "word"
GATEWAY_COUNTER = "gateway"

_WS_RUN = re.compile(r"\s+")
_WORD_TOKEN = re.compile(r"\w+")


@dataclass(frozen=True)
class AbbreviationRuleset:
    """Abbreviation tokens (each ending in '.') plus a stable identifier."""

    ruleset_id: str
    abbreviations: tuple[str, ...]


@dataclass(frozen=True)
class RawDocument:
    doc_id: str
    title: str
    source_uri: str
    raw_text: str

    def __post_init__(self) -> None:
        if not self.raw_text.strip():
            raise ValueError(f"document {self.doc_id!r} has no text")


@dataclass(frozen=True)
class Sentence:
    """A sentence of the normalized text; text == normalized_text[char_start:char_end]."""

    index: int
    char_start: int
    char_end: int
    text: str


@dataclass(frozen=True)
class NormalizedDocument:
    doc_id: str
    normalized_text: str
    sentences: tuple[Sentence, ...]
    abbreviation_ruleset_id: str


def load_ruleset(path: str | Path, ruleset_id: str | None = None) -> AbbreviationRuleset:
    """Parse an abbreviation rule file: one abbreviation per line, '#' comments.

    Entries that do not end with a period carry no terminal period to strip
    and are ignored.
    """
    entries = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.endswith("."):
            entries.append(line)
    if ruleset_id is None:
        digest = hashlib.sha256("\n".join(entries).encode("utf-8")).hexdigest()[:8]
        ruleset_id = f"{Path(path).stem}-{digest}"
    return AbbreviationRuleset(ruleset_id=ruleset_id, abbreviations=tuple(entries))


def default_ruleset() -> AbbreviationRuleset:
    """The legal-domain abbreviation ruleset shipped with the package."""
    ref = resources.files("lexqa.data").joinpath("legal_abbreviations.txt")
    with resources.as_file(ref) as path:
        ruleset = load_ruleset(path, ruleset_id=DEFAULT_RULESET_ID)
    return ruleset


def _abbreviation_pattern(abbreviations: tuple[str, ...]) -> re.Pattern[str] | None:
    if not abbreviations:
        return None
    # Longest-first so overlapping entries ("e.g." vs "g.") resolve deterministically.
    alts = sorted(set(abbreviations), key=len, reverse=True)
    body = "|".join(re.escape(a) for a in alts)
    # Whole-token match: not glued to a word character or another period on
    # either side, so "Part." never matches rule "art." and "a.b." never
    # matches rule "b.".
    return re.compile(rf"(?<![\w.])(?:{body})(?![\w.])")


def normalize_text(raw: str, rules: AbbreviationRuleset) -> str:
    """Strip the terminal period from every whole-token abbreviation occurrence.

    All other text is unchanged; applying the function twice equals applying
    it once.
    """
    pattern = _abbreviation_pattern(rules.abbreviations)
    if pattern is None or not raw:
        return raw
    return pattern.sub(lambda m: m.group(0)[:-1], raw)


def split_sentences(normalized: str) -> list[Sentence]:
    """Split normalized text into sentences with exact character offsets.

    A sentence ends after a run of terminator characters ('.', '?', '!', ';')
    followed by whitespace or end of text, or at a paragraph break (a
    whitespace run containing at least two newlines). Sentence offsets are
    trimmed so texts carry no leading or trailing whitespace.
    """
    sentences: list[Sentence] = []
    for block_start, block_end in _paragraph_blocks(normalized):
        for seg_start, seg_end in _segment_block(normalized, block_start, block_end):
            start, end = _trim(normalized, seg_start, seg_end)
            if start < end:
                sentences.append(
                    Sentence(
                        index=len(sentences),
                        char_start=start,
                        char_end=end,
                        text=normalized[start:end],
                    )
                )
    return sentences


def _paragraph_blocks(text: str) -> list[tuple[int, int]]:
    """Maximal stretches of text between blank-line separators."""
    blocks = []
    pos = 0
    for match in _WS_RUN.finditer(text):
        if match.group().count("\n") >= 2:
            if pos < match.start():
                blocks.append((pos, match.start()))
            pos = match.end()
    if pos < len(text):
        blocks.append((pos, len(text)))
    return blocks


def _segment_block(text: str, start: int, end: int) -> list[tuple[int, int]]:
    """Cut one paragraph block at terminator runs followed by whitespace."""
    segments = []
    seg_start = start
    i = start
    while i < end:
        if text[i] in SENTENCE_TERMINATORS:
            j = i + 1
            while j < end and text[j] in SENTENCE_TERMINATORS:
                j += 1
            if j >= end or text[j].isspace():
                segments.append((seg_start, j))
                seg_start = j
            i = j
        else:
            i += 1
    if seg_start < end:
        segments.append((seg_start, end))
    return segments


def _trim(text: str, start: int, end: int) -> tuple[int, int]:
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    return start, end


def build_normalized_document(raw: RawDocument, rules: AbbreviationRuleset) -> NormalizedDocument:
    """Normalize a raw document and split it into sentences."""
    normalized = normalize_text(raw.raw_text, rules)
    return NormalizedDocument(
        doc_id=raw.doc_id,
        normalized_text=normalized,
        sentences=tuple(split_sentences(normalized)),
        abbreviation_ruleset_id=rules.ruleset_id,
    )


def word_count(text: str) -> int:
    """Number of maximal whitespace-delimited tokens."""
    return len(text.split())


def count_tokens(text: str, mode: str = WORD_COUNTER, gateway=None) -> int:
    """Count tokens in `word` mode (whitespace heuristic) or `gateway` mode
    (subword count reported by the model gateway)."""
    if mode == WORD_COUNTER:
        return word_count(text)
    if mode == GATEWAY_COUNTER:
        if gateway is None:
            raise ValueError("gateway token counting requires a configured gateway")
        return gateway.token_count(text)
    raise ValueError(f"unknown token counter mode: {mode!r}")


def make_token_counter(mode: str = WORD_COUNTER, gateway=None):
    """A `text -> int` callable for the given counter mode."""
    if mode == GATEWAY_COUNTER and gateway is None:
        raise ValueError("gateway token counting requires a configured gateway")
    return lambda text: count_tokens(text, mode=mode, gateway=gateway)


def word_tokens(text: str) -> list[str]:
    """Lowercased word tokens with punctuation stripped.

    Shared by the TF-IDF scorer and the lexical-overlap stubs so both sides
    agree on vocabulary.
    """
    return _WORD_TOKEN.findall(text.lower())
