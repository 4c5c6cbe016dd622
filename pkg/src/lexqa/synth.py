"""Deterministic synthetic legal-flavored corpora.

Used by the test suite and benchmarks: documents of configurable size
whose sentences each carry a unique marker token, so a question quoting a
sentence verbatim matches exactly one sentence anywhere in the document.
"""

from __future__ import annotations

import random
from typing import Sequence

from .chunker import ContextSpan
from .evaluation import GoldEntry
from .ingestion import NormalizedDocument

_SUBJECTS = (
    "the controller",
    "the processor",
    "the supervisory authority",
    "the data subject",
    "the trader",
    "the consumer",
    "the member state",
    "the notified body",
)

_VERBS = (
    "shall notify",
    "shall document",
    "shall assess",
    "shall communicate",
    "may request",
    "shall provide",
    "shall restrict",
    "shall verify",
)

_OBJECTS = (
    "the personal data breach",
    "the processing activity",
    "the contractual conformity",
    "the retention period",
    "the security measures",
    "the digital content",
    "the risk assessment",
    "the transfer mechanism",
)

_TAILS = (
    "without undue delay",
    "within seventy two hours",
    "in a transparent manner",
    "subject to proportionality",
    "under documented instructions",
    "for the performance of the contract",
    "in accordance with national law",
    "unless an exemption applies",
)


def synthetic_sentence(rng: random.Random, marker: str) -> str:
    words = [
        rng.choice(_SUBJECTS),
        rng.choice(_VERBS),
        rng.choice(_OBJECTS),
        f"regarding {marker}",
        rng.choice(_TAILS),
    ]
    sentence = " ".join(words) + "."
    return sentence[0].upper() + sentence[1:]


def synthetic_document(
    n_sentences: int = 620,
    seed: int = 7,
    sentences_per_paragraph: tuple[int, int] = (3, 8),
) -> str:
    """A plain-text document of exactly `n_sentences` sentences.

    Every sentence embeds a unique `clauseNNNN` marker so no two sentences
    share a token set.
    """
    rng = random.Random(seed)
    paragraphs: list[str] = []
    produced = 0
    while produced < n_sentences:
        size = min(rng.randint(*sentences_per_paragraph), n_sentences - produced)
        sentences = [
            synthetic_sentence(rng, f"clause{produced + i:04d}") for i in range(size)
        ]
        paragraphs.append(" ".join(sentences))
        produced += size
    return "\n\n".join(paragraphs) + "\n"


def _covers_whole_sentences(span: ContextSpan, doc: NormalizedDocument) -> bool:
    if span.sentence_start >= span.sentence_end:
        return False
    first = doc.sentences[span.sentence_start]
    last = doc.sentences[span.sentence_end - 1]
    return span.char_start == first.char_start and span.char_end == last.char_end


def synthetic_gold(
    doc: NormalizedDocument,
    spans: Sequence[ContextSpan],
    n_questions: int = 10,
    seed: int = 11,
) -> list[GoldEntry]:
    """Gold entries whose questions quote a unique span sentence verbatim.

    With the lexical-overlap stub backends, each question retrieves its own
    span at rank 1 and the extractor returns the quoted sentence exactly.
    """
    candidates = [s for s in spans if _covers_whole_sentences(s, doc)]
    if len(candidates) < n_questions:
        raise ValueError(
            f"only {len(candidates)} whole-sentence spans for {n_questions} questions"
        )
    rng = random.Random(seed)
    chosen = rng.sample(candidates, n_questions)
    chosen.sort(key=lambda s: s.ordinal)
    entries = []
    for span in chosen:
        sentence = rng.choice(span.sentence_texts)
        entries.append(
            GoldEntry(
                question=sentence,
                doc_id=span.doc_id,
                gold_span_ids=(span.span_id,),
                gold_answers=(sentence,),
            )
        )
    return entries
