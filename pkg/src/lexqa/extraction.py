"""Demarcate the likely answer inside a context span via the gateway's QA endpoint."""

from __future__ import annotations

from dataclasses import dataclass

from .chunker import ContextSpan
from .gateway.base import GatewayError, GatewayProtocolError, validate_qa


@dataclass(frozen=True)
class ExtractedAnswer:
    """Character-offset answer inside a span's text.

    An empty answer (the model found nothing) carries zero offsets, empty
    text, and the empty flag; it is rendered without a highlight.
    """

    span_id: str
    char_start: int
    char_end: int
    answer_text: str
    confidence: float
    empty: bool


def no_answer(span_id: str, confidence: float = 0.0) -> ExtractedAnswer:
    return ExtractedAnswer(
        span_id=span_id,
        char_start=0,
        char_end=0,
        answer_text="",
        confidence=confidence,
        empty=True,
    )


def extract_answer(question: str, span: ContextSpan, gateway) -> ExtractedAnswer:
    """Ask the gateway for an answer inside span.text and validate it.

    Out-of-bounds offsets from the gateway are a protocol violation, never
    clamped. Each span is queried independently of every other span.
    """
    try:
        result = gateway.qa(question, span.text)
    except GatewayError as err:
        err.span_id = span.span_id
        raise
    try:
        checked = validate_qa(
            result.answer_start, result.answer_end, result.score, len(span.text)
        )
        if checked.is_no_answer:
            return no_answer(span.span_id, confidence=checked.score)
        if checked.answer_start == checked.answer_end:
            raise GatewayProtocolError(
                f"zero-length answer at offset {checked.answer_start}"
            )
    except GatewayError as err:
        err.span_id = span.span_id
        raise
    return ExtractedAnswer(
        span_id=span.span_id,
        char_start=checked.answer_start,
        char_end=checked.answer_end,
        answer_text=span.text[checked.answer_start : checked.answer_end],
        confidence=checked.score,
        empty=False,
    )
