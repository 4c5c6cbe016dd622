"""Shared types, errors, and response validation for the inference gateway.

The gateway is the process boundary through which the engine obtains
sentence-similarity scores, extractive-QA answers, and subword token
counts. Scores outside [0, 1] and out-of-bounds answer offsets are
protocol violations and are never silently clamped.
"""

from __future__ import annotations

from dataclasses import dataclass


class GatewayError(Exception):
    """Base class for inference-gateway failures.

    `span_id` identifies the context span being processed when the failure
    surfaced through scoring or extraction; None for bare transport calls.
    """

    def __init__(self, message: str, *, span_id: str | None = None):
        super().__init__(message)
        self.span_id = span_id


class GatewayTimeout(GatewayError):
    """The backend did not answer within the request deadline."""


class GatewayConnectionError(GatewayError):
    """The backend could not be reached."""


class GatewayUnavailable(GatewayError):
    """The backend answered 503: model not ready or unavailable."""


class GatewayProtocolError(GatewayError):
    """The backend's response violates the wire protocol."""


class GatewayAlignmentError(GatewayProtocolError):
    """Similarity response length does not match the candidate list."""


@dataclass(frozen=True)
class QAResult:
    """Answer offsets into the queried context; start == end == 0 encodes no-answer."""

    answer_start: int
    answer_end: int
    score: float

    @property
    def is_no_answer(self) -> bool:
        return self.answer_start == 0 and self.answer_end == 0


def validate_scores(scores: object, n_candidates: int) -> list[float]:
    """Check alignment and range of a similarity response's score list."""
    if not isinstance(scores, list):
        raise GatewayProtocolError(f"scores must be a list, got {type(scores).__name__}")
    if len(scores) != n_candidates:
        raise GatewayAlignmentError(
            f"got {len(scores)} scores for {n_candidates} candidates"
        )
    out = []
    for i, value in enumerate(scores):
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise GatewayProtocolError(f"score {i} is not a number: {value!r}")
        if not 0.0 <= value <= 1.0:
            raise GatewayProtocolError(f"score {i} out of range [0, 1]: {value!r}")
        out.append(float(value))
    return out


def validate_qa(start: object, end: object, score: object, context_len: int) -> QAResult:
    """Check offset bounds and score range of a QA response."""
    if not isinstance(start, int) or not isinstance(end, int) or isinstance(start, bool) or isinstance(end, bool):
        raise GatewayProtocolError(f"answer offsets must be integers: {start!r}, {end!r}")
    if not 0 <= start <= end <= context_len:
        raise GatewayProtocolError(
            f"answer offsets [{start}, {end}) out of bounds for context of length {context_len}"
        )
    if not isinstance(score, (int, float)) or isinstance(score, bool):
        raise GatewayProtocolError(f"QA score is not a number: {score!r}")
    if not 0.0 <= score <= 1.0:
        raise GatewayProtocolError(f"QA score out of range [0, 1]: {score!r}")
    return QAResult(answer_start=start, answer_end=end, score=float(score))
