"""Order scored spans and keep the top N."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chunker import ContextSpan
from .scoring import RelevanceScore


@dataclass(frozen=True)
class RankedSpan:
    rank: int
    span_id: str
    score: float
    span: ContextSpan


def rank_spans(
    scores: Sequence[RelevanceScore],
    spans: Sequence[ContextSpan],
    n: int,
) -> list[RankedSpan]:
    """The min(n, len(scores)) best spans, scores descending.

    Ties break by span ordinal ascending (document order), which makes the
    ranking deterministic and independent of input order, and makes
    rank_spans(s, n) a prefix of rank_spans(s, n + 1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    by_id = {span.span_id: span for span in spans}
    if len(by_id) != len(spans):
        raise ValueError("duplicate span ids")
    missing = [rs.span_id for rs in scores if rs.span_id not in by_id]
    if missing:
        raise ValueError(f"scores reference unknown spans: {missing[:3]}")
    if len(scores) != len({rs.span_id for rs in scores}):
        raise ValueError("more than one score for the same span")

    ordered = sorted(scores, key=lambda rs: (-rs.score, by_id[rs.span_id].ordinal))
    return [
        RankedSpan(rank=i + 1, span_id=rs.span_id, score=rs.score, span=by_id[rs.span_id])
        for i, rs in enumerate(ordered[:n])
    ]
