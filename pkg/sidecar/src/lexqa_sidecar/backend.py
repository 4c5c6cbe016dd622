"""Adapts model predictors to the gateway wire protocol's semantics.

The backend owns score normalization: whatever the similarity head emits,
the wire carries values in [0, 1]. Offsets returned by the QA predictor
are validated against the context before they leave the process, so a
misbehaving model surfaces as a server error here rather than as a
protocol violation at the engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence


class ModelsNotReady(Exception):
    """The configured models are not loaded; endpoints answer 503."""


@dataclass(frozen=True)
class QAAnswer:
    answer_start: int
    answer_end: int
    score: float


def _sigmoid(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    z = math.exp(x)
    return z / (1.0 + z)


class ModelBackend:
    """Bridges a similarity predictor, a QA predictor, and a token counter.

    similarity_predictor: object with predict(list[(question, candidate)])
    returning one score per pair (sentence-transformers CrossEncoder shape).
    qa_predictor: callable(question=..., context=...) returning a dict with
    integer `start`/`end` character offsets and a float `score`
    (transformers question-answering pipeline shape).
    token_counter: callable(text) -> int subword count.
    activation: 'auto' applies a sigmoid when a response contains any raw
    score outside [0, 1]; 'sigmoid' always maps; 'none' passes through.
    """

    def __init__(
        self,
        similarity_predictor,
        qa_predictor,
        token_counter: Callable[[str], int],
        model_names: dict[str, str],
        activation: str = "auto",
    ):
        if activation not in ("auto", "sigmoid", "none"):
            raise ValueError(f"unknown activation {activation!r}")
        self._similarity = similarity_predictor
        self._qa = qa_predictor
        self._count = token_counter
        self._names = dict(model_names)
        self._activation = activation

    def similarity(self, question: str, candidates: Sequence[str]) -> list[float]:
        if not candidates:
            return []
        raw = self._similarity.predict([(question, c) for c in candidates])
        scores = [float(s) for s in raw]
        if len(scores) != len(candidates):
            raise RuntimeError(
                f"predictor returned {len(scores)} scores for {len(candidates)} pairs"
            )
        if self._activation == "sigmoid" or (
            self._activation == "auto" and any(not 0.0 <= s <= 1.0 for s in scores)
        ):
            scores = [_sigmoid(s) for s in scores]
        # Guard float round-off from the model head only.
        return [min(1.0, max(0.0, s)) for s in scores]

    def qa(self, question: str, context: str) -> QAAnswer:
        if not context.strip():
            return QAAnswer(0, 0, 0.0)
        result = self._qa(question=question, context=context)
        start, end = int(result["start"]), int(result["end"])
        score = min(1.0, max(0.0, float(result["score"])))
        if start == end:
            # Zero-length predictions (squad2 no-answer) use the reserved encoding.
            return QAAnswer(0, 0, score)
        if not 0 <= start < end <= len(context):
            raise RuntimeError(
                f"QA model produced offsets [{start}, {end}) outside context length {len(context)}"
            )
        return QAAnswer(start, end, score)

    def token_count(self, text: str) -> int:
        return int(self._count(text))

    def health(self) -> dict:
        return {"status": "ok", "models": dict(self._names)}
