"""Deterministic fake predictors and access to the shared protocol fixtures."""

from __future__ import annotations

import re
import sys
from pathlib import Path

# The golden-fixture protocol suite lives with the engine's test assets;
# both servers must pass the same cases.
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "tests"))

from lexqa_sidecar.backend import ModelBackend  # noqa: E402

_WORD = re.compile(r"\w+")


def _words(text: str) -> set[str]:
    return set(_WORD.findall(text.lower()))


class FakeCrossEncoder:
    """Overlap ratio against the question's vocabulary; always in [0, 1]."""

    def predict(self, pairs):
        scores = []
        for question, candidate in pairs:
            q, c = _words(question), _words(candidate)
            scores.append(len(q & c) / len(q | c) if q and c else 0.0)
        return scores


class FakeLogitCrossEncoder:
    """Emits raw logits in roughly [-2, 2] to exercise normalization."""

    def predict(self, pairs):
        scores = []
        for question, candidate in pairs:
            q, c = _words(question), _words(candidate)
            overlap = len(q & c) / len(q | c) if q and c else 0.0
            scores.append(4.0 * overlap - 2.0)
        return scores


def fake_qa_pipeline(question: str, context: str) -> dict:
    """First context word shared with the question, as character offsets."""
    wanted = _words(question)
    for match in _WORD.finditer(context):
        if match.group().lower() in wanted:
            return {"start": match.start(), "end": match.end(), "score": 0.75}
    return {"start": 0, "end": 0, "score": 0.05}


def fake_token_counter(text: str) -> int:
    return len(re.findall(r"\w+|[^\w\s]", text))


def make_backend(similarity=None, qa=None, activation="auto") -> ModelBackend:
    return ModelBackend(
        similarity_predictor=similarity or FakeCrossEncoder(),
        qa_predictor=qa or fake_qa_pipeline,
        token_counter=fake_token_counter,
        model_names={"similarity": "fake-cross-encoder", "qa": "fake-qa"},
        activation=activation,
    )
