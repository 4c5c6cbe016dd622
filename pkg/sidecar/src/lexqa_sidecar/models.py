"""Real model loading. Imports are deferred so the protocol layer and its
tests never pull in torch."""

from __future__ import annotations

from .backend import ModelBackend

DEFAULT_SIMILARITY_MODEL = "cross-encoder/stsb-roberta-base"
DEFAULT_QA_MODEL = "deepset/roberta-base-squad2-distilled"


def load_backend(
    similarity_model: str = DEFAULT_SIMILARITY_MODEL,
    qa_model: str = DEFAULT_QA_MODEL,
    device: str = "cpu",
    activation: str = "auto",
) -> ModelBackend:
    """Load the cross-encoder and extractive-QA checkpoints.

    The similarity model is a sentence-pair cross-encoder; STS-style
    checkpoints already emit [0, 1] while reranker heads emit logits, which
    the backend's activation setting normalizes. The QA model's tokenizer
    also serves /v1/token_count.
    """
    from sentence_transformers import CrossEncoder
    from transformers import AutoTokenizer, pipeline

    cross_encoder = CrossEncoder(similarity_model, device=device)
    qa_pipeline = pipeline("question-answering", model=qa_model, device=-1 if device == "cpu" else device)
    tokenizer = AutoTokenizer.from_pretrained(qa_model)

    def count_tokens(text: str) -> int:
        return len(tokenizer.encode(text, add_special_tokens=False))

    def qa_predict(question: str, context: str) -> dict:
        result = qa_pipeline(question=question, context=context)
        return {"start": result["start"], "end": result["end"], "score": result["score"]}

    return ModelBackend(
        similarity_predictor=cross_encoder,
        qa_predictor=lambda question, context: qa_predict(question, context),
        token_counter=count_tokens,
        model_names={"similarity": similarity_model, "qa": qa_model},
        activation=activation,
    )
