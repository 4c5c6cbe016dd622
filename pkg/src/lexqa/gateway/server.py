"""Serve a gateway backend over the wire protocol.

Wraps any object exposing `similarity`, `qa`, `token_count`, and `health`
into the HTTP contract: `POST /v1/similarity`, `POST /v1/qa`,
`POST /v1/token_count`, `GET /v1/health`. Malformed bodies answer 400 and
an unavailable backend answers 503, both with an `{"error": ...}` body.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .base import QAResult


class BackendUnavailable(Exception):
    """Raised by a backend whose model is not ready to serve."""


class SimilarityRequest(BaseModel):
    question: str
    candidates: list[str]


class SimilarityResponse(BaseModel):
    scores: list[float]


class QARequest(BaseModel):
    question: str
    context: str


class QAResponse(BaseModel):
    answer_start: int
    answer_end: int
    score: float


class TokenCountRequest(BaseModel):
    text: str


class TokenCountResponse(BaseModel):
    count: int


def create_gateway_app(backend) -> FastAPI:
    app = FastAPI(title="lexqa inference gateway", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors()[:1])})

    @app.exception_handler(BackendUnavailable)
    async def backend_unavailable(request: Request, exc: BackendUnavailable):
        return JSONResponse(status_code=503, content={"error": str(exc) or "model unavailable"})

    @app.post("/v1/similarity", response_model=SimilarityResponse)
    def similarity(req: SimilarityRequest):
        return SimilarityResponse(scores=backend.similarity(req.question, req.candidates))

    @app.post("/v1/qa", response_model=QAResponse)
    def qa(req: QARequest):
        result: QAResult = backend.qa(req.question, req.context)
        return QAResponse(
            answer_start=result.answer_start,
            answer_end=result.answer_end,
            score=result.score,
        )

    @app.post("/v1/token_count", response_model=TokenCountResponse)
    def token_count(req: TokenCountRequest):
        return TokenCountResponse(count=backend.token_count(req.text))

    @app.get("/v1/health")
    def health():
        return backend.health()

    return app
