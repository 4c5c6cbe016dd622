"""The wire protocol served over HTTP.

POST /v1/similarity   {"question", "candidates"} -> {"scores"}
POST /v1/qa           {"question", "context"}    -> {"answer_start", "answer_end", "score"}
POST /v1/token_count  {"text"}                   -> {"count"}
GET  /v1/health                                  -> {"status", "models"}

Malformed bodies answer 400, unready models answer 503, both with an
{"error": ...} body.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .backend import ModelBackend, ModelsNotReady


class SimilarityRequest(BaseModel):
    question: str
    candidates: list[str]


class QARequest(BaseModel):
    question: str
    context: str


class TokenCountRequest(BaseModel):
    text: str


def create_app(backend: ModelBackend) -> FastAPI:
    app = FastAPI(title="lexqa inference sidecar", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors()[:1])})

    @app.exception_handler(ModelsNotReady)
    async def models_not_ready(request: Request, exc: ModelsNotReady):
        return JSONResponse(status_code=503, content={"error": str(exc) or "model unavailable"})

    @app.post("/v1/similarity")
    def similarity(req: SimilarityRequest):
        return {"scores": backend.similarity(req.question, req.candidates)}

    @app.post("/v1/qa")
    def qa(req: QARequest):
        answer = backend.qa(req.question, req.context)
        return {
            "answer_start": answer.answer_start,
            "answer_end": answer.answer_end,
            "score": answer.score,
        }

    @app.post("/v1/token_count")
    def token_count(req: TokenCountRequest):
        return {"count": backend.token_count(req.text)}

    @app.get("/v1/health")
    def health():
        return backend.health()

    return app
