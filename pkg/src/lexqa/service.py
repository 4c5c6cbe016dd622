"""HTTP service: document management plus question answering.

Endpoints (JSON bodies):
  POST /v1/documents            {title, text} -> 201 {"doc_id": ...}
  GET  /v1/documents            -> list of document summaries
  GET  /v1/documents/{id}/spans?max_tokens=512
  POST /v1/documents/{id}/query {question, n, scorer} -> QueryReport
  GET  /v1/health

Errors answer {"error": ...}: 400 malformed input, 404 unknown document,
503 gateway failure.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .chunker import span_to_dict
from .engine import SCORERS
from .gateway.base import GatewayError
from .report import report_to_dict
from .store import DocumentNotFound, DocumentStore


class UploadRequest(BaseModel):
    title: str
    text: str


class QueryRequest(BaseModel):
    question: str
    n: int | None = None
    scorer: str | None = None


def create_service_app(store: DocumentStore, *, default_scorer: str | None = None) -> FastAPI:
    engine = store.engine
    if default_scorer is None:
        default_scorer = "cross" if engine.gateway is not None else "tfidf"
    if default_scorer not in SCORERS:
        raise ValueError(f"unknown scorer {default_scorer!r}")

    app = FastAPI(title="lexqa service", docs_url=None, redoc_url=None)
    # The web console is served from a different origin.
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors()[:1])})

    @app.exception_handler(ValueError)
    async def bad_value(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(DocumentNotFound)
    async def not_found(request: Request, exc: DocumentNotFound):
        return JSONResponse(status_code=404, content={"error": str(exc)})

    @app.exception_handler(GatewayError)
    async def gateway_failed(request: Request, exc: GatewayError):
        return JSONResponse(status_code=503, content={"error": str(exc)})

    @app.post("/v1/documents", status_code=201)
    def upload_document(req: UploadRequest):
        doc_id = store.upload(req.title, req.text)
        return {"doc_id": doc_id}

    @app.get("/v1/documents")
    def list_documents():
        return store.list_documents()

    @app.get("/v1/documents/{doc_id}/spans")
    def document_spans(doc_id: str, max_tokens: int = Query(default=None, ge=1)):
        spans = store.spans_for(doc_id, max_tokens)
        payload = []
        for span in spans:
            data = span_to_dict(span)
            del data["sentence_texts"]
            payload.append(data)
        return {
            "doc_id": doc_id,
            "max_span_tokens": max_tokens or engine.max_span_tokens,
            "count": len(payload),
            "spans": payload,
        }

    @app.post("/v1/documents/{doc_id}/query")
    def query(doc_id: str, req: QueryRequest):
        prepared = store.get_prepared(doc_id)
        report = engine.answer(
            prepared,
            req.question,
            n=req.n,
            scorer=req.scorer or default_scorer,
        )
        return report_to_dict(report)

    @app.get("/v1/health")
    def health():
        return {
            "status": "ok",
            "documents": len(store.list_documents()),
            "default_n": engine.default_n,
            "default_scorer": default_scorer,
            "max_span_tokens": engine.max_span_tokens,
            "gateway_configured": engine.gateway is not None,
        }

    return app
