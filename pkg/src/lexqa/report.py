"""Assemble and render query reports.

A report carries the ranked spans with their highlighted answers and
confidence values. Renderers: canonical JSON (machine, lossless
round-trip), Markdown and HTML (human review; answers marked with `**`
and `<mark>` respectively, confidence printed with two decimals).
"""

from __future__ import annotations

import html
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Sequence

from .extraction import ExtractedAnswer
from .ranking import RankedSpan

FORMATS = ("json", "markdown", "html")


@dataclass(frozen=True)
class ReportEntry:
    rank: int
    span_id: str
    span_text: str
    score: float
    answer: ExtractedAnswer


@dataclass(frozen=True)
class QueryReport:
    question: str
    doc_id: str
    doc_title: str
    scorer_id: str
    n: int
    generated_at: str
    entries: tuple[ReportEntry, ...]


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def assemble_report(
    question: str,
    ranked: Sequence[RankedSpan],
    answers: Sequence[ExtractedAnswer],
    *,
    doc_id: str,
    doc_title: str,
    scorer_id: str,
    n: int,
    generated_at: str | None = None,
) -> QueryReport:
    """Join ranked spans with their answers by span_id, preserving rank order."""
    if len(ranked) != len(answers):
        raise ValueError(f"{len(ranked)} ranked spans but {len(answers)} answers")
    by_span = {answer.span_id: answer for answer in answers}
    if len(by_span) != len(answers):
        raise ValueError("more than one answer for the same span")
    entries = []
    for rs in ranked:
        answer = by_span.get(rs.span_id)
        if answer is None:
            raise ValueError(f"no answer for span {rs.span_id}")
        entries.append(
            ReportEntry(
                rank=rs.rank,
                span_id=rs.span_id,
                span_text=rs.span.text,
                score=rs.score,
                answer=answer,
            )
        )
    return QueryReport(
        question=question,
        doc_id=doc_id,
        doc_title=doc_title,
        scorer_id=scorer_id,
        n=n,
        generated_at=generated_at or utc_timestamp(),
        entries=tuple(entries),
    )


def report_to_dict(report: QueryReport) -> dict:
    return {
        "question": report.question,
        "doc_id": report.doc_id,
        "doc_title": report.doc_title,
        "scorer_id": report.scorer_id,
        "n": report.n,
        "generated_at": report.generated_at,
        "entries": [
            {
                "rank": e.rank,
                "span_id": e.span_id,
                "span_text": e.span_text,
                "score": e.score,
                "answer": {
                    "start": e.answer.char_start,
                    "end": e.answer.char_end,
                    "text": e.answer.answer_text,
                    "confidence": e.answer.confidence,
                    "empty": e.answer.empty,
                },
            }
            for e in report.entries
        ],
    }


def report_from_dict(data: dict) -> QueryReport:
    entries = []
    for e in data["entries"]:
        a = e["answer"]
        entries.append(
            ReportEntry(
                rank=e["rank"],
                span_id=e["span_id"],
                span_text=e["span_text"],
                score=e["score"],
                answer=ExtractedAnswer(
                    span_id=e["span_id"],
                    char_start=a["start"],
                    char_end=a["end"],
                    answer_text=a["text"],
                    confidence=a["confidence"],
                    empty=a["empty"],
                ),
            )
        )
    return QueryReport(
        question=data["question"],
        doc_id=data["doc_id"],
        doc_title=data["doc_title"],
        scorer_id=data["scorer_id"],
        n=data["n"],
        generated_at=data["generated_at"],
        entries=tuple(entries),
    )


def report_from_json(payload: bytes | str) -> QueryReport:
    if isinstance(payload, bytes):
        payload = payload.decode("utf-8")
    return report_from_dict(json.loads(payload))


def render(report: QueryReport, format: str = "json") -> bytes:
    if format == "json":
        return render_json(report)
    if format in ("markdown", "md"):
        return render_markdown(report).encode("utf-8")
    if format == "html":
        return render_html(report).encode("utf-8")
    raise ValueError(f"unknown report format: {format!r}")


def render_json(report: QueryReport) -> bytes:
    return json.dumps(report_to_dict(report), ensure_ascii=False, indent=2).encode("utf-8")


def render_markdown(report: QueryReport) -> str:
    lines = [
        f"# Answers: {report.question}",
        "",
        f"Document: {report.doc_title} ({report.doc_id})",
        f"Scorer: {report.scorer_id} | top-{report.n} | generated {report.generated_at}",
        "",
    ]
    if not report.entries:
        lines += ["No relevant context spans found.", ""]
    for e in report.entries:
        lines.append(f"## Rank {e.rank} (score: {e.score:.2f})")
        lines.append("")
        if e.answer.empty:
            lines.append(e.span_text)
        else:
            before = e.span_text[: e.answer.char_start]
            after = e.span_text[e.answer.char_end :]
            marked = f"**{e.answer.answer_text}** (confidence: {e.answer.confidence:.2f})"
            lines.append(before + marked + after)
        lines.append("")
    return "\n".join(lines)


def render_html(report: QueryReport) -> str:
    parts = [
        "<!DOCTYPE html>",
        '<html><head><meta charset="utf-8">',
        f"<title>{html.escape(report.question)}</title>",
        "<style>",
        "body{font-family:sans-serif;max-width:52rem;margin:2rem auto;padding:0 1rem}",
        "mark{background:#b5f2b5}",
        ".entry{border:1px solid #ddd;border-radius:6px;padding:1rem;margin:1rem 0}",
        ".meta{color:#555;font-size:0.9rem}",
        "</style></head><body>",
        f"<h1>{html.escape(report.question)}</h1>",
        f'<p class="meta">Document: {html.escape(report.doc_title)} ({html.escape(report.doc_id)})'
        f" | scorer: {html.escape(report.scorer_id)} | top-{report.n}"
        f" | generated {html.escape(report.generated_at)}</p>",
    ]
    if not report.entries:
        parts.append("<p>No relevant context spans found.</p>")
    for e in report.entries:
        parts.append('<div class="entry">')
        badge = "no answer" if e.answer.empty else f"confidence {e.answer.confidence:.2f}"
        parts.append(
            f'<p class="meta">Rank {e.rank} | score {e.score:.2f} | {html.escape(badge)}</p>'
        )
        parts.append(f'<p class="span-text">{_highlight_html(e)}</p>')
        parts.append("</div>")
    parts.append("</body></html>")
    return "\n".join(parts)


def _highlight_html(entry: ReportEntry) -> str:
    """Escaped span text with the answer wrapped in <mark>; no highlight when empty."""
    if entry.answer.empty:
        return html.escape(entry.span_text)
    before = entry.span_text[: entry.answer.char_start]
    answer = entry.span_text[entry.answer.char_start : entry.answer.char_end]
    after = entry.span_text[entry.answer.char_end :]
    return f"{html.escape(before)}<mark>{html.escape(answer)}</mark>{html.escape(after)}"
