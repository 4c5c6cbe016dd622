// Rendering of ranked spans with highlighted answers.
//
// The console does no scoring or extraction of its own: the highlight is
// cut strictly at the character offsets reported by the service, so the
// marked substring always equals span_text.slice(answer.start, answer.end).

import type { AnswerSpan, ReportEntry } from "./types.js";

export interface Segment {
  text: string;
  highlighted: boolean;
}

export function segmentSpan(spanText: string, answer: AnswerSpan): Segment[] {
  if (answer.empty || answer.start >= answer.end) {
    return [{ text: spanText, highlighted: false }];
  }
  const segments: Segment[] = [];
  if (answer.start > 0) {
    segments.push({ text: spanText.slice(0, answer.start), highlighted: false });
  }
  segments.push({
    text: spanText.slice(answer.start, answer.end),
    highlighted: true,
  });
  if (answer.end < spanText.length) {
    segments.push({ text: spanText.slice(answer.end), highlighted: false });
  }
  return segments;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

export function spanHtml(spanText: string, answer: AnswerSpan): string {
  return segmentSpan(spanText, answer)
    .map((segment) =>
      segment.highlighted
        ? `<mark>${escapeHtml(segment.text)}</mark>`
        : escapeHtml(segment.text),
    )
    .join("");
}

export function entryHtml(entry: ReportEntry): string {
  const badge = entry.answer.empty
    ? `<span class="badge badge-muted">no answer</span>`
    : `<span class="badge">confidence ${entry.answer.confidence.toFixed(2)}</span>`;
  return [
    `<article class="entry">`,
    `<header class="entry-meta">`,
    `<span class="rank">#${entry.rank}</span>`,
    `<span class="score">score ${entry.score.toFixed(2)}</span>`,
    badge,
    `</header>`,
    `<p class="span-text">${spanHtml(entry.span_text, entry.answer)}</p>`,
    `</article>`,
  ].join("");
}
