// Wire types for the lexqa service JSON API.

export interface AnswerSpan {
  start: number;
  end: number;
  text: string;
  confidence: number;
  empty: boolean;
}

export interface ReportEntry {
  rank: number;
  span_id: string;
  span_text: string;
  score: number;
  answer: AnswerSpan;
}

export interface QueryReport {
  question: string;
  doc_id: string;
  doc_title: string;
  scorer_id: string;
  n: number;
  generated_at: string;
  entries: ReportEntry[];
}

export interface DocumentSummary {
  doc_id: string;
  title: string;
  source_uri: string;
  created_at: string;
  sentence_count: number | null;
  span_count: number | null;
}

export type Scorer = "cross" | "tfidf" | "stub";

export interface QueryParams {
  docId: string;
  question: string;
  n: number;
  scorer: Scorer;
}
