// Thin fetch client for the lexqa service; at most one in-flight query.

import type { DocumentSummary, QueryParams, QueryReport } from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ApiClient {
  private inflight: AbortController | null = null;

  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  async listDocuments(): Promise<DocumentSummary[]> {
    const response = await this.fetchFn(`${this.baseUrl}/v1/documents`);
    return readJson(response);
  }

  /** Submit a question; a newer submission cancels the previous one. */
  async query(params: QueryParams): Promise<QueryReport> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const url = `${this.baseUrl}/v1/documents/${encodeURIComponent(params.docId)}/query`;
    try {
      const response = await this.fetchFn(url, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({
          question: params.question,
          n: params.n,
          scorer: params.scorer,
        }),
        signal: controller.signal,
      });
      return await readJson(response);
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
      }
    }
  }
}

async function readJson(response: Response): Promise<any> {
  if (!response.ok) {
    let detail = `HTTP ${response.status}`;
    try {
      const body = await response.json();
      if (body && typeof body.error === "string") {
        detail = body.error;
      }
    } catch {
      // non-JSON error body; keep the status line
    }
    throw new ApiError(detail, response.status);
  }
  return response.json();
}
