// Console wiring: document picker, query panel, results view, history.

import { ApiClient, ApiError } from "./api.js";
import { entryHtml, escapeHtml } from "./highlight.js";
import { SessionHistory } from "./history.js";
import type { QueryParams, QueryReport, Scorer } from "./types.js";

const history = new SessionHistory();
let client: ApiClient;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function refreshDocuments(): Promise<void> {
  const picker = el<HTMLSelectElement>("document-picker");
  const status = el<HTMLElement>("status");
  try {
    const docs = await client.listDocuments();
    picker.innerHTML = "";
    for (const doc of docs) {
      const option = document.createElement("option");
      option.value = doc.doc_id;
      const spans = doc.span_count === null ? "?" : String(doc.span_count);
      option.textContent = `${doc.title} (${spans} spans)`;
      picker.appendChild(option);
    }
    status.textContent = docs.length
      ? `${docs.length} document(s) available`
      : "No documents in the store; ingest one with the CLI.";
  } catch (err) {
    status.textContent = `Could not list documents: ${describe(err)}`;
  }
}

function currentParams(): QueryParams | null {
  const docId = el<HTMLSelectElement>("document-picker").value;
  const question = el<HTMLInputElement>("question").value.trim();
  const n = Number(el<HTMLSelectElement>("top-n").value);
  const scorer = el<HTMLSelectElement>("scorer").value as Scorer;
  if (!docId || !question) return null;
  return { docId, question, n, scorer };
}

async function runQuery(params: QueryParams): Promise<void> {
  const results = el<HTMLElement>("results");
  const status = el<HTMLElement>("status");
  status.textContent = "Searching…";
  try {
    const report = await client.query(params);
    history.add(params);
    renderHistory();
    renderReport(report);
    status.textContent = `Scored with ${report.scorer_id}, generated ${report.generated_at}`;
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") {
      return; // superseded by a newer question
    }
    results.innerHTML = "";
    status.textContent =
      err instanceof ApiError ? `Service error: ${err.message}` : `Request failed: ${describe(err)}`;
  }
}

function renderReport(report: QueryReport): void {
  const results = el<HTMLElement>("results");
  if (!report.entries.length) {
    results.innerHTML = `<p class="placeholder">No relevant context spans found.</p>`;
    return;
  }
  results.innerHTML = report.entries.map(entryHtml).join("");
}

function renderHistory(): void {
  const list = el<HTMLElement>("history");
  const items = history.list();
  if (!items.length) {
    list.innerHTML = `<li class="placeholder">No questions asked yet.</li>`;
    return;
  }
  list.innerHTML = items
    .map(
      (item, index) =>
        `<li><button type="button" class="history-item" data-index="${index}">` +
        `${escapeHtml(item.question)} <span class="history-meta">top-${item.n}, ${item.scorer}</span>` +
        `</button></li>`,
    )
    .join("");
}

function describe(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}

function init(): void {
  const baseUrl =
    new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8080";
  el<HTMLInputElement>("api-url").value = baseUrl;
  client = new ApiClient(baseUrl);

  el<HTMLInputElement>("api-url").addEventListener("change", (event) => {
    client = new ApiClient((event.target as HTMLInputElement).value.trim());
    void refreshDocuments();
  });
  el<HTMLElement>("refresh").addEventListener("click", () => void refreshDocuments());
  el<HTMLFormElement>("query-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const params = currentParams();
    if (params) void runQuery(params);
  });
  el<HTMLElement>("history").addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest<HTMLElement>(".history-item");
    if (!target) return;
    const item = history.get(Number(target.dataset.index));
    if (!item) return;
    el<HTMLSelectElement>("document-picker").value = item.docId;
    el<HTMLInputElement>("question").value = item.question;
    el<HTMLSelectElement>("top-n").value = String(item.n);
    el<HTMLSelectElement>("scorer").value = item.scorer;
    void runQuery(item);
  });

  renderHistory();
  void refreshDocuments();
}

document.addEventListener("DOMContentLoaded", init);
