// Per-session question history, client-side only. Clicking an item in the
// console re-runs it, which supports iterative question refinement.

import type { QueryParams } from "./types.js";

export interface HistoryItem extends QueryParams {
  askedAt: string;
}

export class SessionHistory {
  private items: HistoryItem[] = [];

  constructor(private readonly limit: number = 50) {}

  /** Record a query, most recent first; an identical re-run moves to the front. */
  add(params: QueryParams, askedAt: string = new Date().toISOString()): void {
    this.items = this.items.filter((item) => !sameQuery(item, params));
    this.items.unshift({ ...params, askedAt });
    if (this.items.length > this.limit) {
      this.items.length = this.limit;
    }
  }

  list(): readonly HistoryItem[] {
    return this.items;
  }

  get(index: number): HistoryItem | undefined {
    return this.items[index];
  }

  clear(): void {
    this.items = [];
  }
}

function sameQuery(a: QueryParams, b: QueryParams): boolean {
  return (
    a.docId === b.docId &&
    a.question === b.question &&
    a.n === b.n &&
    a.scorer === b.scorer
  );
}
