// Typed client for the review-service HTTP endpoints. The UI never computes
// labels or evidence itself; everything displayed comes from these calls.

import type {
  AgreementReport,
  QueueNextResponse,
  ReviewItemPayload,
  Verdict,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

export class NetworkError extends Error {
  constructor(cause: unknown) {
    super(`service unreachable: ${String(cause)}`);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ReviewApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    } catch (cause) {
      throw new NetworkError(cause);
    }
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = (await response.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  fetchNext(annotator: string): Promise<QueueNextResponse> {
    return this.request(`/queue/next?annotator=${encodeURIComponent(annotator)}`);
  }

  getItem(itemId: string): Promise<ReviewItemPayload> {
    return this.request(`/items/${encodeURIComponent(itemId)}`);
  }

  submitDecision(
    itemId: string,
    annotator: string,
    verdict: Verdict,
  ): Promise<ReviewItemPayload> {
    return this.request(`/items/${encodeURIComponent(itemId)}/decision`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ annotator, ...verdict }),
    });
  }

  getAgreement(): Promise<AgreementReport> {
    return this.request("/reports/agreement");
  }

  agreementUrl(): string {
    return `${this.baseUrl}/reports/agreement`;
  }
}
