// Typed fetch client for the curation service. Every pronunciation,
// diff and tally shown in the UI comes out of these calls; the client
// computes nothing linguistic itself.

import type {
  AcceptResponse,
  ClusterFilters,
  ClustersResponse,
  Health,
  Inventories,
  PreviewResponse,
  RuleDraft,
  RulesResponse,
  StatsResponse,
  WordDetail,
} from "./types.js";

/** Non-2xx response; message is the service's detail string. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

/** fetch itself failed: service down or network gone. */
export class ConnectionLost extends Error {
  constructor(message: string) {
    super(message);
    this.name = "ConnectionLost";
  }
}

export type Fetcher = (input: string, init?: RequestInit) => Promise<Response>;

export class Api {
  private readonly fetcher: Fetcher;

  constructor(
    private readonly base: string = "",
    fetcher?: Fetcher,
  ) {
    // bound wrapper: a bare `fetch` reference loses its window binding
    this.fetcher = fetcher ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const url = this.base + path;
    let resp: Response;
    try {
      resp = await this.fetcher(url, init);
    } catch {
      throw new ConnectionLost(`no response from ${url}`);
    }
    if (!resp.ok) {
      let detail = `request failed with status ${resp.status}`;
      try {
        const body = (await resp.json()) as { detail?: unknown };
        if (body && typeof body.detail === "string") detail = body.detail;
      } catch {
        // non-JSON error body, keep the generic message
      }
      throw new ApiError(resp.status, detail);
    }
    return (await resp.json()) as T;
  }

  private post<T>(path: string, body: unknown, method = "POST"): Promise<T> {
    return this.request<T>(path, {
      method,
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  health(): Promise<Health> {
    return this.request("/api/health");
  }

  inventories(): Promise<Inventories> {
    return this.request("/api/inventories");
  }

  rules(): Promise<RulesResponse> {
    return this.request("/api/rules");
  }

  clusters(filters: ClusterFilters = {}): Promise<ClustersResponse> {
    const params = new URLSearchParams();
    if (filters.phone) params.set("phone", filters.phone);
    if (filters.letter) params.set("letter", filters.letter);
    if (filters.position) params.set("position", filters.position);
    if (filters.page) params.set("page", String(filters.page));
    if (filters.page_size) params.set("page_size", String(filters.page_size));
    const query = params.toString();
    return this.request(`/api/clusters${query ? "?" + query : ""}`);
  }

  word(word: string): Promise<WordDetail> {
    return this.request(`/api/words/${encodeURIComponent(word)}`);
  }

  preview(rule: RuleDraft, limit = 2000): Promise<PreviewResponse> {
    return this.post("/api/rules/preview", { rule, limit });
  }

  accept(rule: RuleDraft, revision: number): Promise<AcceptResponse> {
    return this.post("/api/rules", { rule, revision });
  }

  removeRule(id: string, revision: number): Promise<{ revision: number }> {
    return this.request(
      `/api/rules/${encodeURIComponent(id)}?revision=${revision}`,
      { method: "DELETE" },
    );
  }

  stats(): Promise<StatsResponse> {
    return this.request("/api/stats");
  }
}
