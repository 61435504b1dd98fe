import type { DiagramModel, LoadSummary, Scope, VerbalizationResponse } from "./types.js";

/** Thin typed client for the diagram/verbalization API. Later verbalize
 * calls for the same element abort any still-running earlier one. */
export class ApiClient {
  private inflight = new Map<string, AbortController>();

  constructor(
    private baseUrl: string = "",
    private fetchImpl: typeof fetch = (input, init) => fetch(input, init),
  ) {}

  async getDiagram(): Promise<DiagramModel> {
    const res = await this.fetchImpl(`${this.baseUrl}/diagram`);
    if (!res.ok) throw new Error(`GET /diagram failed: ${res.status}`);
    return (await res.json()) as DiagramModel;
  }

  async verbalize(element: string, scope: Scope, directReading = false): Promise<VerbalizationResponse> {
    this.inflight.get(element)?.abort();
    const controller = new AbortController();
    this.inflight.set(element, controller);
    const params = new URLSearchParams({ element, scope });
    if (directReading) params.set("direct_reading", "true");
    try {
      const res = await this.fetchImpl(`${this.baseUrl}/verbalize?${params}`, {
        signal: controller.signal,
      });
      if (!res.ok) throw new Error(`GET /verbalize failed: ${res.status}`);
      return (await res.json()) as VerbalizationResponse;
    } finally {
      if (this.inflight.get(element) === controller) this.inflight.delete(element);
    }
  }

  async loadOntology(source: string, lexicon = ""): Promise<LoadSummary> {
    const res = await this.fetchImpl(`${this.baseUrl}/ontology`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ source, lexicon }),
    });
    if (!res.ok) throw new Error(`POST /ontology failed: ${res.status}`);
    return (await res.json()) as LoadSummary;
  }
}
