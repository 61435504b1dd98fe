import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";

function jsonResponse(body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status: 200,
    headers: { "content-type": "application/json" },
  });
}

describe("ApiClient", () => {
  it("builds verbalize urls with scope and direct_reading", async () => {
    const urls: string[] = [];
    const client = new ApiClient("http://api", async (input) => {
      urls.push(String(input));
      return jsonResponse({ element: "e", scope: "direct", sentences: [] });
    });
    await client.verbalize("edge:teaches", "direct");
    await client.verbalize("edge:teaches", "inferred", true);
    expect(urls[0]).toBe("http://api/verbalize?element=edge%3Ateaches&scope=direct");
    expect(urls[1]).toContain("scope=inferred");
    expect(urls[1]).toContain("direct_reading=true");
  });

  it("aborts the previous in-flight request for the same element", async () => {
    const signals: AbortSignal[] = [];
    let release: (() => void) | null = null;
    const client = new ApiClient("", async (_input, init) => {
      signals.push(init!.signal!);
      if (signals.length === 1) {
        await new Promise<void>((resolve) => {
          release = resolve;
        });
      }
      return jsonResponse({ element: "e", scope: "direct", sentences: [] });
    });
    const first = client.verbalize("e", "direct");
    const second = client.verbalize("e", "direct");
    expect(signals[0].aborted).toBe(true);
    expect(signals[1].aborted).toBe(false);
    release!();
    await Promise.all([first, second]);
  });

  it("requests for different elements do not cancel each other", async () => {
    const signals: AbortSignal[] = [];
    const client = new ApiClient("", async (_input, init) => {
      signals.push(init!.signal!);
      return jsonResponse({ element: "e", scope: "direct", sentences: [] });
    });
    await client.verbalize("a", "direct");
    await client.verbalize("b", "direct");
    expect(signals.every((s) => !s.aborted)).toBe(true);
  });

  it("raises on http errors", async () => {
    const client = new ApiClient("", async () => new Response("no", { status: 404 }));
    await expect(client.verbalize("ghost", "direct")).rejects.toThrow(/404/);
  });
});
