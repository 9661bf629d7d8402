import { afterEach, describe, expect, it, vi } from "vitest";
import {
  analyze,
  detectBubbles,
  fetchTotalAnalyses,
  fileToBase64,
} from "../src/api.js";

interface Recorded {
  url: string;
  init: RequestInit;
}

function stubFetch(status: number, doc: unknown): Recorded[] {
  const calls: Recorded[] = [];
  vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
    calls.push({ url, init: init ?? {} });
    return {
      ok: status >= 200 && status < 300,
      status,
      json: async () => doc,
    } as Response;
  });
  return calls;
}

afterEach(() => vi.unstubAllGlobals());

describe("analyze", () => {
  it("posts the expected request body", async () => {
    const calls = stubFetch(200, { file_name: "a.png", seed_count: 1 });
    await analyze("a.png", "aW1n", {
      model: "A",
      umPerPx: 1.5,
      params: null,
      rdm: null,
    });
    expect(calls).toHaveLength(1);
    expect(calls[0].url).toBe("/api/analyze");
    expect(calls[0].init.method).toBe("POST");
    const body = JSON.parse(calls[0].init.body as string);
    expect(Object.keys(body).sort()).toEqual(["file_name", "image", "model", "um_per_px"]);
    expect(body.file_name).toBe("a.png");
    expect(body.image).toBe("aW1n");
    expect(body.model).toBe("A");
    expect(body.um_per_px).toBe(1.5);
  });

  it("includes params and rdm only when provided", async () => {
    const calls = stubFetch(200, {});
    await analyze("a.png", "aW1n", {
      model: "B",
      umPerPx: 1.0,
      params: { offset: 4.5, block: 63 },
      rdm: "bWFw",
    });
    const body = JSON.parse(calls[0].init.body as string);
    expect(body.model).toBe("B");
    expect(body.params).toEqual({ offset: 4.5, block: 63 });
    expect(body.rdm).toBe("bWFw");
  });

  it("sends JSON with the right content type", async () => {
    const calls = stubFetch(200, {});
    await analyze("a.png", "aW1n", { model: "A", umPerPx: 1, params: null, rdm: null });
    const headers = calls[0].init.headers as Record<string, string>;
    expect(headers["Content-Type"]).toBe("application/json");
  });

  it("surfaces the service error message", async () => {
    stubFetch(400, { error: "block must be odd" });
    await expect(
      analyze("a.png", "aW1n", { model: "A", umPerPx: 1, params: { block: 30 }, rdm: null }),
    ).rejects.toThrow("block must be odd");
  });

  it("falls back to a status message when the body is not json", async () => {
    vi.stubGlobal("fetch", async () => ({
      ok: false,
      status: 413,
      json: async () => {
        throw new Error("not json");
      },
    }) as unknown as Response);
    await expect(
      analyze("a.png", "aW1n", { model: "A", umPerPx: 1, params: null, rdm: null }),
    ).rejects.toThrow("request failed (413)");
  });

  it("reports an unreachable service", async () => {
    vi.stubGlobal("fetch", async () => {
      throw new TypeError("fetch failed");
    });
    await expect(
      analyze("a.png", "aW1n", { model: "A", umPerPx: 1, params: null, rdm: null }),
    ).rejects.toThrow("cannot reach the analysis service");
  });
});

describe("detectBubbles", () => {
  it("posts to the bubble endpoint without model fields", async () => {
    const calls = stubFetch(200, { file_name: "a.png", bubbles: [] });
    await detectBubbles("a.png", "aW1n", null);
    expect(calls[0].url).toBe("/api/detect_bubbles");
    const body = JSON.parse(calls[0].init.body as string);
    expect(Object.keys(body).sort()).toEqual(["file_name", "image"]);
  });

  it("forwards overrides", async () => {
    const calls = stubFetch(200, {});
    await detectBubbles("a.png", "aW1n", { min_circularity: 0.9 });
    const body = JSON.parse(calls[0].init.body as string);
    expect(body.params).toEqual({ min_circularity: 0.9 });
  });
});

describe("fetchTotalAnalyses", () => {
  it("reads the counter", async () => {
    const calls = stubFetch(200, { total_analyses: 42 });
    await expect(fetchTotalAnalyses()).resolves.toBe(42);
    expect(calls[0].url).toBe("/api/stats");
  });

  it("rejects when the endpoint is down", async () => {
    stubFetch(503, {});
    await expect(fetchTotalAnalyses()).rejects.toThrow("stats unavailable");
  });
});

describe("fileToBase64", () => {
  it("matches the reference encoding", async () => {
    const bytes = new Uint8Array([0, 1, 2, 250, 251, 252, 253, 254, 255]);
    const blob = new Blob([bytes]);
    await expect(fileToBase64(blob)).resolves.toBe(Buffer.from(bytes).toString("base64"));
  });

  it("handles payloads larger than one conversion chunk", async () => {
    const bytes = new Uint8Array(0x8000 * 2 + 17);
    for (let i = 0; i < bytes.length; i++) bytes[i] = (i * 31) & 0xff;
    const blob = new Blob([bytes]);
    await expect(fileToBase64(blob)).resolves.toBe(Buffer.from(bytes).toString("base64"));
  });

  it("encodes the empty file", async () => {
    await expect(fileToBase64(new Blob([]))).resolves.toBe("");
  });
});
