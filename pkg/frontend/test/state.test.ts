import { describe, expect, it } from "vitest";
import { AnalysisResult, BubblePreview } from "../src/api.js";
import {
  canSubmit,
  failRequest,
  finishAnalysis,
  finishDetect,
  initialState,
  selectImage,
  startAnalysis,
  startDetect,
  toggleParams,
} from "../src/state.js";

function makeResult(fileName: string, seeds = 7): AnalysisResult {
  return {
    file_name: fileName,
    model: "A",
    seed_count: seeds,
    crystals_per_mm2: 2.5,
    mean_size_um: 40.0,
    coverage_percent: 1.2,
    analyzed_area_mm2: 0.1,
    bubble_area_fraction: 0.0,
    histogram: { edges_um: [0, 50], counts: [seeds] },
    instances: [],
    overlay_png: "aGk=",
  };
}

function makePreview(fileName: string): BubblePreview {
  return { file_name: fileName, bubbles: [], overlay_png: "aGk=" };
}

describe("initial state", () => {
  it("starts idle with the parameter panel closed", () => {
    const s = initialState();
    expect(s.phase).toBe("idle");
    expect(s.selectedFileName).toBeNull();
    expect(s.paramsPanelOpen).toBe(false);
    expect(s.lastResult).toBeNull();
    expect(canSubmit(s)).toBe(false);
  });
});

describe("file selection", () => {
  it("keeps the file name through detect, analyze, and result", () => {
    let s = selectImage(initialState(), "wafer_03.png");
    expect(s.selectedFileName).toBe("wafer_03.png");

    s = startDetect(s);
    expect(s.phase).toBe("detecting_bubbles");
    expect(s.selectedFileName).toBe("wafer_03.png");

    s = finishDetect(s, makePreview("wafer_03.png"));
    expect(s.phase).toBe("idle");
    expect(s.selectedFileName).toBe("wafer_03.png");

    s = startAnalysis(s);
    expect(s.phase).toBe("analyzing");
    expect(s.selectedFileName).toBe("wafer_03.png");

    s = finishAnalysis(s, makeResult("wafer_03.png"));
    expect(s.phase).toBe("done");
    expect(s.selectedFileName).toBe("wafer_03.png");
    expect(s.lastResult?.seed_count).toBe(7);
  });

  it("re-selecting clears the previous result and preview", () => {
    let s = selectImage(initialState(), "a.png");
    s = finishAnalysis(startAnalysis(s), makeResult("a.png"));
    s = selectImage(s, "b.png");
    expect(s.lastResult).toBeNull();
    expect(s.bubblePreview).toBeNull();
    expect(s.phase).toBe("idle");
  });
});

describe("single request in flight", () => {
  it("ignores a second start while analyzing", () => {
    const busy = startAnalysis(selectImage(initialState(), "a.png"));
    expect(startAnalysis(busy)).toBe(busy);
    expect(startDetect(busy)).toBe(busy);
    expect(canSubmit(busy)).toBe(false);
  });

  it("ignores a second start while detecting bubbles", () => {
    const busy = startDetect(selectImage(initialState(), "a.png"));
    expect(startDetect(busy)).toBe(busy);
    expect(startAnalysis(busy)).toBe(busy);
  });

  it("does nothing without a selected image", () => {
    const s = initialState();
    expect(startAnalysis(s)).toBe(s);
    expect(startDetect(s)).toBe(s);
  });
});

describe("stale responses", () => {
  it("discards a result for a different file name", () => {
    let s = selectImage(initialState(), "a.png");
    s = finishAnalysis(startAnalysis(s), makeResult("a.png", 3));
    const before = s.lastResult;

    s = selectImage(s, "b.png");
    s = startAnalysis(s);
    s = finishAnalysis(s, makeResult("a.png", 99));
    expect(s.phase).toBe("idle");
    expect(s.lastResult).toBeNull(); // selection reset it, stale result stays out
    expect(before?.seed_count).toBe(3);
  });

  it("keeps the previous result when the mismatch arrives after one is shown", () => {
    let s = selectImage(initialState(), "b.png");
    s = finishAnalysis(startAnalysis(s), makeResult("b.png", 5));
    s = startAnalysis(s);
    s = finishAnalysis(s, makeResult("other.png", 99));
    expect(s.phase).toBe("idle");
    expect(s.lastResult?.seed_count).toBe(5);
    expect(s.lastResult?.file_name).toBe("b.png");
  });

  it("discards a bubble preview for a different file name", () => {
    let s = startDetect(selectImage(initialState(), "b.png"));
    s = finishDetect(s, makePreview("other.png"));
    expect(s.phase).toBe("idle");
    expect(s.bubblePreview).toBeNull();
  });

  it("ignores completions that arrive outside a matching request", () => {
    const s = selectImage(initialState(), "a.png");
    expect(finishAnalysis(s, makeResult("a.png"))).toBe(s);
    expect(finishDetect(s, makePreview("a.png"))).toBe(s);
  });
});

describe("failures", () => {
  it("keeps the file name and reports the message", () => {
    let s = startAnalysis(selectImage(initialState(), "a.png"));
    s = failRequest(s, "request failed (500)");
    expect(s.phase).toBe("error");
    expect(s.selectedFileName).toBe("a.png");
    expect(s.errorMessage).toBe("request failed (500)");
    expect(canSubmit(s)).toBe(true); // the operator can retry
  });

  it("is a no-op when nothing is in flight", () => {
    const s = selectImage(initialState(), "a.png");
    expect(failRequest(s, "boom")).toBe(s);
  });

  it("clears the error on the next start", () => {
    let s = failRequest(startAnalysis(selectImage(initialState(), "a.png")), "boom");
    s = startAnalysis(s);
    expect(s.errorMessage).toBeNull();
    expect(s.phase).toBe("analyzing");
  });
});

describe("parameter panel", () => {
  it("toggles open and closed without touching anything else", () => {
    let s = selectImage(initialState(), "a.png");
    s = finishAnalysis(startAnalysis(s), makeResult("a.png"));

    const open = toggleParams(s);
    expect(open.paramsPanelOpen).toBe(true);
    expect(open.lastResult).toBe(s.lastResult);
    expect(open.phase).toBe("done");

    const closed = toggleParams(open);
    expect(closed.paramsPanelOpen).toBe(false);
  });

  it("stays open across a run", () => {
    let s = toggleParams(selectImage(initialState(), "a.png"));
    s = finishAnalysis(startAnalysis(s), makeResult("a.png"));
    expect(s.paramsPanelOpen).toBe(true);
  });
});
