// DOM rendering for the console. All lookups go through Refs so main.ts
// resolves elements once at startup.

import { AnalysisResult } from "./api.js";
import { UiState, isBusy, canSubmit } from "./state.js";

export interface Refs {
  fileLabel: HTMLElement;
  statusLine: HTMLElement;
  seedCount: HTMLElement;
  overlayImg: HTMLImageElement;
  overlayBox: HTMLElement;
  metricsBody: HTMLElement;
  errorBox: HTMLElement;
  detectBtn: HTMLButtonElement;
  runBtn: HTMLButtonElement;
  paramsPanel: HTMLElement;
  paramsToggle: HTMLButtonElement;
  counterLine: HTMLElement;
}

export function pngDataUri(b64: string): string {
  return "data:image/png;base64," + b64;
}

export function formatNumber(value: number | null, digits = 2): string {
  if (value === null) return "n/a";
  return value.toFixed(digits);
}

const PHASE_LABEL: Record<string, string> = {
  idle: "ready",
  detecting_bubbles: "detecting bubbles...",
  analyzing: "analyzing...",
  done: "done",
  error: "failed",
};

function metricRow(label: string, value: string): string {
  return "<tr><th>" + label + "</th><td>" + value + "</td></tr>";
}

export function renderMetrics(el: HTMLElement, result: AnalysisResult): void {
  const rows = [
    metricRow("crystals per mm²", formatNumber(result.crystals_per_mm2)),
    metricRow("mean size (µm)", formatNumber(result.mean_size_um)),
    metricRow("coverage (%)", formatNumber(result.coverage_percent)),
    metricRow("analyzed area (mm²)", formatNumber(result.analyzed_area_mm2, 4)),
    metricRow("bubble area fraction", formatNumber(result.bubble_area_fraction, 4)),
    metricRow("model", result.model),
  ];
  el.innerHTML = rows.join("");
}

export function render(refs: Refs, state: UiState): void {
  refs.fileLabel.textContent = state.selectedFileName ?? "no image selected";
  refs.statusLine.textContent = PHASE_LABEL[state.phase] ?? state.phase;

  const submittable = canSubmit(state);
  refs.detectBtn.disabled = !submittable;
  refs.runBtn.disabled = !submittable;

  refs.errorBox.textContent = state.phase === "error" ? (state.errorMessage ?? "") : "";
  refs.errorBox.hidden = state.phase !== "error";

  refs.paramsPanel.hidden = !state.paramsPanelOpen;
  refs.paramsToggle.textContent = state.paramsPanelOpen ? "Hide parameters" : "Show parameters";

  if (state.phase === "done" && state.lastResult) {
    const r = state.lastResult;
    refs.seedCount.textContent = String(r.seed_count);
    refs.overlayImg.src = pngDataUri(r.overlay_png);
    refs.overlayBox.hidden = false;
    renderMetrics(refs.metricsBody, r);
  } else if (state.phase === "idle" && state.bubblePreview) {
    // bubble preview shows the exclusion overlay without touching metrics
    refs.overlayImg.src = pngDataUri(state.bubblePreview.overlay_png);
    refs.overlayBox.hidden = false;
  } else if (!isBusy(state)) {
    refs.seedCount.textContent = "–";
    refs.overlayBox.hidden = true;
    refs.metricsBody.innerHTML = "";
  }
}

export function renderCounter(el: HTMLElement, total: number): void {
  el.textContent = "analyses run on this deployment: " + String(total);
}
