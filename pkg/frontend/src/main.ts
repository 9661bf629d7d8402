import { analyze, detectBubbles, fetchTotalAnalyses, fileToBase64, AnalyzeOptions } from "./api.js";
import {
  UiState,
  initialState,
  selectImage,
  startDetect,
  finishDetect,
  startAnalysis,
  finishAnalysis,
  failRequest,
  toggleParams,
  canSubmit,
} from "./state.js";
import { Refs, render, renderCounter } from "./view.js";
import { SAMPLE_FILE_NAME, SAMPLE_IMAGE_B64 } from "./sample.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error("missing element #" + id);
  return node as T;
}

const refs: Refs = {
  fileLabel: el("file-label"),
  statusLine: el("status-line"),
  seedCount: el("seed-count"),
  overlayImg: el<HTMLImageElement>("overlay-img"),
  overlayBox: el("overlay-box"),
  metricsBody: el("metrics-body"),
  errorBox: el("error-box"),
  detectBtn: el<HTMLButtonElement>("detect-btn"),
  runBtn: el<HTMLButtonElement>("run-btn"),
  paramsPanel: el("params-panel"),
  paramsToggle: el<HTMLButtonElement>("params-toggle"),
  counterLine: el("counter-line"),
};

const fileInput = el<HTMLInputElement>("file-input");
const sampleBtn = el<HTMLButtonElement>("sample-btn");
const modelSelect = el<HTMLSelectElement>("model-select");
const umPerPxInput = el<HTMLInputElement>("um-per-px");
const rdmInput = el<HTMLInputElement>("rdm-input");

let state: UiState = initialState();
// Image bytes live outside the state machine; they always describe
// selectedFileName.
let imageB64: string | null = null;

function apply(next: UiState): void {
  state = next;
  render(refs, state);
}

// Blank fields are simply not sent; the service applies its defaults.
function collectParams(): Record<string, number> | null {
  const params: Record<string, number> = {};
  const inputs = refs.paramsPanel.querySelectorAll<HTMLInputElement>("input[data-param]");
  inputs.forEach((input) => {
    const raw = input.value.trim();
    if (raw === "") return;
    const value = Number(raw);
    if (!Number.isFinite(value)) {
      throw new Error("parameter " + input.dataset.param + " is not a number");
    }
    params[input.dataset.param as string] = value;
  });
  return Object.keys(params).length > 0 ? params : null;
}

async function collectOptions(): Promise<AnalyzeOptions> {
  const model = modelSelect.value === "B" ? "B" : "A";
  const umPerPx = Number(umPerPxInput.value);
  if (!Number.isFinite(umPerPx) || umPerPx <= 0) {
    throw new Error("microns per pixel must be a positive number");
  }
  let rdm: string | null = null;
  const rdmFile = rdmInput.files && rdmInput.files[0];
  if (rdmFile) rdm = await fileToBase64(rdmFile);
  return { model, umPerPx, params: collectParams(), rdm };
}

async function refreshCounter(): Promise<void> {
  try {
    renderCounter(refs.counterLine, await fetchTotalAnalyses());
  } catch {
    refs.counterLine.textContent = "";
  }
}

fileInput.addEventListener("change", async () => {
  const file = fileInput.files && fileInput.files[0];
  if (!file) return;
  imageB64 = await fileToBase64(file);
  apply(selectImage(state, file.name));
});

sampleBtn.addEventListener("click", () => {
  imageB64 = SAMPLE_IMAGE_B64;
  apply(selectImage(state, SAMPLE_FILE_NAME));
});

refs.detectBtn.addEventListener("click", async () => {
  if (!canSubmit(state) || imageB64 === null) return;
  const fileName = state.selectedFileName as string;
  apply(startDetect(state));
  try {
    const preview = await detectBubbles(fileName, imageB64, collectParams());
    apply(finishDetect(state, preview));
  } catch (err) {
    apply(failRequest(state, err instanceof Error ? err.message : String(err)));
  }
});

refs.runBtn.addEventListener("click", async () => {
  if (!canSubmit(state) || imageB64 === null) return;
  const fileName = state.selectedFileName as string;
  apply(startAnalysis(state));
  try {
    const options = await collectOptions();
    const result = await analyze(fileName, imageB64, options);
    apply(finishAnalysis(state, result));
    void refreshCounter();
  } catch (err) {
    apply(failRequest(state, err instanceof Error ? err.message : String(err)));
  }
});

refs.paramsToggle.addEventListener("click", () => apply(toggleParams(state)));

refs.overlayImg.addEventListener("click", () => {
  refs.overlayImg.classList.toggle("zoomed");
});

render(refs, state);
void refreshCounter();
