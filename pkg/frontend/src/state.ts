// UI state machine, kept free of DOM so the invariants are testable.
//
// The rules it enforces:
//  - the selected file name persists through every later phase
//  - only one request is in flight at a time
//  - a result echoing a different file name than the current selection
//    is discarded, never shown
//  - the parameter panel starts closed

import { AnalysisResult, BubblePreview } from "./api.js";

export type Phase = "idle" | "detecting_bubbles" | "analyzing" | "done" | "error";

export interface UiState {
  selectedFileName: string | null;
  phase: Phase;
  paramsPanelOpen: boolean;
  lastResult: AnalysisResult | null;
  bubblePreview: BubblePreview | null;
  errorMessage: string | null;
}

export function initialState(): UiState {
  return {
    selectedFileName: null,
    phase: "idle",
    paramsPanelOpen: false,
    lastResult: null,
    bubblePreview: null,
    errorMessage: null,
  };
}

export function isBusy(state: UiState): boolean {
  return state.phase === "detecting_bubbles" || state.phase === "analyzing";
}

export function canSubmit(state: UiState): boolean {
  return state.selectedFileName !== null && !isBusy(state);
}

// Choosing a file (or re-choosing) resets everything derived from the
// previous image but keeps the panel however the operator left it.
export function selectImage(state: UiState, fileName: string): UiState {
  return {
    ...state,
    selectedFileName: fileName,
    phase: "idle",
    lastResult: null,
    bubblePreview: null,
    errorMessage: null,
  };
}

export function startDetect(state: UiState): UiState {
  if (!canSubmit(state)) return state;
  return { ...state, phase: "detecting_bubbles", errorMessage: null };
}

export function finishDetect(state: UiState, preview: BubblePreview): UiState {
  if (state.phase !== "detecting_bubbles") return state;
  if (preview.file_name !== state.selectedFileName) {
    return { ...state, phase: "idle" }; // stale response for another file
  }
  return { ...state, phase: "idle", bubblePreview: preview };
}

export function startAnalysis(state: UiState): UiState {
  if (!canSubmit(state)) return state;
  return { ...state, phase: "analyzing", errorMessage: null };
}

export function finishAnalysis(state: UiState, result: AnalysisResult): UiState {
  if (state.phase !== "analyzing") return state;
  if (result.file_name !== state.selectedFileName) {
    return { ...state, phase: "idle" }; // discard mismatched result
  }
  return { ...state, phase: "done", lastResult: result };
}

export function failRequest(state: UiState, message: string): UiState {
  if (!isBusy(state)) return state;
  return { ...state, phase: "error", errorMessage: message };
}

export function toggleParams(state: UiState): UiState {
  return { ...state, paramsPanelOpen: !state.paramsPanelOpen };
}
