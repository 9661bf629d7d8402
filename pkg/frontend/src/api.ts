// Thin client over the analysis service. Field names mirror the wire
// schema exactly, so responses can be used without remapping.

export interface Histogram {
  edges_um: number[];
  counts: number[];
}

export interface WireInstance {
  id: number;
  centroid: number[];
  area_px: number;
  equiv_diameter_um: number;
  boundary: number[][];
}

export interface AnalysisResult {
  file_name: string;
  model: string;
  seed_count: number;
  crystals_per_mm2: number | null;
  mean_size_um: number;
  coverage_percent: number | null;
  analyzed_area_mm2: number;
  bubble_area_fraction: number;
  histogram: Histogram;
  instances: WireInstance[];
  overlay_png: string;
}

export interface BubbleRegion {
  center: number[];
  radius: number;
  area_px: number;
  circularity: number;
}

export interface BubblePreview {
  file_name: string;
  bubbles: BubbleRegion[];
  overlay_png: string;
}

export interface AnalyzeOptions {
  model: "A" | "B";
  umPerPx: number;
  params: Record<string, number> | null;
  rdm: string | null; // base64 radial map, model B only
}

async function postJson<T>(url: string, body: unknown): Promise<T> {
  let res: Response;
  try {
    res = await fetch(url, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  } catch (err) {
    throw new Error("cannot reach the analysis service");
  }
  if (!res.ok) {
    let message = "request failed (" + res.status + ")";
    try {
      const doc = await res.json();
      if (doc && typeof doc.error === "string") message = doc.error;
    } catch {
      // keep the status-based message
    }
    throw new Error(message);
  }
  return (await res.json()) as T;
}

export function analyze(
  fileName: string,
  imageB64: string,
  opts: AnalyzeOptions,
): Promise<AnalysisResult> {
  const body: Record<string, unknown> = {
    file_name: fileName,
    image: imageB64,
    model: opts.model,
    um_per_px: opts.umPerPx,
  };
  if (opts.params && Object.keys(opts.params).length > 0) body.params = opts.params;
  if (opts.rdm) body.rdm = opts.rdm;
  return postJson<AnalysisResult>("/api/analyze", body);
}

export function detectBubbles(
  fileName: string,
  imageB64: string,
  params: Record<string, number> | null,
): Promise<BubblePreview> {
  const body: Record<string, unknown> = { file_name: fileName, image: imageB64 };
  if (params && Object.keys(params).length > 0) body.params = params;
  return postJson<BubblePreview>("/api/detect_bubbles", body);
}

export async function fetchTotalAnalyses(): Promise<number> {
  const res = await fetch("/api/stats");
  if (!res.ok) throw new Error("stats unavailable");
  const doc = await res.json();
  return doc.total_analyses as number;
}

// File -> base64 without the data: prefix the service would reject.
export async function fileToBase64(file: Blob): Promise<string> {
  const buf = new Uint8Array(await file.arrayBuffer());
  let binary = "";
  const chunk = 0x8000; // apply() has an argument count limit
  for (let i = 0; i < buf.length; i += chunk) {
    binary += String.fromCharCode.apply(null, Array.from(buf.subarray(i, i + chunk)));
  }
  return btoa(binary);
}
