// The page promises a particular reading order and that the seed count is
// the most prominent number on screen. Both are checked against the actual
// markup rather than a rendered DOM.

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

const html = readFileSync(new URL("../index.html", import.meta.url), "utf8");

function styleBlock(): string {
  const m = html.match(/<style>([\s\S]*?)<\/style>/);
  if (!m) throw new Error("no style block in index.html");
  return m[1];
}

// selector -> font-size in px for every rule that declares one
function fontSizes(): Map<string, number> {
  const sizes = new Map<string, number>();
  for (const rule of styleBlock().split("}")) {
    const brace = rule.indexOf("{");
    if (brace < 0) continue;
    const selector = rule.slice(0, brace).trim();
    const m = rule.slice(brace).match(/font-size:\s*(\d+(?:\.\d+)?)px/);
    if (m) sizes.set(selector, Number(m[1]));
  }
  return sizes;
}

describe("prominence", () => {
  it("gives the seed count the strictly largest font size", () => {
    const sizes = fontSizes();
    const seed = sizes.get(".seed-count");
    expect(seed).toBeDefined();
    for (const [selector, px] of sizes) {
      if (selector === ".seed-count") continue;
      expect(px, selector + " must be smaller than the seed count").toBeLessThan(seed as number);
    }
  });
});

describe("reading order", () => {
  it("lays the controls out top to bottom", () => {
    const anchors = [
      'class="description"',
      'id="file-input"',
      'id="sample-btn"',
      'id="model-select"',
      'id="um-per-px"',
      'id="run-btn"',
      'id="seed-count"',
      'id="overlay-box"',
      'id="metrics-body"',
      'id="params-toggle"',
    ];
    let last = -1;
    for (const anchor of anchors) {
      const at = html.indexOf(anchor);
      expect(at, anchor + " present").toBeGreaterThan(last);
      last = at;
    }
  });

  it("keeps the override fields inside the collapsible panel", () => {
    const panel = html.match(/id="params-panel"[\s\S]*?<\/div>\s*<div class="counter"/);
    expect(panel).not.toBeNull();
    const inside = (panel as RegExpMatchArray)[0];
    expect(inside).toContain('data-param="offset"');
    expect(inside).toContain('data-param="min_circularity"');
    expect(inside).toContain('id="rdm-input"');
  });

  it("starts with the panel hidden and buttons disabled", () => {
    expect(html).toMatch(/id="params-panel"\s+hidden/);
    expect(html).toMatch(/id="run-btn"[^>]*disabled/);
    expect(html).toMatch(/id="detect-btn"[^>]*disabled/);
  });

  it("offers bundled sample data and an overlay zoom affordance", () => {
    expect(html).toContain("Use sample data");
    expect(styleBlock()).toContain("img.zoomed");
    expect(styleBlock()).toMatch(/zoom-in/);
  });
});
