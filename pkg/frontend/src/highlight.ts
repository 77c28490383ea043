// Span highlighting. The service sends code-point offsets (one emoji = one
// position); JS strings index UTF-16 units, so all slicing here goes through
// a code-point array to keep highlights aligned with what the backend
// measured.

import type { EvidenceSpan, Tier } from "./types.js";

export interface Segment {
  text: string;
  kinds: string[]; // evidence kinds covering this segment, [] = plain
  tier: Tier | null; // strongest tier covering the segment
}

const TIER_RANK: Record<Tier, number> = { informal: 0, casual: 1, formal: 2 };

export function segmentText(text: string, spans: EvidenceSpan[]): Segment[] {
  const points = Array.from(text); // code points
  const n = points.length;
  const clipped = spans
    .map((span) => ({
      ...span,
      start: Math.max(0, Math.min(span.start, n)),
      end: Math.max(0, Math.min(span.end, n)),
    }))
    .filter((span) => span.start < span.end);

  const cuts = new Set<number>([0, n]);
  for (const span of clipped) {
    cuts.add(span.start);
    cuts.add(span.end);
  }
  const bounds = Array.from(cuts).sort((a, b) => a - b);

  const segments: Segment[] = [];
  for (let i = 0; i + 1 < bounds.length; i++) {
    const start = bounds[i]!;
    const end = bounds[i + 1]!;
    const covering = clipped.filter((s) => s.start <= start && end <= s.end);
    const kinds = Array.from(new Set(covering.map((s) => s.kind)));
    let tier: Tier | null = null;
    for (const span of covering) {
      if (tier === null || TIER_RANK[span.tier] < TIER_RANK[tier]) {
        tier = span.tier;
      }
    }
    segments.push({ text: points.slice(start, end).join(""), kinds, tier });
  }
  return segments;
}

// Sanity check used by tests and on render: segments must reassemble the
// text exactly, i.e. no highlight offset overflows the displayed text.
export function segmentsCover(text: string, segments: Segment[]): boolean {
  return segments.map((s) => s.text).join("") === text;
}

export function renderHighlights(
  container: HTMLElement,
  text: string,
  spans: EvidenceSpan[],
): void {
  container.textContent = "";
  const segments = segmentText(text, spans);
  if (!segmentsCover(text, segments)) {
    // never display misaligned highlights; fall back to plain text
    container.textContent = text;
    return;
  }
  for (const segment of segments) {
    if (segment.tier === null) {
      container.appendChild(document.createTextNode(segment.text));
      continue;
    }
    const mark = document.createElement("mark");
    mark.className = `tier-${segment.tier}`;
    mark.title = segment.kinds.join(", ");
    mark.textContent = segment.text;
    container.appendChild(mark);
  }
}

export function renderEvidenceList(
  container: HTMLElement,
  spans: EvidenceSpan[],
): void {
  container.textContent = "";
  if (spans.length === 0) {
    const li = document.createElement("li");
    li.className = "no-evidence";
    li.textContent = "no markers detected";
    container.appendChild(li);
    return;
  }
  for (const span of spans) {
    const li = document.createElement("li");
    li.className = `tier-${span.tier}`;
    li.textContent = `${span.tier} / ${span.kind}: "${span.matched}"`;
    container.appendChild(li);
  }
}
