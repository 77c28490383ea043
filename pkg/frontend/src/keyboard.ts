// Keyboard-first flow: annotation throughput is the point of the tool.

import type { Verdict } from "./types.js";

export type KeyAction =
  | { kind: "verdict"; verdict: Verdict }
  | { kind: "focus-revise" }
  | { kind: "none" };

export const KEY_HELP: ReadonlyArray<[string, string]> = [
  ["a", "accept the proposed label"],
  ["0", "relabel as Informal"],
  ["1", "relabel as Casual"],
  ["2", "relabel as Formal"],
  ["e", "edit the text (revise)"],
];

export function actionForKey(key: string, typingInField: boolean): KeyAction {
  if (typingInField) return { kind: "none" }; // never steal keys from the editor
  switch (key) {
    case "a":
      return { kind: "verdict", verdict: { verdict: "accept" } };
    case "0":
      return { kind: "verdict", verdict: { verdict: "relabel", to_level: 0 } };
    case "1":
      return { kind: "verdict", verdict: { verdict: "relabel", to_level: 1 } };
    case "2":
      return { kind: "verdict", verdict: { verdict: "relabel", to_level: 2 } };
    case "e":
      return { kind: "focus-revise" };
    default:
      return { kind: "none" };
  }
}
