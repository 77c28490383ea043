// Decision-tree walkthrough panel: shows the annotator WHY the proposed
// label was assigned by highlighting the branch that fired. The branch is
// derived from the evidence tiers the service sent, never recomputed from
// the text.

import type { EvidenceSpan } from "./types.js";

export type Branch = "informal" | "casual" | "formal" | "default";

export function deriveBranch(evidence: EvidenceSpan[]): Branch {
  if (evidence.some((e) => e.tier === "informal")) return "informal";
  if (evidence.some((e) => e.tier === "casual")) return "casual";
  if (evidence.some((e) => e.tier === "formal")) return "formal";
  return "default";
}

interface TreeStep {
  branch: Branch;
  question: string;
  outcome: string;
}

export const TREE_STEPS: TreeStep[] = [
  {
    branch: "informal",
    question:
      "Any slang, netspeak, interjections, emojis, non-standard spelling, or grammatical errors?",
    outcome: "label 0 (Informal)",
  },
  {
    branch: "casual",
    question: "Otherwise: any contractions, abbreviations, or direct address?",
    outcome: "label 1 (Casual)",
  },
  {
    branch: "formal",
    question: "Otherwise: any hedging phrases, nominalizations, or passive voice?",
    outcome: "label 2 (Formal)",
  },
  {
    branch: "default",
    question: "No strong stylistic features at all?",
    outcome: "label 1 (Casual) by default",
  },
];

export function renderTree(panel: HTMLElement, evidence: EvidenceSpan[]): Branch {
  const fired = deriveBranch(evidence);
  panel.textContent = "";
  const list = document.createElement("ol");
  list.className = "tree-walk";
  for (const step of TREE_STEPS) {
    const li = document.createElement("li");
    li.className = step.branch === fired ? "branch fired" : "branch";
    li.dataset.branch = step.branch;
    const q = document.createElement("span");
    q.className = "question";
    q.textContent = step.question;
    const o = document.createElement("span");
    o.className = "outcome";
    o.textContent = ` → ${step.outcome}`;
    li.append(q, o);
    list.appendChild(li);
    if (step.branch === fired) break; // the walk stops at the fired branch
  }
  panel.appendChild(list);
  return fired;
}
