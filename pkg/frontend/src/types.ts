// Wire types mirroring the review-service payloads.

export type Tier = "informal" | "casual" | "formal";

export interface EvidenceSpan {
  kind: string;
  start: number; // code-point offsets into the item text
  end: number;
  matched: string;
  tier: Tier;
}

export interface DecisionPayload {
  annotator: string;
  verdict: string;
  to_level: number | null;
  ts: number;
}

export interface ReviewItemPayload {
  id: string;
  triple_id: string;
  variant: "anchor" | "formal" | "informal";
  text: string;
  proposed_label: number; // 0 informal, 1 casual, 2 formal
  evidence: EvidenceSpan[];
  decisions: DecisionPayload[];
  decision_count: number;
  final: string | null;
  escalated: boolean;
  revised: boolean;
}

export interface Progress {
  total: number;
  finalized: number;
  escalated: number;
  open: number;
  decided_by_annotator?: number;
}

export interface QueueNextResponse {
  item: ReviewItemPayload | null;
  progress: Progress;
}

export interface AgreementBlock {
  kappa: number | null;
  items: number;
  undefined_reason?: string;
}

export interface AgreementReport {
  items_complete: number;
  overall: AgreementBlock;
  tasks: Record<string, AgreementBlock>;
}

export type Verdict =
  | { verdict: "accept" }
  | { verdict: "relabel"; to_level: 0 | 1 | 2 }
  | { verdict: "revise"; edited_text: string };

export const LABEL_NAMES: Record<number, string> = {
  0: "Informal",
  1: "Casual",
  2: "Formal",
};
