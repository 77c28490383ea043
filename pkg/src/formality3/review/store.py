"""Event-sourced state for the human verification stage.

All mutations append an event to a JSONL log and then apply it through the
same code path used for replay, so rebuilding a store from its log always
reproduces the live state. A single lock serializes writers; reads take the
same lock and therefore always observe a consistent snapshot.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from formality3.classifier import classify
from formality3.detectors import FeatureEvidence
from formality3.metrics import EscalationNeeded, KappaUndefined, fleiss_kappa, majority_vote
from formality3.pipeline import StyleTriple
from formality3.textcore import LexiconSet

VARIANTS = ("anchor", "formal", "informal")
REQUIRED_DECISIONS = 3


class ReviewError(Exception):
    def __init__(self, message: str, status: int = 400):
        super().__init__(message)
        self.status = status


@dataclass
class Decision:
    annotator: str
    verdict: str            # "accept" | "relabel"
    to_level: int | None
    ts: float

    @property
    def category(self) -> str:
        return "accept" if self.verdict == "accept" else f"relabel:{self.to_level}"


@dataclass
class ReviewItem:
    id: str
    triple_id: str
    variant: str
    text: str
    proposed_label: int
    evidence: list[dict]
    decisions: list[Decision] = field(default_factory=list)
    final: str | None = None
    escalated: bool = False
    revised: bool = False

    @property
    def open_for(self) -> bool:
        return self.final is None and not self.escalated

    def to_payload(self) -> dict:
        return {
            "id": self.id,
            "triple_id": self.triple_id,
            "variant": self.variant,
            "text": self.text,
            "proposed_label": self.proposed_label,
            "evidence": self.evidence,
            "decisions": [
                {"annotator": d.annotator, "verdict": d.verdict,
                 "to_level": d.to_level, "ts": d.ts}
                for d in self.decisions
            ],
            "decision_count": len(self.decisions),
            "final": self.final,
            "escalated": self.escalated,
            "revised": self.revised,
        }


def _evidence_payload(evidence: Iterable[FeatureEvidence]) -> list[dict]:
    return [{"kind": e.kind, "start": e.start, "end": e.end,
             "matched": e.matched, "tier": e.tier} for e in evidence]


class ReviewStore:
    def __init__(self, lexicons: LexiconSet, annotators: Iterable[str],
                 event_log: str | Path | None = None):
        self._lexicons = lexicons
        self.annotators = set(annotators)
        self._items: dict[str, ReviewItem] = {}
        self._lock = threading.RLock()
        self._log_path = Path(event_log) if event_log else None
        if self._log_path and self._log_path.exists():
            self._replay(self._log_path)

    # event plumbing -----------------------------------------------------

    def _append(self, event: dict) -> None:
        if self._log_path:
            with open(self._log_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(event, ensure_ascii=False) + "\n")

    def _replay(self, path: Path) -> None:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    self._apply(json.loads(line))

    def _apply(self, event: dict) -> ReviewItem | None:
        kind = event["event"]
        if kind == "enqueue":
            return self._apply_enqueue(event)
        if kind == "decision":
            return self._apply_decision(event)
        if kind == "revise":
            return self._apply_revise(event)
        if kind == "resolve":
            return self._apply_resolve(event)
        raise ReviewError(f"unknown event type {kind!r}")

    # enqueue -------------------------------------------------------------

    def enqueue_triples(self, triples: Iterable[StyleTriple]) -> int:
        """One item per variant per triple; idempotent per (triple, variant)."""
        queued = 0
        with self._lock:
            for triple in triples:
                for variant, text in triple.variants().items():
                    if text is None:
                        continue
                    item_id = f"{triple.id}:{variant}"
                    if item_id in self._items:
                        continue
                    labeled = classify(text, self._lexicons)
                    event = {
                        "event": "enqueue",
                        "item_id": item_id,
                        "triple_id": triple.id,
                        "variant": variant,
                        "text": text,
                        "proposed_label": int(labeled.label),
                        "evidence": _evidence_payload(labeled.evidence),
                    }
                    self._append(event)
                    self._apply(event)
                    queued += 1
        return queued

    def _apply_enqueue(self, event: dict) -> ReviewItem:
        item = ReviewItem(
            id=event["item_id"], triple_id=event["triple_id"],
            variant=event["variant"], text=event["text"],
            proposed_label=event["proposed_label"],
            evidence=list(event["evidence"]))
        self._items.setdefault(item.id, item)
        return self._items[item.id]

    # queue ----------------------------------------------------------------

    def _check_annotator(self, annotator: str) -> None:
        if annotator not in self.annotators:
            raise ReviewError(f"unknown annotator {annotator!r}", status=404)

    def next_item(self, annotator: str) -> ReviewItem | None:
        """The open item this annotator has not decided, most-decided first
        (items closest to their 3rd decision finalize soonest)."""
        self._check_annotator(annotator)
        with self._lock:
            candidates = [
                item for item in self._items.values()
                if item.open_for
                and all(d.annotator != annotator for d in item.decisions)
            ]
            if not candidates:
                return None
            candidates.sort(key=lambda item: (-len(item.decisions), item.id))
            return candidates[0]

    def progress(self, annotator: str | None = None) -> dict:
        with self._lock:
            total = len(self._items)
            finalized = sum(1 for i in self._items.values() if i.final is not None)
            escalated = sum(1 for i in self._items.values() if i.escalated)
            out = {"total": total, "finalized": finalized, "escalated": escalated,
                   "open": sum(1 for i in self._items.values() if i.open_for)}
            if annotator is not None:
                out["decided_by_annotator"] = sum(
                    1 for i in self._items.values()
                    if any(d.annotator == annotator for d in i.decisions))
            return out

    # decisions ------------------------------------------------------------

    def get(self, item_id: str) -> ReviewItem:
        with self._lock:
            try:
                return self._items[item_id]
            except KeyError:
                raise ReviewError(f"unknown item {item_id!r}", status=404) from None

    def submit_decision(self, item_id: str, annotator: str, verdict: str,
                        to_level: int | None = None,
                        edited_text: str | None = None) -> ReviewItem:
        self._check_annotator(annotator)
        if verdict not in ("accept", "relabel", "revise"):
            raise ReviewError(f"malformed verdict {verdict!r}", status=422)
        if verdict == "relabel":
            if to_level not in (0, 1, 2):
                raise ReviewError("relabel requires to_level in {0,1,2}", status=422)
        if verdict == "revise" and not (edited_text or "").strip():
            raise ReviewError("revise requires non-empty edited_text", status=422)

        with self._lock:
            item = self.get(item_id)
            if verdict == "revise":
                labeled = classify(edited_text, self._lexicons)
                event = {
                    "event": "revise", "item_id": item_id,
                    "annotator": annotator, "edited_text": edited_text,
                    "proposed_label": int(labeled.label),
                    "evidence": _evidence_payload(labeled.evidence),
                    "ts": time.time(),
                }
                self._append(event)
                return self._apply(event)

            if not item.open_for:
                raise ReviewError(f"item {item_id!r} is already "
                                  f"{'escalated' if item.escalated else 'finalized'}",
                                  status=409)
            if any(d.annotator == annotator for d in item.decisions):
                raise ReviewError(
                    f"annotator {annotator!r} already decided item {item_id!r}",
                    status=409)
            event = {
                "event": "decision", "item_id": item_id,
                "annotator": annotator, "verdict": verdict,
                "to_level": to_level, "ts": time.time(),
            }
            self._append(event)
            return self._apply(event)

    def _apply_decision(self, event: dict) -> ReviewItem:
        item = self._items[event["item_id"]]
        item.decisions.append(Decision(
            annotator=event["annotator"], verdict=event["verdict"],
            to_level=event.get("to_level"), ts=event.get("ts", 0.0)))
        if len(item.decisions) == REQUIRED_DECISIONS:
            try:
                item.final = majority_vote([d.category for d in item.decisions])
            except EscalationNeeded:
                item.escalated = True
        return item

    def _apply_revise(self, event: dict) -> ReviewItem:
        item = self._items[event["item_id"]]
        item.text = event["edited_text"]
        item.proposed_label = event["proposed_label"]
        item.evidence = list(event["evidence"])
        item.decisions = []
        item.final = None
        item.escalated = False
        item.revised = True
        return item

    # escalation -----------------------------------------------------------

    def resolve(self, item_id: str, verdict: str,
                to_level: int | None = None) -> ReviewItem:
        """Manually resolve an escalated (three-way split) item."""
        if verdict not in ("accept", "relabel"):
            raise ReviewError(f"malformed verdict {verdict!r}", status=422)
        if verdict == "relabel" and to_level not in (0, 1, 2):
            raise ReviewError("relabel requires to_level in {0,1,2}", status=422)
        with self._lock:
            item = self.get(item_id)
            if not item.escalated:
                raise ReviewError(f"item {item_id!r} is not escalated", status=409)
            event = {
                "event": "resolve", "item_id": item_id, "verdict": verdict,
                "to_level": to_level, "ts": time.time(),
            }
            self._append(event)
            return self._apply(event)

    def _apply_resolve(self, event: dict) -> ReviewItem:
        item = self._items[event["item_id"]]
        item.escalated = False
        item.final = ("accept" if event["verdict"] == "accept"
                      else f"relabel:{event['to_level']}")
        return item

    # reporting ------------------------------------------------------------

    def agreement_report(self) -> dict:
        """Fleiss' kappa over items with a full set of decisions, overall and
        per variant task."""
        with self._lock:
            complete = [i for i in self._items.values()
                        if len(i.decisions) == REQUIRED_DECISIONS]
            report: dict = {"items_complete": len(complete), "tasks": {}}

            def kappa_block(items: list[ReviewItem]) -> dict:
                if not items:
                    return {"kappa": None, "items": 0,
                            "undefined_reason": "no completed items"}
                matrix = [[d.category for d in item.decisions] for item in items]
                try:
                    return {"kappa": fleiss_kappa(matrix), "items": len(items)}
                except KappaUndefined as exc:
                    return {"kappa": None, "items": len(items),
                            "undefined_reason": str(exc)}

            report["overall"] = kappa_block(complete)
            for variant in VARIANTS:
                report["tasks"][variant] = kappa_block(
                    [i for i in complete if i.variant == variant])
            return report

    def export(self, status: str = "accepted") -> list[dict]:
        """Accepted variants (with any revised texts) as dataset rows."""
        if status != "accepted":
            raise ReviewError(f"unsupported export status {status!r}", status=422)
        with self._lock:
            rows = []
            for item in sorted(self._items.values(), key=lambda i: i.id):
                if item.final == "accept":
                    rows.append({
                        "id": item.id,
                        "text": item.text,
                        "level": item.proposed_label,
                        "split": "review-accepted",
                        "triple_id": item.triple_id,
                    })
            return rows

    # persistence ----------------------------------------------------------

    def save_snapshot(self, path: str | Path) -> None:
        with self._lock:
            payload = {"items": [i.to_payload() for i in
                                 sorted(self._items.values(), key=lambda i: i.id)]}
        Path(path).write_text(
            json.dumps(payload, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8")

    def items(self) -> list[ReviewItem]:
        with self._lock:
            return sorted(self._items.values(), key=lambda i: i.id)
