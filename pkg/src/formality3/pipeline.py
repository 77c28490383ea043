"""Casual-anchored dataset construction.

Casual anchors are extracted from a source corpus, rewritten outward into
formal and informal variants with classifier-gated revision loops, and
assembled into quota-balanced splits. The single-hop baseline (direct
informal -> formal, no intermediate state, no revision loop) and the
two-sided test-set assembler live here too.

Triples are independent work units; fan-out is bounded and results are
always ordered by triple id, never by completion order, so a run with any
worker count writes identical files.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from formality3.classifier import FormalityLabel, classify
from formality3.gateway import BaseGateway, GatewayError
from formality3.records import DatasetManifest, DatasetRecord
from formality3.textcore import LexiconSet
from formality3.transfer_eval import F_TO_I, I_TO_F

DRAFT = "draft"
VALIDATED = "validated"
IN_REVIEW = "in_review"
ACCEPTED = "accepted"
REJECTED = "rejected"

LEVEL_NAMES = {FormalityLabel.INFORMAL: "informal",
               FormalityLabel.CASUAL: "casual",
               FormalityLabel.FORMAL: "formal"}


class PipelineError(ValueError):
    pass


class TripleBuildError(GatewayError):
    """Gateway failure mid-build; carries the partial triple (status draft)."""

    def __init__(self, triple: "StyleTriple", cause: GatewayError):
        super().__init__(f"triple {triple.id}: {cause}")
        self.triple = triple
        self.cause = cause


@dataclass
class VariantProvenance:
    template_id: str
    revision_rounds: int = 0
    judged_labels: list[int] = field(default_factory=list)
    failed: bool = False


@dataclass
class StyleTriple:
    id: str
    anchor: str
    formal: str | None = None
    informal: str | None = None
    status: str = DRAFT
    provenance: dict[str, VariantProvenance] = field(default_factory=dict)
    source_corpus_id: str = ""

    def variants(self) -> dict[str, str]:
        out = {"anchor": self.anchor}
        if self.formal is not None:
            out["formal"] = self.formal
        if self.informal is not None:
            out["informal"] = self.informal
        return out

    def to_row(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "formal": self.formal,
            "informal": self.informal,
            "status": self.status,
            "source_corpus_id": self.source_corpus_id,
            "provenance": {
                variant: {
                    "template_id": p.template_id,
                    "revision_rounds": p.revision_rounds,
                    "judged_labels": p.judged_labels,
                    "failed": p.failed,
                } for variant, p in self.provenance.items()
            },
        }

    @classmethod
    def from_row(cls, row: dict) -> "StyleTriple":
        provenance = {}
        for variant, p in (row.get("provenance") or {}).items():
            provenance[variant] = VariantProvenance(
                template_id=p["template_id"],
                revision_rounds=p.get("revision_rounds", 0),
                judged_labels=list(p.get("judged_labels", [])),
                failed=p.get("failed", False))
        return cls(id=row["id"], anchor=row["anchor"], formal=row.get("formal"),
                   informal=row.get("informal"), status=row.get("status", DRAFT),
                   provenance=provenance,
                   source_corpus_id=row.get("source_corpus_id", ""))


def extract_casual_anchors(
        corpus: Iterable[str],
        judge: Callable[[str], FormalityLabel],
) -> tuple[list[str], dict[FormalityLabel, int]]:
    """Sentences the judge labels Casual, in corpus order, plus rejection
    tallies for the other labels."""
    anchors = []
    tallies = {label: 0 for label in FormalityLabel}
    for sentence in corpus:
        label = judge(sentence)
        tallies[label] += 1
        if label == FormalityLabel.CASUAL:
            anchors.append(sentence)
    return anchors, tallies


def rule_judge_3way(lexicons: LexiconSet) -> Callable[[str], FormalityLabel]:
    def judge(text: str) -> FormalityLabel:
        return classify(text, lexicons).label

    return judge


def _rewrite_validated(gateway: BaseGateway, lexicons: LexiconSet,
                       source: str, first_template: str,
                       revision_template: str, want: FormalityLabel,
                       max_revisions: int) -> tuple[str | None, VariantProvenance]:
    """One rewrite plus up to max_revisions classifier-gated revision
    rounds; the returned text is None when every round failed validation."""
    provenance = VariantProvenance(template_id=first_template)
    candidate = gateway.rewrite(source, first_template)
    label = classify(candidate, lexicons).label
    provenance.judged_labels.append(int(label))
    while label != want and provenance.revision_rounds < max_revisions:
        provenance.revision_rounds += 1
        revision_source = candidate if revision_template == "revision_informal" \
            else source
        candidate = gateway.rewrite(revision_source, revision_template)
        label = classify(candidate, lexicons).label
        provenance.judged_labels.append(int(label))
    if label != want:
        provenance.failed = True
        return None, provenance
    return candidate, provenance


def build_triple(anchor: str, gateway: BaseGateway, lexicons: LexiconSet,
                 max_revisions: int = 3, triple_id: str = "t0",
                 source_corpus_id: str = "") -> StyleTriple:
    """Rewrite a casual anchor outward to a validated (formal, informal)
    pair.

    Each variant must pass the rule classifier at its level; a failed check
    triggers a revision round (informal variants are revised in place, the
    formal side re-derives from the anchor) up to max_revisions. Exhaustion
    leaves the triple in draft with the failure recorded, never silently
    accepted. Gateway errors also leave the triple in draft.
    """
    triple = StyleTriple(id=triple_id, anchor=anchor,
                         source_corpus_id=source_corpus_id)
    try:
        formal, formal_prov = _rewrite_validated(
            gateway, lexicons, anchor, "rewrite_casual_to_formal",
            "rewrite_casual_to_formal", FormalityLabel.FORMAL, max_revisions)
        triple.provenance["formal"] = formal_prov
        triple.formal = formal

        informal, informal_prov = _rewrite_validated(
            gateway, lexicons, anchor, "rewrite_casual_to_informal",
            "revision_informal", FormalityLabel.INFORMAL, max_revisions)
        triple.provenance["informal"] = informal_prov
        triple.informal = informal
    except GatewayError as exc:
        triple.status = DRAFT
        raise TripleBuildError(triple, exc) from exc
    triple.status = VALIDATED if (formal is not None and informal is not None) \
        else DRAFT
    return triple


def build_triples(anchors: Sequence[str], gateway: BaseGateway,
                  lexicons: LexiconSet, max_revisions: int = 3,
                  source_corpus_id: str = "", jobs: int = 1) -> list[StyleTriple]:
    """Fan out build_triple over anchors; output ordered by triple id."""
    ids = [f"{source_corpus_id or 'triple'}-{i:06d}" for i in range(len(anchors))]

    def build(pair):
        triple_id, anchor = pair
        try:
            return build_triple(anchor, gateway, lexicons, max_revisions,
                                triple_id=triple_id,
                                source_corpus_id=source_corpus_id)
        except TripleBuildError as exc:
            from formality3.gateway import ConfigError

            if isinstance(exc.cause, ConfigError):
                raise  # systemic misconfiguration, not a per-anchor failure
            return exc.triple  # keep the draft; one bad anchor never kills a run

    work = list(zip(ids, anchors))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            triples = list(pool.map(build, work))
    else:
        triples = [build(pair) for pair in work]
    return sorted(triples, key=lambda t: t.id)


@dataclass
class NaivePair:
    id: str
    informal: str
    formal: str | None
    status: str
    provenance: VariantProvenance


def build_naive_pair(informal_sentence: str, gateway: BaseGateway,
                     lexicons: LexiconSet, pair_id: str = "n0") -> NaivePair:
    """Single-shot direct informal -> formal rewrite (no revision loop)."""
    provenance = VariantProvenance(template_id="rewrite_informal_to_formal_naive")
    formal = gateway.rewrite(informal_sentence, "rewrite_informal_to_formal_naive")
    label = classify(formal, lexicons).label
    provenance.judged_labels.append(int(label))
    if label != FormalityLabel.FORMAL:
        provenance.failed = True
        return NaivePair(id=pair_id, informal=informal_sentence, formal=None,
                         status=DRAFT, provenance=provenance)
    return NaivePair(id=pair_id, informal=informal_sentence, formal=formal,
                     status=VALIDATED, provenance=provenance)


def audit_triples(triples: Iterable[StyleTriple],
                  lexicons: LexiconSet) -> list[tuple[str, str, int]]:
    """Re-check the three-level invariant on validated triples.

    Returns (triple id, variant, observed label code) for each violation;
    a clean dataset returns an empty list.
    """
    violations = []
    expected = {"anchor": FormalityLabel.CASUAL,
                "formal": FormalityLabel.FORMAL,
                "informal": FormalityLabel.INFORMAL}
    for triple in triples:
        if triple.status not in (VALIDATED, ACCEPTED, IN_REVIEW):
            continue
        for variant, want in expected.items():
            text = triple.variants().get(variant)
            if text is None:
                violations.append((triple.id, variant, -1))
                continue
            got = classify(text, lexicons).label
            if got != want:
                violations.append((triple.id, variant, int(got)))
    return violations


def assemble_dataset(triples: Sequence[StyleTriple], quota: int, *,
                     split: str = "train", source_ids: Sequence[str] = (),
                     config: dict | None = None,
                     ) -> tuple[list[DatasetRecord], DatasetManifest]:
    """Select `quota` accepted/validated triples (stable order by id) and
    emit one record per (sentence, level)."""
    usable = sorted(
        (t for t in triples if t.status in (VALIDATED, ACCEPTED)),
        key=lambda t: t.id)
    if len(usable) < quota:
        raise PipelineError(
            f"need {quota} accepted triples, have {len(usable)}")
    chosen = usable[:quota]
    records = []
    for triple in chosen:
        for label, text in ((FormalityLabel.INFORMAL, triple.informal),
                            (FormalityLabel.CASUAL, triple.anchor),
                            (FormalityLabel.FORMAL, triple.formal)):
            records.append(DatasetRecord(
                id=f"{triple.id}.{LEVEL_NAMES[label]}",
                text=text, level=int(label), split=split,
                triple_id=triple.id))
    manifest = DatasetManifest(
        split=split,
        per_level={name: quota for name in ("informal", "casual", "formal")},
        source_ids=tuple(source_ids),
        config=dict(config or {}))
    return records, manifest


@dataclass(frozen=True)
class ScoredSentence:
    text: str
    score: float | None = None  # mean human formality score in [-3, +3]


def assemble_test_set(informal_pool: Sequence[ScoredSentence],
                      formal_pool: Sequence[ScoredSentence],
                      per_side: int, seed: int, *,
                      split: str = "test",
                      ) -> tuple[list[DatasetRecord], DatasetManifest]:
    """Two-direction test split: informal sources become I->F items, formal
    sources F->I. Formal candidates need a strictly positive mean score;
    sampling is seeded and recorded."""
    formal_kept = [s for s in formal_pool
                   if s.score is not None and s.score > 0.0]
    if len(formal_kept) < per_side:
        raise PipelineError(
            f"formal pool has {len(formal_kept)} candidates after the "
            f"positive-score filter, need {per_side}")
    if len(informal_pool) < per_side:
        raise PipelineError(
            f"informal pool has {len(informal_pool)} candidates, need {per_side}")

    rng = random.Random(seed)
    informal_chosen = rng.sample(list(informal_pool), per_side)
    formal_chosen = rng.sample(formal_kept, per_side)

    records = []
    for i, item in enumerate(informal_chosen):
        records.append(DatasetRecord(
            id=f"{split}-if-{i:05d}", text=item.text,
            level=int(FormalityLabel.INFORMAL), split=split, direction=I_TO_F))
    for i, item in enumerate(formal_chosen):
        records.append(DatasetRecord(
            id=f"{split}-fi-{i:05d}", text=item.text,
            level=int(FormalityLabel.FORMAL), split=split, direction=F_TO_I))
    manifest = DatasetManifest(
        split=split,
        per_level={"informal": per_side, "casual": 0, "formal": per_side},
        source_ids=(),
        config={"seed": seed, "per_side": per_side,
                "formal_score_filter": "mean > 0"})
    return records, manifest


def write_triples(triples: Iterable[StyleTriple], path: str | Path) -> int:
    import json

    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for triple in triples:
            fh.write(json.dumps(triple.to_row(), ensure_ascii=False) + "\n")
            count += 1
    return count


def read_triples(path: str | Path) -> list[StyleTriple]:
    import json

    triples = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                triples.append(StyleTriple.from_row(json.loads(line)))
    return triples
