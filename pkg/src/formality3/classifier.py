"""Decision tree over the marker tiers, plus the continuous formality score.

Tree precedence is strict: any informal-tier evidence wins, then casual,
then formal; a sentence with no markers at all defaults to Casual. The
integer codes (0/1/2) are the wire format used everywhere downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

from formality3.detectors import (
    FeatureEvidence,
    detect_casual_markers,
    detect_formal_markers,
    detect_informal_markers,
)
from formality3.textcore import (
    ADJECTIVE,
    ADVERB,
    ARTICLE,
    INTERJECTION,
    NOUN,
    PREPOSITION,
    PRONOUN,
    PUNCTUATION,
    VERB,
    LexiconSet,
    TaggedSentence,
    tag,
)


class FormalityLabel(IntEnum):
    INFORMAL = 0
    CASUAL = 1
    FORMAL = 2

    @classmethod
    def from_code(cls, code: int) -> "FormalityLabel":
        try:
            return cls(code)
        except ValueError:
            raise ValueError(f"formality code must be 0, 1 or 2, got {code!r}") from None

    def __str__(self) -> str:  # "Informal" / "Casual" / "Formal"
        return self.name.capitalize()


@dataclass(frozen=True)
class LabeledSentence:
    sentence: TaggedSentence
    label: FormalityLabel
    evidence: tuple[FeatureEvidence, ...]
    fscore: float | None  # undefined for empty / punctuation-only input

    def evidence_for(self, tier: str) -> tuple[FeatureEvidence, ...]:
        return tuple(e for e in self.evidence if e.tier == tier)


class ScoreUndefined(ValueError):
    """The formality score is undefined (no non-punctuation tokens)."""


_NON_DEICTIC = (NOUN, ADJECTIVE, PREPOSITION, ARTICLE)
_DEICTIC = (PRONOUN, VERB, ADVERB, INTERJECTION)


def hd_formality_score(sentence: TaggedSentence) -> float:
    """Continuous formality in [0, 100] from POS-class frequencies.

    Non-deictic classes (nouns, adjectives, prepositions, articles) push the
    score up, deictic ones (pronouns, verbs, adverbs, interjections) push it
    down; conjunctions, numerals, emoji and unknowns only dilute. Punctuation
    is excluded from the counts entirely.

    Note the deictic side uses adverbs, which the published measure calls
    for; a sentence of only nouns scores exactly 100, only interjections 0.
    """
    if not sentence.tagged():
        raise ValueError("sentence must be pos-tagged before scoring")
    counts: dict[str, int] = {}
    total = 0
    for token in sentence.tokens:
        if token.pos == PUNCTUATION:
            continue
        total += 1
        counts[token.pos] = counts.get(token.pos, 0) + 1
    if total == 0:
        raise ScoreUndefined("formality score undefined: no word tokens")
    up = sum(100.0 * counts.get(pos, 0) / total for pos in _NON_DEICTIC)
    down = sum(100.0 * counts.get(pos, 0) / total for pos in _DEICTIC)
    return (up - down + 100.0) / 2.0


def classify_tagged(sentence: TaggedSentence, lexicons: LexiconSet) -> LabeledSentence:
    """Run all detectors on an already-tagged sentence and apply the tree."""
    informal = detect_informal_markers(sentence, lexicons)
    casual = detect_casual_markers(sentence, lexicons)
    formal = detect_formal_markers(sentence, lexicons)
    if informal:
        label = FormalityLabel.INFORMAL
    elif casual:
        label = FormalityLabel.CASUAL
    elif formal:
        label = FormalityLabel.FORMAL
    else:
        label = FormalityLabel.CASUAL  # default tier
    try:
        fscore = hd_formality_score(sentence)
    except ScoreUndefined:
        fscore = None
    return LabeledSentence(
        sentence=sentence,
        label=label,
        evidence=tuple(informal + casual + formal),
        fscore=fscore,
    )


def classify(text: str, lexicons: LexiconSet) -> LabeledSentence:
    """Tokenize, tag, detect markers and label one sentence."""
    return classify_tagged(tag(text, lexicons), lexicons)


@dataclass(frozen=True)
class CorpusAudit:
    counts: dict[FormalityLabel, int]
    total: int

    @property
    def proportions(self) -> dict[FormalityLabel, float]:
        if self.total == 0:
            return {label: 0.0 for label in FormalityLabel}
        return {label: self.counts[label] / self.total for label in FormalityLabel}


def classify_corpus(corpus: Iterable[str], lexicons: LexiconSet) -> CorpusAudit:
    """Label every sentence and tally per-label counts and proportions."""
    counts = {label: 0 for label in FormalityLabel}
    total = 0
    for text in corpus:
        counts[classify(text, lexicons).label] += 1
        total += 1
    return CorpusAudit(counts=counts, total=total)
