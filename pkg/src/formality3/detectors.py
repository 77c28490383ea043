"""Span-level detectors for the tiered style markers.

Three tiers, matching the decision-tree branches:
  informal — slang, netspeak, interjections, emoji/emoticons, non-standard
             spelling, grammatical errors (a deliberately small heuristic
             subset, not a grammar checker)
  casual   — contractions, abbreviations, direct address
  formal   — hedging phrases, nominalizations, passive voice

Each detector returns FeatureEvidence whose span indexes real characters of
the input sentence. Detectors only read their own tables, so tiers are
independent of one another.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from formality3.textcore import (
    INTERJECTION,
    NOUN,
    PRONOUN,
    PUNCTUATION,
    VERB,
    EMOJI,
    LexiconSet,
    TaggedSentence,
)

# evidence kinds, grouped by tier
INFORMAL_KINDS = (
    "slang", "netspeak", "interjection", "emoji",
    "nonstandard_spelling", "grammatical_error",
)
CASUAL_KINDS = ("contraction", "abbreviation", "direct_address")
FORMAL_KINDS = ("hedging", "nominalization", "passive_voice")

KIND_TIER = {k: "informal" for k in INFORMAL_KINDS}
KIND_TIER.update({k: "casual" for k in CASUAL_KINDS})
KIND_TIER.update({k: "formal" for k in FORMAL_KINDS})


@dataclass(frozen=True)
class FeatureEvidence:
    kind: str
    start: int
    end: int
    matched: str

    @property
    def tier(self) -> str:
        return KIND_TIER[self.kind]


# ASCII emoticons; matched against the raw text, not token-aligned, with
# non-alphanumeric context on both sides so "said:" never yields "d:"
_EMOTICON_CORE = (
    r"[:;=][\-o\^']?[)(\]\[dDpP/\\|oO3*]",   # :-) ;) :P =D :o3
    r"[)(\]\[dDpP][-'^]?[:;=]",              # (: ): d:  (no letter noses: "do:")
    r"8[\-o\^'][)(\]\[dDpP]",                # 8-) needs a nose
    r"[-oO0>^tTxX;][_.\-~^][-oO0<^tTxX;]",   # O_O o.O ^_^ T_T >.< -_- (letter
    r"\^o\^",                                # middles would match words: "too")
    r"[Xx][dD]",                             # xD
    r"</?3",                                  # <3 </3
)
EMOTICON_RE = re.compile(
    r"(?<![A-Za-z0-9])(?:" + "|".join(_EMOTICON_CORE) + r")(?![A-Za-z0-9])"
)

# contraction -> expansion; entries are the casual-tier markers, so
# lexicalized forms like "o'clock" and "ma'am" are deliberately absent
CONTRACTIONS = {
    "i'm": "i am", "you're": "you are", "he's": "he is", "she's": "she is",
    "it's": "it is", "we're": "we are", "they're": "they are",
    "i've": "i have", "you've": "you have", "we've": "we have",
    "they've": "they have", "i'd": "i would", "you'd": "you would",
    "he'd": "he would", "she'd": "she would", "we'd": "we would",
    "they'd": "they would", "i'll": "i will", "you'll": "you will",
    "he'll": "he will", "she'll": "she will", "we'll": "we will",
    "they'll": "they will", "it'll": "it will", "that'll": "that will",
    "that's": "that is", "there's": "there is", "here's": "here is",
    "what's": "what is", "who's": "who is", "where's": "where is",
    "how's": "how is", "let's": "let us", "isn't": "is not",
    "aren't": "are not", "wasn't": "was not", "weren't": "were not",
    "don't": "do not", "doesn't": "does not", "didn't": "did not",
    "can't": "cannot", "couldn't": "could not", "shouldn't": "should not",
    "wouldn't": "would not", "won't": "will not", "hasn't": "has not",
    "haven't": "have not", "hadn't": "had not", "mustn't": "must not",
    "needn't": "need not", "ain't": "am not", "y'all": "you all",
    "could've": "could have", "should've": "should have",
    "would've": "would have", "must've": "must have",
}

# missing-apostrophe forms; curated for precision (no "ill", "id", "its",
# "wont", "cant" — all real words)
APOSTROPHE_CONFUSIONS = frozenset({
    "im", "dont", "doesnt", "didnt", "isnt", "arent", "wasnt", "werent",
    "couldnt", "shouldnt", "wouldnt", "havent", "hasnt", "hadnt",
    "ive", "youve", "weve", "theyve", "youre", "theyre",
    "thats", "whats", "theres", "heres", "wheres", "hes", "shes",
    "youll", "theyll", "youd", "mustnt", "neednt",
})

# shorthand respellings of standard words (initialisms live in netspeak)
RESPELLINGS = frozenset({
    "u", "r", "ur", "b4", "gr8", "thru", "tho", "cuz", "coz", "luv",
    "wat", "wut", "plz", "pls", "thx", "nite", "lite", "2day", "2morrow",
    "dat", "dis", "da", "wanna", "gonna", "gotta", "kinda", "sorta",
})

SECOND_PERSON = frozenset({"you", "your", "yours", "yourself", "yourselves"})

# abbreviation-shaped words that are fully lexicalized; never casual markers
ABBREVIATION_ALLOWLIST = frozenset({"tv", "ok", "okay", "am", "pm", "cd", "dvd", "id"})

BE_FORMS = frozenset({"am", "is", "are", "was", "were", "be", "been", "being"})

# past participles that neither end in -ed nor -en
IRREGULAR_PARTICIPLES = frozenset({
    "done", "gone", "made", "said", "found", "told", "known", "shown",
    "grown", "thrown", "drawn", "blown", "flown", "worn", "torn", "born",
    "sworn", "built", "sent", "spent", "bent", "lent", "kept", "slept",
    "felt", "left", "meant", "dealt", "held", "sold", "paid", "laid",
    "heard", "bound", "won", "met", "led", "fed", "read", "put", "set",
    "cut", "hit", "let", "shut", "cost", "lost", "brought", "bought",
    "thought", "caught", "taught", "fought", "sought", "sung", "rung",
    "hung", "begun", "become", "come", "run",
})

NOMINAL_SUFFIXES = ("tion", "sion", "ment", "ness", "ity", "ance", "ence")
MIN_NOMINAL_LEN = 6

ELONGATION_RE = re.compile(r"([a-z])\1\1")


def _require_tagged(sentence: TaggedSentence) -> None:
    if not sentence.tagged():
        raise ValueError("sentence must be pos-tagged before marker detection")


def _word_tokens(sentence: TaggedSentence):
    for i, token in enumerate(sentence.tokens):
        if token.pos not in (PUNCTUATION, EMOJI):
            yield i, token


def detect_informal_markers(sentence: TaggedSentence,
                            lexicons: LexiconSet) -> list[FeatureEvidence]:
    """Tier-1 markers: slang, netspeak, interjections, emoji/emoticons,
    non-standard spelling, and the heuristic grammatical-error subset."""
    _require_tagged(sentence)
    evidence: list[FeatureEvidence] = []
    slang = lexicons.words("slang")
    netspeak = lexicons.words("netspeak")
    interjections = lexicons.words("interjections")
    dictionary = lexicons.words("dictionary")

    first_word_idx = None
    prev_word: str | None = None
    for i, token in enumerate(sentence.tokens):
        surface = token.surface
        lowered = surface.lower()
        span = (token.start, token.end)

        if token.pos == EMOJI:
            evidence.append(FeatureEvidence("emoji", *span, surface))
            prev_word = None
            continue
        if token.pos == PUNCTUATION:
            prev_word = None
            continue

        if first_word_idx is None:
            first_word_idx = i
        if lowered in slang:
            evidence.append(FeatureEvidence("slang", *span, lowered))
        if lowered in netspeak:
            evidence.append(FeatureEvidence("netspeak", *span, lowered))
        if lowered in interjections or token.pos == INTERJECTION:
            evidence.append(FeatureEvidence("interjection", *span, lowered))

        if surface.isalpha() and lowered not in dictionary:
            if ELONGATION_RE.search(lowered) or lowered in netspeak \
                    or lowered in RESPELLINGS:
                evidence.append(
                    FeatureEvidence("nonstandard_spelling", *span, lowered))

        # grammatical-error heuristics: curated subset only
        if surface == "i" and token.pos == PRONOUN and i == first_word_idx:
            evidence.append(FeatureEvidence("grammatical_error", *span, "i"))
        if lowered in APOSTROPHE_CONFUSIONS:
            evidence.append(FeatureEvidence("grammatical_error", *span, lowered))
        if surface.isalpha() and prev_word == lowered:
            evidence.append(
                FeatureEvidence("grammatical_error", *span, f"{lowered} {lowered}"))
        prev_word = lowered if surface.isalpha() else None

    for match in EMOTICON_RE.finditer(sentence.text):
        evidence.append(
            FeatureEvidence("emoji", match.start(), match.end(), match.group()))
    return evidence


def detect_casual_markers(sentence: TaggedSentence,
                          lexicons: LexiconSet) -> list[FeatureEvidence]:
    """Tier-2 markers: contractions, abbreviations, direct address."""
    _require_tagged(sentence)
    evidence: list[FeatureEvidence] = []
    abbreviations = lexicons.words("abbreviations")
    vocatives = lexicons.words("direct_address")

    for _, token in _word_tokens(sentence):
        lowered = token.surface.lower().replace("’", "'")
        span = (token.start, token.end)
        if "'" in lowered and lowered in CONTRACTIONS:
            evidence.append(FeatureEvidence("contraction", *span, lowered))
        if lowered in abbreviations and lowered not in ABBREVIATION_ALLOWLIST:
            evidence.append(FeatureEvidence("abbreviation", *span, lowered))
        if lowered in SECOND_PERSON or lowered in vocatives:
            evidence.append(FeatureEvidence("direct_address", *span, lowered))
    return evidence


def _hedge_phrases(lexicons: LexiconSet) -> list[tuple[str, ...]]:
    phrases = [tuple(entry.split()) for entry in lexicons.words("hedges")]
    phrases.sort(key=len, reverse=True)  # longest match first
    return phrases


def detect_formal_markers(sentence: TaggedSentence,
                          lexicons: LexiconSet) -> list[FeatureEvidence]:
    """Tier-3 markers: hedging phrases, nominalizations, passive voice."""
    _require_tagged(sentence)
    evidence: list[FeatureEvidence] = []
    words = [(i, t) for i, t in _word_tokens(sentence)]
    surfaces = [t.surface.lower() for _, t in words]

    # hedging: token-aligned, case-insensitive, longest match first
    phrases = _hedge_phrases(lexicons)
    pos = 0
    while pos < len(words):
        matched = None
        for phrase in phrases:
            if tuple(surfaces[pos:pos + len(phrase)]) == phrase:
                matched = phrase
                break
        if matched:
            start = words[pos][1].start
            end = words[pos + len(matched) - 1][1].end
            evidence.append(FeatureEvidence("hedging", start, end, " ".join(matched)))
            pos += len(matched)
        else:
            pos += 1

    for _, token in words:
        lowered = token.surface.lower()
        if token.pos == NOUN and len(lowered) >= MIN_NOMINAL_LEN \
                and lowered.endswith(NOMINAL_SUFFIXES):
            evidence.append(
                FeatureEvidence("nominalization", token.start, token.end, lowered))

    # passive: a form of "be" with a past participle within the next 2 tokens
    for k, (_, token) in enumerate(words):
        if token.surface.lower() not in BE_FORMS:
            continue
        for j in (k + 1, k + 2):
            if j >= len(words):
                break
            cand = words[j][1]
            if _is_past_participle(cand.surface.lower(), cand.pos):
                text = sentence.text[token.start:cand.end]
                evidence.append(
                    FeatureEvidence("passive_voice", token.start, cand.end, text))
                break
    return evidence


def _is_past_participle(lowered: str, pos: str | None) -> bool:
    if pos != VERB:
        return False
    return lowered.endswith(("ed", "en")) or lowered in IRREGULAR_PARTICIPLES


def detect_all(sentence: TaggedSentence, lexicons: LexiconSet) -> list[FeatureEvidence]:
    """All three tiers, concatenated in tier order."""
    return (detect_informal_markers(sentence, lexicons)
            + detect_casual_markers(sentence, lexicons)
            + detect_formal_markers(sentence, lexicons))
