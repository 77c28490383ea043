"""Shared oracles and synthetic-data generators for the test suite.

Everything here is deliberately independent of the implementation paths it
checks: the tokenizer oracle is a regex grammar, the kappa oracle counts
annotator pairs, the overlap oracle enumerates joined-string n-grams with
plain dicts, and the metrics oracle rebuilds the confusion matrix by
brute-force filtering.
"""

from __future__ import annotations

import itertools
import random
import re
from fractions import Fraction

from formality3._emoji import EMOJI_RANGES

# --- tokenizer oracle ------------------------------------------------------

_EMOJI_CLASS = "".join(f"{chr(lo)}-{chr(hi)}" for lo, hi in EMOJI_RANGES)
_WORD = r"[A-Za-z0-9]+(?:['’][A-Za-z0-9]+)*"
_TOKEN_RE = re.compile(
    rf"[{_EMOJI_CLASS}]"
    rf"|{_WORD}(?:\.{_WORD})+\.?"   # dotted word, optional trailing dot
    rf"|{_WORD}"
    rf"|\S"
)


def oracle_tokenize(text: str) -> list[str]:
    """Token surfaces derived from a regex grammar of the stated rules.

    Only valid over the ASCII-word alphabet (plus emoji); the generators
    below stay inside it.
    """
    return [m.group() for m in _TOKEN_RE.finditer(text)]


def random_token_text(rng: random.Random, length: int = 12) -> str:
    alphabet = list("abcXY012") + ["'", "’", ".", ",", "!", "?", " ",
                                   "\U0001F602", "⭐", ":", ")", "_"]
    return "".join(rng.choice(alphabet) for _ in range(length))


# --- kappa oracle ----------------------------------------------------------

def pairwise_kappa_oracle(ratings: list[list]) -> float:
    """Fleiss' kappa by counting agreeing annotator pairs per item."""
    n = len(ratings[0])
    pairs_per_item = n * (n - 1) // 2
    observed = Fraction(0)
    for row in ratings:
        agreeing = sum(1 for a, b in itertools.combinations(row, 2) if a == b)
        observed += Fraction(agreeing, pairs_per_item)
    observed /= len(ratings)

    all_ratings = [label for row in ratings for label in row]
    expected = Fraction(0)
    for label in set(all_ratings):
        p = Fraction(all_ratings.count(label), len(all_ratings))
        expected += p * p
    if expected == 1:
        raise ZeroDivisionError("kappa undefined")
    return float((observed - expected) / (1 - expected))


# --- n-gram overlap oracle --------------------------------------------------

def overlap_oracle(train: list[str], test: list[str], n: int) -> float:
    """Joined-string n-gram enumeration with dicts (no sets of tuples)."""
    def grams(sentences):
        seen: dict[str, bool] = {}
        for sentence in sentences:
            words = sentence.lower().split()
            for i in range(len(words) - n + 1):
                seen["\x00".join(words[i:i + n])] = True
        return seen

    test_grams = grams(test)
    if not test_grams:
        return 0.0
    train_grams = grams(train)
    hits = sum(1 for g in test_grams if g in train_grams)
    return hits / len(test_grams)


def random_word_corpus(rng: random.Random, vocab: list[str],
                       n_sentences: int, max_len: int = 8) -> list[str]:
    corpus = []
    for _ in range(n_sentences):
        length = rng.randint(1, max_len)
        corpus.append(" ".join(rng.choice(vocab) for _ in range(length)))
    return corpus


# --- confusion-matrix oracle -------------------------------------------------

def metrics_oracle(records) -> dict:
    """Brute-force P/R/F1/accuracy by filtering the record list directly."""
    out: dict = {}
    total = len(records)
    correct = sum(1 for r in records if r.judged == r.target)
    out["accuracy"] = correct / total if total else 0.0
    for target, direction in (("formal", "I->F"), ("informal", "F->I")):
        aimed = [r for r in records if r.direction == direction]
        judged_as = [r for r in records if r.judged == target]
        hit = sum(1 for r in aimed if r.judged == target)
        if not aimed:
            out[target] = None
            continue
        precision = hit / len(judged_as) if judged_as else 0.0
        recall = hit / len(aimed)
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        out[target] = (precision, recall, f1)
    return out


# --- formality-score oracle ----------------------------------------------------

ALL_POS = ["noun", "verb", "adjective", "adverb", "pronoun", "preposition",
           "article", "interjection", "conjunction", "numeral", "punctuation",
           "emoji", "other"]


def make_tagged(pos_list):
    """A TaggedSentence with the given POS classes and one-char surfaces."""
    from formality3.textcore import TaggedSentence, Token

    tokens = tuple(
        Token(surface="x", start=2 * i, end=2 * i + 1, pos=pos)
        for i, pos in enumerate(pos_list))
    return TaggedSentence(text=" ".join("x" for _ in pos_list), tokens=tokens)


def score_oracle(pos_list):
    """Independent evaluation of the score formula via explicit percentages."""
    from collections import Counter

    counted = [p for p in pos_list if p != "punctuation"]
    counts = Counter(counted)
    total = len(counted)
    pct = {pos: 100.0 * counts[pos] / total for pos in counts}
    up = sum(pct.get(p, 0.0) for p in ("noun", "adjective", "preposition", "article"))
    down = sum(pct.get(p, 0.0) for p in ("pronoun", "verb", "adverb", "interjection"))
    return (up - down + 100.0) / 2.0


# --- sentence generators ------------------------------------------------------

NEUTRAL_SENTENCES = [
    "the cat sleeps near the door",
    "the dog runs fast",
    "the report looks fine",
    "the meeting starts at noon",
    "the answer remains unclear",
    "a bird sings in the morning",
    "the teacher reads a book",
    "the team plays a game today",
]

INFORMAL_INJECTIONS = [
    "lol", "idk", "btw", "omg", "wow", "gonna", "dunno", "sooo",
    "\U0001F602", ":)", "O_O", "im", "dont",
]
CASUAL_INJECTIONS = ["can't", "don't", "I'm", "info", "asap", "you", "your", "hey"]
FORMAL_INJECTIONS = [
    "it appears that", "may suggest", "presumably",
    "transformation", "development", "awareness",
    "was rejected", "is taken", "were considered",
]


def inject_markers(rng: random.Random, tiers: set[str]) -> str:
    """A neutral base sentence with 1-2 markers per requested tier spliced in."""
    words = rng.choice(NEUTRAL_SENTENCES).split()
    pools = {"informal": INFORMAL_INJECTIONS, "casual": CASUAL_INJECTIONS,
             "formal": FORMAL_INJECTIONS}
    for tier in tiers:
        for _ in range(rng.randint(1, 2)):
            marker = rng.choice(pools[tier])
            pos = rng.randint(0, len(words))
            words[pos:pos] = marker.split()
    return " ".join(words)


def casual_anchor_corpus(rng: random.Random, n: int) -> list[str]:
    """Synthetic anchors the rule judge labels Casual."""
    openers = ["Hey,", "Hi,", ""]
    subjects = ["I'm", "you're", "that's", "it's", "we're"]
    middles = ["not sure the report", "pretty sure the meeting",
               "quite sure the answer", "certain the plan",
               "sure the question"]
    tails = ["was right.", "needs more info.", "can't wait.",
             "looks fine to me.", "should happen soon."]
    corpus = []
    for _ in range(n):
        parts = [rng.choice(openers), rng.choice(subjects),
                 rng.choice(middles), rng.choice(tails)]
        corpus.append(" ".join(p for p in parts if p))
    return corpus
