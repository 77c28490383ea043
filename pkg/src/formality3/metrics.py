"""Dataset integrity and agreement statistics.

n-gram overlap is the unique-test-n-gram coverage ratio (the standard
contamination measure): |unique test n-grams present in train| / |unique
test n-grams|. Lowercasing and punctuation inclusion are configurable since
published tables rarely state either choice.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

import numpy as np

from formality3.classifier import FormalityLabel, LabeledSentence
from formality3.textcore import tokenize


class MetricError(ValueError):
    pass


class KappaUndefined(MetricError):
    """Expected agreement is 1 (a single category everywhere), so kappa
    has a zero denominator."""


class EscalationNeeded(MetricError):
    """A three-way split: majority vote cannot pick a winner."""


def _sentence_ngrams(text: str, n: int, lowercase: bool,
                     include_punctuation: bool) -> set[tuple[str, ...]]:
    tokens = [t.surface for t in tokenize(text).tokens]
    if not include_punctuation:
        tokens = [t for t in tokens if any(c.isalnum() for c in t)]
    if lowercase:
        tokens = [t.lower() for t in tokens]
    if len(tokens) < n:
        return set()
    return {tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1)}


def _corpus_ngrams(sentences: Iterable[str], n: int, lowercase: bool,
                   include_punctuation: bool, jobs: int = 1) -> set[tuple[str, ...]]:
    sentences = list(sentences)
    if jobs <= 1 or len(sentences) < 2 * jobs:
        grams: set[tuple[str, ...]] = set()
        for text in sentences:
            grams |= _sentence_ngrams(text, n, lowercase, include_punctuation)
        return grams
    # sharded collection merged by set union; identical to the serial path
    chunk = (len(sentences) + jobs - 1) // jobs
    shards = [sentences[i:i + chunk] for i in range(0, len(sentences), chunk)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(
            lambda shard: _corpus_ngrams(shard, n, lowercase, include_punctuation),
            shards,
        )
    grams = set()
    for part in parts:
        grams |= part
    return grams


def ngram_overlap(train: Iterable[str], test: Iterable[str], n: int, *,
                  lowercase: bool = True, include_punctuation: bool = True,
                  jobs: int = 1) -> float:
    """Fraction of unique test n-grams that also occur in train.

    Sentences shorter than *n* tokens contribute nothing; a test side that
    yields zero n-grams gives ratio 0.0 with a warning.
    """
    if n < 1:
        raise MetricError(f"n must be >= 1, got {n}")
    test = list(test)
    if not test:
        raise MetricError("test corpus is empty")
    test_grams = _corpus_ngrams(test, n, lowercase, include_punctuation, jobs)
    if not test_grams:
        warnings.warn(f"test corpus yields no {n}-grams; overlap reported as 0.0")
        return 0.0
    train_grams = _corpus_ngrams(train, n, lowercase, include_punctuation, jobs)
    return len(test_grams & train_grams) / len(test_grams)


@dataclass(frozen=True)
class NGramOverlapReport:
    train_id: str
    test_id: str
    ratios: dict[int, float]          # n -> ratio, n = 1..5
    empty_ns: frozenset[int] = frozenset()  # orders where test had no n-grams

    def row(self) -> list[float]:
        return [self.ratios[n] for n in range(1, 6)]


def overlap_report(train: Iterable[str], test: Iterable[str], *,
                   train_id: str = "train", test_id: str = "test",
                   lowercase: bool = True, include_punctuation: bool = True,
                   jobs: int = 1) -> NGramOverlapReport:
    """Table-style overlap row for n = 1..5."""
    train = list(train)
    test = list(test)
    ratios: dict[int, float] = {}
    empty: set[int] = set()
    for n in range(1, 6):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            ratios[n] = ngram_overlap(
                train, test, n, lowercase=lowercase,
                include_punctuation=include_punctuation, jobs=jobs)
            if caught:
                empty.add(n)
    return NGramOverlapReport(train_id=train_id, test_id=test_id,
                              ratios=ratios, empty_ns=frozenset(empty))


@dataclass(frozen=True)
class LevelStats:
    count: int
    mean_chars: float
    mean_words: float


@dataclass(frozen=True)
class CorpusStats:
    per_level: dict[FormalityLabel, LevelStats]
    total: int


def sentence_stats(corpus: Iterable[LabeledSentence]) -> CorpusStats:
    """Per-level sentence counts, mean characters, mean whitespace words.

    Characters count every Unicode scalar of the raw text including internal
    whitespace; words are whitespace-separated chunks, independent of the
    tokenizer.
    """
    chars: dict[FormalityLabel, int] = {label: 0 for label in FormalityLabel}
    words: dict[FormalityLabel, int] = {label: 0 for label in FormalityLabel}
    counts: dict[FormalityLabel, int] = {label: 0 for label in FormalityLabel}
    total = 0
    for item in corpus:
        label = item.label
        counts[label] += 1
        chars[label] += len(item.sentence.text)
        words[label] += len(item.sentence.text.split())
        total += 1
    per_level = {}
    for label in FormalityLabel:
        c = counts[label]
        per_level[label] = LevelStats(
            count=c,
            mean_chars=chars[label] / c if c else 0.0,
            mean_words=words[label] / c if c else 0.0,
        )
    return CorpusStats(per_level=per_level, total=total)


def fleiss_kappa(ratings: Sequence[Sequence[Hashable]],
                 categories: Sequence[Hashable] | None = None) -> float:
    """Fleiss' kappa over an item x annotator label matrix.

    Every item must carry the same number (>= 2) of ratings. Perfect
    agreement returns exactly 1.0; when every rating across all items is a
    single category, expected agreement is 1 and KappaUndefined is raised.
    """
    if not ratings:
        raise MetricError("ratings matrix is empty")
    n_raters = len(ratings[0])
    if n_raters < 2:
        raise MetricError("need at least 2 ratings per item")
    for row in ratings:
        if len(row) != n_raters:
            raise MetricError("ragged ratings matrix: every item needs the "
                              f"same number of ratings ({n_raters})")
    if categories is None:
        categories = sorted({label for row in ratings for label in row}, key=repr)
    index = {label: k for k, label in enumerate(categories)}
    counts = np.zeros((len(ratings), len(categories)), dtype=np.int64)
    for i, row in enumerate(ratings):
        for label in row:
            try:
                counts[i, index[label]] += 1
            except KeyError:
                raise MetricError(f"rating {label!r} not in categories") from None

    p_item = (np.sum(counts * counts, axis=1) - n_raters) / (n_raters * (n_raters - 1))
    p_bar = float(np.mean(p_item))
    proportions = np.sum(counts, axis=0) / counts.sum()
    p_exp = float(np.dot(proportions, proportions))
    if p_bar == 1.0 and p_exp < 1.0:
        return 1.0
    if p_exp == 1.0:
        raise KappaUndefined(
            "kappa undefined: all ratings fall in a single category")
    return (p_bar - p_exp) / (1.0 - p_exp)


def majority_vote(labels: Sequence[Hashable]):
    """2-of-3 majority; a three-way split raises EscalationNeeded."""
    if len(labels) != 3:
        raise MetricError(f"majority vote needs exactly 3 labels, got {len(labels)}")
    for label in labels:
        if sum(1 for other in labels if other == label) >= 2:
            return label
    raise EscalationNeeded(f"three-way split: {list(labels)!r}")
