"""Directional style-transfer evaluation.

Records carry an intended direction (I->F or F->I) and a judged binary
level; metrics come from the 2x2 direction x judged-level confusion matrix.
Fluency is only collected for records that landed in their target register,
and meaning preservation is a 2-of-3 majority over annotator votes.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Sequence

from formality3.classifier import FormalityLabel, classify
from formality3.metrics import majority_vote
from formality3.textcore import LexiconSet

I_TO_F = "I->F"
F_TO_I = "F->I"
DIRECTIONS = (I_TO_F, F_TO_I)

FORMAL = "formal"
INFORMAL = "informal"

_TARGET = {I_TO_F: FORMAL, F_TO_I: INFORMAL}


class EvalError(ValueError):
    pass


class JudgeError(RuntimeError):
    """A judge could not produce a usable verdict for one record."""


@dataclass(frozen=True)
class EvalRecord:
    source: str
    direction: str          # I->F or F->I
    generated: str
    judged: str | None = None       # "formal" | "informal"
    fluency: int | None = None      # 0..5
    meaning_preserved: bool | None = None

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise EvalError(f"direction must be one of {DIRECTIONS}, got {self.direction!r}")
        if self.judged is not None and self.judged not in (FORMAL, INFORMAL):
            raise EvalError(f"judged level must be 'formal' or 'informal', got {self.judged!r}")
        if self.fluency is not None and not 0 <= self.fluency <= 5:
            raise EvalError(f"fluency must be in 0..5, got {self.fluency!r}")

    @property
    def target(self) -> str:
        return _TARGET[self.direction]

    @property
    def correct(self) -> bool:
        return self.judged == self.target


def rule_judge(lexicons: LexiconSet) -> Callable[[str], str]:
    """Offline binary judge: the decision tree with Casual folded into
    informal."""

    def judge(text: str) -> str:
        label = classify(text, lexicons).label
        return FORMAL if label == FormalityLabel.FORMAL else INFORMAL

    return judge


def judge_records(records: Iterable[EvalRecord],
                  judge: Callable[[str], str],
                  jobs: int = 1) -> tuple[list[EvalRecord], int]:
    """Judge every record's generated text.

    Records with empty generated text, or whose judge call fails, are
    excluded and counted in the returned skipped tally. Order is preserved
    regardless of judging concurrency.
    """
    records = list(records)

    def _judge_one(record: EvalRecord) -> EvalRecord | None:
        if not record.generated.strip():
            return None
        try:
            return replace(record, judged=judge(record.generated))
        except JudgeError:
            return None

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            judged = list(pool.map(_judge_one, records))
    else:
        judged = [_judge_one(r) for r in records]
    kept = [r for r in judged if r is not None]
    skipped = len(records) - len(kept)
    if records and not kept:
        raise EvalError(f"all {len(records)} records failed judging")
    return kept, skipped


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class EvalReport:
    # confusion counts: (direction, judged level) -> count
    counts: dict[tuple[str, str], int]
    per_class: dict[str, ClassMetrics | None]  # target class -> metrics
    accuracy: float
    total: int
    mean_fluency: float | None = None
    meaning_preservation: float | None = None
    skipped: int = 0

    def direction_total(self, direction: str) -> int:
        return sum(c for (d, _), c in self.counts.items() if d == direction)


def directional_metrics(records: Sequence[EvalRecord],
                        skipped: int = 0) -> EvalReport:
    """P/R/F1 per target register plus overall accuracy.

    precision(c) = correct(c) / everything judged c; recall(c) = correct(c)
    / everything aimed at c; a direction with no records reports None and
    accuracy is taken over the rest.
    """
    counts: dict[tuple[str, str], int] = {
        (d, j): 0 for d in DIRECTIONS for j in (FORMAL, INFORMAL)
    }
    for record in records:
        if record.judged is None:
            raise EvalError("all records must be judged before computing metrics")
        counts[(record.direction, record.judged)] += 1

    per_class: dict[str, ClassMetrics | None] = {}
    correct_total = 0
    for direction in DIRECTIONS:
        target = _TARGET[direction]
        correct = counts[(direction, target)]
        aimed = counts[(direction, FORMAL)] + counts[(direction, INFORMAL)]
        judged_as_target = sum(
            c for (_, j), c in counts.items() if j == target)
        correct_total += correct
        if aimed == 0:
            per_class[target] = None
            continue
        precision = correct / judged_as_target if judged_as_target else 0.0
        recall = correct / aimed
        f1 = (2 * precision * recall / (precision + recall)
              if precision + recall > 0 else 0.0)
        per_class[target] = ClassMetrics(precision=precision, recall=recall, f1=f1)

    total = len(records)
    accuracy = correct_total / total if total else 0.0
    return EvalReport(counts=counts, per_class=per_class, accuracy=accuracy,
                      total=total, skipped=skipped)


def fluency_summary(records: Sequence[EvalRecord],
                    judge: Callable[[str], int],
                    jobs: int = 1) -> tuple[list[EvalRecord], float | None]:
    """Mean fluency over the correctly-transferred subset only.

    Returns the updated records and the mean (None when no record reached
    its target register).
    """
    records = list(records)

    def _score(record: EvalRecord) -> EvalRecord:
        if not record.correct:
            return record
        return replace(record, fluency=judge(record.generated))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            scored = list(pool.map(_score, records))
    else:
        scored = [_score(r) for r in records]
    values = [r.fluency for r in scored if r.fluency is not None and r.correct]
    mean = sum(values) / len(values) if values else None
    return scored, mean


def meaning_preservation_rate(
        votes: Sequence[Sequence[bool] | None]) -> tuple[float, int]:
    """Majority (2-of-3) meaning-preservation rate.

    Entries without exactly 3 votes are excluded and tallied. Returns
    (rate, excluded_count); rate is over the records that had full votes.
    """
    preserved = 0
    counted = 0
    excluded = 0
    for record_votes in votes:
        if record_votes is None or len(record_votes) != 3:
            excluded += 1
            continue
        counted += 1
        if majority_vote(list(record_votes)):
            preserved += 1
    if counted == 0:
        raise EvalError("no records carry a full set of 3 votes")
    return preserved / counted, excluded


def format_report(report: EvalReport) -> str:
    """Human-readable block mirroring the published table layout."""
    lines = []
    header = f"{'':>10}  {'P':>8} {'R':>8} {'F1':>8}"
    lines.append(header)
    for direction in (F_TO_I, I_TO_F):
        target = _TARGET[direction]
        metrics = report.per_class[target]
        if metrics is None:
            lines.append(f"{direction:>10}  {'--':>8} {'--':>8} {'--':>8}")
        else:
            lines.append(
                f"{direction:>10}  {metrics.precision:8.2f} "
                f"{metrics.recall:8.2f} {metrics.f1:8.2f}")
    lines.append(f"accuracy: {report.accuracy:.4f}  (n={report.total}, "
                 f"skipped={report.skipped})")
    if report.mean_fluency is not None:
        lines.append(f"fluency: {report.mean_fluency:.4f}")
    if report.meaning_preservation is not None:
        lines.append(f"meaning preservation: {report.meaning_preservation:.4f}")
    return "\n".join(lines)
