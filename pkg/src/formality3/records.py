"""Line-delimited record files and dataset manifests.

One JSON object per line, UTF-8, insertion-ordered fields
{id, text, level, split, triple_id?, direction?, provenance?}. Writers are
fully deterministic (no timestamps), so identical runs produce identical
bytes.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator


class RecordError(ValueError):
    pass


@dataclass(frozen=True)
class DatasetRecord:
    id: str
    text: str
    level: int  # 0 informal, 1 casual, 2 formal
    split: str
    triple_id: str | None = None
    direction: str | None = None
    provenance: dict | None = None

    def to_json(self) -> str:
        row: dict = {"id": self.id, "text": self.text,
                     "level": self.level, "split": self.split}
        if self.triple_id is not None:
            row["triple_id"] = self.triple_id
        if self.direction is not None:
            row["direction"] = self.direction
        if self.provenance is not None:
            row["provenance"] = self.provenance
        return json.dumps(row, ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "DatasetRecord":
        try:
            row = json.loads(line)
        except json.JSONDecodeError as exc:
            raise RecordError(f"malformed record line: {exc}") from None
        try:
            return cls(id=str(row["id"]), text=row["text"],
                       level=int(row["level"]), split=row["split"],
                       triple_id=row.get("triple_id"),
                       direction=row.get("direction"),
                       provenance=row.get("provenance"))
        except KeyError as exc:
            raise RecordError(f"record missing field {exc}") from None


def write_records(records: Iterable[DatasetRecord], path: str | Path) -> int:
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for record in records:
            fh.write(record.to_json() + "\n")
            count += 1
    return count


def read_records(path: str | Path) -> Iterator[DatasetRecord]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield DatasetRecord.from_json(line)


def read_sentences(path: str | Path) -> list[str]:
    """Corpus loader: records file (JSONL) or plain text, one sentence per
    line. Plain-text blank lines are skipped."""
    path = Path(path)
    sentences = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip():
                continue
            if line.lstrip().startswith("{"):
                sentences.append(DatasetRecord.from_json(line).text)
            else:
                sentences.append(line)
    return sentences


def config_digest(config: dict) -> str:
    canonical = json.dumps(config, sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class DatasetManifest:
    split: str
    per_level: dict[str, int]  # "informal"/"casual"/"formal" -> count
    source_ids: tuple[str, ...]
    config: dict

    @property
    def digest(self) -> str:
        return config_digest(self.config)

    def to_json(self) -> str:
        return json.dumps({
            "split": self.split,
            "per_level": self.per_level,
            "source_ids": list(self.source_ids),
            "config": self.config,
            "config_digest": self.digest,
        }, ensure_ascii=False, indent=2, sort_keys=True) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def read(cls, path: str | Path) -> "DatasetManifest":
        row = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(split=row["split"], per_level=row["per_level"],
                   source_ids=tuple(row["source_ids"]), config=row["config"])
