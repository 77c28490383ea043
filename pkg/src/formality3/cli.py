"""Single entry point driving every pipeline and metric.

Exit codes: 0 success, 1 usage error, 2 data error, 3 gateway error.
Machine-readable JSON goes to --out when given; otherwise a human-readable
block is printed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from formality3 import __version__
from formality3.classifier import (
    FormalityLabel,
    classify,
    classify_corpus,
    hd_formality_score,
)
from formality3.gateway import (
    BaseGateway,
    GatewayConfig,
    GatewayError,
    HttpGateway,
    StubGateway,
)
from formality3.metrics import (
    EscalationNeeded,
    KappaUndefined,
    MetricError,
    fleiss_kappa,
    overlap_report,
    sentence_stats,
)
from formality3.pipeline import (
    PipelineError,
    ScoredSentence,
    assemble_dataset,
    assemble_test_set,
    build_naive_pair,
    build_triples,
    extract_casual_anchors,
    read_triples,
    rule_judge_3way,
    write_triples,
)
from formality3.records import (
    DatasetManifest,
    DatasetRecord,
    RecordError,
    read_records,
    read_sentences,
    write_records,
)
from formality3.textcore import (
    LexiconError,
    LexiconSet,
    TaggedSentence,
    default_lexicon_dir,
    load_lexicons,
    tag,
)
from formality3.transfer_eval import (
    EvalError,
    EvalRecord,
    directional_metrics,
    fluency_summary,
    format_report,
    judge_records,
    meaning_preservation_rate,
    rule_judge,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_GATEWAY = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _emit(payload: dict, out: str | None, human: str) -> None:
    if out:
        Path(out).write_text(
            json.dumps(payload, ensure_ascii=False, indent=2) + "\n",
            encoding="utf-8")
    else:
        print(human)


def _lexicons(args) -> LexiconSet:
    return load_lexicons(args.lexicons or default_lexicon_dir())


def _gateway(args, lexicons: LexiconSet) -> BaseGateway:
    if args.stub:
        return StubGateway(lexicons=lexicons)
    config = GatewayConfig(endpoint=args.endpoint, model=args.model)
    return HttpGateway(config=config)


def _add_lexicon_flag(parser) -> None:
    parser.add_argument("--lexicons", help="lexicon directory "
                        "(default: the packaged resources)")


def _add_gateway_flags(parser) -> None:
    parser.add_argument("--stub", action="store_true",
                        help="offline stub gateway (no network, deterministic)")
    parser.add_argument("--endpoint",
                        default="http://localhost:8800/v1/chat/completions")
    parser.add_argument("--model", default="gpt-4o")


def _evidence_lines(labeled) -> str:
    if not labeled.evidence:
        return "  (no markers)"
    return "\n".join(
        f"  {e.tier:>8} {e.kind:<21} {e.matched!r} @ [{e.start},{e.end})"
        for e in labeled.evidence)


# subcommands -------------------------------------------------------------

def cmd_classify(args) -> int:
    lexicons = _lexicons(args)
    texts = [args.text] if args.text is not None else read_sentences(args.file)
    rows = []
    blocks = []
    for text in texts:
        labeled = classify(text, lexicons)
        rows.append({
            "text": text,
            "label": int(labeled.label),
            "label_name": str(labeled.label),
            "fscore": labeled.fscore,
            "evidence": [
                {"kind": e.kind, "tier": e.tier, "start": e.start,
                 "end": e.end, "matched": e.matched}
                for e in labeled.evidence
            ],
        })
        blocks.append(f"{int(labeled.label)} ({labeled.label})\n"
                      + _evidence_lines(labeled))
    _emit({"results": rows}, args.out, "\n".join(blocks))
    return EXIT_OK


def cmd_fscore(args) -> int:
    lexicons = _lexicons(args)
    texts = [args.text] if args.text is not None else read_sentences(args.file)
    rows = []
    lines = []
    for text in texts:
        score = hd_formality_score(tag(text, lexicons))
        rows.append({"text": text, "fscore": score})
        lines.append(f"{score:.4f}")
    _emit({"results": rows}, args.out, "\n".join(lines))
    return EXIT_OK


def cmd_audit(args) -> int:
    lexicons = _lexicons(args)
    audit = classify_corpus(read_sentences(args.corpus), lexicons)
    payload = {
        "total": audit.total,
        "counts": {str(label): audit.counts[label] for label in FormalityLabel},
        "proportions": {str(label): audit.proportions[label]
                        for label in FormalityLabel},
    }
    lines = [f"total: {audit.total}"]
    for label in FormalityLabel:
        lines.append(f"  {str(label):<9} {audit.counts[label]:>7}  "
                     f"({100 * audit.proportions[label]:.1f}%)")
    _emit(payload, args.out, "\n".join(lines))
    return EXIT_OK


def _parse_n_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


def cmd_overlap(args) -> int:
    ns = _parse_n_range(args.n)
    train = read_sentences(args.train)
    test = read_sentences(args.test)
    if ns == [1, 2, 3, 4, 5]:
        report = overlap_report(
            train, test, train_id=args.train, test_id=args.test,
            lowercase=not args.keep_case,
            include_punctuation=not args.drop_punctuation, jobs=args.jobs)
        ratios = report.ratios
    else:
        from formality3.metrics import ngram_overlap

        ratios = {n: ngram_overlap(train, test, n,
                                   lowercase=not args.keep_case,
                                   include_punctuation=not args.drop_punctuation,
                                   jobs=args.jobs)
                  for n in ns}
    payload = {"train": args.train, "test": args.test,
               "ratios": {str(n): ratios[n] for n in ns}}
    human = "  ".join(f"{n}-gram {ratios[n]:.3f}" for n in ns)
    _emit(payload, args.out, human)
    return EXIT_OK


def cmd_stats(args) -> int:
    from formality3.classifier import LabeledSentence

    corpus = []
    for record in read_records(args.records):
        corpus.append(LabeledSentence(
            sentence=TaggedSentence(text=record.text, tokens=()),
            label=FormalityLabel.from_code(record.level),
            evidence=(), fscore=None))
    stats = sentence_stats(corpus)
    payload = {"total": stats.total, "per_level": {}}
    lines = [f"{'level':<9} {'count':>7} {'chars':>8} {'words':>7}"]
    for label in FormalityLabel:
        level = stats.per_level[label]
        payload["per_level"][str(label)] = {
            "count": level.count,
            "mean_chars": round(level.mean_chars, 2),
            "mean_words": round(level.mean_words, 2),
        }
        lines.append(f"{str(label):<9} {level.count:>7} "
                     f"{level.mean_chars:>8.2f} {level.mean_words:>7.2f}")
    _emit(payload, args.out, "\n".join(lines))
    return EXIT_OK


def cmd_kappa(args) -> int:
    raw = Path(args.matrix).read_text(encoding="utf-8").strip()
    if raw.startswith("["):
        matrix = json.loads(raw)
    else:
        matrix = [line.split(",") for line in raw.splitlines() if line.strip()]
    try:
        kappa = fleiss_kappa(matrix)
        payload = {"kappa": kappa, "items": len(matrix)}
        human = f"kappa: {kappa:.6f}  (items={len(matrix)})"
    except KappaUndefined as exc:
        payload = {"kappa": None, "items": len(matrix),
                   "undefined_reason": str(exc)}
        human = f"kappa: undefined ({exc})"
    _emit(payload, args.out, human)
    return EXIT_OK


def cmd_build_3lf(args) -> int:
    lexicons = _lexicons(args)
    corpus = read_sentences(args.corpus)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    if args.judge == "llm-3way":
        gateway = _gateway(args, lexicons)
        judge = gateway.judge_formality_3way
    else:
        judge = rule_judge_3way(lexicons)
    anchors, tallies = extract_casual_anchors(corpus, judge)

    gateway = _gateway(args, lexicons)
    triples = build_triples(anchors, gateway, lexicons,
                            max_revisions=args.max_revisions,
                            source_corpus_id=args.corpus_id, jobs=args.jobs)
    validated = [t for t in triples if t.status == "validated"]
    quota = args.quota if args.quota is not None else len(validated)
    records, manifest = assemble_dataset(
        triples, quota, split=args.split, source_ids=(args.corpus_id,),
        config={
            "seed": args.seed, "max_revisions": args.max_revisions,
            "judge": args.judge, "quota": quota, "corpus_id": args.corpus_id,
            "stub": bool(args.stub),
        })
    write_triples(triples, out_dir / "triples.jsonl")
    write_records(records, out_dir / "dataset.jsonl")
    manifest.write(out_dir / "manifest.json")
    if args.call_log:
        gateway.save_call_log(args.call_log)
    print(f"anchors: {len(anchors)}/{len(corpus)} "
          f"(rejected: informal={tallies[FormalityLabel.INFORMAL]}, "
          f"formal={tallies[FormalityLabel.FORMAL]})")
    print(f"triples: {len(validated)} validated / {len(triples)} built")
    print(f"dataset: {len(records)} records -> {out_dir / 'dataset.jsonl'} "
          f"(digest {manifest.digest})")
    return EXIT_OK


def cmd_build_naive(args) -> int:
    lexicons = _lexicons(args)
    corpus = read_sentences(args.corpus)
    judge = rule_judge_3way(lexicons)
    informal = [s for s in corpus if judge(s) == FormalityLabel.INFORMAL]
    if args.count is not None:
        informal = informal[:args.count]
    gateway = _gateway(args, lexicons)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    records = []
    validated = 0
    for i, sentence in enumerate(informal):
        pair = build_naive_pair(sentence, gateway, lexicons,
                                pair_id=f"{args.corpus_id}-naive-{i:06d}")
        if pair.status != "validated":
            continue
        validated += 1
        records.append(DatasetRecord(
            id=f"{pair.id}.informal", text=pair.informal,
            level=int(FormalityLabel.INFORMAL), split=args.split))
        records.append(DatasetRecord(
            id=f"{pair.id}.formal", text=pair.formal,
            level=int(FormalityLabel.FORMAL), split=args.split))
    manifest = DatasetManifest(
        split=args.split,
        per_level={"informal": validated, "casual": 0, "formal": validated},
        source_ids=(args.corpus_id,),
        config={"pipeline": "naive", "count": args.count,
                "corpus_id": args.corpus_id, "stub": bool(args.stub)})
    write_records(records, out_dir / "dataset.jsonl")
    manifest.write(out_dir / "manifest.json")
    print(f"naive pairs: {validated} validated / {len(informal)} informal inputs")
    return EXIT_OK


def _load_pool(path: str) -> list[ScoredSentence]:
    pool = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("{"):
                row = json.loads(line)
                pool.append(ScoredSentence(text=row["text"],
                                           score=row.get("score")))
            else:
                pool.append(ScoredSentence(text=line))
    return pool


def cmd_build_test(args) -> int:
    records, manifest = assemble_test_set(
        _load_pool(args.informal_pool), _load_pool(args.formal_pool),
        per_side=args.count, seed=args.seed, split=args.split)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_records(records, out_dir / "dataset.jsonl")
    manifest.write(out_dir / "manifest.json")
    print(f"test split: {len(records)} records ({args.count} per direction)")
    return EXIT_OK


def _read_eval_records(path: str) -> tuple[list[EvalRecord], list]:
    rows = []
    votes = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            row = json.loads(line)
            rows.append(EvalRecord(
                source=row.get("source", row.get("text", "")),
                direction=row["direction"],
                generated=row["generated"],
                judged=row.get("judged")))
            votes.append(row.get("meaning_votes"))
    return rows, votes


def cmd_evaluate(args) -> int:
    lexicons = _lexicons(args)
    rows, votes = _read_eval_records(args.records)
    if args.judge == "llm-binary":
        gateway = _gateway(args, lexicons)
        judge = lambda text: ("formal" if gateway.judge_formality_binary(text)
                              else "informal")
    else:
        judge = rule_judge(lexicons)
    judged, skipped = judge_records(rows, judge, jobs=args.jobs)
    report = directional_metrics(judged, skipped=skipped)

    mean_fluency = None
    if args.fluency:
        gateway = _gateway(args, lexicons)
        judged, mean_fluency = fluency_summary(judged, gateway.judge_fluency,
                                               jobs=args.jobs)
    preservation = None
    if any(v is not None for v in votes):
        preservation, _ = meaning_preservation_rate(votes)
    from dataclasses import replace as _replace

    report = _replace(report, mean_fluency=mean_fluency,
                      meaning_preservation=preservation)

    payload = {
        "accuracy": report.accuracy,
        "total": report.total,
        "skipped": report.skipped,
        "per_class": {
            target: (None if metrics is None else {
                "precision": metrics.precision, "recall": metrics.recall,
                "f1": metrics.f1})
            for target, metrics in report.per_class.items()
        },
        "counts": {f"{d}|{j}": c for (d, j), c in report.counts.items()},
        "mean_fluency": report.mean_fluency,
        "meaning_preservation": report.meaning_preservation,
        "judge": args.judge,
    }
    _emit(payload, args.out, format_report(report))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from formality3.review.service import create_app
    from formality3.review.store import ReviewStore

    lexicons = _lexicons(args)
    store = ReviewStore(lexicons, annotators=args.annotators.split(","),
                        event_log=args.events)
    if args.enqueue:
        store.enqueue_triples(read_triples(args.enqueue))
    app = create_app(store)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


# parser ------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="formality3",
                     description="three-level formality spectrum toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="label one sentence or a file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--text")
    group.add_argument("--file")
    _add_lexicon_flag(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fscore", help="continuous formality score in [0,100]")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--text")
    group.add_argument("--file")
    _add_lexicon_flag(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fscore)

    p = sub.add_parser("audit", help="per-label counts over a corpus")
    p.add_argument("--corpus", required=True)
    _add_lexicon_flag(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("overlap", help="train/test n-gram overlap ratios")
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--n", default="1..5", help="an order (3) or a range (1..5)")
    p.add_argument("--keep-case", action="store_true")
    p.add_argument("--drop-punctuation", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_overlap)

    p = sub.add_parser("stats", help="per-level sentence statistics")
    p.add_argument("--records", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("kappa", help="Fleiss' kappa over a label matrix")
    p.add_argument("--matrix", required=True,
                   help="CSV (one item per line) or JSON list of lists")
    p.add_argument("--out")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("build-3lf", help="casual-anchored triple construction")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--quota", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-revisions", type=int, default=3)
    p.add_argument("--judge", choices=["rule", "llm-3way"], default="rule")
    p.add_argument("--split", default="train")
    p.add_argument("--corpus-id", default="corpus")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--call-log", help="write the gateway call log here")
    _add_lexicon_flag(p)
    _add_gateway_flags(p)
    p.set_defaults(func=cmd_build_3lf)

    p = sub.add_parser("build-naive",
                       help="single-hop informal->formal baseline set")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--count", type=int)
    p.add_argument("--split", default="train")
    p.add_argument("--corpus-id", default="corpus")
    _add_lexicon_flag(p)
    _add_gateway_flags(p)
    p.set_defaults(func=cmd_build_naive)

    p = sub.add_parser("build-test", help="two-direction evaluation split")
    p.add_argument("--informal-pool", required=True)
    p.add_argument("--formal-pool", required=True)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--split", default="test")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_build_test)

    p = sub.add_parser("evaluate", help="directional transfer metrics")
    p.add_argument("--records", required=True)
    p.add_argument("--judge", choices=["rule", "llm-binary"], default="rule")
    p.add_argument("--fluency", action="store_true",
                   help="also score fluency on correct transfers")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    _add_lexicon_flag(p)
    _add_gateway_flags(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("serve", help="run the review service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8321)
    p.add_argument("--annotators", default="a1,a2,a3")
    p.add_argument("--events", help="append-only event log path")
    p.add_argument("--enqueue", help="triples file to enqueue at startup")
    _add_lexicon_flag(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GatewayError as exc:
        print(f"gateway error: {exc}", file=sys.stderr)
        return EXIT_GATEWAY
    except (LexiconError, RecordError, MetricError, PipelineError, EvalError,
            EscalationNeeded, FileNotFoundError, json.JSONDecodeError,
            ValueError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
