"""Command-line entry points: ingest, train, evaluate, warn-sweep, serve.

Every subcommand exits 0 on success and nonzero with a single-line
error on stderr otherwise. The transformer backend degrades gracefully:
if its optional stack is missing, training falls back to the linear
backend with a warning.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from casebrief.classifier.artifact import load_model, save_model, train
from casebrief.classifier.types import BackendUnavailable, TrainConfig
from casebrief.corpus.io import (
    ProcessedCorpus,
    ingest_corpus,
    read_processed_corpus,
    read_raw_corpus,
    write_processed_corpus,
)
from casebrief.corpus.segment import load_heading_patterns
from casebrief.corpus.splits import make_splits
from casebrief.corpus.types import RawBrief
from casebrief.evaluation.records import run_evaluation
from casebrief.evaluation.report import warning_report
from casebrief.service.config import ServiceConfig
from casebrief.warnings import SWEEP_TAUS


def _parse_ratios(text: str) -> tuple[float, float, float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"ratios must be three comma-separated numbers, got {text!r}")
    return (float(parts[0]), float(parts[1]), float(parts[2]))


def _parse_taus(text: str) -> tuple[float, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("at least one threshold is required")
    return tuple(float(p) for p in parts)


def _reassign_split(corpus: ProcessedCorpus, seed: int) -> ProcessedCorpus:
    stubs = [RawBrief(doc_id=b.doc_id, title=b.title, body=b.body) for b in corpus.briefs]
    split = make_splits(stubs, seed=seed)
    return ProcessedCorpus(briefs=corpus.briefs, split_of=split.assignment())


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(
        json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )


def cmd_ingest(args: argparse.Namespace) -> int:
    raws = read_raw_corpus(args.infile)
    phrases = load_heading_patterns(args.patterns)
    corpus = ingest_corpus(raws, phrases, seed=args.seed, ratios=_parse_ratios(args.ratios))
    write_processed_corpus(args.out, corpus)
    counts = {s: len(corpus.doc_ids(s)) for s in ("train", "validation", "test")}
    print(
        f"ingested {len(corpus.briefs)} of {len(raws)} documents "
        f"({counts['train']} train / {counts['validation']} validation / {counts['test']} test) "
        f"-> {args.out}"
    )
    return 0


def cmd_train(args: argparse.Namespace) -> int:
    corpus = read_processed_corpus(args.corpus)
    if args.split_seed is not None:
        corpus = _reassign_split(corpus, args.split_seed)
    train_set = corpus.sentences("train")
    validation = corpus.sentences("validation")
    config = TrainConfig(backend=args.backend, epochs=args.epochs, seed=args.seed)
    try:
        model = train(train_set, validation, config)
    except BackendUnavailable as exc:
        print(f"warning: {exc}; falling back to the linear backend", file=sys.stderr)
        config = TrainConfig(backend="linear", epochs=args.epochs, seed=args.seed)
        model = train(train_set, validation, config)
    save_model(model, args.out)
    scores = ", ".join(
        "n/a" if s is None else f"{s:.4f}" for s in model.epoch_scores
    ) or "n/a"
    print(
        f"trained {model.backend} on {len(train_set)} sentences "
        f"(validation F1 per epoch: {scores}; kept epoch "
        f"{model.best_epoch + 1 if model.best_epoch is not None else 'n/a'}) -> {args.out}"
    )
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    corpus = read_processed_corpus(args.corpus)
    if args.split_seed is not None:
        corpus = _reassign_split(corpus, args.split_seed)
    model = load_model(args.model)
    record = run_evaluation(
        model,
        corpus,
        split=args.split,
        taus=_parse_taus(args.taus),
        baseline_seed=args.baseline_seed,
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_json(out / "classification_report.json", record.classification.to_dict())
    (out / "classification_report.txt").write_text(
        record.classification.render_text(), encoding="utf-8"
    )
    _write_json(out / "warning_report.json", record.warnings.to_dict())
    (out / "warning_report.txt").write_text(record.warnings.render_text(), encoding="utf-8")
    _write_json(
        out / "label_distribution.json",
        {
            "split": record.split,
            "total": sum(record.label_counts.values()),
            "counts": record.label_counts,
        },
    )
    fp_rates = ", ".join(
        f"{t.tau:g}: " + (f"{t.fp_rate:.4f}" if t.fp_rate is not None else "n/a")
        for t in record.warnings.tables
    )
    print(
        f"evaluated {model.backend} on {record.classification.n_sentences} {args.split} sentences: "
        f"weighted F1 {record.classification.summary.weighted_f1:.4f}; fp rates {{{fp_rates}}} -> {out}"
    )
    return 0


def cmd_warn_sweep(args: argparse.Namespace) -> int:
    corpus = read_processed_corpus(args.corpus)
    model = load_model(args.model)
    sentences = corpus.sentences(args.split)
    report = warning_report(model, sentences, _parse_taus(args.taus))
    _write_json(Path(args.out), report.to_dict())
    totals = ", ".join(f"{t.tau:g}: {t.total_warnings}" for t in report.tables)
    print(f"swept {len(sentences)} sentences x 6 labels; warnings {{{totals}}} -> {args.out}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from casebrief.service.app import create_app

    if args.config:
        config = ServiceConfig.from_file(args.config)
        if args.store:
            config.store_path = args.store
        if args.model:
            config.model_path = args.model
    else:
        if not args.store:
            raise ValueError("serve needs --store (or --config pointing at one)")
        config = ServiceConfig(
            store_path=args.store,
            model_path=args.model,
            default_tau=args.tau,
            port=args.port,
        )
    app = create_app(config)
    uvicorn.run(app, host=args.host, port=args.port or config.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casebrief",
        description="Case-brief analysis: corpus ingestion, sentence "
        "classification, label warnings, tutoring sessions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="segment raw briefs and assign splits")
    p.add_argument("--in", dest="infile", required=True, help="raw corpus file (one record per line)")
    p.add_argument("--out", required=True, help="processed corpus output file")
    p.add_argument("--patterns", default=None, help="heading pattern file (default: shipped set)")
    p.add_argument("--seed", type=int, default=0, help="split shuffle seed")
    p.add_argument("--ratios", default="0.7,0.15,0.15", help="train,validation,test ratios")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("train", help="train a classifier backend")
    p.add_argument("--corpus", required=True, help="processed corpus file")
    p.add_argument("--split-seed", type=int, default=None,
                   help="reshuffle the document split with this seed (default: keep stored split)")
    p.add_argument("--backend", choices=("baseline", "linear", "transformer"), default="linear")
    p.add_argument("--epochs", type=int, default=4)
    p.add_argument("--seed", type=int, default=0, help="training seed")
    p.add_argument("--out", required=True, help="model artifact directory")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", help="classification and warning reports on one split")
    p.add_argument("--model", required=True, help="model artifact directory")
    p.add_argument("--corpus", required=True, help="processed corpus file")
    p.add_argument("--split", choices=("train", "validation", "test"), default="test")
    p.add_argument("--split-seed", type=int, default=None,
                   help="reshuffle the document split with this seed (default: keep stored split)")
    p.add_argument("--taus", default="0.05,0.1,0.2", help="warning thresholds to sweep")
    p.add_argument("--baseline-seed", type=int, default=0,
                   help="seed for stratified baseline sampling")
    p.add_argument("--out", required=True, help="report output directory")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("warn-sweep", help="warning/abstention table per threshold")
    p.add_argument("--model", required=True, help="model artifact directory")
    p.add_argument("--corpus", required=True, help="processed corpus file")
    p.add_argument("--split", choices=("train", "validation", "test"), default="test")
    p.add_argument("--taus", default="0.05,0.1,0.2", help="warning thresholds to sweep")
    p.add_argument("--out", required=True, help="report output file")
    p.set_defaults(func=cmd_warn_sweep)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--store", default=None, help="project store directory")
    p.add_argument("--model", default=None, help="model artifact directory to serve")
    p.add_argument("--tau", type=float, default=0.05, help="interactive warning threshold")
    p.add_argument("--config", default=None, help="service config file (JSON)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 130
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
