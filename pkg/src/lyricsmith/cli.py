"""Batch entry points for the full pipeline.

Subcommands: preprocess, build-dataset, train-baseline, evaluate, suggest,
serve. Every command is deterministic under --seed. Exit codes: 0 success,
1 usage error, 2 data error, 3 backend error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import corpus as corpus_mod
from . import dataset as dataset_mod
from . import generation as gen_mod
from . import metrics as metrics_mod
from .errors import (
    BackendUnavailable,
    EmptyCorpus,
    InsufficientRhymes,
    LengthMismatch,
    MalformedResponse,
    MalformedRow,
    ParseError,
    UnknownWord,
)
from .phonetics import Phonetics, PhoneticsConfig, default_dictionary_path
from .rhyme import EquivalenceTable, Rhymer, build_rhyme_dictionary, default_table_path

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_BACKEND = 3

DATA_ERRORS = (
    ParseError,
    EmptyCorpus,
    MalformedRow,
    InsufficientRhymes,
    UnknownWord,
    LengthMismatch,
    FileNotFoundError,
)
BACKEND_ERRORS = (BackendUnavailable, MalformedResponse)


class CliParser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this project reserves 2 for data errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_phonetics_flags(parser):
    parser.add_argument(
        "--pron-dict",
        default=str(default_dictionary_path()),
        help="pronunciation snapshot (word<TAB>IPA phonemes)",
    )
    parser.add_argument(
        "--equivalence-table",
        default=str(default_table_path()),
        help="near-rhyme equivalence table",
    )


def _add_filter_flags(parser):
    parser.add_argument("--similarity-threshold", type=float, default=corpus_mod.SIMILARITY_THRESHOLD)
    parser.add_argument("--min-verse-chars", type=int, default=corpus_mod.MIN_VERSE_CHARS)
    parser.add_argument("--min-verse-lines", type=int, default=corpus_mod.MIN_VERSE_LINES)
    parser.add_argument("--stopword-floor", type=float, default=corpus_mod.STOPWORD_FLOOR)


def _phonetics(args) -> Phonetics:
    return Phonetics(PhoneticsConfig(dictionary_path=Path(args.pron_dict)))


def _rhymer(args, phonetics: Phonetics) -> Rhymer:
    return Rhymer(phonetics, EquivalenceTable.load(args.equivalence_table))


def _preprocessed(args):
    raw = corpus_mod.ingest(args.corpus)
    return corpus_mod.preprocess(
        raw,
        similarity_threshold=args.similarity_threshold,
        min_chars=args.min_verse_chars,
        min_lines=args.min_verse_lines,
        stopword_floor=args.stopword_floor,
    )


def cmd_preprocess(args) -> int:
    filtered, stats = _preprocessed(args)
    if args.out:
        corpus_mod.write_corpus(filtered, args.out)
    if args.json:
        print(json.dumps(stats.to_dict(), indent=2, sort_keys=True))
    else:
        for key, value in stats.to_dict().items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_build_dataset(args) -> int:
    filtered, _ = _preprocessed(args)
    phonetics = _phonetics(args)
    rhymer = _rhymer(args, phonetics)
    split_cfg = corpus_mod.SplitConfig(
        test_fraction=args.test_fraction,
        rng_seed=args.seed,
        allow_artists=tuple(args.allow_artist or ()),
        deny_artists=tuple(args.deny_artist or ()),
    )
    train, test = corpus_mod.split_by_song(filtered, split_cfg)
    opts = dataset_mod.MixtureOptions(
        seed=args.seed,
        include_rhyme_list=args.dataset == "combined-list",
        rhyme_list_size=args.rhyme_list_size,
        control_syllable_tags=args.control_syllable_tags,
    )
    out_dir = Path(args.out_dir)
    manifests = []
    for split_name, split_corpus in (("train", train), ("test", test)):
        if args.dataset in ("combined", "combined-list"):
            mixture = dataset_mod.build_combined(split_corpus, phonetics, rhymer, opts)
        elif args.dataset == "control":
            examples = dataset_mod.build_control(split_corpus, phonetics, opts)
            mixture = dataset_mod.TaskMixture({"control": examples}, {"control": 1.0})
        elif args.dataset == "rhyme":
            examples = dataset_mod.build_rhyme_dataset(split_corpus, phonetics, rhymer, opts)
            mixture = dataset_mod.TaskMixture({"rhyme": examples}, {"rhyme": 1.0})
        else:  # ending
            examples = dataset_mod.build_ending_dataset(split_corpus, phonetics, opts)
            mixture = dataset_mod.TaskMixture({"ending": examples}, {"ending": 1.0})
        manifest = dataset_mod.write_mixture(
            mixture, out_dir, stem=f"{args.dataset}.{split_name}"
        )
        manifests.append(manifest)
        total = sum(len(v) for v in mixture.tasks.values())
        print(f"{split_name}: {total} examples across {len(mixture.tasks)} task(s)")
    print("manifests: " + ", ".join(str(m) for m in manifests))
    return EXIT_OK


def cmd_train_baseline(args) -> int:
    filtered, _ = _preprocessed(args)
    if args.test_fraction > 0:
        train, _ = corpus_mod.split_by_song(
            filtered, corpus_mod.SplitConfig(test_fraction=args.test_fraction, rng_seed=args.seed)
        )
    else:
        train = filtered
    model = gen_mod.ngram_train(train.lines(), order=args.order)
    model.save(args.out)
    print(f"trained order-{args.order} model on {len(train)} songs -> {args.out}")
    return EXIT_OK


def _make_backend(args, phonetics, rhymer):
    if args.backend == "remote":
        if not args.endpoint:
            raise BackendUnavailable("--endpoint is required for the remote backend")
        return gen_mod.RemoteBackend(
            args.endpoint, timeout_ms=args.timeout_ms, auth_header=args.auth_header
        ), None
    if args.backend == "echo":
        rows = dataset_mod.read_rows(args.dataset)
        return gen_mod.EchoBackend(rows), None
    # baseline
    if not args.corpus:
        raise EmptyCorpus("--corpus is required for the baseline backend")
    filtered, _ = _preprocessed(args)
    rdict = build_rhyme_dictionary(filtered.lines(), rhymer)
    if args.model:
        model = gen_mod.NgramModel.load(args.model)
    else:
        model = gen_mod.ngram_train(filtered.lines(), order=args.order)
    return gen_mod.NgramBackend(model, phonetics, rdict), rdict


def cmd_evaluate(args) -> int:
    phonetics = _phonetics(args)
    rhymer = _rhymer(args, phonetics)
    examples = dataset_mod.deserialize(args.dataset)
    if not examples:
        raise EmptyCorpus(f"no examples in {args.dataset}")
    backend, _ = _make_backend(args, phonetics, rhymer)
    report = metrics_mod.evaluate(
        backend,
        examples,
        phonetics,
        rhymer,
        seed=args.seed,
        dataset_id=Path(args.dataset).name,
    )
    report_path = Path(args.report)
    report_path.parent.mkdir(parents=True, exist_ok=True)
    report.save_json(report_path)
    report.save_tsv(report_path.with_suffix(".tsv"))
    if not args.no_figure:
        from .plots import render_report_figure

        render_report_figure(report, report_path.with_suffix(".png"))
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        for key, value in report.metric_values().items():
            print(f"{key}: {value:.4f}")
        print(f"report: {report_path}")
    return EXIT_OK


def cmd_suggest(args) -> int:
    if args.end_word and args.force_rhyme:
        print("error: --end-word and --force-rhyme are mutually exclusive", file=sys.stderr)
        return EXIT_USAGE
    phonetics = _phonetics(args)
    rhymer = _rhymer(args, phonetics)
    backend, rdict = _make_backend(args, phonetics, rhymer)
    if rdict is None:
        filtered, _ = _preprocessed(args)
        rdict = build_rhyme_dictionary(filtered.lines(), rhymer)
    req = gen_mod.SuggestionRequest(
        input_lines=tuple(args.line),
        syllable_target=args.syllables,
        ending_word=args.end_word,
        force_rhyme=args.force_rhyme,
        k=args.k,
    )
    result = gen_mod.suggest(
        req,
        backend,
        phonetics,
        rhymer,
        rdict,
        rng=random.Random(args.seed),
        retry_limit=args.syllable_retries,
        top_rhyme_count=args.top_rhymes,
    )
    if args.json:
        payload = {
            "candidates": [
                {"line": c.line, "report": c.report.to_dict()} for c in result.candidates
            ],
            "queries": result.queries,
            "notes": result.notes,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for note in result.notes:
            print(f"note: {note}")
        for i, cand in enumerate(result.candidates, start=1):
            r = cand.report
            parts = [f"syllables {r.syllable_count} (target {r.syllable_target})"]
            if r.end_word_match is not None:
                parts.append(f"end word {'ok' if r.end_word_match else 'MISSED'}")
            parts.append(f"rhyme {r.rhyme_class}")
            print(f"{i}. {cand.line}")
            print(f"   [{', '.join(parts)}, attempts {r.attempts}]")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import ServiceState, SessionStore, create_app

    phonetics = _phonetics(args)
    rhymer = _rhymer(args, phonetics)
    backend, rdict = _make_backend(args, phonetics, rhymer)
    if rdict is None:
        filtered, _ = _preprocessed(args)
        rdict = build_rhyme_dictionary(filtered.lines(), rhymer)
    state = ServiceState(
        phonetics=phonetics,
        rhymer=rhymer,
        rdict=rdict,
        backend=backend,
        store=SessionStore(args.session_log),
        seed=args.seed,
        default_k=args.k,
    )
    app = create_app(state, cors_origins=args.cors_origin or None)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> CliParser:
    parser = CliParser(prog="lyricsmith", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preprocess", parents=[], help="filter a corpus and report drop stats")
    p.add_argument("corpus")
    p.add_argument("--out", help="write the filtered corpus here")
    p.add_argument("--json", action="store_true")
    _add_filter_flags(p)
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("build-dataset", help="build tagged text-to-text datasets")
    p.add_argument("corpus")
    p.add_argument("--out-dir", required=True)
    p.add_argument(
        "--dataset",
        choices=["control", "rhyme", "ending", "combined", "combined-list"],
        default="combined",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.1)
    p.add_argument("--rhyme-list-size", type=int, default=dataset_mod.DEFAULT_RHYME_LIST_SIZE)
    p.add_argument("--allow-artist", action="append")
    p.add_argument("--deny-artist", action="append")
    p.add_argument("--control-syllable-tags", action="store_true")
    _add_filter_flags(p)
    _add_phonetics_flags(p)
    p.set_defaults(func=cmd_build_dataset)

    p = sub.add_parser("train-baseline", help="train and save the n-gram baseline")
    p.add_argument("corpus")
    p.add_argument("--out", required=True)
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--test-fraction", type=float, default=0.0)
    _add_filter_flags(p)
    p.set_defaults(func=cmd_train_baseline)

    p = sub.add_parser("evaluate", help="run the five metrics for a backend on a test TSV")
    p.add_argument("--backend", choices=["baseline", "remote", "echo"], default="baseline")
    p.add_argument("--dataset", required=True, help="test TSV (rendered_input<TAB>target)")
    p.add_argument("--corpus", help="corpus for the baseline model and rhyme dictionary")
    p.add_argument("--model", help="saved baseline model (optional)")
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--endpoint")
    p.add_argument("--timeout-ms", type=int, default=5000)
    p.add_argument("--auth-header")
    p.add_argument("--report", default="report.json")
    p.add_argument("--no-figure", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    _add_filter_flags(p)
    _add_phonetics_flags(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("suggest", help="one-shot suggestion with constraint reports")
    p.add_argument("--line", action="append", required=True, help="input line (repeat, max 4)")
    p.add_argument("--syllables", type=int)
    p.add_argument("--end-word")
    p.add_argument("--force-rhyme", action="store_true")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--top-rhymes", type=int, default=gen_mod.FORCE_RHYME_QUERIES)
    p.add_argument("--syllable-retries", type=int, default=gen_mod.SYLLABLE_RETRY_LIMIT)
    p.add_argument("--backend", choices=["baseline", "remote"], default="baseline")
    p.add_argument("--corpus")
    p.add_argument("--model")
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--endpoint")
    p.add_argument("--timeout-ms", type=int, default=5000)
    p.add_argument("--auth-header")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    _add_filter_flags(p)
    _add_phonetics_flags(p)
    p.set_defaults(func=cmd_suggest)

    p = sub.add_parser("serve", help="boot the suggestion service")
    p.add_argument("--corpus")
    p.add_argument("--model")
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--backend", choices=["baseline", "remote"], default="baseline")
    p.add_argument("--endpoint")
    p.add_argument("--timeout-ms", type=int, default=5000)
    p.add_argument("--auth-header")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--session-log", default="sessions.jsonl")
    p.add_argument("--cors-origin", action="append")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    _add_filter_flags(p)
    _add_phonetics_flags(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except BACKEND_ERRORS as exc:
        print(f"backend error: {exc}", file=sys.stderr)
        return EXIT_BACKEND
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
