"""Command-line entry point: build-idf, summarize, lead, evaluate, tune."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import corpus, evaluator, ranker, summarizer, textproc, tuner
from .errors import FormatError, IoFailure, SummarizerError

log = logging.getLogger("extractsum")


def _read_text(path) -> str:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    return textproc.decode_utf8(data)


def _write(out, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write {out}: {exc}") from exc


def _lists(args):
    return textproc.load_stopwords(args.stopwords), textproc.load_suffixes(args.suffixes)


def _params(args) -> ranker.ScoreParams:
    params = ranker.load_params(args.params) if args.params else ranker.DEFAULT_PARAMS
    overrides = {k: getattr(args, k) for k in ("alpha", "beta", "theta", "l_lower", "l_upper")}
    text = "".join(f"{k}={v}\n" for k, v in overrides.items() if v is not None)
    return ranker.parse_params(text, base=params)


def _budget(args) -> summarizer.Budget:
    if args.budget_sentences is not None:
        return summarizer.Budget.sentences(args.budget_sentences)
    return summarizer.Budget.words(args.budget_words)


def read_manifest(path, n_fields: int) -> list[list[Path | str]]:
    """Parse a TSV manifest; relative paths resolve against the manifest's directory."""
    path = Path(path)
    base = path.parent
    rows, problems = [], []
    for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != n_fields or not all(p.strip() for p in parts):
            problems.append(f"{path}:{lineno}: expected {n_fields} tab-separated fields, got {len(parts)}")
            continue
        row = [base / p.strip() for p in parts[:2]] + [p.strip() for p in parts[2:]]
        for p in row[:2]:
            if not p.is_file():
                problems.append(f"{path}:{lineno}: no such file {p}")
        rows.append(row)
    if problems:
        raise FormatError("malformed manifest:\n  " + "\n  ".join(problems))
    if not rows:
        raise FormatError(f"manifest {path} has no entries")
    return rows


def cmd_build_idf(args) -> int:
    stopwords, suffixes = _lists(args)
    docs = corpus.load_corpus_dir(args.corpus_dir, stopwords, suffixes)
    table = corpus.build_idf(docs)
    corpus.save_idf(table, args.out)
    print(f"N={table.n_docs} vocabulary={table.vocab_size}")
    return 0


def cmd_summarize(args) -> int:
    stopwords, suffixes = _lists(args)
    idf = corpus.load_idf(args.idf)
    params = _params(args)
    doc = textproc.preprocess(_read_text(args.input), stopwords, suffixes, doc_id=Path(args.input).stem)
    ranked = ranker.rank(doc, idf, params)
    summary = summarizer.summarize(doc, ranked, _budget(args))
    _write(args.out, summary.text + "\n")
    if args.meta:
        _write(args.meta, summarizer.format_sidecar(summary, ranked))
    return 0


def cmd_lead(args) -> int:
    doc = textproc.preprocess(_read_text(args.input), textproc.StopwordList(), textproc.SuffixList(),
                              doc_id=Path(args.input).stem)
    _write(args.out, summarizer.lead_baseline(doc, args.budget_words).text + "\n")
    return 0


def cmd_evaluate(args) -> int:
    rows = read_manifest(args.manifest, 3)
    pairs = [(_read_text(s), _read_text(r), doc_id) for s, r, doc_id in rows]
    report = evaluator.evaluate_corpus(pairs)
    _write(args.out, evaluator.format_report(report))
    return 0


def _grid(spec: str, cast=float) -> tuple:
    """``start:stop:step`` for an inclusive range, or a comma list."""
    try:
        if ":" in spec:
            start, stop, step = (float(x) for x in spec.split(":"))
            values = tuner.frange(start, stop, step)
        else:
            values = tuple(float(x) for x in spec.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {spec!r}") from None
    return tuple(int(v) for v in values) if cast is int else values


def cmd_tune(args) -> int:
    stopwords, suffixes = _lists(args)
    rows = read_manifest(args.manifest, 2)
    docs = [corpus.read_document(d, stopwords, suffixes) for d, _ in rows]
    refs = [_read_text(r) for _, r in rows]
    idf = corpus.load_idf(args.idf) if args.idf else corpus.build_idf(docs)
    chosen = tuner.select_training(len(rows), args.train_size, args.seed)
    training = [(docs[i], refs[i]) for i in chosen]
    log.info("training on %s", ", ".join(d.doc_id for d, _ in training))

    grids = tuner.Grids(
        beta=_grid(args.beta_grid),
        theta=_grid(args.theta_grid),
        l_upper=_grid(args.lu_grid, int),
        l_lower=_grid(args.ll_grid, int),
    )
    result = tuner.run_calibration(training, idf, grids)
    sweep_dir = Path(args.sweeps) if args.sweeps else Path(args.out).parent
    try:
        sweep_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoFailure(f"cannot create {sweep_dir}: {exc}") from exc
    for sweep in result.sweeps:
        _write(sweep_dir / f"sweep_{sweep.parameter}.tsv", sweep.to_tsv())
    ranker.save_params(result.params, args.out)
    sys.stdout.write(ranker.format_params(result.params))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extractsum", description="Extractive summarization by sentence ranking.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def lists(p):
        p.add_argument("--stopwords", metavar="PATH", help="stop-word list (default: bundled Bengali list)")
        p.add_argument("--suffixes", metavar="PATH", help="suffix list (default: bundled Bengali list)")

    p = sub.add_parser("build-idf", help="build a document-frequency table from a directory of *.txt files")
    p.add_argument("corpus_dir")
    p.add_argument("--out", required=True, metavar="PATH")
    lists(p)
    p.set_defaults(func=cmd_build_idf)

    p = sub.add_parser("summarize", help="summarize one document")
    p.add_argument("input")
    p.add_argument("--idf", required=True, metavar="PATH")
    p.add_argument("--params", metavar="PATH")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--theta", type=float)
    p.add_argument("--l-lower", dest="l_lower", type=int)
    p.add_argument("--l-upper", dest="l_upper", type=int)
    budget = p.add_mutually_exclusive_group(required=True)
    budget.add_argument("--budget-words", type=int, metavar="N")
    budget.add_argument("--budget-sentences", type=int, metavar="K")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--meta", metavar="PATH", help="write selected indices and scores here")
    lists(p)
    p.set_defaults(func=cmd_summarize)

    p = sub.add_parser("lead", help="LEAD baseline: the first N words")
    p.add_argument("input")
    p.add_argument("--budget-words", type=int, required=True, metavar="N")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_lead)

    p = sub.add_parser("evaluate", help="unigram recall over a system<TAB>reference<TAB>doc_id manifest")
    p.add_argument("manifest")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("tune", help="staged grid calibration over a doc<TAB>reference manifest")
    p.add_argument("manifest")
    p.add_argument("--idf", metavar="PATH", help="default: built from the manifest documents")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--train-size", type=int, default=10)
    p.add_argument("--beta-grid", default="0:1:0.1")
    p.add_argument("--theta-grid", default="0:6:0.2")
    p.add_argument("--lu-grid", default="25,24,23,22")
    p.add_argument("--ll-grid", default="2,3,4,5")
    p.add_argument("--out", required=True, metavar="PATH", help="calibrated params file")
    p.add_argument("--sweeps", metavar="DIR", help="directory for sweep_<param>.tsv (default: next to --out)")
    lists(p)
    p.set_defaults(func=cmd_tune)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    for name in ("budget_words", "budget_sentences"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            parser.error(f"--{name.replace('_', '-')} must be >= 1")
    try:
        return args.func(args)
    except (SummarizerError, OSError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"extractsum: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
