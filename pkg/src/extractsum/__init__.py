"""Extractive single-document summarization by TFIDF thematic terms and sentence position."""

from .corpus import IdfTable, build_idf, idf_lookup, load_idf, save_idf
from .errors import (
    DomainError,
    EmptyCorpus,
    EmptyDocument,
    EmptyReference,
    FormatError,
    InvalidEncoding,
    IoFailure,
    SummarizerError,
)
from .evaluator import EvalReport, evaluate_corpus, unigram_recall
from .ranker import DEFAULT_PARAMS, RankedSentence, ScoreParams, positional_value, rank
from .summarizer import Budget, Summary, lead_baseline, summarize
from .textproc import (
    Document,
    Sentence,
    StopwordList,
    SuffixList,
    Token,
    load_stopwords,
    load_suffixes,
    preprocess,
    segment_sentences,
    stem,
    tokenize,
)
from .tuner import Grids, SweepResult, SweepSpec, calibrate, sweep

__version__ = "0.1.0"
