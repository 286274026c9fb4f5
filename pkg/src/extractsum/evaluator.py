"""Unigram-overlap recall of system summaries against single references."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyReference
from .textproc import count_words, tokenize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalReport:
    per_doc: Mapping[str, float]
    average: float


def unigram_recall(system: str, reference: str) -> float:
    """Clipped unigram overlap divided by the reference token count.

    Tokens are raw surface forms: no stemming, no stop-word removal.
    """
    ref = Counter(tokenize(reference))
    total = sum(ref.values())
    if total == 0:
        raise EmptyReference(["<reference>"])
    sys_counts = Counter(tokenize(system))
    overlap = sum(min(n, sys_counts[u]) for u, n in ref.items())
    return overlap / total


def check_length(system: str, reference: str, doc_id: str = "") -> bool:
    """Warn when the system summary is longer than its reference."""
    n_sys, n_ref = count_words(system), count_words(reference)
    if n_sys > n_ref:
        log.warning("%s: system summary has %d words, reference has %d", doc_id, n_sys, n_ref)
        return False
    return True


def evaluate_corpus(pairs: Sequence[tuple[str, str, str]]) -> EvalReport:
    """Score ``(system, reference, doc_id)`` triples and average the recalls."""
    if not pairs:
        raise ValueError("no summary pairs to evaluate")
    ids = [doc_id for _, _, doc_id in pairs]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate doc_id in evaluation pairs")
    empty = [doc_id for _, ref, doc_id in pairs if not tokenize(ref)]
    if empty:
        raise EmptyReference(empty)
    per_doc = {}
    for system, reference, doc_id in pairs:
        check_length(system, reference, doc_id)
        per_doc[doc_id] = unigram_recall(system, reference)
    return EvalReport(per_doc=per_doc, average=sum(per_doc.values()) / len(per_doc))


def format_report(report: EvalReport) -> str:
    lines = [f"{doc_id}\t{r:.4f}" for doc_id, r in report.per_doc.items()]
    lines.append(f"AVERAGE\t{report.average:.4f}")
    return "\n".join(lines) + "\n"
