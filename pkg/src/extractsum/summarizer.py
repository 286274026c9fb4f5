"""Extract assembly under a sentence or word budget, and the LEAD baseline."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyDocument
from .ranker import RankedSentence
from .textproc import Document


@dataclass(frozen=True)
class Budget:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("words", "sentences"):
            raise ValueError(f"budget kind must be 'words' or 'sentences', got {self.kind!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"budget must be a positive integer, got {self.n!r}")

    @classmethod
    def words(cls, n: int) -> "Budget":
        return cls("words", n)

    @classmethod
    def sentences(cls, n: int) -> "Budget":
        return cls("sentences", n)


@dataclass(frozen=True)
class Summary:
    doc_id: str
    selected: tuple
    text: str
    word_count: int
    truncated: bool = False


def summarize(doc: Document, ranked: Sequence[RankedSentence], budget: Budget) -> Summary:
    """Pick sentences in rank order under ``budget`` and restore document order.

    Gated sentences are only considered once every ungated sentence has been
    selected. Under a word budget a sentence that would overflow is skipped;
    if the very first candidate alone overflows it is cut to the budget.
    """
    if not doc.sentences:
        raise EmptyDocument(f"document {doc.doc_id!r} has no sentences")
    by_index = {s.index: s for s in doc.sentences}
    ungated = [r for r in ranked if not r.gated]
    gated = [r for r in ranked if r.gated]

    truncated_text = None
    if budget.kind == "sentences":
        chosen = [r.index for r in (ungated + gated)[: budget.n]]
    else:
        chosen = []
        total = 0
        for group in (ungated, gated):
            if group is gated and len(chosen) < len(ungated):
                break
            for r in group:
                if total >= budget.n:
                    break
                length = by_index[r.index].length_words
                if total + length <= budget.n:
                    chosen.append(r.index)
                    total += length
                elif not chosen:
                    chosen.append(r.index)
                    truncated_text = " ".join(by_index[r.index].raw_span.split()[: budget.n])
                    total = budget.n
    chosen.sort()
    if truncated_text is not None:
        text = truncated_text
    else:
        text = " ".join(by_index[k].raw_span for k in chosen)
    return Summary(
        doc_id=doc.doc_id,
        selected=tuple(chosen),
        text=text,
        word_count=len(text.split()),
        truncated=truncated_text is not None,
    )


def lead_baseline(doc: Document, n_words: int) -> Summary:
    """The first ``n_words`` words of the document, cut mid-sentence if needed."""
    if not doc.sentences:
        raise EmptyDocument(f"document {doc.doc_id!r} has no sentences")
    if n_words < 1:
        raise ValueError(f"n_words must be positive, got {n_words}")
    selected = []
    taken = []
    for sent in doc.sentences:
        if len(taken) >= n_words:
            break
        words = sent.raw_span.split()[: n_words - len(taken)]
        taken.extend(words)
        selected.append(sent.index)
    return Summary(
        doc_id=doc.doc_id,
        selected=tuple(selected),
        text=" ".join(taken),
        word_count=len(taken),
        truncated=sum(s.length_words for s in doc.sentences[: len(selected)]) > len(taken),
    )


def format_sidecar(summary: Summary, ranked: Sequence[RankedSentence]) -> str:
    scores = {r.index: r.score for r in ranked}
    return "".join(f"{k}\t{scores[k]:.6f}\n" for k in summary.selected)
