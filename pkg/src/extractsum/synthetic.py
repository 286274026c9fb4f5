"""Seeded synthetic documents for property tests and calibration experiments.

Words are opaque ASCII tokens (``w0``, ``w1``, ...), so the empty stop-word
and suffix lists make every token its own stem.
"""

from __future__ import annotations

import random

from .textproc import Document, StopwordList, SuffixList, preprocess

NO_STOPWORDS = StopwordList()
NO_SUFFIXES = SuffixList()


def random_sentence(rng: random.Random, vocab_size: int, min_len: int, max_len: int) -> str:
    n = rng.randint(min_len, max_len)
    return " ".join(f"w{rng.randrange(vocab_size)}" for _ in range(n)) + "."


def random_text(
    rng: random.Random,
    n_sentences: int,
    vocab_size: int = 30,
    min_len: int = 1,
    max_len: int = 12,
) -> str:
    return " ".join(random_sentence(rng, vocab_size, min_len, max_len) for _ in range(n_sentences))


def random_document(rng: random.Random, doc_id: str = "", max_sentences: int = 12, **kw) -> Document:
    text = random_text(rng, rng.randint(1, max_sentences), **kw)
    return preprocess(text, NO_STOPWORDS, NO_SUFFIXES, doc_id=doc_id)


def random_corpus(seed: int, n_docs: int, **kw) -> list[Document]:
    rng = random.Random(seed)
    return [random_document(rng, doc_id=f"d{i:03d}", **kw) for i in range(n_docs)]


def extract_reference(rng: random.Random, doc: Document, keep: float = 0.4, noise: int = 3, vocab_size: int = 30) -> str:
    """A reference built from a random subset of sentences plus a few foreign words."""
    picked = [s.raw_span for s in doc.sentences if rng.random() < keep]
    if not picked:
        picked = [rng.choice(doc.sentences).raw_span]
    extra = [f"w{rng.randrange(vocab_size)}" for _ in range(noise)]
    return " ".join(picked + extra)


def training_set(seed: int, n_docs: int = 10, **kw) -> list[tuple[Document, str]]:
    rng = random.Random(seed)
    docs = [random_document(rng, doc_id=f"t{i:02d}", **kw) for i in range(n_docs)]
    return [(d, extract_reference(rng, d, vocab_size=kw.get("vocab_size", 30))) for d in docs]


def first_words(doc: Document, n: int) -> str:
    return " ".join(doc.text.split()[:n])


def prefix_training_set(seed: int, n_docs: int = 6, n_words: int = 12, **kw) -> list[tuple[Document, str]]:
    """Pairs whose reference is the document's first ``n_words`` words."""
    rng = random.Random(seed)
    docs = [random_document(rng, doc_id=f"p{i}", **kw) for i in range(n_docs)]
    return [(d, first_words(d, n_words)) for d in docs]
