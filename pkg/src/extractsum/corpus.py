"""Document-frequency statistics over a background corpus.

IDF uses the natural log: ``idf(s) = ln(N / df(s))``. The tuned TFIDF
threshold of 3.8 only carries over under this base. Stems never seen in
the corpus are smoothed to ``df = 0.5``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import EmptyCorpus, FormatError, IoFailure
from .textproc import Document, StopwordList, SuffixList, decode_utf8, preprocess

UNSEEN_DF = 0.5
HEADER = "IDF v1"


@dataclass(frozen=True)
class IdfTable:
    n_docs: int
    df: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n_docs, int) or self.n_docs < 1:
            raise ValueError(f"n_docs must be a positive integer, got {self.n_docs!r}")
        for s, d in self.df.items():
            if not s:
                raise ValueError("empty stem in df table")
            if not isinstance(d, int) or not 1 <= d <= self.n_docs:
                raise ValueError(f"df[{s!r}]={d!r} outside [1, {self.n_docs}]")
        object.__setattr__(self, "df", MappingProxyType(dict(self.df)))

    def __eq__(self, other):
        if not isinstance(other, IdfTable):
            return NotImplemented
        return self.n_docs == other.n_docs and dict(self.df) == dict(other.df)

    def __hash__(self):
        return hash((self.n_docs, frozenset(self.df.items())))

    def idf(self, stem: str) -> float:
        return math.log(self.n_docs / self.df.get(stem, UNSEEN_DF))

    @property
    def vocab_size(self) -> int:
        return len(self.df)


def idf_lookup(table: IdfTable, stem: str) -> float:
    return table.idf(stem)


def build_idf(documents: Sequence[Document]) -> IdfTable:
    """Count, per stem, how many documents contain it as a non-stop-word token."""
    if not documents:
        raise EmptyCorpus("cannot build IDF from an empty document list")
    df: dict[str, int] = {}
    for doc in documents:
        for s in set(doc.content_stems()):
            df[s] = df.get(s, 0) + 1
    return IdfTable(n_docs=len(documents), df=df)


def save_idf(table: IdfTable, path: str | Path) -> None:
    lines = [f"{HEADER} {table.n_docs}"]
    for s in sorted(table.df):
        if any(c.isspace() for c in s):
            raise ValueError(f"stem {s!r} contains whitespace and cannot be stored")
        lines.append(f"{s}\t{table.df[s]}")
    try:
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write IDF table to {path}: {exc}") from exc


def parse_idf(text: str) -> IdfTable:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty IDF file")
    head = lines[0].split(" ")
    if len(head) != 3 or " ".join(head[:2]) != HEADER or not head[2].isdigit():
        raise FormatError(f"bad header line {lines[0]!r}, expected '{HEADER} <N>'")
    n_docs = int(head[2])
    if n_docs < 1:
        raise FormatError("N must be positive")
    df: dict[str, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1].isdigit():
            raise FormatError(f"line {lineno}: expected '<stem>\\t<df>', got {line!r}")
        s, d = parts[0], int(parts[1])
        if s in df:
            raise FormatError(f"line {lineno}: duplicate stem {s!r}")
        if not 1 <= d <= n_docs:
            raise FormatError(f"line {lineno}: df={d} outside [1, {n_docs}]")
        df[s] = d
    return IdfTable(n_docs=n_docs, df=df)


def load_idf(path: str | Path) -> IdfTable:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read IDF table {path}: {exc}") from exc
    return parse_idf(decode_utf8(data))


def read_document(path: str | Path, stopwords: StopwordList, suffixes: SuffixList) -> Document:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    return preprocess(data, stopwords, suffixes, doc_id=path.stem)


def load_corpus_dir(directory: str | Path, stopwords: StopwordList, suffixes: SuffixList) -> list[Document]:
    """Read every ``*.txt`` file in ``directory`` (sorted by name) as one document."""
    directory = Path(directory)
    if not directory.is_dir():
        raise IoFailure(f"not a directory: {directory}")
    paths = sorted(directory.glob("*.txt"))
    if not paths:
        raise EmptyCorpus(f"no *.txt files in {directory}")
    return [read_document(p, stopwords, suffixes) for p in paths]
