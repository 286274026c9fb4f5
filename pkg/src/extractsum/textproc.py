"""Sentence segmentation, tokenization, stop-word flagging and suffix stemming.

Everything here is a pure function over immutable values. The pipeline
normalizes input text once (NFC, whitespace runs collapsed to one space)
and every sentence span is a slice of that normalized text.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

from .errors import InvalidEncoding

DANDA = "।"
DOUBLE_DANDA = "॥"
TERMINATORS = frozenset({DANDA, DOUBLE_DANDA, ".", "?", "!"})
# closing marks that stay with the sentence they close: `...হবে ।”`
CLOSERS = frozenset("\"'”’»)]}")

_SEPARATOR_RE = re.compile(r"[\s,;:\"'“”‘’«»()\[\]{}<>।॥.?!]+")
_DASHES = "-‐‑‒–—―"


def normalize_text(text: str) -> str:
    return " ".join(unicodedata.normalize("NFC", text).split())


def count_words(text: str) -> int:
    """Number of whitespace-delimited words; the unit of every length budget."""
    return len(text.split())


def _span_offsets(text: str) -> list[tuple[int, int]]:
    offsets = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in TERMINATORS:
            i += 1
            while i < n and (text[i] in TERMINATORS or text[i] in CLOSERS):
                i += 1
            offsets.append((start, i))
            start = i
        else:
            i += 1
    if start < n:
        offsets.append((start, n))

    result = []
    for a, b in offsets:
        chunk = text[a:b]
        stripped = chunk.strip()
        if not stripped:
            continue
        lead = len(chunk) - len(chunk.lstrip())
        result.append((a + lead, a + lead + len(stripped)))
    return result


def segment_sentences(text: str) -> list[str]:
    """Split text into sentence spans.

    A span ends after a terminator (danda, ``.``, ``?``, ``!``) together with
    any terminators or closing quotes/brackets that immediately follow it.
    Whitespace-only spans are dropped.
    """
    return [text[a:b] for a, b in _span_offsets(text)]


def tokenize(span: str) -> list[str]:
    tokens = []
    for piece in _SEPARATOR_RE.split(span):
        piece = piece.strip(_DASHES)
        if piece:
            tokens.append(piece)
    return tokens


def _list_key(word: str) -> str:
    return unicodedata.normalize("NFC", word.strip()).casefold()


@dataclass(frozen=True)
class StopwordList:
    entries: frozenset = frozenset()

    def __post_init__(self):
        keys = frozenset(_list_key(e) for e in self.entries)
        if "" in keys:
            raise ValueError("stop-word entries must be non-empty")
        object.__setattr__(self, "entries", keys)

    def __contains__(self, word: str) -> bool:
        return _list_key(word) in self.entries

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SuffixList:
    suffixes: frozenset = frozenset()
    _by_length: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sufs = frozenset(unicodedata.normalize("NFC", s) for s in self.suffixes)
        if "" in sufs:
            raise ValueError("suffixes must be non-empty")
        object.__setattr__(self, "suffixes", sufs)
        object.__setattr__(self, "_by_length", tuple(sorted(sufs, key=lambda s: (-len(s), s))))

    def __len__(self) -> int:
        return len(self.suffixes)


def stem(word: str, suffixes: SuffixList | Iterable[str]) -> str:
    """Strip the single longest matching suffix, never emptying the word."""
    if not isinstance(suffixes, SuffixList):
        suffixes = SuffixList(frozenset(suffixes))
    for suffix in suffixes._by_length:
        if len(suffix) < len(word) and word.endswith(suffix):
            return word[: -len(suffix)]
    return word


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str
    is_stopword: bool


@dataclass(frozen=True)
class Sentence:
    index: int
    raw_span: str
    tokens: tuple
    length_words: int
    start: int = 0  # character offset of raw_span in Document.text

    @property
    def content_stems(self) -> list[str]:
        return [t.stem for t in self.tokens if not t.is_stopword]


@dataclass(frozen=True)
class Document:
    doc_id: str
    sentences: tuple
    text: str = ""

    def __len__(self) -> int:
        return len(self.sentences)

    @property
    def n_words(self) -> int:
        return sum(s.length_words for s in self.sentences)

    def content_stems(self) -> list[str]:
        return [s for sent in self.sentences for s in sent.content_stems]


def decode_utf8(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidEncoding(f"input is not valid UTF-8: {exc}") from exc
    try:
        data.encode("utf-8")
    except UnicodeEncodeError as exc:
        raise InvalidEncoding(f"input is not valid UTF-8: {exc}") from exc
    return data


def preprocess(
    text: bytes | str,
    stopwords: StopwordList,
    suffixes: SuffixList,
    doc_id: str = "",
    stemmer: Callable[[str, SuffixList], str] = stem,
) -> Document:
    text = normalize_text(decode_utf8(text))
    sentences = []
    for k, (a, b) in enumerate(_span_offsets(text), start=1):
        span = text[a:b]
        tokens = tuple(
            Token(surface=w, stem=stemmer(w, suffixes), is_stopword=w in stopwords)
            for w in tokenize(span)
        )
        sentences.append(Sentence(k, span, tokens, count_words(span), start=a))
    return Document(doc_id=doc_id, sentences=tuple(sentences), text=text)


def read_list_file(path: str | Path) -> list[str]:
    """Read a one-entry-per-line list; blank lines and ``#`` comments are skipped."""
    data = Path(path).read_bytes()
    entries = []
    for line in decode_utf8(data).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line)
    return entries


def _bundled(name: str) -> list[str]:
    with resources.as_file(resources.files("extractsum") / "data" / name) as p:
        return read_list_file(p)


def load_stopwords(path: str | Path | None = None) -> StopwordList:
    entries = _bundled("stopwords_bn.txt") if path is None else read_list_file(path)
    return StopwordList(frozenset(entries))


def load_suffixes(path: str | Path | None = None) -> SuffixList:
    entries = _bundled("suffixes_bn.txt") if path is None else read_list_file(path)
    return SuffixList(frozenset(entries))
