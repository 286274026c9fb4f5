"""Sentence scoring: thematic terms, positional decay and length gating.

Thematic terms are selected with document-level ``tf * idf > theta``; a
sentence's thematic score sums ``tf_in_sentence(s) * idf(s)`` over the
distinct thematic stems it contains. The final score of an admissible
sentence is ``alpha * S_norm + beta / sqrt(k)`` where ``S_norm`` is the
thematic score divided by the document maximum.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from .errors import DomainError, FormatError, IoFailure
from .textproc import Document, Sentence, decode_utf8


@dataclass(frozen=True)
class ScoreParams:
    alpha: float = 1.0
    beta: float = 0.10
    theta: float = 3.8
    l_lower: int = 3
    l_upper: int = 23

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        if not self.theta >= 0.0:
            raise ValueError(f"theta must be non-negative, got {self.theta}")
        for name in ("l_lower", "l_upper"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if self.l_lower >= self.l_upper:
            raise ValueError(f"l_lower ({self.l_lower}) must be below l_upper ({self.l_upper})")

    def with_value(self, name: str, value) -> "ScoreParams":
        if name in ("l_lower", "l_upper"):
            value = int(value)
        return replace(self, **{name: value})

    def admissible(self, length_words: int) -> bool:
        return self.l_lower < length_words < self.l_upper


DEFAULT_PARAMS = ScoreParams()


@dataclass(frozen=True)
class RankedSentence:
    index: int
    s_raw: float
    s_norm: float
    p: float
    score: float
    gated: bool


def positional_value(k: int) -> float:
    if k < 1:
        raise DomainError(f"sentence position must be >= 1, got {k}")
    return 1.0 / math.sqrt(k)


def thematic_terms(doc: Document, idf, theta: float) -> set[str]:
    tf = Counter(doc.content_stems())
    return {s for s, n in tf.items() if n * idf.idf(s) > theta}


def thematic_score(sentence: Sentence, thematic: set[str], idf) -> float:
    tf = Counter(s for s in sentence.content_stems if s in thematic)
    # fsum: identical stem multisets give bit-identical scores
    return math.fsum(n * idf.idf(s) for s, n in tf.items())


def rank(doc: Document, idf, params: ScoreParams = DEFAULT_PARAMS) -> list[RankedSentence]:
    """Score every sentence of ``doc``; sorted by score descending, then position."""
    thematic = thematic_terms(doc, idf, params.theta)
    raw = [thematic_score(sent, thematic, idf) for sent in doc.sentences]
    top = max(raw, default=0.0)

    ranked = []
    for sent, s_raw in zip(doc.sentences, raw):
        s_norm = s_raw / top if top > 0 else 0.0
        p = positional_value(sent.index)
        gated = not params.admissible(sent.length_words)
        score = 0.0 if gated else params.alpha * s_norm + params.beta * p
        ranked.append(RankedSentence(sent.index, s_raw, s_norm, p, score, gated))
    ranked.sort(key=lambda r: (-r.score, r.index))
    return ranked


_INT_KEYS = {"l_lower", "l_upper"}


def format_params(params: ScoreParams) -> str:
    return "".join(f"{k}={v!r}\n" for k, v in asdict(params).items())


def parse_params(text: str, base: ScoreParams = DEFAULT_PARAMS) -> ScoreParams:
    """Parse ``key=value`` lines; keys that are absent keep ``base`` values."""
    known = {f.name for f in fields(ScoreParams)}
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep or key not in known:
            raise FormatError(f"line {lineno}: expected one of {sorted(known)} as key=value, got {line!r}")
        if key in values:
            raise FormatError(f"line {lineno}: duplicate key {key!r}")
        try:
            values[key] = int(value) if key in _INT_KEYS else float(value)
        except ValueError:
            raise FormatError(f"line {lineno}: bad value for {key}: {value!r}") from None
    try:
        return replace(base, **values)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def load_params(path: str | Path, base: ScoreParams = DEFAULT_PARAMS) -> ScoreParams:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read params file {path}: {exc}") from exc
    return parse_params(decode_utf8(data), base)


def save_params(params: ScoreParams, path: str | Path) -> None:
    try:
        Path(path).write_text(format_params(params), encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write params file {path}: {exc}") from exc
