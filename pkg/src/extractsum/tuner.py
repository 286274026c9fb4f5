"""Staged grid calibration of the ranking parameters.

Stages run in a fixed order (beta at theta=0, then theta, then the upper
length cutoff, then the lower one); each stage keeps the winners of the
stages before it. alpha stays at 1.0 throughout. On a plateau the smallest
grid value wins, i.e. the value where average recall first reaches its best.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .evaluator import unigram_recall
from .ranker import ScoreParams, rank
from .summarizer import Budget, summarize
from .textproc import Document, count_words

PARAMETERS = ("beta", "theta", "l_upper", "l_lower")


def frange(start: float, stop: float, step: float) -> tuple[float, ...]:
    """Inclusive float grid, rounded so 0.1 steps print as 0.1, 0.2, ..."""
    n = int(round((stop - start) / step))
    return tuple(round(start + i * step, 10) for i in range(n + 1))


@dataclass(frozen=True)
class Grids:
    beta: tuple = frange(0.0, 1.0, 0.1)
    theta: tuple = frange(0.0, 6.0, 0.2)
    l_upper: tuple = (25, 24, 23, 22)
    l_lower: tuple = (2, 3, 4, 5)


# Table-style starting point: lower cutoff at the smallest grid value, upper at the largest.
CALIBRATION_START = ScoreParams(alpha=1.0, beta=0.1, theta=0.0, l_lower=2, l_upper=25)


@dataclass(frozen=True)
class SweepSpec:
    parameter: str
    values: tuple
    fixed: ScoreParams = CALIBRATION_START

    def __post_init__(self):
        if self.parameter not in PARAMETERS:
            raise ValueError(f"unknown sweep parameter {self.parameter!r}; choose from {PARAMETERS}")
        values = tuple(self.values)
        if not values:
            raise ValueError("sweep grid is empty")
        steps = [b - a for a, b in zip(values, values[1:])]
        if not (all(d > 0 for d in steps) or all(d < 0 for d in steps)):
            raise ValueError(f"sweep grid must be strictly ordered: {values}")
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    points: tuple
    best_value: float

    def to_tsv(self) -> str:
        return "".join(f"{v}\t{r:.4f}\n" for v, r in self.points)


def average_recall(training: Sequence[tuple[Document, str]], idf, params: ScoreParams) -> float:
    """Mean recall when each summary's word budget is its reference's length."""
    if not training:
        raise ValueError("training set is empty")
    total = 0.0
    for doc, reference in training:
        budget = Budget.words(max(1, count_words(reference)))
        summary = summarize(doc, rank(doc, idf, params), budget)
        total += unigram_recall(summary.text, reference)
    return total / len(training)


def best_of(points: Sequence[tuple]) -> float:
    top = max(r for _, r in points)
    return min(v for v, r in points if r == top)


def sweep(spec: SweepSpec, training: Sequence[tuple[Document, str]], idf) -> SweepResult:
    points = tuple(
        (v, average_recall(training, idf, spec.fixed.with_value(spec.parameter, v)))
        for v in spec.values
    )
    return SweepResult(spec.parameter, points, best_of(points))


@dataclass(frozen=True)
class Calibration:
    params: ScoreParams
    sweeps: tuple = field(default_factory=tuple)


def run_calibration(
    training: Sequence[tuple[Document, str]],
    idf,
    grids: Grids = Grids(),
    start: ScoreParams = CALIBRATION_START,
) -> Calibration:
    current = start.with_value("theta", 0.0)
    results = []
    for name in PARAMETERS:
        result = sweep(SweepSpec(name, getattr(grids, name), current), training, idf)
        current = current.with_value(name, result.best_value)
        results.append(result)
    return Calibration(current, tuple(results))


def calibrate(training: Sequence[tuple[Document, str]], idf, grids: Grids = Grids()) -> ScoreParams:
    return run_calibration(training, idf, grids).params


def select_training(n_items: int, k: int = 10, seed: int = 0) -> list[int]:
    """Seeded random choice of ``k`` item positions, returned in ascending order."""
    return sorted(random.Random(seed).sample(range(n_items), min(k, n_items)))
