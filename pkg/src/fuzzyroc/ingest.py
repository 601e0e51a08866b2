"""Loading and validating labeled scores.

Everything downstream works on a :class:`ScoreSet` (validated scores plus
0/1 labels) and on the :class:`MidpointGrid` of distinct pooled values and
the midpoints between consecutive ones.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

CONSTRAINTS = ("sample", "target")
INDEXINGS = ("midpoint", "lower", "upper")


class ScoreDataError(ValueError):
    """Input scores or labels are malformed."""


class DegenerateScoresError(ScoreDataError):
    """All scores are identical, so no cutoff can separate anything."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class ScoreSet:
    """Labeled scores from a validation study.

    Low scores predict class 0. Arrays are read-only; build instances with
    :func:`make_score_set` or :func:`parse_scores` so they get validated.
    """

    scores: np.ndarray
    labels: np.ndarray
    n0: int
    n1: int

    @property
    def n(self) -> int:
        return self.n0 + self.n1

    @property
    def scores0(self) -> np.ndarray:
        return self.scores[self.labels == 0]

    @property
    def scores1(self) -> np.ndarray:
        return self.scores[self.labels == 1]

    def __eq__(self, other):
        if not isinstance(other, ScoreSet):
            return NotImplemented
        return np.array_equal(self.scores, other.scores) and np.array_equal(
            self.labels, other.labels
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class MidpointGrid:
    """Distinct sorted pooled scores and the midpoints between neighbours.

    ``mids[k]`` lies strictly between ``uniques[k]`` and ``uniques[k + 1]``
    unless the two are adjacent doubles (see :func:`build_grid`).
    """

    uniques: np.ndarray
    mids: np.ndarray

    @property
    def r(self) -> int:
        return len(self.uniques)


@dataclass(frozen=True)
class Config:
    """Analysis settings.

    Parameters
    ----------
    gamma : float
        Tolerated fraction of unclassified cases, in [0, 1].
    pi : float, optional
        Class-1 prevalence in the target population, in (0, 1).
    constraint : {"sample", "target"}
        Which gray-zone size constraint to enforce. ``"target"`` needs ``pi``.
    indexing : {"midpoint", "lower", "upper"}
        What indexes the per-point zone optimization: the midpoints, or a
        fixed lower or upper zone limit.
    """

    gamma: float
    pi: Optional[float] = None
    constraint: str = "sample"
    indexing: str = "midpoint"

    def __post_init__(self):
        gamma = float(self.gamma)
        if not 0.0 <= gamma <= 1.0:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma!r}")
        object.__setattr__(self, "gamma", gamma)
        if self.pi is not None:
            pi = float(self.pi)
            if not 0.0 < pi < 1.0:
                raise ValueError(f"pi must lie in (0, 1), got {self.pi!r}")
            object.__setattr__(self, "pi", pi)
        if self.constraint not in CONSTRAINTS:
            raise ValueError(
                f"constraint must be one of {CONSTRAINTS}, got {self.constraint!r}"
            )
        if self.indexing not in INDEXINGS:
            raise ValueError(
                f"indexing must be one of {INDEXINGS}, got {self.indexing!r}"
            )
        if self.constraint == "target" and self.pi is None:
            raise ValueError("the target constraint requires pi")


def make_score_set(scores, labels) -> ScoreSet:
    """Validate parallel score/label sequences and wrap them."""
    x = np.asarray(scores, dtype=float).ravel()
    y = np.asarray(labels).ravel()
    if x.shape != y.shape:
        raise ScoreDataError(
            f"scores and labels differ in length ({x.size} != {y.size})"
        )
    if x.size == 0:
        raise ScoreDataError("no records")
    if not np.all(np.isfinite(x)):
        raise ScoreDataError("scores must be finite")
    if not np.all((y == 0) | (y == 1)):
        bad = y[~((y == 0) | (y == 1))][0]
        raise ScoreDataError(f"label outside {{0, 1}}: {bad!r}")
    y = y.astype(np.int8)
    n1 = int(y.sum())
    n0 = int(y.size - n1)
    if n0 == 0 or n1 == 0:
        missing = 0 if n0 == 0 else 1
        raise ScoreDataError(f"class {missing} has no records")
    return ScoreSet(_frozen(x.copy()), _frozen(y), n0, n1)


def parse_scores(text: str, score_col: str = "score", label_col: str = "label") -> ScoreSet:
    """Parse a CSV document with a header row into a :class:`ScoreSet`.

    Extra columns are ignored and row order is kept. Labels must be the
    literals ``0`` or ``1``.
    """
    if text.startswith("﻿"):
        text = text[1:]
    reader = csv.DictReader(io.StringIO(text, newline=""))
    if reader.fieldnames is None:
        raise ScoreDataError("empty file")
    fields = [f.strip() for f in reader.fieldnames]
    reader.fieldnames = fields
    for col in (score_col, label_col):
        if col not in fields:
            raise ScoreDataError(f"missing column {col!r}")

    scores, labels = [], []
    for lineno, row in enumerate(reader, start=2):
        raw_score = (row.get(score_col) or "").strip()
        raw_label = (row.get(label_col) or "").strip()
        try:
            value = float(raw_score)
        except ValueError:
            raise ScoreDataError(
                f"line {lineno}: non-numeric score {raw_score!r}"
            ) from None
        if not math.isfinite(value):
            raise ScoreDataError(f"line {lineno}: score must be finite, got {raw_score!r}")
        if raw_label not in ("0", "1"):
            raise ScoreDataError(f"line {lineno}: label outside {{0, 1}}: {raw_label!r}")
        scores.append(value)
        labels.append(int(raw_label))
    if not scores:
        raise ScoreDataError("empty file")
    return make_score_set(scores, labels)


def serialize_scores(s: ScoreSet, score_col: str = "score", label_col: str = "label") -> str:
    """Write a ScoreSet back out as CSV (inverse of :func:`parse_scores`)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([score_col, label_col])
    for x, y in zip(s.scores.tolist(), s.labels.tolist()):
        writer.writerow([repr(x), int(y)])
    return buf.getvalue()


def build_grid(s: ScoreSet) -> MidpointGrid:
    """Distinct pooled scores and their midpoints.

    When two neighbours are adjacent doubles no float lies strictly between
    them; the midpoint is then the upper neighbour, which still splits them
    under the "score < cutoff" counting rule.
    """
    uniques = np.unique(s.scores)
    if uniques.size < 2:
        raise DegenerateScoresError("degenerate score distribution")
    lo, hi = uniques[:-1], uniques[1:]
    with np.errstate(over="ignore"):
        mids = (lo + hi) / 2.0
    mids = np.where(np.isfinite(mids), mids, lo / 2.0 + hi / 2.0)
    mids = np.where(mids > lo, mids, hi)
    return MidpointGrid(_frozen(uniques), _frozen(mids))
