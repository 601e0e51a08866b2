"""Standard empirical ROC curve and tie-aware AUC."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .ingest import ScoreSet


class UndefinedAUCError(ValueError):
    """AUC needs at least one score per class."""


@dataclass(frozen=True)
class RocPoint:
    fpr: float
    tpr: float
    threshold: float


def empirical_roc(s: ScoreSet) -> list[RocPoint]:
    """ROC points for the rule "predict 1 when score >= threshold".

    The first point is the (0, 0) corner at threshold ``+inf``; then one
    point per distinct score, descending, the last being (1, 1) at the
    smallest score.
    """
    thresholds = np.unique(s.scores)[::-1]
    s0 = np.sort(s.scores0)
    s1 = np.sort(s.scores1)
    # number of class-j scores >= t
    fp = s0.size - np.searchsorted(s0, thresholds, side="left")
    tp = s1.size - np.searchsorted(s1, thresholds, side="left")
    points = [RocPoint(0.0, 0.0, float("inf"))]
    for t, a, b in zip(thresholds.tolist(), fp.tolist(), tp.tolist()):
        points.append(RocPoint(a / s.n0, b / s.n1, t))
    return points


def mann_whitney_u2(scores0, scores1) -> int:
    """Twice the Mann-Whitney U of class 1 over class 0, as an exact integer.

    Each (class-0, class-1) pair scores 2 when the class-1 value is higher
    and 1 when tied.
    """
    a = np.sort(np.asarray(scores0, dtype=float))
    b = np.asarray(scores1, dtype=float)
    below = np.searchsorted(a, b, side="left")
    not_above = np.searchsorted(a, b, side="right")
    return int(below.sum() + not_above.sum())


def auc_fraction(scores0, scores1) -> Fraction:
    n0, n1 = len(scores0), len(scores1)
    if n0 == 0 or n1 == 0:
        raise UndefinedAUCError("undefined AUC: a class has no scores")
    return Fraction(mann_whitney_u2(scores0, scores1), 2 * n0 * n1)


def empirical_auc(scores0, scores1) -> float:
    """Probability that a class-1 score exceeds a class-0 score, ties counted half.

    Raises
    ------
    UndefinedAUCError
        If either list is empty.
    """
    n0, n1 = len(scores0), len(scores1)
    if n0 == 0 or n1 == 0:
        raise UndefinedAUCError("undefined AUC: a class has no scores")
    return mann_whitney_u2(scores0, scores1) / (2 * n0 * n1)
