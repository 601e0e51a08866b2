"""Oracle and saboteur bounds on the ROC for a chosen gray zone.

The oracle moves every gray-zone point to the zone limit on its correct
side (class 0 down to ``c_low``, class 1 up to ``c_high``); the saboteur
does the opposite. Counting each class below the zone centre in the two
scenarios gives the upper and lower bound points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ingest import Config, ScoreSet, build_grid, _frozen
from .roc import RocPoint, empirical_roc
from .search import (
    GrayZone,
    ZoneChoice,
    _ZoneTable,
    optimal_zone,
    optimal_zone_bound_indexed,
)


@dataclass(frozen=True)
class BoundPoint:
    """ROC-space point with the raw below-cutoff counts it came from.

    ``f0``/``f1`` count class-0/class-1 cases below the cutoff, so
    ``fpr = 1 - f0 / n0`` and ``tpr = 1 - f1 / n1``.
    """

    fpr: float
    tpr: float
    f0: int
    f1: int

    @classmethod
    def from_counts(cls, f0: int, f1: int, n0: int, n1: int) -> "BoundPoint":
        return cls((n0 - f0) / n0, (n1 - f1) / n1, int(f0), int(f1))


@dataclass(frozen=True)
class BoundRecord:
    c_j: float
    choice: ZoneChoice
    upper: BoundPoint
    lower: BoundPoint

    @property
    def zone(self) -> GrayZone:
        return self.choice.zone


@dataclass(frozen=True)
class FuzzyRocResult:
    config: Config
    records: tuple
    roc: tuple
    n0: int
    n1: int

    @property
    def n(self) -> int:
        return self.n0 + self.n1

    def upper_points(self) -> np.ndarray:
        return np.array([[r.upper.fpr, r.upper.tpr] for r in self.records])

    def lower_points(self) -> np.ndarray:
        return np.array([[r.lower.fpr, r.lower.tpr] for r in self.records])


def _move_interior(s: ScoreSet, z: GrayZone, to0: float, to1: float) -> ScoreSet:
    x = s.scores.copy()
    inside = (x > z.c_low) & (x < z.c_high)
    x[inside & (s.labels == 0)] = to0
    x[inside & (s.labels == 1)] = to1
    return ScoreSet(_frozen(x), s.labels, s.n0, s.n1)


def star_transform(s: ScoreSet, z: GrayZone) -> ScoreSet:
    """Oracle scenario: interior class 0 to ``c_low``, interior class 1 to ``c_high``."""
    return _move_interior(s, z, z.c_low, z.c_high)


def dagger_transform(s: ScoreSet, z: GrayZone) -> ScoreSet:
    """Saboteur scenario: interior class 0 to ``c_high``, interior class 1 to ``c_low``."""
    return _move_interior(s, z, z.c_high, z.c_low)


def classify_at_point(s: ScoreSet, c: float) -> tuple[int, int]:
    below = s.scores < c
    f1 = int(np.count_nonzero(below & (s.labels == 1)))
    return int(np.count_nonzero(below)) - f1, f1


def bound_counts(t: ScoreSet, z: GrayZone) -> tuple[int, int]:
    """Per-class counts of transformed scores strictly below the zone centre."""
    if z.is_empty:
        raise ValueError("bound_counts needs a nonempty zone; use classify_at_point")
    return classify_at_point(t, (z.c_low + z.c_high) / 2.0)


def bound_points(s: ScoreSet, z: GrayZone, c_j: float) -> tuple[BoundPoint, BoundPoint]:
    """Upper (oracle) and lower (saboteur) points for zone ``z`` at index ``c_j``.

    An empty zone reduces both to the ordinary cutoff at ``c_j``.
    """
    if z.is_empty:
        p = BoundPoint.from_counts(*classify_at_point(s, c_j), s.n0, s.n1)
        return p, p
    upper = BoundPoint.from_counts(*bound_counts(star_transform(s, z), z), s.n0, s.n1)
    lower = BoundPoint.from_counts(*bound_counts(dagger_transform(s, z), z), s.n0, s.n1)
    return upper, lower


def _choices(s: ScoreSet, cfg: Config):
    grid = build_grid(s)
    table = _ZoneTable(s, grid)
    if cfg.indexing == "midpoint":
        for k in range(grid.r - 1):
            yield float(grid.mids[k]), optimal_zone(k, s, grid, cfg, _table=table)
    elif cfg.indexing == "lower":
        # c_low pinned at uniques[i]; an empty choice falls back to the cutoff just above it
        for i in range(grid.r - 1):
            yield float(grid.mids[i]), optimal_zone_bound_indexed(i, "lower", s, grid, cfg, _table=table)
    else:
        for i in range(1, grid.r):
            yield float(grid.mids[i - 1]), optimal_zone_bound_indexed(i, "upper", s, grid, cfg, _table=table)


def fuzzy_curves(s: ScoreSet, cfg: Config) -> FuzzyRocResult:
    """Compute the fuzzy ROC: one bound record per midpoint, ascending."""
    records = []
    for c_j, choice in _choices(s, cfg):
        upper, lower = bound_points(s, choice.zone, c_j)
        records.append(BoundRecord(c_j, choice, upper, lower))
    return FuzzyRocResult(cfg, tuple(records), tuple(empirical_roc(s)), s.n0, s.n1)


def roc_at(s: ScoreSet, threshold: float) -> RocPoint:
    """Standard ROC point for the rule "predict 1 when score >= threshold"."""
    pos0 = int(np.count_nonzero(s.scores0 >= threshold))
    pos1 = int(np.count_nonzero(s.scores1 >= threshold))
    return RocPoint(pos0 / s.n0, pos1 / s.n1, float(threshold))
