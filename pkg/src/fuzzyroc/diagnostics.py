"""Gray-zone profile and oracle/saboteur scenario data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import FuzzyRocResult, dagger_transform, star_transform
from .ingest import ScoreSet
from .search import GrayZone, zone_counts


@dataclass(frozen=True)
class ZoneProfileRow:
    """Size of the chosen zone at one midpoint.

    ``zone_fraction`` is always the plain sample proportion;
    ``target_fraction`` is the prevalence-weighted one and is only filled
    when the configuration carries ``pi``.
    """

    c_j: float
    zone_fraction: float
    zone_width: float
    target_fraction: Optional[float] = None


def zone_profile(result: FuzzyRocResult, s: ScoreSet) -> list[ZoneProfileRow]:
    pi = result.config.pi
    rows = []
    for rec in result.records:
        z = rec.zone
        target = None if pi is None else ((1.0 - pi) * z.g0 + pi * z.g1) / s.n
        rows.append(ZoneProfileRow(rec.c_j, (z.g0 + z.g1) / s.n, z.width, target))
    return rows


@dataclass(frozen=True)
class ScenarioRow:
    name: str
    scores: np.ndarray
    labels: np.ndarray


def scenario_dotplot(s: ScoreSet, z) -> list[ScenarioRow]:
    """Observed, oracle and saboteur versions of the scores for one zone."""
    if not isinstance(z, GrayZone):
        z = zone_counts(z, s)
    return [
        ScenarioRow("observed", s.scores, s.labels),
        ScenarioRow("oracle", star_transform(s, z).scores, s.labels),
        ScenarioRow("saboteur", dagger_transform(s, z).scores, s.labels),
    ]
