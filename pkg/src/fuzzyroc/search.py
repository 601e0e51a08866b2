"""Gray-zone candidates and the per-index AUC optimization.

A gray zone ``(c_low, c_high)`` is open: points equal to either limit are
classified. Candidate limits are always observed distinct scores. Zones with
no observed score strictly inside are normalized to the *empty zone*, stored
as ``c_low == c_high`` at the index point.

Grid indices are 0-based: midpoint ``k`` sits between ``uniques[k]`` and
``uniques[k + 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .ingest import Config, MidpointGrid, ScoreSet
from .roc import auc_fraction


@dataclass(frozen=True)
class GrayZone:
    c_low: float
    c_high: float
    g0: int = 0
    g1: int = 0

    @property
    def is_empty(self) -> bool:
        return self.c_low == self.c_high

    @property
    def width(self) -> float:
        return self.c_high - self.c_low

    @property
    def count(self) -> int:
        return self.g0 + self.g1


@dataclass(frozen=True)
class ZoneChoice:
    """The selected zone for one index point.

    ``index_value`` is the midpoint, or the fixed zone limit in the
    bound-indexed modes.
    """

    index_value: float
    zone: GrayZone
    classified_auc: float
    candidates_examined: int


def empty_zone(at: float) -> GrayZone:
    return GrayZone(float(at), float(at), 0, 0)


def _interior_mask(s: ScoreSet, c_low: float, c_high: float) -> np.ndarray:
    return (s.scores > c_low) & (s.scores < c_high)


def zone_counts(z, s: ScoreSet) -> GrayZone:
    """Count class-0 and class-1 scores strictly inside ``z``."""
    if isinstance(z, GrayZone):
        c_low, c_high = z.c_low, z.c_high
    else:
        c_low, c_high = float(z[0]), float(z[1])
    if c_low > c_high:
        raise ValueError(f"zone limits out of order: ({c_low}, {c_high})")
    inside = _interior_mask(s, c_low, c_high)
    g1 = int(np.count_nonzero(inside & (s.labels == 1)))
    g0 = int(np.count_nonzero(inside)) - g1
    return GrayZone(c_low, c_high, g0, g1)


def gamma_ok(z: GrayZone, s: ScoreSet, cfg: Config) -> bool:
    """Whether the zone respects the configured size constraint (strict ``<``).

    A zone holding no cases is always admissible, so the empty zone survives
    ``gamma = 0``.
    """
    if z.g0 + z.g1 == 0:
        return True
    if cfg.constraint == "target":
        if cfg.pi is None:
            raise ValueError("the target constraint requires pi")
        return ((1.0 - cfg.pi) * z.g0 + cfg.pi * z.g1) / s.n < cfg.gamma
    return (z.g0 + z.g1) / s.n < cfg.gamma


def classified_auc(z: GrayZone, s: ScoreSet) -> Optional[float]:
    """AUC over the cases left outside the zone; ``None`` if a class is gone."""
    keep = ~_interior_mask(s, z.c_low, z.c_high)
    kept0 = s.scores[keep & (s.labels == 0)]
    kept1 = s.scores[keep & (s.labels == 1)]
    if kept0.size == 0 or kept1.size == 0:
        return None
    return float(auc_fraction(kept0, kept1))


# -- expansion sequences ------------------------------------------------------


def _midpoint_levels(k: int, r: int):
    """Unique-index limits ``(level, lo, hi)`` of the nonempty zones around midpoint ``k``.

    Level ``m`` reaches ``m - 1`` values past the two neighbours on each side
    (level 1, the neighbours alone, holds nothing and is skipped). A side that
    hits an extreme stays clamped while the other keeps growing, until both
    are clamped.
    """
    m = np.arange(2, max(k + 1, r - 1 - k) + 1)
    return m, np.maximum(0, k - (m - 1)), np.minimum(r - 1, k + m)


def _bound_levels(i: int, side: str, r: int):
    if side == "lower":
        hi = np.arange(i + 2, r)
        return hi - i, np.full_like(hi, i), hi
    if side == "upper":
        lo = np.arange(i - 2, -1, -1)
        return i - lo, lo, np.full_like(lo, i)
    raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")


# float AUCs this close to the best are re-ranked exactly
_SHORTLIST_TOL = 1e-9


class _ZoneTable:
    """Cumulative class counts and within-block Mann-Whitney sums over the grid.

    For a zone with limits at unique indices ``lo < hi`` the classified set is
    uniques ``[0, lo]`` plus ``[hi, r)``; every score in the upper block beats
    every score in the lower block, so its U splits into prefix, suffix and a
    cross term.
    """

    def __init__(self, s: ScoreSet, grid: MidpointGrid):
        self.s = s
        self.grid = grid
        r = grid.r
        pos = np.searchsorted(grid.uniques, s.scores)
        c0 = np.bincount(pos[s.labels == 0], minlength=r).astype(np.int64)
        c1 = np.bincount(pos[s.labels == 1], minlength=r).astype(np.int64)
        self.cum0 = np.concatenate([[0], np.cumsum(c0)])
        self.cum1 = np.concatenate([[0], np.cumsum(c1)])
        # pre[t]: 2U within uniques [0, t); suf[t]: 2U within uniques [t, r)
        step = 2 * c1 * self.cum0[:-1] + c1 * c0
        self.pre = np.concatenate([[0], np.cumsum(step)])
        above1 = self.cum1[r] - self.cum1[1:]
        step = 2 * c0 * above1 + c1 * c0
        self.suf = np.concatenate([np.cumsum(step[::-1])[::-1], [0]])

    def zone(self, lo: int, hi: int) -> GrayZone:
        u = self.grid.uniques
        g0 = int(self.cum0[hi] - self.cum0[lo + 1])
        g1 = int(self.cum1[hi] - self.cum1[lo + 1])
        return GrayZone(float(u[lo]), float(u[hi]), g0, g1)

    def feasible(self, levels, cfg: Config):
        """Restrict level arrays to the prefix that passes the size constraint."""
        level, lo, hi = levels
        g0 = self.cum0[hi] - self.cum0[lo + 1]
        g1 = self.cum1[hi] - self.cum1[lo + 1]
        n = self.s.n
        # same float expressions as gamma_ok
        if cfg.constraint == "target":
            ok = ((1.0 - cfg.pi) * g0 + cfg.pi * g1) / n < cfg.gamma
        else:
            ok = (g0 + g1) / n < cfg.gamma
        ok |= (g0 + g1) == 0
        stop = int(np.argmin(ok)) if not ok.all() else ok.size
        return level[:stop], lo[:stop], hi[:stop]

    def kept_u2(self, lo, hi):
        """2U and pair count of the classified cases for each (lo, hi)."""
        r = self.grid.r
        below0, below1 = self.cum0[lo + 1], self.cum1[lo + 1]
        above0, above1 = self.cum0[r] - self.cum0[hi], self.cum1[r] - self.cum1[hi]
        num = self.pre[lo + 1] + self.suf[hi] + 2 * above1 * below0
        den = 2 * (below0 + above0) * (below1 + above1)
        return num, den


def _choose(table: _ZoneTable, levels, cfg: Config, index_value: float, empty_at: float) -> ZoneChoice:
    s, u, r = table.s, table.grid.uniques, table.grid.r
    level, lo, hi = table.feasible(levels, cfg)
    full = Fraction(int(table.pre[r]), 2 * s.n0 * s.n1)
    best_key, best_zone = (-full, 0.0, 0), empty_zone(empty_at)
    if level.size:
        num, den = table.kept_u2(lo, hi)
        defined = den > 0
        approx = np.full(num.shape, -np.inf)
        approx[defined] = num[defined] / den[defined]
        cutoff = max(float(full), float(approx.max())) - _SHORTLIST_TOL
        for t in np.nonzero(approx >= cutoff)[0].tolist():
            key = (-Fraction(int(num[t]), int(den[t])), float(u[hi[t]] - u[lo[t]]), int(level[t]))
            if key < best_key:
                best_key, best_zone = key, table.zone(int(lo[t]), int(hi[t]))
    return ZoneChoice(float(index_value), best_zone, float(-best_key[0]), 1 + int(level.size))


def _bound_empty_at(grid: MidpointGrid, i: int, side: str) -> float:
    if side == "lower":
        return float(grid.mids[i]) if i < grid.r - 1 else float(grid.uniques[i])
    return float(grid.mids[i - 1]) if i > 0 else float(grid.uniques[i])


def candidates_for_index(k: int, s: ScoreSet, grid: MidpointGrid, cfg: Config) -> list[GrayZone]:
    """Feasible zones around midpoint ``k`` in expansion order, empty zone first.

    The degenerate first level (the two neighbours themselves) collapses into
    the leading empty zone instead of being listed twice.
    """
    if not 0 <= k < grid.r - 1:
        raise IndexError(f"midpoint index {k} out of range")
    table = _ZoneTable(s, grid)
    _, lo, hi = table.feasible(_midpoint_levels(k, grid.r), cfg)
    return [empty_zone(grid.mids[k])] + [table.zone(a, b) for a, b in zip(lo.tolist(), hi.tolist())]


def optimal_zone(k: int, s: ScoreSet, grid: MidpointGrid, cfg: Config, *, _table=None) -> ZoneChoice:
    """Best zone around midpoint ``k`` by classified-cases AUC.

    Ties go to the narrower zone, then to the earlier expansion level.
    """
    if not 0 <= k < grid.r - 1:
        raise IndexError(f"midpoint index {k} out of range")
    table = _table if _table is not None else _ZoneTable(s, grid)
    c = float(grid.mids[k])
    return _choose(table, _midpoint_levels(k, grid.r), cfg, c, c)


def optimal_zone_bound_indexed(
    i: int, side: str, s: ScoreSet, grid: MidpointGrid, cfg: Config, *, _table=None
) -> ZoneChoice:
    """Best zone with one limit pinned at ``uniques[i]``.

    ``side="lower"`` pins ``c_low`` and grows ``c_high`` upward;
    ``side="upper"`` pins ``c_high`` and grows ``c_low`` downward.
    """
    if not 0 <= i < grid.r:
        raise IndexError(f"unique-value index {i} out of range")
    table = _table if _table is not None else _ZoneTable(s, grid)
    levels = _bound_levels(i, side, grid.r)
    return _choose(table, levels, cfg, float(grid.uniques[i]), _bound_empty_at(grid, i, side))
