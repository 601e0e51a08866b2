"""Slow, independent recomputation of the fuzzy ROC for testing.

Nothing here reuses the search or bound code of the package; only the data
containers are shared. The candidate family is characterized directly as a
set of unique-index pairs instead of being generated by expansion, AUCs come
from explicit pair loops, and bound points from literally moving the scores.
"""

from __future__ import annotations

from fractions import Fraction

from .bounds import BoundPoint, BoundRecord, FuzzyRocResult
from .ingest import Config, ScoreSet
from .roc import RocPoint
from .search import GrayZone, ZoneChoice

MAX_N = 200


def _pair_auc(xs, ys, keep) -> Fraction | None:
    zeros = [xs[i] for i in keep if ys[i] == 0]
    ones = [xs[i] for i in keep if ys[i] == 1]
    if not zeros or not ones:
        return None
    total = 0
    for a in zeros:
        for b in ones:
            if b > a:
                total += 2
            elif b == a:
                total += 1
    return Fraction(total, 2 * len(zeros) * len(ones))


def _admissible(g0, g1, n, cfg: Config) -> bool:
    if g0 == 0 and g1 == 0:
        return True
    if cfg.constraint == "target":
        return ((1.0 - cfg.pi) * g0 + cfg.pi * g1) / n < cfg.gamma
    return (g0 + g1) / n < cfg.gamma


def _family(k, r, mode):
    """All (level, lo, hi) pairs of unique indices that index ``k`` can use."""
    pairs = []
    for lo in range(r):
        for hi in range(lo + 2, r):
            if mode == "midpoint":
                left, right = k - lo, hi - k - 1
                if left < 0 or right < 0:
                    continue
                balanced = left == right
                left_clamped = lo == 0 and right > left
                right_clamped = hi == r - 1 and left > right
                if balanced or left_clamped or right_clamped:
                    pairs.append((max(left, right), lo, hi))
            elif mode == "lower" and lo == k:
                pairs.append((hi - lo, lo, hi))
            elif mode == "upper" and hi == k:
                pairs.append((hi - lo, lo, hi))
    return pairs


def _counts_below(xs, ys, cut):
    f0 = sum(1 for x, y in zip(xs, ys) if y == 0 and x < cut)
    f1 = sum(1 for x, y in zip(xs, ys) if y == 1 and x < cut)
    return f0, f1


def _point(f0, f1, n0, n1):
    return BoundPoint((n0 - f0) / n0, (n1 - f1) / n1, f0, f1)


def brute_force_fuzzy(s: ScoreSet, cfg: Config) -> FuzzyRocResult:
    if s.n > MAX_N:
        raise ValueError(f"reference oracle is limited to n <= {MAX_N}, got {s.n}")
    xs = [float(v) for v in s.scores]
    ys = [int(v) for v in s.labels]
    n, n0, n1 = len(xs), ys.count(0), ys.count(1)
    u = sorted(set(xs))
    r = len(u)
    if r < 2:
        raise ValueError("degenerate score distribution")
    everyone = list(range(n))
    full_auc = _pair_auc(xs, ys, everyone)

    if cfg.indexing == "midpoint":
        indices = [(k, k, (u[k] + u[k + 1]) / 2, (u[k] + u[k + 1]) / 2) for k in range(r - 1)]
    elif cfg.indexing == "lower":
        indices = [(i, i, u[i], (u[i] + u[i + 1]) / 2) for i in range(r - 1)]
    else:
        indices = [(i, i, u[i], (u[i - 1] + u[i]) / 2) for i in range(1, r)]

    records = []
    for _, k, index_value, c_j in indices:
        options = [(full_auc, 0.0, 0, GrayZone(c_j, c_j, 0, 0))]
        for level, lo, hi in _family(k, r, cfg.indexing):
            a, b = u[lo], u[hi]
            inside = [i for i in everyone if a < xs[i] < b]
            g0 = sum(1 for i in inside if ys[i] == 0)
            g1 = len(inside) - g0
            if not _admissible(g0, g1, n, cfg):
                continue
            auc = _pair_auc(xs, ys, [i for i in everyone if not a < xs[i] < b])
            options.append((auc, b - a, level, GrayZone(a, b, g0, g1)))
        examined = len(options)
        defined = [o for o in options if o[0] is not None]
        top = max(o[0] for o in defined)
        best = [o for o in defined if o[0] == top]
        narrowest = min(o[1] for o in best)
        best = [o for o in best if o[1] == narrowest]
        earliest = min(o[2] for o in best)
        auc, _, _, zone = [o for o in best if o[2] == earliest][0]

        if zone.c_low == zone.c_high:
            upper = lower = _point(*_counts_below(xs, ys, c_j), n0, n1)
        else:
            a, b = zone.c_low, zone.c_high
            star = [(a if y == 0 else b) if a < x < b else x for x, y in zip(xs, ys)]
            dagger = [(b if y == 0 else a) if a < x < b else x for x, y in zip(xs, ys)]
            upper = _point(*_counts_below(star, ys, (a + b) / 2), n0, n1)
            lower = _point(*_counts_below(dagger, ys, (a + b) / 2), n0, n1)
        choice = ZoneChoice(float(index_value), zone, float(auc), examined)
        records.append(BoundRecord(float(c_j), choice, upper, lower))

    roc = [RocPoint(0.0, 0.0, float("inf"))]
    for t in reversed(u):
        fp = sum(1 for x, y in zip(xs, ys) if y == 0 and x >= t)
        tp = sum(1 for x, y in zip(xs, ys) if y == 1 and x >= t)
        roc.append(RocPoint(fp / n0, tp / n1, t))
    return FuzzyRocResult(cfg, tuple(records), tuple(roc), n0, n1)
