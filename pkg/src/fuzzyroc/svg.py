"""Self-contained SVG rendering of fuzzy ROC results.

Output depends only on the inputs (fixed number formatting, no timestamps,
no ids drawn from memory addresses), so identical inputs give identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bounds import FuzzyRocResult
from .diagnostics import ScenarioRow, ZoneProfileRow
from .search import GrayZone

VIEWS = ("segments", "region", "both")

SEGMENT_COLOR = "#1f4e79"
REGION_COLOR = "#7aa6d6"
ROC_COLOR = "#222222"
CLASS_COLORS = ("#d62728", "#1f77b4")

REGION_NOTE = "Shaded area between the oracle and saboteur curves is a visual aid only."


@dataclass(frozen=True)
class PlotOptions:
    view: str = "both"
    show_standard_roc: bool = True
    width_px: int = 480
    height_px: int = 480
    title: str = "Fuzzy ROC"

    def __post_init__(self):
        if self.view not in VIEWS:
            raise ValueError(f"view must be one of {VIEWS}, got {self.view!r}")
        if self.width_px < 100 or self.height_px < 100:
            raise ValueError("width_px and height_px must be at least 100")


def _esc(text: str) -> str:
    return (
        str(text)
        .replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _f(v: float) -> str:
    return f"{v:.2f}"


def _open(width: int, height: int, title: str, desc: str = "") -> list[str]:
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f"<title>{_esc(title)}</title>",
    ]
    if desc:
        out.append(f"<desc>{_esc(desc)}</desc>")
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>')
    return out


class _Frame:
    """Maps data coordinates into a rectangular plot area of one panel."""

    def __init__(self, x0, y0, w, h, xlim=(0.0, 1.0), ylim=(0.0, 1.0)):
        self.left, self.top = x0 + 52, y0 + 30
        self.w, self.h = w - 52 - 14, h - 30 - 44
        self.xlim, self.ylim = xlim, ylim

    def px(self, x: float, y: float) -> tuple[float, float]:
        (xa, xb), (ya, yb) = self.xlim, self.ylim
        sx = (x - xa) / (xb - xa) if xb > xa else 0.5
        sy = (y - ya) / (yb - ya) if yb > ya else 0.5
        return self.left + sx * self.w, self.top + (1.0 - sy) * self.h

    def axes(self, xlabel: str, ylabel: str, title: str, ticks: int = 5) -> list[str]:
        out = [
            f'<rect class="plot-area" x="{_f(self.left)}" y="{_f(self.top)}" width="{_f(self.w)}" '
            f'height="{_f(self.h)}" fill="none" stroke="#888888" stroke-width="1"/>'
        ]
        (xa, xb), (ya, yb) = self.xlim, self.ylim
        for t in range(ticks + 1):
            xv = xa + (xb - xa) * t / ticks
            yv = ya + (yb - ya) * t / ticks
            px, _ = self.px(xv, ya)
            _, py = self.px(xa, yv)
            bottom = self.top + self.h
            out.append(
                f'<line x1="{_f(px)}" y1="{_f(bottom)}" x2="{_f(px)}" y2="{_f(bottom + 4)}" stroke="#888888"/>'
            )
            out.append(
                f'<text x="{_f(px)}" y="{_f(bottom + 16)}" font-size="10" text-anchor="middle" '
                f'font-family="sans-serif">{xv:.3g}</text>'
            )
            out.append(
                f'<line x1="{_f(self.left - 4)}" y1="{_f(py)}" x2="{_f(self.left)}" y2="{_f(py)}" stroke="#888888"/>'
            )
            out.append(
                f'<text x="{_f(self.left - 7)}" y="{_f(py + 3)}" font-size="10" text-anchor="end" '
                f'font-family="sans-serif">{yv:.3g}</text>'
            )
        cx = self.left + self.w / 2
        out.append(
            f'<text x="{_f(cx)}" y="{_f(self.top + self.h + 34)}" font-size="12" text-anchor="middle" '
            f'font-family="sans-serif">{_esc(xlabel)}</text>'
        )
        cy = self.top + self.h / 2
        out.append(
            f'<text x="{_f(self.left - 38)}" y="{_f(cy)}" font-size="12" text-anchor="middle" '
            f'font-family="sans-serif" transform="rotate(-90 {_f(self.left - 38)} {_f(cy)})">{_esc(ylabel)}</text>'
        )
        out.append(
            f'<text x="{_f(cx)}" y="{_f(self.top - 10)}" font-size="13" text-anchor="middle" '
            f'font-family="sans-serif">{_esc(title)}</text>'
        )
        return out


def _pts(frame: _Frame, points) -> str:
    return " ".join(f"{_f(a)},{_f(b)}" for a, b in (frame.px(x, y) for x, y in points))


def _region_polygons(result: FuzzyRocResult) -> list[list[tuple[float, float]]]:
    """One polygon per run of consecutive nonempty zones, in midpoint order.

    A run is closed off at the neighbouring empty-zone records, where the
    two curves meet. Points are never re-sorted.
    """
    recs = result.records
    polys = []
    k = 0
    while k < len(recs):
        if recs[k].zone.is_empty:
            k += 1
            continue
        start = k
        while k < len(recs) and not recs[k].zone.is_empty:
            k += 1
        lo = max(start - 1, 0)
        hi = min(k, len(recs) - 1)
        upper = [(r.upper.fpr, r.upper.tpr) for r in recs[lo : hi + 1]]
        lower = [(r.lower.fpr, r.lower.tpr) for r in recs[lo : hi + 1]]
        polys.append(upper + lower[::-1])
    return polys


def _roc_panel(result: FuzzyRocResult, frame: _Frame, view: str, opts: PlotOptions, title: str) -> list[str]:
    out = [f'<g class="panel" data-view="{view}">']
    out += frame.axes("1 - specificity", "sensitivity", title)
    (x0, y0), (x1, y1) = frame.px(0, 0), frame.px(1, 1)
    out.append(
        f'<line class="diagonal" x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" y2="{_f(y1)}" '
        f'stroke="#bbbbbb" stroke-dasharray="4 3" stroke-width="1"/>'
    )
    if view == "region":
        for poly in _region_polygons(result):
            out.append(
                f'<polygon class="region" points="{_pts(frame, poly)}" fill="{REGION_COLOR}" '
                f'fill-opacity="0.35" stroke="none"/>'
            )
        for name, attr in (("upper-curve", "upper"), ("lower-curve", "lower")):
            pts = [(getattr(r, attr).fpr, getattr(r, attr).tpr) for r in result.records]
            out.append(
                f'<polyline class="{name}" points="{_pts(frame, pts)}" fill="none" '
                f'stroke="{REGION_COLOR}" stroke-width="1.2"/>'
            )
    if opts.show_standard_roc:
        pts = [(p.fpr, p.tpr) for p in result.roc]
        out.append(
            f'<polyline class="standard-roc" points="{_pts(frame, pts)}" fill="none" '
            f'stroke="{ROC_COLOR}" stroke-width="0.8"/>'
        )
    for rec in result.records:
        ux, uy = frame.px(rec.upper.fpr, rec.upper.tpr)
        lx, ly = frame.px(rec.lower.fpr, rec.lower.tpr)
        if rec.zone.is_empty:
            out.append(f'<circle class="segment" cx="{_f(ux)}" cy="{_f(uy)}" r="1.8" fill="{SEGMENT_COLOR}"/>')
        else:
            out.append(
                f'<line class="segment" x1="{_f(lx)}" y1="{_f(ly)}" x2="{_f(ux)}" y2="{_f(uy)}" '
                f'stroke="{SEGMENT_COLOR}" stroke-width="1.2"/>'
            )
    out.append("</g>")
    return out


def render_svg(result: FuzzyRocResult, opts: PlotOptions = PlotOptions()) -> str:
    """Fuzzy ROC plot: segments view, region view, or both side by side."""
    views = ["segments", "region"] if opts.view == "both" else [opts.view]
    width = opts.width_px * len(views)
    cfg = result.config
    title = f"{opts.title} (gamma = {cfg.gamma:g})"
    out = _open(width, opts.height_px, title, REGION_NOTE if "region" in views else "")
    for n, view in enumerate(views):
        frame = _Frame(n * opts.width_px, 0, opts.width_px, opts.height_px)
        out += _roc_panel(result, frame, view, opts, f"{title}, {view}")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_profile_svg(
    profile: Sequence[ZoneProfileRow], gamma: float, width_px: int = 480, height_px: int = 320, title: str = "Gray zone"
) -> str:
    """Zone proportion and zone width against the midpoint, side by side."""
    cs = [row.c_j for row in profile]
    xlim = (min(cs), max(cs)) if cs else (0.0, 1.0)
    panels = [
        ("zone_fraction", "proportion in gray zone", (0.0, max(gamma, 1e-12))),
        ("zone_width", "gray zone width", (0.0, max([r.zone_width for r in profile] + [1e-12]))),
    ]
    out = _open(2 * width_px, height_px, f"{title} (gamma = {gamma:g})")
    for n, (attr, label, ylim) in enumerate(panels):
        frame = _Frame(n * width_px, 0, width_px, height_px, xlim=xlim, ylim=ylim)
        out.append(f'<g class="panel" data-view="{attr}">')
        out += frame.axes("midpoint", label, label)
        pts = [(row.c_j, getattr(row, attr)) for row in profile]
        out.append(
            f'<polyline class="profile" points="{_pts(frame, pts)}" fill="none" '
            f'stroke="{SEGMENT_COLOR}" stroke-width="1"/>'
        )
        for x, y in pts:
            px, py = frame.px(x, y)
            out.append(f'<circle class="profile-point" cx="{_f(px)}" cy="{_f(py)}" r="1.8" fill="{SEGMENT_COLOR}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dotplot_svg(
    rows: Sequence[ScenarioRow], zone: GrayZone, width_px: int = 560, row_px: int = 140, title: str = "Scenarios"
) -> str:
    """Dotplots by class for the observed, oracle and saboteur scores."""
    values = [float(v) for row in rows for v in row.scores]
    lo, hi = min(values), max(values)
    pad = (hi - lo) * 0.05 or 1.0
    xlim = (lo - pad, hi + pad)
    height = row_px * len(rows)
    out = _open(width_px, height, f"{title}: gray zone ({zone.c_low:g}, {zone.c_high:g})")
    for n, row in enumerate(rows):
        frame = _Frame(0, n * row_px, width_px, row_px, xlim=xlim, ylim=(-0.5, 1.5))
        out.append(f'<g class="panel" data-view="{_esc(row.name)}">')
        out += frame.axes("score" if n == len(rows) - 1 else "", "class", row.name, ticks=4)
        for limit in (zone.c_low, zone.c_high):
            (x, y0), (_, y1) = frame.px(limit, -0.5), frame.px(limit, 1.5)
            out.append(
                f'<line class="zone-limit" x1="{_f(x)}" y1="{_f(y0)}" x2="{_f(x)}" y2="{_f(y1)}" '
                f'stroke="#999999" stroke-dasharray="3 3"/>'
            )
        for v, label in zip(row.scores.tolist(), row.labels.tolist()):
            px, py = frame.px(v, float(label))
            out.append(
                f'<circle class="dot dot-class{label}" cx="{_f(px)}" cy="{_f(py)}" r="2.5" '
                f'fill="{CLASS_COLORS[label]}" fill-opacity="0.6"/>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
