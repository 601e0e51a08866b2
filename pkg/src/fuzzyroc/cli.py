"""Command-line entry point: ``fuzzyroc --input scores.csv --gamma 0.2``.

Exit status is 0 on success, 1 for data errors and 2 for argument errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .bounds import fuzzy_curves
from .diagnostics import scenario_dotplot, zone_profile
from .ingest import CONSTRAINTS, INDEXINGS, Config, ScoreDataError, build_grid, parse_scores
from .search import zone_counts
from .serialize import write_result_csv, write_result_json
from .svg import VIEWS, PlotOptions, render_dotplot_svg, render_profile_svg, render_svg

log = logging.getLogger("fuzzyroc")

FORMATS = ("json", "csv", "svg")


def _formats(text: str) -> list[str]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in items if t not in FORMATS]
    if bad or not items:
        raise argparse.ArgumentTypeError(
            f"invalid format list {text!r}; choose from {','.join(FORMATS)}"
        )
    return items


def _zone(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LOW,HIGH, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"zone limits out of order: {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fuzzyroc",
        description="Fuzzy ROC bounds for classifiers that leave a gray zone unclassified.",
    )
    p.add_argument("--input", required=True, type=Path, help="CSV file with score and label columns")
    p.add_argument(
        "--gamma", type=float, action="append",
        help="tolerated unclassified fraction; repeat for a sweep (default 0.2)",
    )
    p.add_argument("--pi", type=float, help="target-population prevalence of class 1")
    p.add_argument("--constraint", choices=CONSTRAINTS, default="sample")
    p.add_argument("--indexing", choices=INDEXINGS, default="midpoint")
    p.add_argument("--view", choices=VIEWS, default="both")
    p.add_argument("--out", type=Path, default=Path("fuzzyroc-out"))
    p.add_argument("--format", type=_formats, default=list(FORMATS), help="comma list of json,csv,svg")
    p.add_argument("--score-col", default="score")
    p.add_argument("--label-col", default="label")
    p.add_argument(
        "--scenario-zone", type=_zone, metavar="LOW,HIGH",
        help="also draw observed/oracle/saboteur dotplots for this zone",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _gamma_tag(g: float) -> str:
    return f"{g:g}"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")

    gammas = args.gamma or [0.2]
    for g in gammas:
        if not 0.0 <= g <= 1.0:
            parser.error(f"--gamma must lie in [0, 1], got {g:g}")
    if args.pi is not None and not 0.0 < args.pi < 1.0:
        parser.error(f"--pi must lie in (0, 1), got {args.pi:g}")
    if args.constraint == "target" and args.pi is None:
        parser.error("--constraint target requires --pi")

    try:
        text = args.input.read_text(encoding="utf-8")
        s = parse_scores(text, args.score_col, args.label_col)
        build_grid(s)
    except (OSError, UnicodeDecodeError, ScoreDataError) as exc:
        print(f"fuzzyroc: error: {args.input}: {exc}", file=sys.stderr)
        return 1

    args.out.mkdir(parents=True, exist_ok=True)
    stem = args.input.stem
    opts = PlotOptions(view=args.view, title=stem)
    written = []
    for g in gammas:
        cfg = Config(g, args.pi, args.constraint, args.indexing)
        result = fuzzy_curves(s, cfg)
        profile = zone_profile(result, s)
        base = args.out / f"{stem}_gamma{_gamma_tag(g)}"
        outputs = {
            "json": lambda: write_result_json(result, profile),
            "csv": lambda: write_result_csv(result, profile),
            "svg": lambda: render_svg(result, opts),
        }
        for fmt in args.format:
            path = base.with_name(base.name + f".{fmt}")
            path.write_text(outputs[fmt](), encoding="utf-8")
            written.append(path)
        if "svg" in args.format:
            path = base.with_name(base.name + "_profile.svg")
            path.write_text(render_profile_svg(profile, g, title=stem), encoding="utf-8")
            written.append(path)
        log.info("gamma=%g: %d midpoints, %d nonempty zones", g, len(result.records),
                 sum(not r.zone.is_empty for r in result.records))

    if args.scenario_zone is not None:
        z = zone_counts(args.scenario_zone, s)
        path = args.out / f"{stem}_scenarios.svg"
        path.write_text(render_dotplot_svg(scenario_dotplot(s, z), z, title=stem), encoding="utf-8")
        written.append(path)

    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
