"""Fuzzy ROC curves for classifiers with a gray zone of unclassified cases."""

from .bounds import (
    BoundPoint,
    BoundRecord,
    FuzzyRocResult,
    bound_counts,
    bound_points,
    classify_at_point,
    dagger_transform,
    fuzzy_curves,
    star_transform,
)
from .diagnostics import ScenarioRow, ZoneProfileRow, scenario_dotplot, zone_profile
from .estimator import FuzzyROC
from .ingest import (
    Config,
    DegenerateScoresError,
    MidpointGrid,
    ScoreDataError,
    ScoreSet,
    build_grid,
    make_score_set,
    parse_scores,
    serialize_scores,
)
from .roc import RocPoint, UndefinedAUCError, empirical_auc, empirical_roc, mann_whitney_u2
from .search import (
    GrayZone,
    ZoneChoice,
    candidates_for_index,
    classified_auc,
    gamma_ok,
    optimal_zone,
    optimal_zone_bound_indexed,
    zone_counts,
)
from .serialize import read_result_json, write_result_csv, write_result_json
from .svg import PlotOptions, render_dotplot_svg, render_profile_svg, render_svg

__version__ = "0.1.0"
