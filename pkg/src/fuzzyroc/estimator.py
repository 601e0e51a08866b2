"""scikit-learn style front end."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_consistent_length, check_is_fitted, column_or_1d

from .bounds import fuzzy_curves
from .diagnostics import zone_profile
from .ingest import Config, build_grid, make_score_set
from .serialize import write_result_csv, write_result_json
from .svg import PlotOptions, render_svg


class FuzzyROC(BaseEstimator):
    """Fuzzy ROC of a continuous score against binary labels.

    For every midpoint between consecutive distinct scores, picks the gray
    zone (cases left unclassified) that maximizes the AUC of the classified
    cases under a size constraint, then bounds sensitivity and specificity
    by an oracle and a saboteur scenario for the gray-zone cases.

    Parameters
    ----------
    gamma : float, default=0.2
        Maximum tolerated fraction of unclassified cases (strict).
    pi : float, optional
        Target-population prevalence of class 1, used by
        ``constraint="target"``.
    constraint : {"sample", "target"}, default="sample"
    indexing : {"midpoint", "lower", "upper"}, default="midpoint"

    Attributes
    ----------
    result_ : FuzzyRocResult
    profile_ : list of ZoneProfileRow
    upper_ : ndarray of shape (n_midpoints, 2)
        Oracle (fpr, tpr) bound points, in midpoint order.
    lower_ : ndarray of shape (n_midpoints, 2)
        Saboteur (fpr, tpr) bound points.
    zones_ : ndarray of shape (n_midpoints, 2)
        Chosen (c_low, c_high); rows with equal entries are empty zones.
    classified_auc_ : ndarray of shape (n_midpoints,)
    """

    def __init__(self, gamma=0.2, *, pi=None, constraint="sample", indexing="midpoint"):
        self.gamma = gamma
        self.pi = pi
        self.constraint = constraint
        self.indexing = indexing

    def fit(self, X, y):
        """Compute the fuzzy ROC.

        ``X`` is the score, either 1-D or a single column; ``y`` holds 0/1
        labels, with low scores predicting class 0.
        """
        X = check_array(X, ensure_2d=False, dtype=float)
        if X.ndim == 2:
            if X.shape[1] != 1:
                raise ValueError(f"expected a single score column, got {X.shape[1]}")
            X = X[:, 0]
        y = column_or_1d(y)
        check_consistent_length(X, y)

        self.config_ = Config(self.gamma, self.pi, self.constraint, self.indexing)
        self.score_set_ = make_score_set(X, y)
        self.grid_ = build_grid(self.score_set_)
        self.result_ = fuzzy_curves(self.score_set_, self.config_)
        self.profile_ = zone_profile(self.result_, self.score_set_)

        recs = self.result_.records
        self.upper_ = self.result_.upper_points()
        self.lower_ = self.result_.lower_points()
        self.zones_ = np.array([[r.zone.c_low, r.zone.c_high] for r in recs])
        self.classified_auc_ = np.array([r.choice.classified_auc for r in recs])
        self.n_features_in_ = 1
        return self

    def to_json(self) -> str:
        check_is_fitted(self, "result_")
        return write_result_json(self.result_, self.profile_)

    def to_csv(self) -> str:
        check_is_fitted(self, "result_")
        return write_result_csv(self.result_, self.profile_)

    def to_svg(self, opts: PlotOptions = PlotOptions()) -> str:
        check_is_fitted(self, "result_")
        return render_svg(self.result_, opts)
