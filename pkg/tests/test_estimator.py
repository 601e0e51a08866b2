import json

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from fuzzyroc import Config, FuzzyROC, fuzzy_curves


def test_params_and_clone():
    est = FuzzyROC(0.3, pi=0.4, constraint="target", indexing="upper")
    assert est.get_params() == {"gamma": 0.3, "pi": 0.4, "constraint": "target", "indexing": "upper"}
    other = clone(est).set_params(gamma=0.1)
    assert other.gamma == 0.1 and est.gamma == 0.3


def test_fit_matches_functional_api(overlapping):
    est = FuzzyROC(0.3).fit(overlapping.scores, overlapping.labels)
    assert est.result_ == fuzzy_curves(overlapping, Config(0.3))
    assert est.upper_.shape == est.lower_.shape == (7, 2)
    assert est.zones_.shape == (7, 2)
    np.testing.assert_array_equal(est.classified_auc_, [8 / 9] * 7)
    assert np.all(est.upper_[:, 1] >= est.lower_[:, 1])
    assert json.loads(est.to_json())["config"]["gamma"] == 0.3
    assert est.to_csv().startswith("c_j,")
    assert est.to_svg().lstrip().startswith("<?xml")


def test_fit_accepts_column_vector(overlapping):
    a = FuzzyROC(0.2).fit(overlapping.scores.reshape(-1, 1), list(overlapping.labels))
    b = FuzzyROC(0.2).fit(list(overlapping.scores), overlapping.labels)
    assert a.result_ == b.result_


def test_fit_validation():
    with pytest.raises(ValueError):
        FuzzyROC().fit(np.ones((4, 2)), [0, 1, 0, 1])
    with pytest.raises(ValueError):
        FuzzyROC().fit([1, 2, 3], [0, 1])
    with pytest.raises(ValueError):
        FuzzyROC(gamma=2).fit([1, 2], [0, 1])
    with pytest.raises(ValueError):
        FuzzyROC(constraint="target").fit([1, 2], [0, 1])
    with pytest.raises(NotFittedError):
        FuzzyROC().to_json()
