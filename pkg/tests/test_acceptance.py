"""Exit criteria. Each test records a criterion label; the PASS/FAIL lines
are printed in the "acceptance criteria" section of the pytest summary."""

import json
import math
import subprocess
import sys
import time
import xml.etree.ElementTree as ET
from fractions import Fraction
from pathlib import Path

import jsonschema
import numpy as np
import pytest

from fuzzyroc import (
    Config,
    DegenerateScoresError,
    build_grid,
    dagger_transform,
    empirical_roc,
    fuzzy_curves,
    gamma_ok,
    make_score_set,
    mann_whitney_u2,
    parse_scores,
    star_transform,
    zone_counts,
)
from fuzzyroc.cli import main
from fuzzyroc.reference import brute_force_fuzzy
from fuzzyroc.serialize import load_schema

from conftest import random_score_set

pytestmark = pytest.mark.acceptance

DATA = Path(__file__).parent / "data"
SVG = "{http://www.w3.org/2000/svg}"


def fixtures(seed, count, n_low, n_high):
    rng = np.random.default_rng(seed)
    out = []
    for t in range(count):
        n = int(rng.integers(n_low, n_high + 1))
        out.append(random_score_set(rng, n, shift=float(rng.uniform(0, 2)), decimals=[None, 1, 2][t % 3]))
    return out


def exact_auc(s):
    return Fraction(mann_whitney_u2(s.scores0, s.scores1), 2 * s.n0 * s.n1)


def test_c1_gamma_zero_collapse(record_property):
    record_property("criterion", "C1 gamma=0: fuzzy bounds equal the empirical ROC point set (exact, < 5 s)")
    sets = fixtures(101, 50, 2, 500)
    start = time.perf_counter()
    for s in sets:
        res = fuzzy_curves(s, Config(0.0))
        roc = [(p.fpr, p.tpr) for p in empirical_roc(s)]
        upper = [(r.upper.fpr, r.upper.tpr) for r in res.records]
        lower = [(r.lower.fpr, r.lower.tpr) for r in res.records]
        assert upper == lower
        # the grid indexes every cutoff strictly between the extremes; the two
        # corners come from cutoffs no midpoint can produce
        assert upper == roc[1:-1][::-1]
        assert set(upper) | {(0.0, 0.0), (1.0, 1.0)} == set(roc)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"{elapsed:.2f}s"


def test_c2_auc_sandwich(record_property):
    record_property("criterion", "C2 AUC(star) >= AUC(observed) >= AUC(dagger) on 500 (fixture, zone) pairs (< 5 s)")
    rng = np.random.default_rng(202)
    sets = fixtures(203, 100, 2, 60)
    start = time.perf_counter()
    checked = 0
    for t in range(500):
        s = sets[t % len(sets)]
        lo, hi = np.sort(rng.uniform(s.scores.min() - 0.5, s.scores.max() + 0.5, 2))
        if t % 2:  # limits on observed values exercise the boundary convention
            u = build_grid(s).uniques
            lo, hi = np.sort(rng.choice(u, 2))
        z = zone_counts((lo, hi), s)
        assert exact_auc(star_transform(s, z)) >= exact_auc(s) >= exact_auc(dagger_transform(s, z))
        checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 500
    assert elapsed < 5.0, f"{elapsed:.2f}s"


def test_c3_pointwise_dominance(record_property):
    record_property("criterion", "C3 upper dominates lower at every midpoint; equal iff zone empty (< 10 s)")
    sets = fixtures(303, 100, 2, 120)
    start = time.perf_counter()
    nonempty = 0
    for s in sets:
        for gamma in (0.1, 0.2, 0.3):
            for rec in fuzzy_curves(s, Config(gamma)).records:
                up, low = rec.upper, rec.lower
                assert up.tpr >= low.tpr and up.fpr <= low.fpr
                same = up.tpr == low.tpr and up.fpr == low.fpr
                assert same == rec.zone.is_empty
                nonempty += not rec.zone.is_empty
    elapsed = time.perf_counter() - start
    assert nonempty > 0
    assert elapsed < 10.0, f"{elapsed:.2f}s"


def test_c4_constraint_satisfaction(record_property):
    record_property("criterion", "C4 every chosen zone passes its gamma constraint (sample and target, pi in 0.1/0.5/0.9)")
    configs = [Config(g) for g in (0.0, 0.1, 0.2, 0.3)]
    configs += [Config(g, pi=p, constraint="target") for g in (0.05, 0.1, 0.2, 0.3) for p in (0.1, 0.5, 0.9)]
    for s in fixtures(404, 40, 2, 80):
        for cfg in configs:
            for indexing in ("midpoint", "lower", "upper"):
                run = Config(cfg.gamma, cfg.pi, cfg.constraint, indexing)
                for rec in fuzzy_curves(s, run).records:
                    z = rec.zone
                    assert zone_counts(z, s) == z
                    assert gamma_ok(z, s, run)
                    if z.count:
                        if run.constraint == "sample":
                            assert (z.g0 + z.g1) / s.n < run.gamma
                        else:
                            assert ((1 - run.pi) * z.g0 + run.pi * z.g1) / s.n < run.gamma


def test_c5_oracle_equivalence(record_property):
    record_property("criterion", "C5 fuzzy_curves == brute_force_fuzzy on 200 fixtures, n in [6, 30] (< 60 s)")
    rng = np.random.default_rng(505)
    start = time.perf_counter()
    for t in range(200):
        s = random_score_set(rng, int(rng.integers(6, 31)), shift=float(rng.uniform(0, 2)),
                             decimals=[None, 1][t % 2])
        cfg = Config([0.1, 0.2, 0.34][t % 3])
        fast, slow = fuzzy_curves(s, cfg), brute_force_fuzzy(s, cfg)
        assert len(fast.records) == len(slow.records)
        for a, b in zip(fast.records, slow.records):
            assert a.c_j == b.c_j
            assert a.choice.classified_auc == b.choice.classified_auc
            assert a.zone.width == b.zone.width
            assert (a.upper.f0, a.upper.f1, a.lower.f0, a.lower.f1) == (b.upper.f0, b.upper.f1, b.lower.f0, b.lower.f1)
        assert fast == slow
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"{elapsed:.2f}s"


def test_c6_gamma_sweep_nesting(record_property):
    record_property("criterion", "C6 gamma sweep 0.1..0.3: per-midpoint zone width and segment length nondecreasing")
    rng = np.random.default_rng(606)
    s = random_score_set(rng, 150, shift=1.0)
    sweep = [fuzzy_curves(s, Config(g)) for g in (0.1, 0.15, 0.2, 0.25, 0.3)]

    def seg(rec):
        return math.hypot(rec.upper.fpr - rec.lower.fpr, rec.upper.tpr - rec.lower.tpr)

    totals = [sum(seg(r) for r in res.records) for res in sweep]
    assert totals == sorted(totals) and totals[-1] > totals[0]
    for small, large in zip(sweep, sweep[1:]):
        for a, b in zip(small.records, large.records):
            assert a.zone.width <= b.zone.width
            assert seg(a) <= seg(b)
            if not a.zone.is_empty:
                assert b.zone.c_low <= a.zone.c_low and a.zone.c_high <= b.zone.c_high


def _svg_counts(path):
    root = ET.fromstring(path.read_text())
    segs = [el for el in root.iter() if el.get("class") == "segment"]
    return root, segs


def test_c7_cli_contract(tmp_path, record_property):
    record_property("criterion", "C7 CLI: gamma=0 run, four-gamma sweep, missing --pi exits 2")
    src = tmp_path / "marker.csv"
    src.write_text((DATA / "overlapping.csv").read_text())
    s = parse_scores(src.read_text())
    r = build_grid(s).r
    schema = load_schema()

    out = tmp_path / "zero"
    assert main(["--input", str(src), "--gamma", "0", "--out", str(out)]) == 0
    doc = json.loads((out / "marker_gamma0.json").read_text())
    jsonschema.validate(doc, schema)
    roc = [(p["fpr"], p["tpr"]) for p in doc["roc"]]
    assert [(d["upper"]["fpr"], d["upper"]["tpr"]) for d in doc["records"]] == roc[1:-1][::-1]
    assert all(d["upper"] == d["lower"] for d in doc["records"])
    root, segs = _svg_counts(out / "marker_gamma0.svg")
    assert root.tag == SVG + "svg"
    assert len(segs) == 2 * (r - 1)  # both views
    assert all(el.tag == SVG + "circle" for el in segs)

    out = tmp_path / "sweep"
    gammas = ["0.1", "0.15", "0.25", "0.3"]
    argv = ["--input", str(src), "--out", str(out), "--view", "segments"]
    for g in gammas:
        argv += ["--gamma", g]
    assert main(argv) == 0
    for g in gammas:
        doc = json.loads((out / f"marker_gamma{g}.json").read_text())
        jsonschema.validate(doc, schema)
        assert doc["config"]["gamma"] == float(g)
        assert len((out / f"marker_gamma{g}.csv").read_text().splitlines()) == r
        _, segs = _svg_counts(out / f"marker_gamma{g}.svg")
        assert len(segs) == r - 1
        ET.fromstring((out / f"marker_gamma{g}_profile.svg").read_text())
    assert len(list(out.iterdir())) == 4 * len(gammas)

    proc = subprocess.run(
        [sys.executable, "-m", "fuzzyroc", "--input", str(src), "--constraint", "target", "--out", str(tmp_path / "x")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
    assert "--pi" in proc.stderr
    assert not (tmp_path / "x").exists()


def test_c8_degenerate_inputs(record_property):
    record_property("criterion", "C8 single-valued data rejected; n=2 gives a valid ROC and empty-zone result")
    s = make_score_set([4.2, 4.2, 4.2], [0, 1, 1])
    with pytest.raises(DegenerateScoresError, match="degenerate score distribution"):
        build_grid(s)
    with pytest.raises(DegenerateScoresError):
        fuzzy_curves(s, Config(0.2))

    s = make_score_set([0.3, 0.9], [0, 1])
    roc = empirical_roc(s)
    assert [(p.fpr, p.tpr) for p in roc] == [(0.0, 0.0), (0.0, 1.0), (1.0, 1.0)]
    for gamma in (0.0, 0.5, 1.0):
        res = fuzzy_curves(s, Config(gamma))
        assert len(res.records) == 1
        rec = res.records[0]
        assert rec.zone.is_empty and rec.c_j == pytest.approx(0.6)
        assert rec.upper == rec.lower
        assert (rec.upper.fpr, rec.upper.tpr) == (0.0, 1.0)
        assert rec.choice.classified_auc == 1.0
