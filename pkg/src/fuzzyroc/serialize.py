"""JSON and CSV output of fuzzy ROC results.

JSON layout (``schema_version`` 1) is described by ``schema_v1.json`` in
this package. Floats are written with ``repr`` precision so reading a file
back gives bit-identical values. The ``+inf`` threshold of the ROC's (0, 0)
corner is written as ``null``.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .bounds import BoundPoint, BoundRecord, FuzzyRocResult
from .diagnostics import ZoneProfileRow
from .ingest import Config
from .roc import RocPoint
from .search import GrayZone, ZoneChoice

SCHEMA_VERSION = 1

CSV_COLUMNS = [
    "c_j",
    "index_value",
    "c_low",
    "c_high",
    "g0",
    "g1",
    "classified_auc",
    "candidates_examined",
    "upper_f0",
    "upper_f1",
    "upper_fpr",
    "upper_tpr",
    "lower_f0",
    "lower_f1",
    "lower_fpr",
    "lower_tpr",
    "zone_fraction",
    "zone_width",
]


def load_schema() -> dict:
    return json.loads(resources.files("fuzzyroc").joinpath("schema_v1.json").read_text())


def _point(p: BoundPoint) -> dict:
    return {"f0": p.f0, "f1": p.f1, "fpr": p.fpr, "tpr": p.tpr}


def result_to_dict(result: FuzzyRocResult, profile: list[ZoneProfileRow]) -> dict:
    cfg = result.config
    config = {"gamma": cfg.gamma, "constraint": cfg.constraint, "indexing": cfg.indexing}
    if cfg.pi is not None:
        config["pi"] = cfg.pi
    records = []
    for rec in result.records:
        z = rec.zone
        records.append(
            {
                "c_j": rec.c_j,
                "index_value": rec.choice.index_value,
                "zone": {"c_low": z.c_low, "c_high": z.c_high, "g0": z.g0, "g1": z.g1},
                "classified_auc": rec.choice.classified_auc,
                "candidates_examined": rec.choice.candidates_examined,
                "upper": _point(rec.upper),
                "lower": _point(rec.lower),
            }
        )
    rows = []
    for row in profile:
        d = {"c_j": row.c_j, "zone_fraction": row.zone_fraction, "zone_width": row.zone_width}
        if row.target_fraction is not None:
            d["target_fraction"] = row.target_fraction
        rows.append(d)
    roc = [
        {"threshold": None if p.threshold == float("inf") else p.threshold, "fpr": p.fpr, "tpr": p.tpr}
        for p in result.roc
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config,
        "data": {"n": result.n, "n0": result.n0, "n1": result.n1},
        "roc": roc,
        "records": records,
        "profile": rows,
    }


def write_result_json(result: FuzzyRocResult, profile: list[ZoneProfileRow]) -> str:
    return json.dumps(result_to_dict(result, profile), indent=2, allow_nan=False) + "\n"


def read_result_json(text: str) -> tuple[FuzzyRocResult, list[ZoneProfileRow]]:
    """Inverse of :func:`write_result_json`."""
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    c = doc["config"]
    cfg = Config(c["gamma"], c.get("pi"), c["constraint"], c["indexing"])
    records = []
    for rec in doc["records"]:
        z = rec["zone"]
        choice = ZoneChoice(
            rec["index_value"],
            GrayZone(z["c_low"], z["c_high"], z["g0"], z["g1"]),
            rec["classified_auc"],
            rec["candidates_examined"],
        )
        upper = BoundPoint(**{k: rec["upper"][k] for k in ("fpr", "tpr", "f0", "f1")})
        lower = BoundPoint(**{k: rec["lower"][k] for k in ("fpr", "tpr", "f0", "f1")})
        records.append(BoundRecord(rec["c_j"], choice, upper, lower))
    roc = tuple(
        RocPoint(p["fpr"], p["tpr"], float("inf") if p["threshold"] is None else p["threshold"])
        for p in doc["roc"]
    )
    data = doc["data"]
    result = FuzzyRocResult(cfg, tuple(records), roc, data["n0"], data["n1"])
    profile = [
        ZoneProfileRow(p["c_j"], p["zone_fraction"], p["zone_width"], p.get("target_fraction"))
        for p in doc["profile"]
    ]
    return result, profile


def write_result_csv(result: FuzzyRocResult, profile: list[ZoneProfileRow]) -> str:
    """One flat row per midpoint, columns in :data:`CSV_COLUMNS` order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec, row in zip(result.records, profile):
        z = rec.zone
        values = [
            rec.c_j, rec.choice.index_value, z.c_low, z.c_high, z.g0, z.g1,
            rec.choice.classified_auc, rec.choice.candidates_examined,
            rec.upper.f0, rec.upper.f1, rec.upper.fpr, rec.upper.tpr,
            rec.lower.f0, rec.lower.f1, rec.lower.fpr, rec.lower.tpr,
            row.zone_fraction, row.zone_width,
        ]
        writer.writerow([repr(v) if isinstance(v, float) else v for v in values])
    return buf.getvalue()
