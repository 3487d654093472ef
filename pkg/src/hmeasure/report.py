"""Evaluation pipeline: dataset in, :class:`MetricReport` out, plus serialisation."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .beta_weights import WeightSpec, reflect
from .loss_engine import h_measure
from .roc import auc, auch, build_roc, ks_statistic, upper_convex_hull
from .score_data import PriorPair, ScoreDataset, empirical_cdfs, empirical_priors, ingest_csv
from .svg import render_roc_svg, render_weight_density_svg
from .threshold_metrics import confusion_at_threshold, min_error_rate, point_metrics

__all__ = ["EvalConfig", "MetricReport", "evaluate", "run_eval", "serialize_report"]

SIG_DIGITS = 12


@dataclass(frozen=True)
class EvalConfig:
    input: Path
    label_column: str = "label"
    score_column: str = "score"
    priors: PriorPair | None = None
    weight: WeightSpec = field(default_factory=WeightSpec)
    threshold: float | None = None
    weight_plot: Path | None = None
    roc_plot: Path | None = None


@dataclass(frozen=True)
class MetricReport:
    h: float
    auc: float
    gini: float
    auch: float
    ks: float
    mer: float
    mer_threshold: float
    pi0: float
    pi1: float
    alpha: float
    beta: float
    mode: float | None
    k: float
    n0: int
    n1: int
    expected_min_loss: float
    baseline_loss: float
    threshold: float | None = None
    confusion: dict | None = None
    point_metrics: dict | None = None
    input: str | None = None


def evaluate(d: ScoreDataset, priors: PriorPair | None = None,
             weight: WeightSpec | None = None, threshold: float | None = None,
             source: str | None = None) -> MetricReport:
    """Compute every metric for one dataset.

    ``priors`` defaults to the empirical class proportions; the weight is
    resolved against the same priors used in the loss.
    """
    p = empirical_priors(d) if priors is None else priors
    w = (weight or WeightSpec()).resolve(p)
    cdfs = empirical_cdfs(d)
    curve = build_roc(cdfs)
    hull = upper_convex_hull(curve)
    res = h_measure(d, p, w, hull=hull)
    a = auc(d)
    mer, mer_t = min_error_rate(d, p)
    try:
        w_mode = w.mode()
    except ValueError:
        w_mode = None

    confusion = metrics = None
    if threshold is not None:
        cc = confusion_at_threshold(d, threshold)
        confusion = cc.as_dict()
        metrics = point_metrics(cc, p).as_dict()

    return MetricReport(
        h=res.h,
        auc=a,
        gini=2.0 * a - 1.0,
        auch=auch(hull),
        ks=ks_statistic(cdfs),
        mer=mer,
        mer_threshold=mer_t,
        pi0=p.pi0,
        pi1=p.pi1,
        alpha=w.alpha,
        beta=w.beta,
        mode=w_mode,
        k=w.k,
        n0=d.n0,
        n1=d.n1,
        expected_min_loss=res.expected_min_loss,
        baseline_loss=res.baseline_loss,
        threshold=threshold,
        confusion=confusion,
        point_metrics=metrics,
        input=source,
    )


def run_eval(cfg: EvalConfig) -> MetricReport:
    """Read ``cfg.input``, evaluate it and write any requested plots."""
    d = ingest_csv(cfg.input, cfg.label_column, cfg.score_column)
    rep = evaluate(d, cfg.priors, cfg.weight, cfg.threshold, source=str(cfg.input))
    if cfg.weight_plot is not None:
        p = PriorPair(rep.pi0, rep.pi1)
        w = cfg.weight.resolve(p)
        render_weight_density_svg(
            [("w(c)", w), ("labels swapped", reflect(w))], cfg.weight_plot
        )
    if cfg.roc_plot is not None:
        curve = build_roc(empirical_cdfs(d))
        render_roc_svg(curve, upper_convex_hull(curve), cfg.roc_plot)
    return rep


def _num(x):
    if x is None:
        return None
    if isinstance(x, int):
        return x
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return None
    return float(f"{x:.{SIG_DIGITS}g}")


_FIELDS = (
    "h", "auc", "gini", "auch", "ks", "mer", "pi0", "pi1", "alpha", "beta",
    "mode", "k", "mer_threshold", "n0", "n1", "expected_min_loss", "baseline_loss",
)


def _as_ordered_dict(rep: MetricReport) -> dict:
    out = {}
    if rep.input is not None:
        out["input"] = rep.input
    for name in _FIELDS:
        out[name] = _num(getattr(rep, name))
    if rep.threshold is not None:
        out["threshold"] = _num(rep.threshold)
        out["confusion"] = dict(rep.confusion)
        out["point_metrics"] = {k: _num(v) for k, v in rep.point_metrics.items()}
    return out


def _table(rep: MetricReport) -> str:
    rows = []
    for key, value in _as_ordered_dict(rep).items():
        if isinstance(value, dict):
            rows.extend((f"{key}.{k}", v) for k, v in value.items())
        else:
            rows.append((key, value))
    width = max(len(k) for k, _ in rows)
    lines = []
    for key, value in rows:
        if value is None:
            text = "undefined"
        elif isinstance(value, float):
            text = f"{value:.{SIG_DIGITS}g}"
        else:
            text = str(value)
        lines.append(f"{key.ljust(width)}  {text}")
    return "\n".join(lines) + "\n"


def serialize_report(rep, fmt: str = "json") -> str:
    """Render one report (or a list of them) as JSON or an aligned text table.

    Undefined values become JSON ``null``; infinite thresholds become the
    strings ``"inf"``/``"-inf"``.
    """
    reports = rep if isinstance(rep, (list, tuple)) else None
    if fmt == "json":
        payload = [_as_ordered_dict(r) for r in reports] if reports is not None else _as_ordered_dict(rep)
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"
    if fmt == "table":
        if reports is not None:
            return "\n".join(_table(r) for r in reports)
        return _table(rep)
    raise ValueError(f"unknown report format {fmt!r}")
