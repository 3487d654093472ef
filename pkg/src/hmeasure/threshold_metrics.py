"""Confusion-table metrics at a fixed threshold and the minimum error rate.

Objects scoring strictly above the threshold are predicted class 1.
Ratios whose denominator is zero are reported as ``None`` rather than 0
or NaN.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .score_data import PriorPair, ScoreDataset

__all__ = [
    "ConfusionCounts",
    "PointMetrics",
    "confusion_at_threshold",
    "point_metrics",
    "min_error_rate",
]


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def n0(self) -> int:
        return self.fp + self.tn

    @property
    def n1(self) -> int:
        return self.tp + self.fn

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class PointMetrics:
    sensitivity: float | None
    specificity: float | None
    ppv: float | None
    npv: float | None
    proportion_correct: float
    error_rate: float
    f_measure: float | None

    def as_dict(self) -> dict:
        return asdict(self)


def _ratio(num: int, den: int) -> float | None:
    return num / den if den else None


def confusion_at_threshold(d: ScoreDataset, t: float) -> ConfusionCounts:
    t = float(t)
    if not np.isfinite(t):
        raise ValueError(f"threshold must be finite, got {t}")
    tn = int(np.searchsorted(d.scores0, t, side="right"))
    fn = int(np.searchsorted(d.scores1, t, side="right"))
    return ConfusionCounts(tp=d.n1 - fn, fp=d.n0 - tn, tn=tn, fn=fn)


def point_metrics(c: ConfusionCounts, p: PriorPair) -> PointMetrics:
    """Standard rates for a confusion table.

    The error rate weights each class's misclassification rate by its
    prior, which reduces to ``(fp + fn) / n`` for empirical priors.
    """
    sens = _ratio(c.tp, c.tp + c.fn)
    spec = _ratio(c.tn, c.tn + c.fp)
    ppv = _ratio(c.tp, c.tp + c.fp)
    npv = _ratio(c.tn, c.tn + c.fn)
    error = p.pi0 * (c.fp / c.n0) + p.pi1 * (c.fn / c.n1)
    if ppv is None or sens is None or ppv + sens == 0:
        f_measure = None
    else:
        f_measure = 2.0 * ppv * sens / (ppv + sens)
    return PointMetrics(
        sensitivity=sens,
        specificity=spec,
        ppv=ppv,
        npv=npv,
        proportion_correct=1.0 - error,
        error_rate=error,
        f_measure=f_measure,
    )


def min_error_rate(d: ScoreDataset, p: PriorPair) -> tuple[float, float]:
    """Smallest prior-weighted error over thresholds, with the threshold used.

    Candidates are ``-inf`` (everything to class 1) and each distinct
    score; ties go to the smallest threshold. The returned threshold
    reproduces the error through :func:`confusion_at_threshold` when finite.
    """
    thresholds = np.unique(np.concatenate((d.scores0, d.scores1)))
    tn = np.concatenate(([0], np.searchsorted(d.scores0, thresholds, side="right")))
    fn = np.concatenate(([0], np.searchsorted(d.scores1, thresholds, side="right")))
    errors = p.pi0 * ((d.n0 - tn) / d.n0) + p.pi1 * (fn / d.n1)
    best = int(np.argmin(errors))
    threshold = -np.inf if best == 0 else float(thresholds[best - 1])
    return float(errors[best]), threshold
