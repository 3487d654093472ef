"""Empirical ROC curve, its upper convex hull, and AUC/Gini/AUCH/KS.

Coordinates are kept as integer counts (false positives, true positives)
so that hull turns and areas are exact rationals; rates are derived on
access.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .score_data import EmpiricalCDFs, ScoreDataset

__all__ = [
    "ROCCurve",
    "ConvexHull",
    "build_roc",
    "upper_convex_hull",
    "auc",
    "roc_area",
    "gini",
    "auch",
    "ks_statistic",
]


@dataclass(frozen=True, eq=False)
class ROCCurve:
    """Operating points by ascending threshold, sentinels included.

    ``fp``/``tp`` count the class-0/class-1 objects scoring at or above
    each threshold, so ``fpr = fp / n0 = 1 - F0`` and ``tpr = 1 - F1``.
    """

    thresholds: np.ndarray
    fp: np.ndarray
    tp: np.ndarray
    n0: int
    n1: int

    @property
    def fpr(self) -> np.ndarray:
        return self.fp / self.n0

    @property
    def tpr(self) -> np.ndarray:
        return self.tp / self.n1

    @property
    def f0(self) -> np.ndarray:
        return (self.n0 - self.fp) / self.n0

    @property
    def f1(self) -> np.ndarray:
        return (self.n1 - self.tp) / self.n1

    def __len__(self) -> int:
        return int(self.thresholds.size)

    def points(self) -> list[tuple[float, float]]:
        """``(FPR, TPR)`` pairs in threshold order."""
        return list(zip(self.fpr.tolist(), self.tpr.tolist()))


@dataclass(frozen=True, eq=False)
class ConvexHull:
    """Upper hull vertices from ``(0, 0)`` to ``(1, 1)`` by ascending FPR."""

    fp: np.ndarray
    tp: np.ndarray
    n0: int
    n1: int

    @property
    def fpr(self) -> np.ndarray:
        return self.fp / self.n0

    @property
    def tpr(self) -> np.ndarray:
        return self.tp / self.n1

    @property
    def f0(self) -> np.ndarray:
        return (self.n0 - self.fp) / self.n0

    @property
    def f1(self) -> np.ndarray:
        return (self.n1 - self.tp) / self.n1

    def __len__(self) -> int:
        return int(self.fp.size)

    def vertices(self) -> list[tuple[float, float]]:
        return list(zip(self.fpr.tolist(), self.tpr.tolist()))


def build_roc(cdfs: EmpiricalCDFs) -> ROCCurve:
    fp = cdfs.n0 - cdfs.c0
    tp = cdfs.n1 - cdfs.c1
    return ROCCurve(cdfs.extended_thresholds, fp, tp, cdfs.n0, cdfs.n1)


def _drop_non_right_turns(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Interior vertices where the chain turns left or runs straight lie on or
    # below the chord of their neighbours, so they can never be hull vertices.
    # The chain is monotone in both coordinates, so a run of such vertices is
    # also below the chord of the run's surviving endpoints.
    dx = np.diff(x)
    dy = np.diff(y)
    turn = dx[:-1] * dy[1:] - dy[:-1] * dx[1:]
    keep = np.ones(x.size, dtype=bool)
    keep[1:-1] = turn < 0
    return x[keep], y[keep]


def _monotone_chain_upper(x: list[int], y: list[int]) -> tuple[list[int], list[int]]:
    hx: list[int] = []
    hy: list[int] = []
    for px, py in zip(x, y):
        while len(hx) >= 2:
            ox, oy, ax, ay = hx[-2], hy[-2], hx[-1], hy[-1]
            if (ax - ox) * (py - oy) - (ay - oy) * (px - ox) >= 0:
                hx.pop()
                hy.pop()
            else:
                break
        hx.append(px)
        hy.append(py)
    return hx, hy


def upper_convex_hull(r: ROCCurve) -> ConvexHull:
    """Upper convex hull of the ROC points, collinear vertices removed.

    Turn tests use counts, which are exact. Cross products are scale
    invariant, so the hull in count space is the hull in rate space.
    """
    # ascending threshold -> descending (fp, tp); reversed is sorted by (fp, tp)
    x = np.asarray(r.fp[::-1], dtype=np.int64)
    y = np.asarray(r.tp[::-1], dtype=np.int64)
    for _ in range(64):
        size = x.size
        if size <= 2:
            break
        x, y = _drop_non_right_turns(x, y)
        if x.size == size:
            break
    hx, hy = _monotone_chain_upper(x.tolist(), y.tolist())
    return ConvexHull(np.array(hx, dtype=np.int64), np.array(hy, dtype=np.int64), r.n0, r.n1)


def auc(d: ScoreDataset) -> float:
    """Probability that a class-1 score beats a class-0 score, ties counting half.

    Computed from sorted arrays in ``O(n log n)``; the count is kept in
    integers so the result is the exact Mann-Whitney ratio rounded once.
    """
    below = np.searchsorted(d.scores0, d.scores1, side="left")
    at_or_below = np.searchsorted(d.scores0, d.scores1, side="right")
    twice_u = int(below.sum(dtype=np.int64)) + int(at_or_below.sum(dtype=np.int64))
    return twice_u / (2 * d.n0 * d.n1)


def _trapezoid_counts(fp: np.ndarray, tp: np.ndarray, n0: int, n1: int) -> float:
    # fp and tp are monotone in the same direction; twice the area in count units
    dx = np.abs(np.diff(fp.astype(np.int64)))
    ysum = tp[:-1].astype(np.int64) + tp[1:].astype(np.int64)
    twice = int(np.dot(dx, ysum))
    return twice / (2 * n0 * n1)


def roc_area(r: ROCCurve) -> float:
    """Trapezoidal area under the ROC curve; tie blocks are crossed diagonally."""
    return _trapezoid_counts(r.fp, r.tp, r.n0, r.n1)


def gini(d: ScoreDataset) -> float:
    return 2.0 * auc(d) - 1.0


def auch(h: ConvexHull) -> float:
    """Area under the ROC convex hull."""
    return _trapezoid_counts(h.fp, h.tp, h.n0, h.n1)


def ks_statistic(cdfs: EmpiricalCDFs) -> float:
    """``max_t (F0(t) - F1(t))`` over all operating points."""
    diff = cdfs.c0 * cdfs.n1 - cdfs.c1 * cdfs.n0
    return int(diff.max()) / (cdfs.n0 * cdfs.n1)
