"""Cost-weighted minimum loss and the H measure.

For a normalised cost ``c`` the loss of the operating point ``(F0, F1)``
is ``c pi0 (1 - F0) + (1 - c) pi1 F1``. The minimum over thresholds is
attained on the ROC convex hull, and as ``c`` rises the optimal vertex
walks along the hull from the all-class-1 corner to the all-class-0 one.
Integrating piecewise between the switching costs gives the expected
minimum loss ``L`` in closed form through incomplete beta functions.

``H = 1 - L / L_max`` where ``L_max`` is the expected loss of the better
of the two trivial classifiers at each ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .beta_weights import BetaShape, regularized_incomplete_beta
from .roc import ConvexHull, build_roc, upper_convex_hull
from .score_data import PriorPair, ScoreDataset, empirical_cdfs

__all__ = [
    "CostBreakpoints",
    "HResult",
    "loss_at",
    "min_loss_at_cost",
    "cost_breakpoints",
    "expected_min_loss",
    "baseline_loss",
    "h_measure",
]


@dataclass(frozen=True, eq=False)
class CostBreakpoints:
    """Cost intervals ``(boundaries[i], boundaries[i+1])`` with their optimal vertex.

    ``f0[i]``, ``f1[i]`` are the CDF coordinates of the hull vertex that
    minimises the loss on interval ``i``.
    """

    boundaries: np.ndarray
    f0: np.ndarray
    f1: np.ndarray

    def __len__(self) -> int:
        return int(self.f0.size)

    @property
    def vertex_for_interval(self) -> list[tuple[float, float]]:
        return list(zip(self.f0.tolist(), self.f1.tolist()))


@dataclass(frozen=True, eq=False)
class HResult:
    h: float
    expected_min_loss: float
    baseline_loss: float
    weight: BetaShape
    breakpoints: CostBreakpoints


def loss_at(c: float, t_point: tuple[float, float], p: PriorPair) -> float:
    f0, f1 = t_point
    return c * p.pi0 * (1.0 - f0) + (1.0 - c) * p.pi1 * f1


def min_loss_at_cost(c, hull: ConvexHull, p: PriorPair):
    """Minimum loss over hull vertices at cost ``c`` (scalar or array)."""
    c_arr = np.asarray(c, dtype=np.float64)
    f0 = hull.f0
    f1 = hull.f1
    losses = (c_arr[..., None] * (p.pi0 * (1.0 - f0))
              + (1.0 - c_arr[..., None]) * (p.pi1 * f1))
    out = losses.min(axis=-1)
    return float(out) if out.ndim == 0 else out


def cost_breakpoints(hull: ConvexHull, p: PriorPair) -> CostBreakpoints:
    """Costs at which the loss-minimising hull vertex changes.

    Walking the hull from ``(F0, F1) = (0, 0)`` towards ``(1, 1)``, the
    switch between consecutive vertices happens where their losses are
    equal: ``c = pi1 dF1 / (pi0 dF0 + pi1 dF1)``. Hull convexity makes
    these costs nondecreasing; zero-width intervals are dropped.
    """
    # hull vertices ascend in FPR, i.e. descend in (F0, F1); walk them reversed
    f0 = hull.f0[::-1]
    f1 = hull.f1[::-1]
    d0 = np.diff(f0)
    d1 = np.diff(f1)
    switch = p.pi1 * d1 / (p.pi0 * d0 + p.pi1 * d1)
    switch = np.maximum.accumulate(np.clip(switch, 0.0, 1.0))
    edges = np.concatenate(([0.0], switch, [1.0]))
    width = np.diff(edges)
    keep = width > 0
    boundaries = np.concatenate(([0.0], edges[1:][keep]))
    return CostBreakpoints(boundaries, f0[keep], f1[keep])


def _moment_terms(edges: np.ndarray, w: BetaShape) -> tuple[np.ndarray, np.ndarray]:
    # integral of c w(c) and of (1 - c) w(c) over each interval
    ic = np.array([regularized_incomplete_beta(e, w.alpha + 1.0, w.beta) for e in edges])
    i1mc = np.array([regularized_incomplete_beta(e, w.alpha, w.beta + 1.0) for e in edges])
    mc = w.mean * np.maximum(np.diff(ic), 0.0)
    m1mc = (1.0 - w.mean) * np.maximum(np.diff(i1mc), 0.0)
    return mc, m1mc


def expected_min_loss(hull: ConvexHull, p: PriorPair, w: BetaShape,
                      breakpoints: CostBreakpoints | None = None) -> float:
    """``L = integral of min_t L(c; t) w(c) dc`` in closed form."""
    bp = cost_breakpoints(hull, p) if breakpoints is None else breakpoints
    mc, m1mc = _moment_terms(bp.boundaries, w)
    total = p.pi0 * np.dot(1.0 - bp.f0, mc) + p.pi1 * np.dot(bp.f1, m1mc)
    return float(total)


def baseline_loss(p: PriorPair, w: BetaShape) -> float:
    """Expected loss of the better trivial classifier at each cost.

    Assigning everything to class 1 costs ``c pi0`` and wins below
    ``c = pi1``; assigning everything to class 0 costs ``(1 - c) pi1``.
    """
    lower = w.mean * regularized_incomplete_beta(p.pi1, w.alpha + 1.0, w.beta)
    upper = (1.0 - w.mean) * (1.0 - regularized_incomplete_beta(p.pi1, w.alpha, w.beta + 1.0))
    return p.pi0 * lower + p.pi1 * upper


def h_measure(d: ScoreDataset, p: PriorPair, w: BetaShape,
              hull: ConvexHull | None = None) -> HResult:
    """H measure of the scores in ``d`` under priors ``p`` and weight ``w``.

    Pass ``hull`` to reuse an already computed ROC hull of ``d``.
    """
    if hull is None:
        hull = upper_convex_hull(build_roc(empirical_cdfs(d)))
    bp = cost_breakpoints(hull, p)
    loss = expected_min_loss(hull, p, w, bp)
    base = baseline_loss(p, w)
    h = 1.0 - loss / base
    return HResult(h=min(max(h, 0.0), 1.0), expected_min_loss=loss,
                   baseline_loss=base, weight=w, breakpoints=bp)
