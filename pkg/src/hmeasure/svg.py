"""Dependency-free SVG plots of weight densities and ROC curves.

Each polyline carries its unscaled data in ``data-x``/``data-y``
attributes (17 significant digits) so a plot can be checked numerically.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import numpy as np

from .beta_weights import BetaShape, density
from .roc import ConvexHull, ROCCurve

__all__ = [
    "WIDTH",
    "HEIGHT",
    "MARGIN",
    "N_DENSITY_SAMPLES",
    "density_samples",
    "render_weight_density_svg",
    "render_roc_svg",
]

WIDTH = 800
HEIGHT = 600
MARGIN = 40
N_DENSITY_SAMPLES = 512

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _numbers(values) -> str:
    return " ".join(f"{v:.17g}" for v in values)


class _Frame:
    """Linear map from data space to the plotting area."""

    def __init__(self, x_max: float, y_max: float):
        self.x_max = x_max
        self.y_max = y_max
        self.left = MARGIN
        self.right = WIDTH - MARGIN
        self.top = MARGIN
        self.bottom = HEIGHT - MARGIN

    def px(self, x):
        return self.left + np.asarray(x) / self.x_max * (self.right - self.left)

    def py(self, y):
        return self.bottom - np.asarray(y) / self.y_max * (self.bottom - self.top)

    def polyline(self, x, y, color: str, label: str, width: float = 2.0, dash: str = "") -> str:
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        pts = " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(self.px(x), self.py(y)))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        return (
            f'<polyline fill="none" stroke="{color}" stroke-width="{width}"{dash_attr} '
            f'data-label="{_escape(label)}" data-x="{_numbers(x)}" data-y="{_numbers(y)}" '
            f'points="{pts}"/>'
        )

    def axes(self, x_label: str, y_label: str, n_ticks: int = 5) -> list[str]:
        out = [
            f'<line x1="{self.left}" y1="{self.bottom}" x2="{self.right}" y2="{self.bottom}" stroke="#000" stroke-width="1"/>',
            f'<line x1="{self.left}" y1="{self.top}" x2="{self.left}" y2="{self.bottom}" stroke="#000" stroke-width="1"/>',
        ]
        for i in range(n_ticks + 1):
            xv = self.x_max * i / n_ticks
            yv = self.y_max * i / n_ticks
            x = float(self.px(xv))
            y = float(self.py(yv))
            out.append(f'<line x1="{x:.2f}" y1="{self.bottom}" x2="{x:.2f}" y2="{self.bottom + 4}" stroke="#000"/>')
            out.append(
                f'<text x="{x:.2f}" y="{self.bottom + 16}" text-anchor="middle" font-size="10" font-family="sans-serif">{xv:.3g}</text>'
            )
            out.append(f'<line x1="{self.left - 4}" y1="{y:.2f}" x2="{self.left}" y2="{y:.2f}" stroke="#000"/>')
            out.append(
                f'<text x="{self.left - 6}" y="{y + 3:.2f}" text-anchor="end" font-size="10" font-family="sans-serif">{yv:.3g}</text>'
            )
        out.append(
            f'<text x="{(self.left + self.right) / 2:.1f}" y="{HEIGHT - 6}" text-anchor="middle" font-size="12" font-family="sans-serif">{_escape(x_label)}</text>'
        )
        out.append(
            f'<text x="12" y="{(self.top + self.bottom) / 2:.1f}" text-anchor="middle" font-size="12" font-family="sans-serif" '
            f'transform="rotate(-90 12 {(self.top + self.bottom) / 2:.1f})">{_escape(y_label)}</text>'
        )
        return out


def _document(body: list[str], title: str) -> str:
    head = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{_escape(title)}</title>",
        '<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _legend(entries: Sequence[tuple[str, str]]) -> list[str]:
    out = []
    x0 = WIDTH - MARGIN - 190
    for i, (label, color) in enumerate(entries):
        y = MARGIN + 14 + 16 * i
        out.append(f'<line x1="{x0}" y1="{y}" x2="{x0 + 20}" y2="{y}" stroke="{color}" stroke-width="2"/>')
        out.append(
            f'<text x="{x0 + 26}" y="{y + 4}" font-size="11" font-family="sans-serif">{_escape(label)}</text>'
        )
    return out


def _write(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def density_samples(shape: BetaShape, n: int = N_DENSITY_SAMPLES) -> tuple[np.ndarray, np.ndarray]:
    """Density at ``n`` interior points ``i / (n + 1)``; the grid is symmetric about 1/2."""
    c = np.arange(1, n + 1) / (n + 1)
    return c, density(shape, c)


def render_weight_density_svg(shapes: Sequence[tuple[str, BetaShape]], path=None) -> str:
    """Plot one density curve per ``(label, shape)``; returns the SVG text.

    The text is also written to ``path`` when given.
    """
    if not shapes:
        raise ValueError("need at least one shape to plot")
    curves = [(label, s, *density_samples(s)) for label, s in shapes]
    y_max = max(float(np.max(y[np.isfinite(y)])) for _, _, _, y in curves)
    frame = _Frame(1.0, y_max * 1.05 if y_max > 0 else 1.0)
    body = frame.axes("normalised cost c", "density w(c)")
    legend = []
    for i, (label, s, c, y) in enumerate(curves):
        color = COLORS[i % len(COLORS)]
        text = f"{label} alpha={s.alpha:.4g} beta={s.beta:.4g}"
        body.append(frame.polyline(c, y, color, text))
        legend.append((text, color))
    body.extend(_legend(legend))
    svg = _document(body, "Cost weight densities")
    if path is not None:
        _write(path, svg)
    return svg


def render_roc_svg(r: ROCCurve, h: ConvexHull, path=None) -> str:
    """ROC polyline, convex hull overlay and chance diagonal on the unit square."""
    frame = _Frame(1.0, 1.0)
    body = frame.axes("false positive rate", "true positive rate")
    body.append(frame.polyline([0.0, 1.0], [0.0, 1.0], "#999999", "chance", width=1.0, dash="4 3"))
    body.append(frame.polyline(r.fpr[::-1], r.tpr[::-1], COLORS[0], "ROC"))
    body.append(frame.polyline(h.fpr, h.tpr, COLORS[1], "convex hull", dash="6 3"))
    body.extend(_legend([("ROC", COLORS[0]), ("convex hull", COLORS[1]), ("chance", "#999999")]))
    svg = _document(body, "ROC curve and convex hull")
    if path is not None:
        _write(path, svg)
    return svg
