"""Labeled score data, class priors and empirical class-conditional CDFs.

Scores are real numbers where larger values point towards class 1. The
CDFs follow the strict convention ``F_k(t) = P(s < t | k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from .errors import DataError

__all__ = [
    "ScoreDataset",
    "PriorPair",
    "EmpiricalCDFs",
    "ingest_csv",
    "empirical_priors",
    "empirical_cdfs",
]

PRIOR_TOL = 1e-9


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64).ravel()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ScoreDataset:
    """Scores of class-0 and class-1 objects, each sorted ascending.

    Construct through :meth:`from_arrays` or :meth:`from_labels` unless the
    inputs are already sorted float arrays.
    """

    scores0: np.ndarray
    scores1: np.ndarray

    def __post_init__(self):
        s0 = _frozen(self.scores0)
        s1 = _frozen(self.scores1)
        if s0.size == 0:
            raise DataError("class 0 empty")
        if s1.size == 0:
            raise DataError("class 1 empty")
        if not (np.all(np.isfinite(s0)) and np.all(np.isfinite(s1))):
            raise DataError("scores must be finite")
        if np.any(np.diff(s0) < 0) or np.any(np.diff(s1) < 0):
            raise DataError("scores must be sorted ascending")
        object.__setattr__(self, "scores0", s0)
        object.__setattr__(self, "scores1", s1)

    @classmethod
    def from_arrays(cls, scores0, scores1) -> "ScoreDataset":
        """Build a dataset from unsorted per-class score sequences."""
        return cls(np.sort(np.asarray(scores0, dtype=np.float64)),
                   np.sort(np.asarray(scores1, dtype=np.float64)))

    @classmethod
    def from_labels(cls, labels, scores) -> "ScoreDataset":
        """Partition ``scores`` by 0/1 ``labels``."""
        labels = np.asarray(labels)
        scores = np.asarray(scores, dtype=np.float64)
        if labels.shape != scores.shape:
            raise DataError("labels and scores differ in length")
        bad = ~np.isin(labels, (0, 1))
        if np.any(bad):
            raise DataError(f"label outside {{0,1}}: {labels[bad][0]!r}")
        return cls.from_arrays(scores[labels == 0], scores[labels == 1])

    @property
    def n0(self) -> int:
        return int(self.scores0.size)

    @property
    def n1(self) -> int:
        return int(self.scores1.size)

    def swapped(self) -> "ScoreDataset":
        """Exchange the class labels and negate every score.

        The result ranks objects the same way relative to the new class 1.
        """
        return ScoreDataset(-self.scores1[::-1], -self.scores0[::-1])


@dataclass(frozen=True)
class PriorPair:
    """Class proportions ``(pi0, pi1)``, both positive and summing to one."""

    pi0: float
    pi1: float

    def __post_init__(self):
        pi0, pi1 = float(self.pi0), float(self.pi1)
        if not (math.isfinite(pi0) and math.isfinite(pi1)):
            raise DataError("priors must be finite")
        if pi0 <= 0 or pi1 <= 0:
            raise DataError(f"priors must be positive, got ({pi0}, {pi1})")
        if abs(pi0 + pi1 - 1.0) > PRIOR_TOL:
            raise DataError(f"priors must sum to 1, got {pi0 + pi1!r}")
        object.__setattr__(self, "pi0", pi0)
        object.__setattr__(self, "pi1", pi1)

    @classmethod
    def from_pi1(cls, pi1: float) -> "PriorPair":
        return cls(1.0 - pi1, pi1)

    def swapped(self) -> "PriorPair":
        return PriorPair(self.pi1, self.pi0)


@dataclass(frozen=True, eq=False)
class EmpiricalCDFs:
    """Strict-inequality CDFs of both classes on the distinct observed scores.

    ``f0[j]``/``f1[j]`` hold ``F(thresholds[j-1])`` for ``1 <= j <= m``;
    index 0 is the ``t = -inf`` sentinel and index ``m + 1`` the ``+inf``
    one. ``c0``/``c1`` are the underlying integer counts ``n_k * F_k``.
    """

    thresholds: np.ndarray
    c0: np.ndarray
    c1: np.ndarray
    n0: int
    n1: int

    @property
    def f0(self) -> np.ndarray:
        return self.c0 / self.n0

    @property
    def f1(self) -> np.ndarray:
        return self.c1 / self.n1

    @property
    def extended_thresholds(self) -> np.ndarray:
        """Thresholds with the two infinite sentinels attached."""
        return np.concatenate(([-np.inf], self.thresholds, [np.inf]))

    def at(self, t: float) -> tuple[float, float]:
        """Evaluate ``(F0(t), F1(t))`` at an arbitrary threshold."""
        # No score lies in [t, thresholds[idx]), so the strict counts at t
        # are those stored for thresholds[idx] (or the +inf sentinel).
        j = int(np.searchsorted(self.thresholds, t, side="left")) + 1
        return float(self.c0[j] / self.n0), float(self.c1[j] / self.n1)


def ingest_csv(path, label_column: str = "label", score_column: str = "score") -> ScoreDataset:
    """Read a comma-separated file with a header row into a :class:`ScoreDataset`.

    Only ``label_column`` and ``score_column`` are read; labels must be
    exactly 0 or 1 and scores finite reals.

    Raises
    ------
    FileNotFoundError
        If ``path`` does not exist.
    DataError
        Missing column, bad label, non-numeric or non-finite score, or an
        empty class.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    try:
        header = pd.read_csv(path, nrows=0, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise DataError(f"{path}: empty file") from None
    except (pd.errors.ParserError, UnicodeDecodeError) as exc:
        raise DataError(f"{path}: malformed CSV: {exc}") from None
    for col in (label_column, score_column):
        if col not in header.columns:
            raise DataError(f"{path}: missing column {col!r}")

    try:
        frame = pd.read_csv(
            path,
            usecols=[label_column, score_column],
            encoding="utf-8",
            float_precision="round_trip",
        )
    except (pd.errors.ParserError, UnicodeDecodeError, ValueError) as exc:
        raise DataError(f"{path}: malformed CSV: {exc}") from None
    label_values = _numeric_column(frame, label_column)
    scores = _numeric_column(frame, score_column)

    bad = ~np.isin(label_values, (0.0, 1.0))
    if bad.any():
        row = int(np.argmax(bad))
        raise DataError(
            f"{path}: row {row + 2}: label outside {{0,1}}: {frame[label_column].iloc[row]!r}"
        )
    bad = ~np.isfinite(scores)
    if bad.any():
        row = int(np.argmax(bad))
        raise DataError(
            f"{path}: row {row + 2}: non-numeric or non-finite score: "
            f"{frame[score_column].iloc[row]!r}"
        )
    return ScoreDataset.from_labels(label_values.astype(np.int8), scores)


def _numeric_column(frame: pd.DataFrame, name: str) -> np.ndarray:
    col = frame[name]
    if pd.api.types.is_numeric_dtype(col) and not pd.api.types.is_bool_dtype(col):
        return col.to_numpy(dtype=np.float64, na_value=np.nan)
    # mixed column: unparsable cells become NaN and are reported by the caller
    return pd.to_numeric(col.astype(str).str.strip(), errors="coerce").to_numpy(dtype=np.float64)


def empirical_priors(d: ScoreDataset) -> PriorPair:
    n = d.n0 + d.n1
    return PriorPair(d.n0 / n, d.n1 / n)


def empirical_cdfs(d: ScoreDataset) -> EmpiricalCDFs:
    """Strict CDFs of both classes at every distinct observed score.

    Thresholds between two neighbouring distinct scores give the same
    confusion table, so these plus the two sentinels cover every operating
    point.
    """
    thresholds = np.unique(np.concatenate((d.scores0, d.scores1)))
    c0 = np.searchsorted(d.scores0, thresholds, side="left")
    c1 = np.searchsorted(d.scores1, thresholds, side="left")
    c0 = np.concatenate(([0], c0, [d.n0])).astype(np.int64)
    c1 = np.concatenate(([0], c1, [d.n1])).astype(np.int64)
    for arr in (thresholds, c0, c1):
        arr.setflags(write=False)
    return EmpiricalCDFs(thresholds, c0, c1, d.n0, d.n1)
