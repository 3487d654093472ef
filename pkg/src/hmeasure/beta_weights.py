"""Beta cost-weight distributions ``w(c)`` over the normalised cost ``c``.

Besides density, log-beta and the regularized incomplete beta function,
this module provides the parameterisations used to pick ``w``:

* :func:`from_mode` -- ``alpha + beta = k`` with the mode placed at ``c_tilde``.
  The family is closed under label swapping: ``from_mode(1 - c, k)`` is
  ``reflect(from_mode(c, k))``.
* :func:`from_severity_ratio` -- same, with the mode given as a ratio
  ``r = c / (1 - c)`` of error severities.
* :func:`default_from_priors` -- ``Beta(pi1 + 1, pi0 + 1)``, the mode at
  ``pi1`` with ``k = 3``.
* :func:`legacy_asymmetric` / :data:`BETA22` -- the older ``Beta(2, 1/pi1)``
  and ``Beta(2, 2)`` standards, kept for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .score_data import PriorPair

__all__ = [
    "BetaShape",
    "WeightSpec",
    "BETA22",
    "density",
    "log_beta_function",
    "regularized_incomplete_beta",
    "partial_moment_c",
    "partial_moment_1mc",
    "mode",
    "from_mode",
    "from_severity_ratio",
    "default_from_priors",
    "legacy_asymmetric",
    "reflect",
]

CF_MAX_ITER = 300
CF_EPS = 1e-15
_FPMIN = 1e-300
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
# Bernoulli-number coefficients B_2j / (2j (2j - 1)) of the Stirling series.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
)
_STIRLING_MIN = 10.0


@dataclass(frozen=True)
class BetaShape:
    """A ``Beta(alpha, beta)`` distribution on ``[0, 1]``."""

    alpha: float
    beta: float

    def __post_init__(self):
        a, b = float(self.alpha), float(self.beta)
        if not (math.isfinite(a) and math.isfinite(b)) or a <= 0 or b <= 0:
            raise ConfigError(f"Beta shapes must be positive and finite, got ({a}, {b})")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def k(self) -> float:
        """Concentration ``alpha + beta``."""
        return self.alpha + self.beta

    @property
    def mean(self) -> float:
        return self.alpha / (self.alpha + self.beta)

    def mode(self) -> float:
        return mode(self)

    def pdf(self, c):
        return density(self, c)

    def __str__(self) -> str:
        return f"Beta({self.alpha:.6g}, {self.beta:.6g})"


BETA22 = BetaShape(2.0, 2.0)


def _stirling_remainder(x: float) -> float:
    """``lgamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2]`` for ``x >= 10``."""
    inv = 1.0 / x
    inv2 = inv * inv
    total = 0.0
    for coef in reversed(_STIRLING):
        total = total * inv2 + coef
    return total * inv


def log_beta_function(alpha: float, beta: float) -> float:
    """Natural log of the complete beta function ``B(alpha, beta)``.

    Large arguments go through the Stirling remainder so that the
    ``lgamma(b) - lgamma(a + b)`` cancellation never happens in floating
    point.
    """
    a, b = float(alpha), float(beta)
    if not (a > 0 and b > 0):
        raise ValueError(f"log_beta_function needs positive arguments, got ({a}, {b})")
    if a > b:
        a, b = b, a
    if b < _STIRLING_MIN:
        return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
    s = a + b
    if a < _STIRLING_MIN:
        # lgamma(b) - lgamma(a + b), expanded and simplified
        tail = (-(b - 0.5) * math.log1p(a / b) - a * math.log(s) + a
                + _stirling_remainder(b) - _stirling_remainder(s))
        return math.lgamma(a) + tail
    return (
        _HALF_LOG_2PI
        - 0.5 * math.log(s)
        + (a - 0.5) * math.log(a / s)
        - (b - 0.5) * math.log1p(a / b)
        + _stirling_remainder(a)
        + _stirling_remainder(b)
        - _stirling_remainder(s)
    )


def _beta_cf(x: float, a: float, b: float) -> float:
    """Continued fraction for ``I_x(a, b)`` (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < CF_EPS:
            return h
    raise ArithmeticError(
        f"incomplete beta continued fraction did not converge for x={x}, a={a}, b={b}"
    )


def regularized_incomplete_beta(x: float, alpha: float, beta: float) -> float:
    """``I_x(alpha, beta)``, the Beta(alpha, beta) CDF at ``x``."""
    a, b = float(alpha), float(beta)
    if not (a > 0 and b > 0):
        raise ValueError(f"shape parameters must be positive, got ({a}, {b})")
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    if x > (a + 1.0) / (a + b + 2.0):
        return 1.0 - regularized_incomplete_beta(1.0 - x, b, a)
    log_front = a * math.log(x) + b * math.log1p(-x) - log_beta_function(a, b)
    value = math.exp(log_front) * _beta_cf(x, a, b) / a
    return min(max(value, 0.0), 1.0)


def density(s: BetaShape, c):
    """Beta density at ``c`` (scalar or array).

    Endpoints where an exponent is negative evaluate to ``inf``; callers
    integrate through :func:`regularized_incomplete_beta` instead.
    """
    c_arr = np.asarray(c, dtype=np.float64)
    if np.any((c_arr < 0) | (c_arr > 1)):
        raise ValueError("density is defined on [0, 1]")
    a1, b1 = s.alpha - 1.0, s.beta - 1.0
    log_norm = log_beta_function(s.alpha, s.beta)
    with np.errstate(divide="ignore", invalid="ignore"):
        term_a = np.where(a1 == 0.0, 0.0, a1 * np.log(c_arr))
        term_b = np.where(b1 == 0.0, 0.0, b1 * np.log1p(-c_arr))
        out = np.exp(term_a + term_b - log_norm)
    # -inf + inf cannot occur: a1 and b1 of opposite sign only meet at one endpoint each
    if out.ndim == 0:
        return float(out)
    return out


def _check_interval(a: float, b: float) -> None:
    if not 0.0 <= a <= b <= 1.0:
        raise ValueError(f"need 0 <= a <= b <= 1, got a={a}, b={b}")


def partial_moment_c(s: BetaShape, a: float, b: float) -> float:
    """``integral_a^b c w(c) dc`` for ``w = Beta(alpha, beta)``."""
    _check_interval(a, b)
    if a == b:
        return 0.0
    al, be = s.alpha + 1.0, s.beta
    diff = regularized_incomplete_beta(b, al, be) - regularized_incomplete_beta(a, al, be)
    return s.mean * max(diff, 0.0)


def partial_moment_1mc(s: BetaShape, a: float, b: float) -> float:
    """``integral_a^b (1 - c) w(c) dc`` for ``w = Beta(alpha, beta)``."""
    _check_interval(a, b)
    if a == b:
        return 0.0
    al, be = s.alpha, s.beta + 1.0
    diff = regularized_incomplete_beta(b, al, be) - regularized_incomplete_beta(a, al, be)
    return (1.0 - s.mean) * max(diff, 0.0)


def mode(s: BetaShape) -> float:
    """Interior mode ``(alpha - 1) / (alpha + beta - 2)``.

    Raises
    ------
    ValueError
        If either shape is <= 1; the mode would sit on the boundary or not
        be unique.
    """
    if s.alpha <= 1.0 or s.beta <= 1.0:
        raise ValueError(f"{s} has no interior mode (needs alpha > 1 and beta > 1)")
    return (s.alpha - 1.0) / (s.alpha + s.beta - 2.0)


def from_mode(c_tilde: float, k: float = 3.0) -> BetaShape:
    """Beta with mode ``c_tilde`` and ``alpha + beta = k``.

    ``k >= 3`` controls concentration about the mode; larger is narrower.
    """
    c_tilde, k = float(c_tilde), float(k)
    if not 0.0 < c_tilde < 1.0:
        raise ConfigError(f"mode must lie in (0, 1), got {c_tilde}")
    if not k >= 3.0 or not math.isfinite(k):
        raise ConfigError(f"k must be a finite number >= 3, got {k}")
    return BetaShape((k - 2.0) * c_tilde + 1.0, (k - 2.0) * (1.0 - c_tilde) + 1.0)


def from_severity_ratio(r_tilde: float, k: float = 3.0) -> BetaShape:
    """Like :func:`from_mode`, with the mode given as severity ratio ``c / (1 - c)``."""
    r_tilde = float(r_tilde)
    if not (r_tilde > 0.0 and math.isfinite(r_tilde)):
        raise ConfigError(f"severity ratio must be positive, got {r_tilde}")
    return from_mode(r_tilde / (1.0 + r_tilde), k)


def default_from_priors(p: PriorPair) -> BetaShape:
    """``Beta(pi1 + 1, pi0 + 1)``: mode at ``pi1``, ``k = 3``.

    Built from both priors rather than ``1 - pi1`` so that swapping the
    priors reflects the shape bit for bit.
    """
    return BetaShape(p.pi1 + 1.0, p.pi0 + 1.0)


def legacy_asymmetric(p: PriorPair, alpha: float = 2.0) -> BetaShape:
    """``Beta(alpha, 1 + (alpha - 1) pi0 / pi1)``, mode at ``pi1``.

    With the default ``alpha = 2`` this is ``Beta(2, 1/pi1)``. Unlike
    :func:`from_mode` it does not respect label swapping.
    """
    alpha = float(alpha)
    if not alpha > 1.0:
        raise ConfigError(f"alpha must exceed 1, got {alpha}")
    return BetaShape(alpha, 1.0 + (alpha - 1.0) * p.pi0 / p.pi1)


def reflect(s: BetaShape) -> BetaShape:
    """Distribution of ``1 - c`` when ``c ~ s``."""
    return BetaShape(s.beta, s.alpha)


_VARIANTS = (
    "explicit",
    "mode_k",
    "severity_ratio_k",
    "default_priors",
    "legacy_beta22",
    "legacy_asymmetric",
)


@dataclass(frozen=True)
class WeightSpec:
    """How to choose ``w(c)``; resolved against the priors in use.

    ``default_priors`` also accepts ``k`` to sharpen the default about
    ``c = pi1``; ``k = 3`` gives ``Beta(pi1 + 1, pi0 + 1)``.
    """

    variant: str = "default_priors"
    alpha: float | None = None
    beta: float | None = None
    c_tilde: float | None = None
    r_tilde: float | None = None
    k: float = 3.0

    def __post_init__(self):
        if self.variant not in _VARIANTS:
            raise ConfigError(f"unknown weight variant {self.variant!r}")
        if self.variant in ("mode_k", "severity_ratio_k", "default_priors"):
            if not (self.k >= 3.0 and math.isfinite(self.k)):
                raise ConfigError(f"k must be a finite number >= 3, got {self.k}")
        if self.variant == "explicit":
            if self.alpha is None or self.beta is None:
                raise ConfigError("explicit weight needs both alpha and beta")
            BetaShape(self.alpha, self.beta)
        elif self.variant == "mode_k":
            if self.c_tilde is None or not 0.0 < self.c_tilde < 1.0:
                raise ConfigError(f"mode must lie in (0, 1), got {self.c_tilde}")
        elif self.variant == "severity_ratio_k":
            if self.r_tilde is None or not self.r_tilde > 0.0:
                raise ConfigError(f"severity ratio must be positive, got {self.r_tilde}")
        elif self.variant == "legacy_asymmetric":
            a = 2.0 if self.alpha is None else self.alpha
            if not a > 1.0:
                raise ConfigError(f"alpha must exceed 1, got {a}")

    def resolve(self, p: PriorPair) -> BetaShape:
        if self.variant == "explicit":
            return BetaShape(self.alpha, self.beta)
        if self.variant == "mode_k":
            return from_mode(self.c_tilde, self.k)
        if self.variant == "severity_ratio_k":
            return from_severity_ratio(self.r_tilde, self.k)
        if self.variant == "legacy_beta22":
            return BETA22
        if self.variant == "legacy_asymmetric":
            return legacy_asymmetric(p, 2.0 if self.alpha is None else self.alpha)
        if self.k == 3.0:
            return default_from_priors(p)
        return from_mode(p.pi1, self.k)
