"""H measure and companion ROC metrics for binary classifier scores."""

from .beta_weights import (
    BETA22,
    BetaShape,
    WeightSpec,
    default_from_priors,
    density,
    from_mode,
    from_severity_ratio,
    legacy_asymmetric,
    log_beta_function,
    mode,
    partial_moment_1mc,
    partial_moment_c,
    reflect,
    regularized_incomplete_beta,
)
from .errors import ConfigError, DataError, HMeasureError
from .loss_engine import (
    CostBreakpoints,
    HResult,
    baseline_loss,
    cost_breakpoints,
    expected_min_loss,
    h_measure,
    loss_at,
    min_loss_at_cost,
)
from .report import EvalConfig, MetricReport, evaluate, run_eval, serialize_report
from .roc import (
    ConvexHull,
    ROCCurve,
    auc,
    auch,
    build_roc,
    gini,
    ks_statistic,
    roc_area,
    upper_convex_hull,
)
from .score_data import (
    EmpiricalCDFs,
    PriorPair,
    ScoreDataset,
    empirical_cdfs,
    empirical_priors,
    ingest_csv,
)
from .threshold_metrics import (
    ConfusionCounts,
    PointMetrics,
    confusion_at_threshold,
    min_error_rate,
    point_metrics,
)

__version__ = "0.1.0"
