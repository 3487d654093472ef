"""``hmeasure`` command line tool.

Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 data error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .beta_weights import WeightSpec
from .errors import ConfigError, DataError, HMeasureError
from .report import EvalConfig, run_eval, serialize_report
from .score_data import PriorPair

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_DATA = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: config error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hmeasure",
        description="H measure, AUC, Gini, AUCH, KS and minimum error rate from classifier scores.",
    )
    parser.add_argument("inputs", nargs="+", type=Path, metavar="CSV",
                        help="comma-separated file(s) with a header row")
    parser.add_argument("--label-column", default="label")
    parser.add_argument("--score-column", default="score")
    parser.add_argument("--priors", nargs=2, type=float, metavar=("PI0", "PI1"),
                        help="override the empirical class priors")

    w = parser.add_argument_group(
        "cost weight",
        "Pick at most one family; without any, Beta(pi1 + 1, pi0 + 1) is used.",
    )
    w.add_argument("--alpha", type=float, help="explicit Beta alpha (with --beta)")
    w.add_argument("--beta", type=float, help="explicit Beta beta (with --alpha)")
    w.add_argument("--mode-c", type=float, metavar="C", help="mode of w(c), alpha + beta = k")
    w.add_argument("--severity-ratio", type=float, metavar="R",
                   help="mode given as severity ratio c / (1 - c)")
    w.add_argument("--k", type=float, help="concentration alpha + beta >= 3 (default 3)")
    w.add_argument("--beta22", action="store_true", help="legacy Beta(2, 2)")
    w.add_argument("--legacy-asymmetric", nargs="?", type=float, const=2.0, metavar="ALPHA",
                   help="legacy Beta(alpha, 1 + (alpha - 1) pi0 / pi1), alpha defaults to 2")

    parser.add_argument("--threshold", type=float,
                        help="also report the confusion table and rates at this threshold")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--weight-plot", type=Path, metavar="SVG")
    parser.add_argument("--roc-plot", type=Path, metavar="SVG")
    return parser


def weight_spec_from_args(args) -> WeightSpec:
    groups = []
    if args.alpha is not None or args.beta is not None:
        groups.append("--alpha/--beta")
    if args.mode_c is not None:
        groups.append("--mode-c")
    if args.severity_ratio is not None:
        groups.append("--severity-ratio")
    if args.beta22:
        groups.append("--beta22")
    if args.legacy_asymmetric is not None:
        groups.append("--legacy-asymmetric")
    if len(groups) > 1:
        raise ConfigError(f"conflicting weight options: {', '.join(groups)}")

    kind = groups[0] if groups else None
    if args.k is not None and kind in ("--alpha/--beta", "--beta22", "--legacy-asymmetric"):
        raise ConfigError(f"--k does not apply to {kind}")
    k = 3.0 if args.k is None else args.k

    if kind == "--alpha/--beta":
        if args.alpha is None or args.beta is None:
            raise ConfigError("--alpha and --beta must be given together")
        return WeightSpec("explicit", alpha=args.alpha, beta=args.beta)
    if kind == "--mode-c":
        return WeightSpec("mode_k", c_tilde=args.mode_c, k=k)
    if kind == "--severity-ratio":
        return WeightSpec("severity_ratio_k", r_tilde=args.severity_ratio, k=k)
    if kind == "--beta22":
        return WeightSpec("legacy_beta22")
    if kind == "--legacy-asymmetric":
        return WeightSpec("legacy_asymmetric", alpha=args.legacy_asymmetric)
    return WeightSpec("default_priors", k=k)


def configs_from_args(args) -> list[EvalConfig]:
    weight = weight_spec_from_args(args)
    priors = None
    if args.priors is not None:
        try:
            priors = PriorPair(*args.priors)
        except DataError as exc:
            raise ConfigError(str(exc)) from None
    if len(args.inputs) > 1 and (args.weight_plot or args.roc_plot):
        raise ConfigError("plots can only be written for a single input file")
    return [
        EvalConfig(
            input=path,
            label_column=args.label_column,
            score_column=args.score_column,
            priors=priors,
            weight=weight,
            threshold=args.threshold,
            weight_plot=args.weight_plot,
            roc_plot=args.roc_plot,
        )
        for path in args.inputs
    ]


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        configs = configs_from_args(args)
        reports = [run_eval(cfg) for cfg in configs]
    except ConfigError as exc:
        print(f"hmeasure: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"hmeasure: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DataError, HMeasureError) as exc:
        print(f"hmeasure: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    payload = reports[0] if len(reports) == 1 else reports
    sys.stdout.write(serialize_report(payload, args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
