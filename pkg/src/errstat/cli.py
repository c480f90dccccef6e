"""Command-line interface: figure data as CSV, reports and simulations as JSON.

Exit codes: 0 success, 2 usage/domain error, 3 infeasible parameters,
4 I/O or input-file format error. All numeric CSV output uses 10
significant digits; JSON reports carry schema_version 1. There is no
plotting here: the emitted columns are the figures.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional, Sequence

from . import __version__
from . import decision_cost, error_tradeoff, montecarlo, pvalue_dist, screening, timeseries
from .severity import (
    ClaimDirection,
    ReferenceDist,
    SeverityClaim,
    SummaryStats,
    confidence_lower_limit,
    p_value_from_summary,
    severity_curve,
)
from .severity import severity as severity_value
from .error_tradeoff import Tail
from .errors import CsvFormatError, DegenerateDataError, DomainError, InfeasibleParameterError

SCHEMA_VERSION = 1
DEFAULT_SEED = 42
SEED_ENV_VAR = "ERRSTAT_SEED"


def _fmt(value: float) -> str:
    return format(float(value), ".10g")


def _parse_float_list(text: str, name: str) -> list[float]:
    items = [part.strip() for part in text.split(",") if part.strip()]
    if not items:
        raise DomainError(f"{name}: empty list")
    try:
        return [float(part) for part in items]
    except ValueError as exc:
        raise DomainError(f"{name}: {exc}") from None


def _parse_grid(text: str, name: str) -> list[float]:
    """Either 'a,b,c' explicit values or 'lo:hi:count' for an inclusive grid."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise DomainError(f"{name}: grid spec must be lo:hi:count, got {text!r}")
        try:
            lo, hi = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError as exc:
            raise DomainError(f"{name}: {exc}") from None
        if count < 1:
            raise DomainError(f"{name}: grid count must be >= 1, got {count}")
        if count == 1:
            return [lo]
        step = (hi - lo) / (count - 1)
        return [lo + i * step for i in range(count)]
    return _parse_float_list(text, name)


def _csv_table(columns: Sequence[str], rows: Sequence[Sequence[float]]) -> str:
    lines = [",".join(columns)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_table(columns: Sequence[str], rows: Sequence[Sequence[float]]) -> str:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "columns": list(columns),
        "rows": [[float(v) for v in row] for row in rows],
    }
    return _json_text(payload)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit_table(args, columns, rows) -> str:
    if args.format == "json":
        return _json_table(columns, rows)
    return _csv_table(columns, rows)


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# --- subcommand handlers -------------------------------------------------


def _cmd_tradeoff(args) -> str:
    effect_sizes = _parse_float_list(args.effect_sizes, "--effect-sizes")
    alphas = _parse_grid(args.alphas, "--alphas")
    rows = []
    for delta in effect_sizes:
        model = error_tradeoff.GaussianTestModel(effect_size=delta, n=args.n)
        for alpha in alphas:
            rows.append((alpha, delta, error_tradeoff.type2_error(alpha, model)))
    return _emit_table(args, ("alpha", "effect_size", "beta"), rows)


def _cmd_screening(args) -> str:
    if args.phi is not None:
        phis = _parse_float_list(args.phi, "--phi")
    else:
        phis = [screening.PriorOdds(args.odds).prior_null]
    if args.curve:
        alphas = _parse_grid(args.alphas, "--alphas")
    else:
        if args.alpha is None:
            raise DomainError("either --alpha or --curve with --alphas is required")
        alphas = [args.alpha]
    rows = []
    for phi in phis:
        if args.coupled:
            curve = screening.combined_fpr_curve(args.effect_size, args.n, phi, alphas)
            rows.extend((alpha, beta, phi, fpr) for alpha, beta, fpr in curve)
        else:
            beta = 1.0 - args.power
            for alpha in alphas:
                fpr = screening.false_positive_rate(
                    screening.ScreeningParams(alpha, args.power, phi)
                )
                rows.append((alpha, beta, phi, fpr))
    return _emit_table(args, ("alpha", "beta", "phi", "fpr"), rows)


def _cmd_replication(args) -> str:
    if args.self_test:
        gamma = 4.0 / 9.0
        factor = screening.replication_threshold_factor(gamma, 2.0)
        back = screening.gamma_for_factor(factor, 2.0)
        ok = abs(factor - 10.0) < 1e-12 and abs(back - gamma) < 1e-12
        payload = {
            "schema_version": SCHEMA_VERSION,
            "mode": "self_test",
            "gamma": gamma,
            "n_fold": 2.0,
            "factor": factor,
            "gamma_round_trip": back,
            "ok": ok,
        }
        return _json_text(payload)
    if args.gamma is not None:
        factor = screening.replication_threshold_factor(args.gamma, args.n_fold)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "mode": "factor_from_gamma",
            "gamma": args.gamma,
            "n_fold": args.n_fold,
            "threshold_factor": factor,
        }
    else:
        gamma = screening.gamma_for_factor(args.factor, args.n_fold)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "mode": "gamma_from_factor",
            "threshold_factor": args.factor,
            "n_fold": args.n_fold,
            "gamma": gamma,
        }
    return _json_text(payload)


def _cost_params(args) -> decision_cost.CostParams:
    return decision_cost.CostParams(
        cost_type1=args.p0,
        cost_type2=args.p1,
        prior_good=args.phi,
        mu0=args.mu0,
        mu1=args.mu1,
        sigma=args.sigma,
    )


def _cmd_cost(args) -> str:
    params = _cost_params(args)
    if args.minimize:
        closed = decision_cost.closed_form_minimizer(params)
        numeric = decision_cost.numeric_minimizer(params)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "closed_form_minimizer": closed,
            "numeric_minimizer": numeric,
            "gap": abs(closed - numeric),
            "expected_cost_at_minimizer": decision_cost.expected_cost(closed, params),
            "alpha_at_minimizer": decision_cost.alpha_from_critical(closed, params),
            "cost_ratio": params.cost_ratio,
        }
        return _json_text(payload)
    if args.alpha_map:
        alphas = _parse_grid(args.alphas, "--alphas")
        rows = [(a, decision_cost.critical_from_alpha(a, params)) for a in alphas]
        return _emit_table(args, ("alpha", "critical_value"), rows)
    # default: cost curve over the critical value
    if args.c_grid is not None:
        grid = _parse_grid(args.c_grid, "--c-grid")
    else:
        lo = min(args.mu0, args.mu1) - 4.0 * args.sigma
        hi = max(args.mu0, args.mu1) + 4.0 * args.sigma
        grid = [lo + i * (hi - lo) / 100.0 for i in range(101)]
    rows = [(c, decision_cost.expected_cost(c, params)) for c in grid]
    return _emit_table(args, ("critical_value", "expected_cost"), rows)


def _cmd_pdist(args) -> str:
    if args.reproducibility:
        if (args.p_obs is None) == (args.d_obs is None):
            raise DomainError("--reproducibility needs exactly one of --p-obs / --d-obs")
        if args.p_obs is not None:
            observed = pvalue_dist.ObservedResult.from_p_value(args.p_obs)
        else:
            observed = pvalue_dist.ObservedResult.from_statistic(args.d_obs)
        prob = pvalue_dist.reproducibility_probability(observed, args.alpha)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "d_observed": observed.d_observed,
            "p_observed_two_sided": observed.p_observed,
            "alpha": args.alpha,
            "reproducibility_probability": prob,
            "convention": "one_sample_two_sided_normal",
        }
        return _json_text(payload)
    spec = pvalue_dist.AlternativeSpec(delta=args.delta, n=args.n)
    grid = _parse_grid(args.grid, "--grid")
    kept = [p for p in grid if 0.0 < p < 1.0]
    if len(kept) < len(grid):
        print(
            f"warning: dropped {len(grid) - len(kept)} grid point(s) at p=0 or p=1 "
            "(density undefined there)",
            file=sys.stderr,
        )
    if not kept:
        raise DomainError("--grid: no usable points strictly inside (0, 1)")
    rows = [
        (p, pvalue_dist.pdf_under_alternative(p, spec), pvalue_dist.cdf_under_alternative(p, spec))
        for p in kept
    ]
    return _emit_table(args, ("p", "density", "cdf"), rows)


def _claim_payload(stats, bound, reference) -> dict:
    claim = SeverityClaim(ClaimDirection.GREATER_THAN, bound)
    return {
        "direction": "greater_than",
        "bound": bound,
        "severity": severity_value(stats, claim, reference),
        "reference": reference.value,
    }


def _cmd_analyze(args) -> str:
    reference = ReferenceDist(args.reference)
    payload: dict = {"schema_version": SCHEMA_VERSION}
    if args.csv is not None and args.estimate is not None:
        raise DomainError("--csv and --estimate are alternative input modes; give one")
    if args.csv is not None:
        if args.tau is None:
            raise DomainError("--csv mode requires --tau")
        series = timeseries.read_series_csv(args.csv)
        fit = timeseries.lag_regression(series, args.tau)
        stats = fit.summary_stats()
        corr = timeseries.autocorrelation(series, args.tau)
        t_pairs, p_pairs = timeseries.t_from_correlation(corr, fit.n_pairs)
        t_series, p_series = timeseries.t_from_correlation(corr, len(series))
        payload["source"] = {"csv": str(args.csv), "tau": args.tau, "length": len(series)}
        payload["fit"] = {
            "beta0": fit.beta0,
            "beta1": fit.beta1,
            "stderr_beta1": fit.stderr_beta1,
            "r": fit.r,
            "n_pairs": fit.n_pairs,
            "t_stat": fit.t_stat,
            "p_two_sided_t": fit.p_two_sided_t,
        }
        payload["lag_correlation"] = {
            "r": corr,
            "pair_count_convention": {"n": fit.n_pairs, "t": t_pairs, "p_two_sided_t": p_pairs},
            "series_length_convention": {"n": len(series), "t": t_series, "p_two_sided_t": p_series},
        }
    else:
        if args.estimate is None or args.stderr is None:
            raise DomainError("provide either --csv with --tau, or --estimate with --stderr")
        stats = SummaryStats(estimate=args.estimate, stderr=args.stderr, n=args.n)
        payload["source"] = {"summary": {"estimate": args.estimate, "stderr": args.stderr, "n": args.n}}

    d = stats.standardized
    p_values = {
        "one_sided_upper_normal": p_value_from_summary(
            stats, Tail.ONE_SIDED_UPPER, ReferenceDist.NORMAL),
        "two_sided_normal": p_value_from_summary(
            stats, Tail.TWO_SIDED, ReferenceDist.NORMAL),
    }
    try:
        df = stats.effective_df()
        p_values["two_sided_student_t"] = p_value_from_summary(
            stats, Tail.TWO_SIDED, ReferenceDist.STUDENT_T)
        payload["df"] = df
    except DomainError:
        p_values["two_sided_student_t"] = None
        payload["df"] = None

    payload["estimate"] = stats.estimate
    payload["stderr"] = stats.stderr
    payload["t_statistic"] = d
    payload["p_values"] = p_values
    payload["confidence_lower_limit"] = {
        "level": args.level,
        "value": confidence_lower_limit(stats, args.level, reference),
        "reference": reference.value,
    }
    if args.claim is not None:
        payload["claim"] = _claim_payload(stats, args.claim, reference)
    if args.claim_grid is not None:
        bounds = _parse_grid(args.claim_grid, "--claim-grid")
        curve = severity_curve(stats, bounds, reference)
        payload["severity_curve"] = {
            "direction": "greater_than",
            "reference": reference.value,
            "points": [[b, s] for b, s in curve],
        }
    observed = pvalue_dist.ObservedResult.from_statistic(d)
    payload["replication"] = {
        "alpha": args.alpha,
        "probability": pvalue_dist.reproducibility_probability(observed, args.alpha),
        "convention": "one_sample_two_sided_normal",
    }
    return _json_text(payload)


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _cmd_simulate(args) -> str:
    seed = _resolve_seed(args)
    config = montecarlo.SimConfig(
        num_trials=args.trials,
        seed=seed,
        prior_null=args.phi,
        alpha=args.alpha,
        effect_size=args.delta,
        n_per_study=args.n,
    )
    outcome = montecarlo.simulate_studies(config, workers=args.workers)
    model = error_tradeoff.GaussianTestModel(effect_size=args.delta, n=args.n)
    analytic_power = error_tradeoff.power(args.alpha, model)
    if 0.0 < args.phi < 1.0:
        analytic_fpr = screening.false_positive_rate(
            screening.ScreeningParams(args.alpha, analytic_power, args.phi)
        )
    else:
        analytic_fpr = None

    n_null = outcome.false_pos + outcome.true_neg
    empirical_size = outcome.false_pos / n_null if n_null > 0 else None
    size_stderr = math.sqrt(args.alpha * (1.0 - args.alpha) / n_null) if n_null > 0 else None

    def z(emp, ref, stderr):
        if emp is None or ref is None or not stderr:
            return None
        return (emp - ref) / stderr

    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": {
            "trials": args.trials,
            "seed": seed,
            "prior_null": args.phi,
            "alpha": args.alpha,
            "effect_size": args.delta,
            "n_per_study": args.n,
            "tail": config.tail.value,
            "workers": args.workers,
        },
        "rng": outcome.rng,
        "counts": {
            "true_pos": outcome.true_pos,
            "false_pos": outcome.false_pos,
            "true_neg": outcome.true_neg,
            "false_neg": outcome.false_neg,
        },
        "empirical": {
            "fpr": outcome.empirical_fpr,
            "power": outcome.empirical_power,
            "type1_rate": empirical_size,
            "mc_stderr_fpr": outcome.mc_stderr_fpr,
        },
        "analytic": {"fpr": analytic_fpr, "power": analytic_power},
        "z_scores": {
            "fpr": z(outcome.empirical_fpr, analytic_fpr, outcome.mc_stderr_fpr),
            "type1_rate": z(empirical_size, args.alpha, size_stderr),
        },
    }
    return _json_text(payload)


# --- parser --------------------------------------------------------------


def _add_format_flags(sub) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv",
                     help="output format (default csv)")


def _add_output_flag(sub) -> None:
    sub.add_argument("--output", default=None, metavar="PATH",
                     help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="errstat",
        description="Error-statistics calculations: trade-offs, screening rates, "
                    "costs, p-value laws, severity reports, and seeded simulations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("tradeoff", help="type II error versus type I error curves")
    p.add_argument("--effect-sizes", default="0.2,0.5,0.8",
                   help="comma-separated standardized effect sizes")
    p.add_argument("--n", type=int, default=1, help="observations per test (default 1)")
    p.add_argument("--alphas", default="0.001:0.5:100", help="alpha grid (lo:hi:count or list)")
    _add_format_flags(p)
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_tradeoff)

    p = subs.add_parser("screening", help="false positive rate of the screening model")
    p.add_argument("--alpha", type=float, default=None, help="single significance level")
    p.add_argument("--alphas", default="0.001:0.5:100", help="alpha grid for --curve")
    p.add_argument("--curve", action="store_true", help="sweep the alpha grid")
    power_group = p.add_mutually_exclusive_group(required=True)
    power_group.add_argument("--power", type=float, help="fixed power 1 - beta")
    power_group.add_argument("--coupled", action="store_true",
                             help="derive beta from the trade-off at each alpha")
    prior_group = p.add_mutually_exclusive_group(required=True)
    prior_group.add_argument("--phi", default=None,
                             help="comma-separated prior probabilities of the null")
    prior_group.add_argument("--odds", type=float, default=None,
                             help="prior odds R = (1-phi)/phi of a true alternative")
    p.add_argument("--effect-size", type=float, default=0.5,
                   help="effect size for --coupled (default 0.5)")
    p.add_argument("--n", type=int, default=1, help="observations per test for --coupled")
    _add_format_flags(p)
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_screening)

    p = subs.add_parser("replication",
                        help="threshold factor <-> true positive rate arithmetic")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--gamma", type=float, help="current true positive rate")
    mode.add_argument("--factor", type=float, help="threshold reduction factor r")
    mode.add_argument("--self-test", action="store_true",
                      help="run the packaged gamma=4/9, n-fold=2 -> r=10 check")
    p.add_argument("--n-fold", type=float, default=2.0,
                   help="requested replication-rate multiple (default 2)")
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_replication, format="json")

    p = subs.add_parser("cost", help="expected-cost analysis of the rejection threshold")
    p.add_argument("--p0", type=float, default=1.0, help="cost of a type I error")
    p.add_argument("--p1", type=float, default=1.0, help="cost of a type II error")
    p.add_argument("--phi", type=float, default=0.5, help="prior fraction of good cases")
    p.add_argument("--mu0", type=float, default=0.0)
    p.add_argument("--mu1", type=float, default=1.0)
    p.add_argument("--sigma", type=float, default=1.0)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--curve", action="store_true", help="emit the cost curve (default)")
    mode.add_argument("--minimize", action="store_true",
                      help="emit closed-form and numeric minimizers with their gap")
    mode.add_argument("--alpha-map", action="store_true",
                      help="emit critical value as a function of alpha")
    p.add_argument("--c-grid", default=None, help="critical-value grid (lo:hi:count or list)")
    p.add_argument("--alphas", default="0.001:0.5:100", help="alpha grid for --alpha-map")
    _add_format_flags(p)
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_cost)

    p = subs.add_parser("pdist", help="p-value density/CDF under an alternative")
    p.add_argument("--delta", type=float, default=0.5, help="standardized effect size")
    p.add_argument("--n", type=int, default=1, help="observations per test")
    p.add_argument("--grid", default="0.005:0.995:100", help="p grid (lo:hi:count or list)")
    p.add_argument("--reproducibility", action="store_true",
                   help="emit the replication probability instead of a grid")
    p.add_argument("--p-obs", type=float, default=None, help="observed two-sided p-value")
    p.add_argument("--d-obs", type=float, default=None, help="observed test statistic")
    p.add_argument("--alpha", type=float, default=0.05,
                   help="significance level for --reproducibility")
    _add_format_flags(p)
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_pdist)

    p = subs.add_parser("analyze",
                        help="inference report from a series CSV or summary statistics")
    p.add_argument("--csv", default=None, metavar="PATH", help="label,value series file")
    p.add_argument("--tau", type=int, default=None, help="lag for --csv mode")
    p.add_argument("--estimate", type=float, default=None, help="point estimate")
    p.add_argument("--stderr", type=float, default=None, help="standard error of the estimate")
    p.add_argument("--n", type=int, default=None, help="observation count behind the summary")
    p.add_argument("--claim", type=float, default=None,
                   help="bound for the claim 'parameter > bound'")
    p.add_argument("--claim-grid", default=None,
                   help="bounds grid for a severity curve (lo:hi:count or list)")
    p.add_argument("--alpha", type=float, default=0.05,
                   help="level for the replication probability (default 0.05)")
    p.add_argument("--level", type=float, default=0.95,
                   help="confidence level for the lower limit (default 0.95)")
    p.add_argument("--reference", choices=("normal", "student_t"), default="normal",
                   help="reference distribution for severity and the limit")
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_analyze, format="json")

    p = subs.add_parser("simulate", help="simulate studies and compare with the formulas")
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=None,
                   help=f"RNG seed (default: ${SEED_ENV_VAR} or {DEFAULT_SEED})")
    p.add_argument("--phi", type=float, default=0.5, help="prior probability of the null")
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--delta", type=float, default=0.5, help="effect size under the alternative")
    p.add_argument("--n", type=int, default=1, help="observations per study")
    p.add_argument("--workers", type=int, default=1,
                   help="chunk workers; results are identical for any value")
    _add_output_flag(p)
    p.set_defaults(handler=_cmd_simulate, format="json")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.handler(args)
        _write_output(text, args.output)
    except (DomainError, DegenerateDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CsvFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    return 0
