"""Command-line front end.

Subcommands: validate, eval, sample, bound-check, compare, distance,
catalog.  Inputs are trajectory or scenario JSON files (scenarios are
compiled first).  Outputs are CSV/JSON artifacts, plus an SVG overlay of
the CDF comparators with ``--plot``.

Exit codes: 0 success, 2 schema/structure error, 3 principle violation,
4 ordering violation (bound-check).  All outputs are deterministic for a
fixed (input, config); the sampling seed defaults to DEFAULT_SEED and can
be overridden by the RISKCHECK_SEED environment variable or ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .compare import (
    PraModel,
    check_stochastic_order,
    comparison_summary,
    default_time_grid,
    pra_rate_from_mttf,
    underestimation_report,
    write_comparison_csv,
)
from .hazard import (
    HazardTrajectory,
    PrincipleViolationError,
    TrajectoryStructureError,
    cumulative_hazard,
    ensure_valid,
    failure_cdf,
    hazard_at,
    mean_time_to_failure,
    reliability,
    validate_trajectory,
)
from .poisson import (
    EXACT_TV_MAX_INDICATORS,
    discretize,
    exact_tv_small,
    ks_distance,
    stein_chen_tv_bound,
)
from .sampling import sample_many, sample_replicates, write_samples_csv
from .scenarios import build_trajectory, scenario_catalog
from .serialize import (
    SchemaError,
    dump_json,
    grid_hash,
    load_input,
    scenario_to_dict,
    trajectory_hash,
)
from .svgplot import PALETTE, Series, line_chart_svg, write_svg

__all__ = ["DEFAULT_SEED", "RunConfig", "run", "main"]

DEFAULT_SEED = 1729

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_PRINCIPLE = 3
EXIT_ORDERING = 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Path | None = None
    out: Path = Path(".")
    grid_points: int = 64
    t_max: float | None = None
    n: int = 10000
    seed: int = DEFAULT_SEED
    emit_plot: bool = False
    pra_rate: float | None = None
    workers: int = 1


def _load_trajectory(config: RunConfig) -> HazardTrajectory:
    if config.input is None:
        raise SchemaError(f"command {config.command!r} requires --input")
    kind, obj = load_input(config.input)
    if kind == "scenario":
        return build_trajectory(obj)
    return obj


def _out_dir(config: RunConfig) -> Path:
    config.out.mkdir(parents=True, exist_ok=True)
    return config.out


def _report_plot(config: RunConfig, grid, report, title: str) -> None:
    if not config.emit_plot:
        return
    series = [
        Series("true failure CDF", report.f_true, PALETTE[0]),
        Series("1 - exp(-h(0) t) bound", report.f_h0_bound, PALETTE[1], dasharray="6 3"),
        Series("exponential comparator", report.f_pra, PALETTE[2], dasharray="2 3"),
    ]
    svg = line_chart_svg(grid, series, title, "time", "probability")
    path = write_svg(_out_dir(config) / "comparison.svg", svg)
    print(f"wrote {path}")


def _cmd_validate(config: RunConfig) -> int:
    if config.input is None:
        raise SchemaError("validate requires --input")
    kind, obj = load_input(config.input)
    traj = build_trajectory(obj) if kind == "scenario" else obj
    report = validate_trajectory(traj)
    print(
        json.dumps(
            {
                "valid": report.valid,
                "violations": [
                    {"principle": v.principle, "location": v.location, "message": v.message}
                    for v in report.violations
                ],
                "notes": list(report.notes),
            },
            indent=2,
            sort_keys=True,
        )
    )
    return EXIT_OK if report.valid else EXIT_PRINCIPLE


def _cmd_eval(config: RunConfig) -> int:
    traj = ensure_valid(_load_trajectory(config))
    grid = default_time_grid(traj, config.grid_points, config.t_max)
    path = _out_dir(config) / "eval.csv"
    with open(path, "w", newline="\n") as fh:
        fh.write("t,h,H,R,F\n")
        for t in grid:
            fh.write(
                f"{t:.17g},{hazard_at(traj, t):.17g},{cumulative_hazard(traj, t):.17g},"
                f"{reliability(traj, t):.17g},{failure_cdf(traj, t):.17g}\n"
            )
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_sample(config: RunConfig) -> int:
    traj = ensure_valid(_load_trajectory(config))
    draws = sample_replicates(traj, config.n, config.seed, workers=config.workers)
    csv_path, meta_path = write_samples_csv(
        _out_dir(config), draws, config.seed, trajectory_hash(traj)
    )
    print(f"wrote {csv_path}")
    print(f"wrote {meta_path}")
    return EXIT_OK


def _write_comparison(config: RunConfig, traj, report, model: PraModel | None) -> None:
    out = _out_dir(config)
    csv_path = write_comparison_csv(out / "comparison.csv", report)
    summary_path = dump_json(
        out / "comparison_summary.json",
        comparison_summary(report, trajectory_hash(traj), model),
    )
    print(f"wrote {csv_path}")
    print(f"wrote {summary_path}")


def _cmd_bound_check(config: RunConfig) -> int:
    # Deliberately no principle validation: the point of this command is the
    # numeric ordering check itself, and a rule-breaking trajectory is
    # exactly what should be able to trip exit code 4.
    traj = _load_trajectory(config)
    grid = default_time_grid(traj, config.grid_points, config.t_max)
    report = check_stochastic_order(traj, grid)
    _write_comparison(config, traj, report, model=None)
    _report_plot(config, grid, report, "Failure CDF vs exponential bound")
    if not report.ordering_holds:
        print(
            f"ordering violated: min gap {min(report.pointwise_gaps):.3e}",
            file=sys.stderr,
        )
        return EXIT_ORDERING
    print(f"ordering holds; sup gap vs h(0) bound: {report.sup_gap_h0:.17g}")
    return EXIT_OK


def _cmd_compare(config: RunConfig) -> int:
    traj = ensure_valid(_load_trajectory(config))
    if config.pra_rate is not None:
        model = PraModel(rate=config.pra_rate, provenance="given")
    else:
        model = pra_rate_from_mttf(mean_time_to_failure(traj))
    grid = default_time_grid(traj, config.grid_points, config.t_max)
    report = underestimation_report(traj, model, grid)
    _write_comparison(config, traj, report, model)
    _report_plot(config, grid, report, "Failure CDF vs exponential comparators")
    print(
        f"sup gap vs h(0) bound: {report.sup_gap_h0:.17g}; "
        f"sup gap vs rate-{model.rate:.6g} exponential: {report.sup_gap_pra:.17g}"
    )
    return EXIT_OK


def _cmd_distance(config: RunConfig) -> int:
    traj = ensure_valid(_load_trajectory(config))
    grid = default_time_grid(traj, config.grid_points, config.t_max)[1:]  # drop t=0
    proc = discretize(traj, grid)
    lam = sum(proc.probabilities)
    bound = stein_chen_tv_bound(proc)
    exact = (
        exact_tv_small(proc) if len(proc.probabilities) <= EXACT_TV_MAX_INDICATORS else None
    )
    model = pra_rate_from_mttf(mean_time_to_failure(traj))
    dist = sample_many(traj, config.n, config.seed)
    report = {
        "schema_version": 1,
        "lambda": lam,
        "bound": bound,
        "exact_tv": exact,
        "ks": ks_distance(dist, model),
        "n": len(proc.probabilities),
        "grid_hash": grid_hash(grid),
        "ks_samples": config.n,
        "seed": config.seed,
        "pra_rate": model.rate,
        "trajectory_hash": trajectory_hash(traj),
    }
    path = dump_json(_out_dir(config) / "distance.json", report)
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_catalog(config: RunConfig) -> int:
    out = _out_dir(config)
    for scenario in scenario_catalog():
        path = dump_json(out / f"{scenario.label}.json", scenario_to_dict(scenario))
        print(f"wrote {path}")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "eval": _cmd_eval,
    "sample": _cmd_sample,
    "bound-check": _cmd_bound_check,
    "compare": _cmd_compare,
    "distance": _cmd_distance,
    "catalog": _cmd_catalog,
}


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit code."""
    handler = _COMMANDS.get(config.command)
    if handler is None:
        print(f"unknown command {config.command!r}", file=sys.stderr)
        return EXIT_SCHEMA
    try:
        return handler(config)
    except PrincipleViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRINCIPLE
    except (SchemaError, TrajectoryStructureError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA


def _default_seed() -> int:
    env = os.environ.get("RISKCHECK_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise SchemaError(f"RISKCHECK_SEED must be an integer, got {env!r}") from exc
    return DEFAULT_SEED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riskcheck",
        description="Hazard-trajectory reliability calculus and exponential-approximation checks.",
    )
    parser.add_argument("--version", action="version", version=f"riskcheck {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, needs_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            p.add_argument("--input", type=Path, required=True, help="trajectory or scenario JSON")
        p.add_argument("--out", type=Path, default=Path("."), help="output directory (default: .)")
        return p

    add("validate", "check the five hazard principles")
    p = add("eval", "tabulate t, h, H, R, F on a grid")
    p.add_argument("--grid-points", type=int, default=64)
    p.add_argument("--t-max", type=float, default=None)
    p = add("sample", "draw failure times to CSV")
    p.add_argument("--n", type=int, default=10000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    for name, help_text in (
        ("bound-check", "verify the 1 - exp(-h(0) t) lower bound on the failure CDF"),
        ("compare", "add the practitioner's exponential comparator"),
    ):
        p = add(name, help_text)
        p.add_argument("--grid-points", type=int, default=64)
        p.add_argument("--t-max", type=float, default=None)
        p.add_argument("--plot", action="store_true")
        if name == "compare":
            p.add_argument(
                "--pra-rate",
                type=float,
                default=None,
                help="exponential rate to compare against (default: 1 / mean time to failure)",
            )
    p = add("distance", "Poisson-approximation distance report")
    p.add_argument("--grid-points", type=int, default=64)
    p.add_argument("--t-max", type=float, default=None)
    p.add_argument("--n", type=int, default=10000)
    p.add_argument("--seed", type=int, default=None)
    add("catalog", "write the built-in demonstration scenarios", needs_input=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        seed = getattr(args, "seed", None)
        config = RunConfig(
            command=args.command,
            input=getattr(args, "input", None),
            out=args.out,
            grid_points=getattr(args, "grid_points", 64),
            t_max=getattr(args, "t_max", None),
            n=getattr(args, "n", 10000),
            seed=seed if seed is not None else _default_seed(),
            emit_plot=getattr(args, "plot", False),
            pra_rate=getattr(args, "pra_rate", None),
            workers=getattr(args, "workers", 1),
        )
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    return run(config)
