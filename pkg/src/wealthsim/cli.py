"""Command-line front end: config files in, figure-ready CSV datasets out.

Subcommands
-----------
simulate    run the ensemble and export series/rank/snapshot/histogram/flux data
analytic    export closed-form quantile envelope curves and a scalar report
stationary  solve the stationary eigenproblem over an epsilon sweep
correlate   run the ensemble and export flux matrices plus the divide report

Config files are UTF-8 ``key = value`` lines; '#' starts a comment anywhere
on a line. Unknown keys, duplicate keys, type mismatches and invariant
violations are all collected and reported together, with line numbers.

Exit codes: 0 success, 2 config error, 3 runtime (simulation/solver) error,
4 I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import analytics, engine, stats, stationary, tableio
from .errors import (DomainError, NotConverged, ParameterError, ParseError,
                     WealthsimError)
from .params import ModelParams

# ---------------------------------------------------------------------------
# Experiment configuration

DEFAULT_K_LIST = (0.01, 0.25, 1.0, 4.0, 16.0, 64.0, 256.0, 1024.0)
DEFAULT_EPSILON_SWEEP = (-0.001, -0.005, -0.015, -0.03)


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a subcommand needs, as parsed from one config file."""

    # model
    n_agents: int
    beta: float
    mode: str
    t_max: int
    seed: int
    epsilon: float = 0.0
    w1: float = 1000.0
    wp: float = 400.0
    n_runs: int = 1
    # recording schedule
    series_stride: int = 30
    snapshot_count: int = 75
    hist_bins_per_decade: int = 10
    window_start: int = 0
    window_end: int = 0
    # execution / export
    workers: int = 1
    out_dir: str = "out"
    export_snapshots: bool = True
    export_histograms: bool = True
    export_flux: bool = True
    # analytic subcommand
    k_list: Tuple[float, ...] = DEFAULT_K_LIST
    # stationary subcommand
    epsilon_sweep: Tuple[float, ...] = DEFAULT_EPSILON_SWEEP
    grid_points: int = 3600
    n_modes: int = 1
    compare_histogram: str = ""

    def model_params(self) -> ModelParams:
        return ModelParams(n_agents=self.n_agents, beta=self.beta, mode=self.mode,
                           t_max=self.t_max, seed=self.seed, epsilon=self.epsilon,
                           w1=self.w1, wp=self.wp, n_runs=self.n_runs)

    def histogram_edges(self) -> np.ndarray:
        """Excess-wealth bin edges: 16 decades around the initial excess."""
        exc0 = self.w1 - self.wp
        n_decades = 16
        return stats.geometric_edges(exc0 * 1e-8, exc0 * 1e8,
                                     n_decades * self.hist_bins_per_decade)

    def schedule(self, with_histograms: bool = False) -> engine.RecordingSchedule:
        windows: Tuple[Tuple[int, int], ...] = ()
        edges = None
        if with_histograms and (self.window_start, self.window_end) != (0, 0):
            windows = ((self.window_start, self.window_end),)
            edges = self.histogram_edges()
        return engine.default_schedule(self.t_max, n_snapshots=self.snapshot_count,
                                       series_stride=self.series_stride,
                                       histogram_edges=edges,
                                       histogram_windows=windows)

    def to_text(self) -> str:
        """Lossless file representation (parse_config inverts it)."""
        lines = [f"{name} = {_format_key(self, name)}" for name in _KEY_ORDER]
        return "\n".join(lines) + "\n"

    def params_hash(self) -> str:
        """12-hex digest over the keys that determine computed numbers.

        Execution plumbing (workers, out_dir, export toggles, comparison
        file) is excluded, so reruns of the same physics hash identically.
        """
        text = "\n".join(f"{name}={_format_key(self, name)}" for name in _HASHED_KEYS)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


# key name -> (type tag, required)
_KEY_SPECS: Dict[str, Tuple[str, bool]] = {
    "n_agents": ("int", True),
    "beta": ("float", True),
    "mode": ("str", True),
    "t_max": ("int", True),
    "seed": ("int", True),
    "epsilon": ("float", False),
    "w1": ("float", False),
    "wp": ("float", False),
    "n_runs": ("int", False),
    "series_stride": ("int", False),
    "snapshot_count": ("int", False),
    "hist_bins_per_decade": ("int", False),
    "window_start": ("int", False),
    "window_end": ("int", False),
    "workers": ("int", False),
    "out_dir": ("str", False),
    "export_snapshots": ("bool", False),
    "export_histograms": ("bool", False),
    "export_flux": ("bool", False),
    "k_list": ("float_list", False),
    "epsilon_sweep": ("float_list", False),
    "grid_points": ("int", False),
    "n_modes": ("int", False),
    "compare_histogram": ("str", False),
}
_KEY_ORDER = list(_KEY_SPECS)
_HASHED_KEYS = [k for k in _KEY_ORDER
                if k not in ("workers", "out_dir", "export_snapshots",
                             "export_histograms", "export_flux",
                             "compare_histogram")]

_BOOL_WORDS = {"true": True, "yes": True, "1": True,
               "false": False, "no": False, "0": False}


def _format_key(cfg: ExperimentConfig, name: str) -> str:
    kind = _KEY_SPECS[name][0]
    value = getattr(cfg, name)
    if kind == "bool":
        return "true" if value else "false"
    if kind == "float_list":
        return ", ".join(tableio.format_value(float(v)) for v in value)
    if kind == "float":
        return tableio.format_value(float(value))
    return str(value)


def _parse_value(kind: str, raw: str):
    if kind == "int":
        return int(raw)
    if kind == "float":
        return float(raw)
    if kind == "bool":
        word = raw.lower()
        if word not in _BOOL_WORDS:
            raise ValueError(f"not a boolean: {raw!r} (use true/false)")
        return _BOOL_WORDS[word]
    if kind == "float_list":
        items = [p.strip() for p in raw.split(",") if p.strip()]
        if not items:
            raise ValueError("empty list")
        return tuple(float(p) for p in items)
    return raw


def parse_config(text: str) -> ExperimentConfig:
    """Parse and validate a config file, collecting every violation.

    Raises ParseError listing all problems (unknown/duplicate/malformed
    keys, type mismatches, missing required keys, model invariant
    violations), each with the offending line number where one exists.
    """
    problems: List[str] = []
    values: Dict[str, object] = {}
    key_lines: Dict[str, int] = {}
    seen: set = set()  # includes keys whose values failed to parse

    for ln, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            problems.append(f"line {ln}: expected 'key = value', got {raw.strip()!r}")
            continue
        if key not in _KEY_SPECS:
            problems.append(f"line {ln}: unknown key {key!r}")
            continue
        if key in seen:
            problems.append(f"line {ln}: duplicate key {key!r} "
                            f"(first set on line {key_lines.get(key, '?')})")
            continue
        seen.add(key)
        key_lines[key] = ln
        kind = _KEY_SPECS[key][0]
        try:
            values[key] = _parse_value(kind, value)
        except ValueError as exc:
            problems.append(f"line {ln}: {key}: {exc}")

    for key, (kind, required) in _KEY_SPECS.items():
        if required and key not in seen:
            problems.append(f"missing required key {key!r}")

    cfg: Optional[ExperimentConfig] = None
    if not problems:
        cfg = ExperimentConfig(**values)  # type: ignore[arg-type]
        problems.extend(_located(p, key_lines) for p in _validate(cfg))
    if problems:
        raise ParseError(problems)
    assert cfg is not None
    return cfg


def _located(problem: str, key_lines: Dict[str, int]) -> str:
    """Prefix a validation message with the line that set the offending key."""
    for key, ln in key_lines.items():
        if key in problem:
            return f"line {ln}: {problem}"
    return problem


def _validate(cfg: ExperimentConfig) -> List[str]:
    problems: List[str] = []
    try:
        cfg.model_params()
    except ParameterError as exc:
        problems.extend(exc.problems)
    if cfg.series_stride < 1:
        problems.append(f"series_stride must be >= 1, got {cfg.series_stride}")
    if cfg.snapshot_count < 1:
        problems.append(f"snapshot_count must be >= 1, got {cfg.snapshot_count}")
    if cfg.hist_bins_per_decade < 1:
        problems.append("hist_bins_per_decade must be >= 1, "
                        f"got {cfg.hist_bins_per_decade}")
    if (cfg.window_start, cfg.window_end) != (0, 0) and not (
            0 <= cfg.window_start < cfg.window_end):
        problems.append("window_start/window_end must satisfy "
                        f"0 <= start < end, got [{cfg.window_start}, {cfg.window_end})")
    if cfg.workers < 1:
        problems.append(f"workers must be >= 1, got {cfg.workers}")
    if cfg.grid_points < 2:
        problems.append(f"grid_points must be >= 2, got {cfg.grid_points}")
    if cfg.n_modes < 1:
        problems.append(f"n_modes must be >= 1, got {cfg.n_modes}")
    for k in cfg.k_list:
        if not k > 0:
            problems.append(f"k_list entries must be positive, got {k}")
    for eps in cfg.epsilon_sweep:
        if not -1.0 < eps < 1.0:
            problems.append(f"epsilon_sweep entries must lie in (-1, 1), got {eps}")
    return problems


# ---------------------------------------------------------------------------
# Export helpers

def _meta(cfg: ExperimentConfig, units: str, **extra: str) -> Dict[str, str]:
    meta = {"params_hash": cfg.params_hash(), "seed": str(cfg.seed), "units": units}
    meta.update(extra)
    return meta


class _Exporter:
    """Collects tables for one output directory; nothing touches disk until
    ``manifest()``, so a failed subcommand leaves no partial export behind."""

    def __init__(self, cfg: ExperimentConfig, out_dir: str):
        self.cfg = cfg
        self.out_dir = out_dir
        self.entries: List[Dict[str, object]] = []
        self._pending: List[Tuple[str, Sequence[str], List[np.ndarray],
                                  Dict[str, str]]] = []

    def table(self, name: str, kind: str, header: Sequence[str],
              columns: Sequence[np.ndarray], units: str, **extra: str) -> None:
        self._pending.append((name, list(header), [np.asarray(c) for c in columns],
                              _meta(self.cfg, units, **extra)))
        self.entries.append({"path": name, "kind": kind,
                             "params_hash": self.cfg.params_hash(),
                             "seed": self.cfg.seed})

    def manifest(self) -> None:
        os.makedirs(self.out_dir, exist_ok=True)
        for name, header, columns, meta in self._pending:
            tableio.write_table(os.path.join(self.out_dir, name), header,
                                columns, meta)
        doc = {"params_hash": self.cfg.params_hash(), "seed": self.cfg.seed,
               "files": sorted(self.entries, key=lambda e: e["path"])}
        path = os.path.join(self.out_dir, "manifest.json")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _float_tag(value: float) -> str:
    """Filename-safe tag for a float: -0.005 -> 'm0p005'.

    Uses repr's shortest round-trip form, not the 17-digit table format —
    'epsm0p03' beats 'epsm0p029999999999999999' as a filename.
    """
    return repr(float(value)).replace("-", "m").replace(".", "p")


def _hist_columns(hist: stats.LogHistogram) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(bin_lo, bin_hi, count) rows including the open-ended outer bins."""
    edges = np.asarray(hist.bin_edges, dtype=np.float64)
    lo = np.concatenate([[0.0], edges])
    hi = np.concatenate([edges, [math.inf]])
    return lo, hi, np.asarray(hist.counts, dtype=np.int64)


def read_histogram(path: str) -> stats.LogHistogram:
    """Rebuild a LogHistogram from an exported histogram CSV.

    The file must hold exactly one histogram: bin_lo/bin_hi/count columns
    with the open-ended bins first and last (as written by simulate's
    windowed export).
    """
    _, _, cols = tableio.read_table(path)
    for need in ("bin_lo", "bin_hi", "count"):
        if need not in cols:
            raise ParseError([f"{path}: missing column {need!r}"])
    lo = np.asarray(cols["bin_lo"], dtype=np.float64)
    hi = np.asarray(cols["bin_hi"], dtype=np.float64)
    if lo.size < 3 or np.any(np.diff(lo) <= 0):
        raise ParseError([f"{path}: expected one histogram with increasing bins"])
    edges = hi[:-1]
    window = None
    if "window_start" in cols and "window_end" in cols and len(cols["window_start"]):
        window = (int(cols["window_start"][0]), int(cols["window_end"][0]))
    return stats.LogHistogram(bin_edges=edges,
                              counts=np.asarray(cols["count"], dtype=np.int64),
                              window=window)


# ---------------------------------------------------------------------------
# Subcommands

def _run_records(cfg: ExperimentConfig, with_histograms: bool) -> List[engine.TrajectoryRecord]:
    params = cfg.model_params()
    schedule = cfg.schedule(with_histograms=with_histograms)
    return engine.run(params, schedule, workers=cfg.workers)


def cmd_simulate(cfg: ExperimentConfig, out_dir: str) -> int:
    ex = _Exporter(cfg, out_dir)
    records = _run_records(cfg, with_histograms=True)
    edges = cfg.histogram_edges()
    for rec in records:
        r = rec.run_id
        ex.table(f"series_run{r:02d}.csv", "series",
                 ["t", "mean_wealth", "max_wealth", "gini"],
                 [rec.series_times, rec.mean_series, rec.max_series, rec.gini_series],
                 "t=days, mean_wealth=currency, max_wealth=currency, gini=dimensionless",
                 run=str(r))
        ex.table(f"ranks_run{r:02d}.csv", "series",
                 ["t"] + [f"rank_{int(k)}" for k in rec.rank_ids],
                 [rec.series_times] + [rec.rank_series[i] for i in range(rec.rank_ids.size)],
                 "t=days, rank_*=currency (wealth at that sorted rank)", run=str(r))
        if cfg.export_snapshots:
            ex.table(f"snapshots_run{r:02d}.csv", "series",
                     ["rank"] + [f"t{int(t)}" for t in rec.snapshot_times],
                     [np.arange(1, cfg.n_agents + 1)] + rec.sorted_snapshots,
                     "rank=1-based sorted position, t*=currency", run=str(r))
        if cfg.export_histograms:
            t_col, lo_col, hi_col, n_col = [], [], [], []
            for t, snap in zip(rec.snapshot_times, rec.sorted_snapshots):
                counts = stats.bin_excess(edges, snap - cfg.wp)
                lo, hi, c = _hist_columns(
                    stats.LogHistogram(bin_edges=edges, counts=counts, window=None))
                t_col.append(np.full(c.size, int(t), dtype=np.int64))
                lo_col.append(lo)
                hi_col.append(hi)
                n_col.append(c)
            ex.table(f"hist_run{r:02d}.csv", "histogram",
                     ["t", "bin_lo", "bin_hi", "count"],
                     [np.concatenate(t_col), np.concatenate(lo_col),
                      np.concatenate(hi_col), np.concatenate(n_col)],
                     "t=days, bin_*=excess currency, count=agents", run=str(r))
        for hist in rec.histograms:
            lo, hi, c = _hist_columns(hist)
            a, b = hist.window
            ex.table(f"window_hist_run{r:02d}.csv", "histogram",
                     ["window_start", "window_end", "bin_lo", "bin_hi", "count"],
                     [np.full(c.size, a, dtype=np.int64),
                      np.full(c.size, b, dtype=np.int64), lo, hi, c],
                     "window=days, bin_*=excess currency, count=agent-ticks",
                     run=str(r))
        if cfg.export_flux:
            _export_flux(ex, rec)
    ex.manifest()
    print(f"simulate: wrote {len(ex.entries)} files + manifest.json to {out_dir}")
    return 0


def _export_flux(ex: _Exporter, rec: engine.TrajectoryRecord) -> Optional[stats.FluxMatrix]:
    if rec.rank_series.shape[1] < 2:
        print(f"run {rec.run_id}: fewer than two stride ticks, no flux matrix",
              file=sys.stderr)
        return None
    fm = stats.flux_matrix(rec.rank_series, rec.rank_ids)
    n = fm.ranks.size
    ii, jj = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    ex.table(f"flux_run{rec.run_id:02d}.csv", "matrix",
             ["rank_i", "rank_j", "raw", "compressed"],
             [fm.ranks[ii.ravel()], fm.ranks[jj.ravel()],
              fm.A.ravel(), fm.C.ravel()],
             "rank_*=1-based sorted position, raw=currency^2, "
             "compressed=signed log-squared", run=str(rec.run_id))
    return fm


def cmd_correlate(cfg: ExperimentConfig, out_dir: str) -> int:
    ex = _Exporter(cfg, out_dir)
    records = _run_records(cfg, with_histograms=False)
    runs, divides, neg_fracs = [], [], []
    for rec in records:
        fm = _export_flux(ex, rec)
        divide = stats.water_divide(fm) if fm is not None else None
        runs.append(rec.run_id)
        divides.append(float("nan") if divide is None else float(divide))
        neg_fracs.append(_rank1_negative_fraction(fm) if fm is not None
                         else float("nan"))
    ex.table("divide_report.csv", "series",
             ["run", "divide_rank", "neg_frac_rank1"],
             [np.array(runs, dtype=np.int64), np.array(divides), np.array(neg_fracs)],
             "run=index, divide_rank=1-based rank (nan=no divide), "
             "neg_frac_rank1=fraction of bulk columns anticorrelated with rank 1")
    ex.manifest()
    print(f"correlate: wrote {len(ex.entries)} files + manifest.json to {out_dir}")
    return 0


def _rank1_negative_fraction(fm: stats.FluxMatrix) -> float:
    """Fraction of bulk columns (rank > 10) whose C[top, j] is negative."""
    bulk = fm.ranks > 10 * fm.ranks[0]
    if not np.any(bulk):
        return float("nan")
    return float(np.mean(fm.C[0, bulk] < 0))


def cmd_analytic(cfg: ExperimentConfig, out_dir: str) -> int:
    ex = _Exporter(cfg, out_dir)
    env = analytics.GaussianEnvelope(x0=math.log(cfg.w1 - cfg.wp), beta=cfg.beta,
                                     n_agents=cfg.n_agents)
    t_grid = np.unique(np.rint(np.geomspace(1.0, max(cfg.t_max, 1), 75)).astype(np.int64))
    for k in cfg.k_list:
        try:
            curve = analytics.quantile_curve(env, k, t_grid)
        except DomainError as exc:
            print(f"analytic: k={tableio.format_value(k)}: {exc}", file=sys.stderr)
            raise
        ex.table(f"quantile_k{_float_tag(k)}.csv", "quantile-curve",
                 ["t", "log_excess"],
                 [t_grid, np.array([x for _, x in curve.samples])],
                 "t=days, log_excess=ln(currency)", k=tableio.format_value(k))
    names = ["x0", "nu_drift", "sigma_250", "sigma_1000", "sigma_4000",
             "peak_time_k1", "peak_height_k1"]
    values = [env.x0, env.drift,
              analytics.sigma_t(cfg.beta, 250.0),
              analytics.sigma_t(cfg.beta, 1000.0),
              analytics.sigma_t(cfg.beta, 4000.0),
              analytics.peak_time(env, 1.0), analytics.peak_height(env, 1.0)]
    ex.table("analytic_report.csv", "series", ["name", "value"],
             [np.array(names, dtype=str), np.array(values, dtype=np.float64)],
             "value=mixed (x in ln currency, t in days, rates per day)")
    ex.manifest()
    print(f"analytic: wrote {len(ex.entries)} files + manifest.json to {out_dir}")
    return 0


def cmd_stationary(cfg: ExperimentConfig, out_dir: str) -> int:
    ex = _Exporter(cfg, out_dir)
    hist = read_histogram(cfg.compare_histogram) if cfg.compare_histogram else None
    grid = stationary.default_grid(cfg.w1, cfg.wp, m=cfg.grid_points)

    report: Dict[str, List[float]] = {name: [] for name in (
        "epsilon", "mode_index", "eigenvalue", "iterations", "residual",
        "peak_x", "std_x", "boundary_piled", "tv")}
    for eps in cfg.epsilon_sweep:
        op = stationary.build_operator(grid, cfg.beta, eps, cfg.w1, cfg.wp)
        try:
            values, modes, iters = stationary.leading_eigenpair(op, cfg.n_modes)
        except NotConverged as exc:
            print(f"stationary: epsilon={tableio.format_value(eps)}: {exc}",
                  file=sys.stderr)
            raise
        for idx, (lam, mode, its) in enumerate(zip(values, modes, iters), start=1):
            ex.table(f"eigenmode_eps{_float_tag(eps)}_m{idx}.csv", "eigenmode",
                     ["x", "mass"], [grid.x, mode],
                     "x=ln(excess currency), mass=probability per cell",
                     epsilon=tableio.format_value(eps), mode_index=str(idx))
            leading = idx == 1
            sol = stationary.StationarySolution(
                grid=grid, operator=op, eigenvalue=float(lam), mode=mode,
                iterations=its, residual=float(np.abs(op.apply(mode) - lam * mode).sum()),
            ) if leading else None
            report["epsilon"].append(eps)
            report["mode_index"].append(float(idx))
            report["eigenvalue"].append(float(lam))
            report["iterations"].append(float(its))
            report["residual"].append(sol.residual if leading else float("nan"))
            report["peak_x"].append(sol.peak_x if leading else float("nan"))
            report["std_x"].append(sol.std_x if leading else float("nan"))
            report["boundary_piled"].append(
                float(sol.boundary_piled) if leading else float("nan"))
            report["tv"].append(
                stationary.compare_to_simulation(sol, hist)
                if leading and hist is not None else float("nan"))
    ex.table("stationary_report.csv", "series", list(report),
             [np.array(v, dtype=np.float64) for v in report.values()],
             "epsilon=skew, eigenvalue=per day, iterations=count, "
             "peak_x/std_x=ln(excess currency), boundary_piled=0/1, tv=[0,1]")
    ex.manifest()
    print(f"stationary: wrote {len(ex.entries)} files + manifest.json to {out_dir}")
    return 0


# ---------------------------------------------------------------------------
# Entry point

_COMMANDS = {
    "simulate": cmd_simulate,
    "analytic": cmd_analytic,
    "stationary": cmd_stationary,
    "correlate": cmd_correlate,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wealthsim",
        description="Multiplicative wealth-dynamics simulator and analytics exporter")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
            ("simulate", "run the ensemble and export series/histogram/flux CSVs"),
            ("analytic", "export closed-form quantile curves and scalar report"),
            ("stationary", "solve the stationary eigenproblem over an epsilon sweep"),
            ("correlate", "run the ensemble and export flux matrices + divide report")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="path to key = value config file")
        p.add_argument("--out", default=None, help="output directory (default: config's out_dir)")
        p.add_argument("--seed", type=int, default=None, help="override the config seed")
        p.add_argument("--runs", type=int, default=None, help="override the config n_runs")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"wealthsim: cannot read config: {exc}", file=sys.stderr)
        return 4

    try:
        cfg = parse_config(text)
        overrides = {}
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.runs is not None:
            overrides["n_runs"] = args.runs
        if overrides:
            cfg = dataclasses.replace(cfg, **overrides)
            problems = _validate(cfg)
            if problems:
                raise ParseError(problems)
    except (ParseError, ParameterError) as exc:
        print(f"wealthsim: config error:\n{exc}", file=sys.stderr)
        return 2

    out_dir = args.out if args.out is not None else cfg.out_dir
    try:
        return _COMMANDS[args.command](cfg, out_dir)
    except (ParseError, ParameterError) as exc:
        print(f"wealthsim: config error:\n{exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"wealthsim: I/O error: {exc}", file=sys.stderr)
        return 4
    except WealthsimError as exc:
        print(f"wealthsim: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
