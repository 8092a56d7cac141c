"""Multi-trial experiment harness: presets, repeated runs, statistics, CSVs."""

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from .benchmarks import SCHWEFEL_NORMALIZED, get_preset
from .config import ATGA, MODES, SGA, GaConfig, TwinParams
from .errors import ConfigError, ExportError, InputError
from .ga import TrialRecord, convergence_generation, run
from .rng import derive_seed

DEFAULT_TRIALS = 25
DEFAULT_SEED = 42

# Generation budgets of the standard experimental setup, per function.
MAX_GENERATIONS = {
    "himmelblau": 15,
    "sphere": 15,
    "rastrigin": 15,
    "rosenbrock": 15,
    "schwefel": 20,
}

# Override keys addressable from config files, --set flags and the API.
_INT_FIELDS = {"pop_size", "bits_per_variable", "tournament_size", "max_generations"}
_FLOAT_FIELDS = {
    "p_c",
    "p_m",
    "twin_gate_low",
    "twin_gate_high",
    "twin_prob_min",
    "twin_prob_max",
    "separability",
    "fixed_p_twin",
}
_ALIASES = {
    "k1": "twin_gate_low",
    "k1_prime": "twin_gate_high",
    "k2": "twin_prob_min",
    "k3": "twin_prob_max",
}
_TWIN_FIELDS = {
    "twin_gate_low": "gate_low",
    "twin_gate_high": "gate_high",
    "twin_prob_min": "prob_min",
    "twin_prob_max": "prob_max",
    "separability": "separability",
    "fixed_p_twin": "fixed_probability",
}

OVERRIDE_KEYS = tuple(sorted(_INT_FIELDS | _FLOAT_FIELDS | set(_ALIASES)))


def _coerce(key: str, value) -> int | float:
    try:
        if key in _INT_FIELDS:
            if isinstance(value, float) and not value.is_integer():
                raise ValueError
            return int(value)
        return float(value)
    except (TypeError, ValueError):
        kind = "an integer" if key in _INT_FIELDS else "a number"
        raise ConfigError(f"override {key!r} needs {kind}, got {value!r}") from None


def build_config(
    function: str, mode: str, *, seed: int = DEFAULT_SEED, overrides: dict | None = None
) -> GaConfig:
    """GaConfig from a function preset plus a flat override map.

    Overrides address GaConfig and TwinParams fields by name (short forms
    k1/k1_prime/k2/k3 are accepted for the twin gates and bounds).
    Unknown keys and invalid values are rejected before anything runs.
    """
    benchmark = get_preset(function)
    if mode not in MODES:
        raise ConfigError(f"mode must be one of {MODES}, got {mode!r}")
    ga_kwargs: dict = {"max_generations": MAX_GENERATIONS[function]}
    twin_kwargs: dict = {}
    for raw_key, raw_value in (overrides or {}).items():
        key = _ALIASES.get(raw_key, raw_key)
        if key in _TWIN_FIELDS:
            twin_kwargs[_TWIN_FIELDS[key]] = _coerce(key, raw_value)
        elif key in _INT_FIELDS | _FLOAT_FIELDS:
            ga_kwargs[key] = _coerce(key, raw_value)
        else:
            raise ConfigError(
                f"unknown override {raw_key!r}; valid keys: {', '.join(OVERRIDE_KEYS)}"
            )
    return GaConfig(
        benchmark=benchmark,
        mode=mode,
        master_seed=seed,
        twin=TwinParams(**twin_kwargs),
        **ga_kwargs,
    )


def _trial_config(config: GaConfig, index: int) -> GaConfig:
    return replace(config, master_seed=derive_seed(config.master_seed, index))


def _run_trial(args: tuple[GaConfig, int]) -> TrialRecord:
    config, index = args
    return run(_trial_config(config, index), trial_index=index)


def run_trials(config: GaConfig, n_trials: int, workers: int | None = None) -> list[TrialRecord]:
    """Independent repeated runs; trial i draws from substream i of the master seed.

    Trials are pure functions of (config, index), so serial and parallel
    execution return identical, index-ordered records.
    """
    if n_trials < 1:
        raise InputError(f"n_trials must be >= 1, got {n_trials}")
    tasks = [(config, i) for i in range(n_trials)]
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_trial, tasks))
    return [_run_trial(task) for task in tasks]


@dataclass(frozen=True)
class AggregateStats:
    """Cross-trial summary of the final best individuals."""

    n_trials: int
    mean_best: float
    max_best: float
    cv_percent: float
    mean_convergence_generation: float
    zero_mean: bool = False


def aggregate(records: list[TrialRecord], use_objective_magnitude: bool = False) -> AggregateStats:
    """Mean/max of final bests, coefficient of variance (percent), mean convergence.

    The coefficient of variance uses the sample (n-1) standard deviation.
    With ``use_objective_magnitude`` the final bests are reported as the
    negated raw objective instead of scaled fitness.
    """
    if not records:
        raise InputError("aggregate requires at least one trial record")
    if use_objective_magnitude:
        bests = [-r.final_best.objective for r in records]
    else:
        bests = [r.final_best.fitness for r in records]
    mean_best = statistics.fmean(bests)
    spread = statistics.stdev(bests) if len(bests) > 1 else 0.0
    zero_mean = mean_best == 0.0
    cv_percent = 0.0 if zero_mean else 100.0 * spread / mean_best
    return AggregateStats(
        n_trials=len(records),
        mean_best=mean_best,
        max_best=max(bests),
        cv_percent=cv_percent,
        mean_convergence_generation=statistics.fmean(
            convergence_generation(r) for r in records
        ),
        zero_mean=zero_mean,
    )


def summarize(config: GaConfig, records: list[TrialRecord]) -> AggregateStats:
    """Aggregate with the reporting convention for the configured function.

    Normalized-Schwefel summaries report the raw optimum magnitude; every
    other preset reports scaled fitness.
    """
    magnitude = config.benchmark.fitness_kind == SCHWEFEL_NORMALIZED
    return aggregate(records, use_objective_magnitude=magnitude)


def _fmt(value: float) -> str:
    return format(value, ".17g")


GENERATIONS_HEADER = "trial,generation,best_fitness,second_best_fitness,avg_fitness,p_twin"
TRIALS_HEADER = "trial,final_best_fitness,convergence_generation"
SUMMARY_HEADER = "function,mode,n_trials,mean_best,max_best,cv_percent,mean_convergence_gen"


def render_exports(
    records: list[TrialRecord],
    stats: AggregateStats,
    *,
    function: str,
    mode: str,
    seed: int,
) -> dict[str, str]:
    """The three CSV documents, keyed by file name.

    Full float precision (17 significant digits), LF line endings; the
    same records always render byte-identically.
    """
    prefix = f"{function}_{mode}_{seed}"
    gen_lines = [GENERATIONS_HEADER]
    for record in records:
        for e in record.entries:
            gen_lines.append(
                ",".join(
                    (
                        str(record.trial_index),
                        str(e.generation),
                        _fmt(e.best_fitness),
                        _fmt(e.second_best_fitness),
                        _fmt(e.avg_fitness),
                        _fmt(e.twin_probability),
                    )
                )
            )
    trial_lines = [TRIALS_HEADER]
    for record in records:
        trial_lines.append(
            ",".join(
                (
                    str(record.trial_index),
                    _fmt(record.final_best.fitness),
                    str(record.convergence_generation),
                )
            )
        )
    summary_lines = [SUMMARY_HEADER, summary_row(function, mode, stats)]
    return {
        f"{prefix}.generations.csv": "\n".join(gen_lines) + "\n",
        f"{prefix}.trials.csv": "\n".join(trial_lines) + "\n",
        f"{prefix}.summary.csv": "\n".join(summary_lines) + "\n",
    }


def summary_row(function: str, mode: str, stats: AggregateStats) -> str:
    return ",".join(
        (
            function,
            mode,
            str(stats.n_trials),
            _fmt(stats.mean_best),
            _fmt(stats.max_best),
            _fmt(stats.cv_percent),
            _fmt(stats.mean_convergence_generation),
        )
    )


def write_files(documents: dict[str, str], destination: str | Path) -> list[Path]:
    out_dir = Path(destination)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        paths = []
        for name, content in documents.items():
            path = out_dir / name
            path.write_bytes(content.encode("utf-8"))
            paths.append(path)
        return paths
    except OSError as exc:
        raise ExportError(f"failed to write results: {exc}", path=str(out_dir)) from exc


def export_csv(
    records: list[TrialRecord],
    stats: AggregateStats,
    destination: str | Path,
    *,
    function: str,
    mode: str,
    seed: int,
) -> list[Path]:
    """Write the per-generation, per-trial and summary CSVs under ``destination``."""
    documents = render_exports(records, stats, function=function, mode=mode, seed=seed)
    return write_files(documents, destination)


def compare_modes(
    function: str, *, trials: int, seed: int, overrides: dict | None = None
) -> dict[str, tuple[GaConfig, list[TrialRecord], AggregateStats]]:
    """Run both modes with identical parameters and seed; keyed by mode name."""
    results = {}
    for mode in (SGA, ATGA):
        config = build_config(function, mode, seed=seed, overrides=overrides)
        records = run_trials(config, trials)
        results[mode] = (config, records, summarize(config, records))
    return results
