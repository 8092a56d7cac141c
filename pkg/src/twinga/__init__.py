"""Binary GA with a twin-offspring operator and adaptive twin probability."""

from .benchmarks import (
    SCHWEFEL_OPTIMUM_MAGNITUDE,
    BenchmarkSpec,
    PRESETS,
    decode_genome,
    get_preset,
    himmelblau,
    normalized_schwefel,
    rastrigin,
    rosenbrock,
    sphere,
)
from .config import ATGA, MODES, SGA, GaConfig, TwinParams
from .encoding import Chromosome, decode_variable, mutate, random_chromosome, single_point_crossover
from .errors import (
    BoundsError,
    ConfigError,
    EncodingError,
    EvaluationError,
    ExportError,
    GaError,
    InputError,
    InvalidStateError,
    RankingError,
)
from .experiment import (
    AggregateStats,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    aggregate,
    build_config,
    compare_modes,
    export_csv,
    render_exports,
    run_trials,
    summarize,
)
from .ga import (
    GenerationEntry,
    Individual,
    Population,
    TrialRecord,
    convergence_generation,
    evaluate_chromosome,
    objective_to_fitness,
    run,
    step_generation,
    tournament_select,
)
from .rng import RandomStream, derive_seed
from .twin import (
    TwinEvent,
    adaptive_twin_probability,
    make_twin_mate,
    resolve_twin_probability,
    twin_reproduction,
    unequal_positions,
)

__version__ = "0.1.0"
